#include "gcstar/fields.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace gcstar {

namespace {

void check_key(const PolyForm& f, const MultiIndex& key) {
  if (key.degree() != f.degree) throw std::invalid_argument("PolyForm: key degree mismatch");
  if (!key.max_index_below(f.dim)) throw std::invalid_argument("PolyForm: index beyond dimension");
}

void check_field(const VectorField3& field) {
  for (const auto& comp : field)
    if (comp.nvars() != 4)
      throw std::invalid_argument("field components must be polynomials in t, x, y, z");
}

Polynomial zero4() { return Polynomial(4); }

}  // namespace

PolyForm PolyForm::zero(int dim, int degree) {
  if (dim < 1 || dim > MultiIndex::kMaxDim || degree < 0 || degree > dim)
    throw std::invalid_argument("PolyForm: bad dimension or degree");
  return PolyForm{dim, degree, {}};
}

Polynomial PolyForm::coefficient(const MultiIndex& key) const {
  const auto it = terms.find(key);
  return it == terms.end() ? Polynomial(dim) : it->second;
}

void PolyForm::add_term(const MultiIndex& key, const Polynomial& value) {
  check_key(*this, key);
  if (value.nvars() != dim)
    throw std::invalid_argument("PolyForm: coefficient variable count must equal dim");
  if (value.is_zero()) return;
  const auto [it, inserted] = terms.emplace(key, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) terms.erase(it);
  }
}

PolyForm operator+(const PolyForm& a, const PolyForm& b) {
  if (a.dim != b.dim) throw std::invalid_argument("PolyForm +: dimension mismatch");
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree != b.degree) throw std::invalid_argument("PolyForm +: degree mismatch");
  PolyForm out = a;
  for (const auto& [key, value] : b.terms) out.add_term(key, value);
  return out;
}

PolyForm operator-(const PolyForm& a, const PolyForm& b) {
  if (a.dim != b.dim) throw std::invalid_argument("PolyForm -: dimension mismatch");
  PolyForm negated = PolyForm::zero(b.dim, b.degree);
  for (const auto& [key, value] : b.terms) negated.add_term(key, -value);
  return a + negated;
}

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
  if (a.dim != b.dim) throw std::invalid_argument("PolyForm wedge: dimension mismatch");
  const int degree = std::min(a.degree + b.degree, a.dim);
  PolyForm out = PolyForm::zero(a.dim, degree);
  if (a.degree + b.degree > a.dim) return out;
  for (const auto& [ka, va] : a.terms) {
    for (const auto& [kb, vb] : b.terms) {
      const int sign = merge_sign(ka, kb);
      if (sign == 0) continue;
      out.add_term(ka.unite(kb), Rational(sign) * (va * vb));
    }
  }
  return out;
}

PolyForm exterior_derivative(const PolyForm& a) {
  if (a.degree == a.dim) return PolyForm::zero(a.dim, a.dim);  // top forms are closed
  PolyForm out = PolyForm::zero(a.dim, a.degree + 1);
  for (const auto& [key, value] : a.terms) {
    for (int var = 0; var < a.dim; ++var) {
      if (key.contains(var)) continue;  // dx^a ^ e^K dies on a repeat
      const Polynomial partial = value.derivative(var);
      if (partial.is_zero()) continue;
      const MultiIndex leg = MultiIndex::from_bits(1u << var);
      out.add_term(key.unite(leg), Rational(merge_sign(leg, key)) * partial);
    }
  }
  return out;
}

PolyForm pullback_field(const PolyForm& a, const AffineMap& map) {
  const int d = a.dim;
  if (map.linear.dim() != d || static_cast<int>(map.translation.size()) != d)
    throw std::invalid_argument("pullback_field: dimension mismatch");
  const RatMatrix& jac = map.linear.matrix();

  // Coordinate images y^a = sum_b jac[a][b] x^b + translation[a], substituted
  // into every coefficient.
  std::vector<Polynomial> images;
  images.reserve(static_cast<std::size_t>(d));
  for (int aidx = 0; aidx < d; ++aidx) {
    Polynomial img = Polynomial::constant(d, map.translation[static_cast<std::size_t>(aidx)]);
    for (int b = 0; b < d; ++b) {
      if (jac.at(aidx, b) == 0) continue;
      img += jac.at(aidx, b) * Polynomial::variable(d, b);
    }
    images.push_back(std::move(img));
  }

  PolyForm out = PolyForm::zero(d, a.degree);
  for (const auto& [key, value] : a.terms) {
    const Polynomial composed = value.substitute(images);
    if (composed.is_zero()) continue;
    const std::vector<int> rows = key.indices();
    // dy^{u1} ^ ... picks up the minor of the Jacobian with rows U, cols K.
    for_each_index_set(d, a.degree, [&](MultiIndex target) {
      const std::vector<int> cols = target.indices();
      const int k = static_cast<int>(rows.size());
      RatMatrix sub(k, k);
      for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c)
          sub.at(r, c) = jac.at(rows[static_cast<std::size_t>(r)], cols[static_cast<std::size_t>(c)]);
      const Rational det = sub.determinant();
      if (det != 0) out.add_term(target, det * composed);
    });
  }
  return out;
}

PolyForm build_F(const VectorField3& e_field, const VectorField3& b_field) {
  check_field(e_field);
  check_field(b_field);
  PolyForm f = PolyForm::zero(4, 2);
  // dt ^ (E . dr)
  f.add_term(MultiIndex::from_indices(std::vector<int>{0, 1}), e_field[0]);
  f.add_term(MultiIndex::from_indices(std::vector<int>{0, 2}), e_field[1]);
  f.add_term(MultiIndex::from_indices(std::vector<int>{0, 3}), e_field[2]);
  // - B . dS:  dS = (dy^dz, dz^dx, dx^dy)
  f.add_term(MultiIndex::from_indices(std::vector<int>{2, 3}), -b_field[0]);
  f.add_term(MultiIndex::from_indices(std::vector<int>{1, 3}), b_field[1]);
  f.add_term(MultiIndex::from_indices(std::vector<int>{1, 2}), -b_field[2]);
  return f;
}

FieldPair split_F(const PolyForm& f) {
  if (f.dim != 4 || f.degree != 2)
    throw std::invalid_argument("split_F: expected a 2-form in four dimensions");
  FieldPair out{{zero4(), zero4(), zero4()}, {zero4(), zero4(), zero4()}};
  out.E[0] = f.coefficient(MultiIndex::from_indices(std::vector<int>{0, 1}));
  out.E[1] = f.coefficient(MultiIndex::from_indices(std::vector<int>{0, 2}));
  out.E[2] = f.coefficient(MultiIndex::from_indices(std::vector<int>{0, 3}));
  out.B[0] = -f.coefficient(MultiIndex::from_indices(std::vector<int>{2, 3}));
  out.B[1] = f.coefficient(MultiIndex::from_indices(std::vector<int>{1, 3}));
  out.B[2] = -f.coefficient(MultiIndex::from_indices(std::vector<int>{1, 2}));
  return out;
}

PolyForm star_field(const PolyForm& a, SpacetimeKind kind) {
  if (a.dim != 4) throw std::invalid_argument("star_field: only defined in four dimensions");
  // One rational-linear basis map per kind, taken verbatim from the
  // four-dimensional table so the two agree coefficient by coefficient.
  static const auto build_map = [](SpacetimeKind k) {
    std::map<MultiIndex, Form> images;
    for (int p = 0; p <= 4; ++p)
      for_each_index_set(4, p, [&](MultiIndex key) {
        images.emplace(key, star_table_4d(Form::basis(4, key), k));
      });
    return images;
  };
  static const std::map<MultiIndex, Form> minkowski_map = build_map(SpacetimeKind::Minkowski);
  static const std::map<MultiIndex, Form> galilean_map = build_map(SpacetimeKind::Galilean);
  static const std::map<MultiIndex, Form> carrollian_map = build_map(SpacetimeKind::Carrollian);
  const auto& images = kind == SpacetimeKind::Minkowski  ? minkowski_map
                       : kind == SpacetimeKind::Galilean ? galilean_map
                                                         : carrollian_map;

  PolyForm out = PolyForm::zero(4, 4 - a.degree);
  for (const auto& [key, value] : a.terms) {
    const Form& image = images.at(key);
    for (const auto& [out_key, weight] : image.terms) out.add_term(out_key, weight * value);
  }
  return out;
}

namespace {

// Splits a 3-form G = dt ^ (c . dS) + g dV into (c, g).
struct ThreeFormParts {
  VectorField3 c;
  Polynomial g;
};

ThreeFormParts split_three_form(const PolyForm& form) {
  if (form.dim != 4 || form.degree != 3)
    throw std::invalid_argument("split_three_form: expected a 3-form in four dimensions");
  ThreeFormParts parts{{zero4(), zero4(), zero4()}, zero4()};
  parts.c[0] = form.coefficient(MultiIndex::from_indices(std::vector<int>{0, 2, 3}));
  parts.c[1] = -form.coefficient(MultiIndex::from_indices(std::vector<int>{0, 1, 3}));
  parts.c[2] = form.coefficient(MultiIndex::from_indices(std::vector<int>{0, 1, 2}));
  parts.g = form.coefficient(MultiIndex::from_indices(std::vector<int>{1, 2, 3}));
  return parts;
}

}  // namespace

std::string equation_tag_name(EquationTag tag) {
  switch (tag) {
    case EquationTag::Gauss: return "Gauss";
    case EquationTag::Ampere: return "Ampere";
    case EquationTag::Faraday: return "Faraday";
    case EquationTag::NoMonopole: return "NoMonopole";
    case EquationTag::TimeConstancy: return "TimeConstancy";
  }
  return "unknown";
}

bool Residual::vanishes() const {
  for (const auto& comp : components)
    if (!comp.is_zero()) return false;
  return true;
}

bool EquationSet::satisfied() const {
  for (const auto& r : residuals)
    if (!r.vanishes()) return false;
  return true;
}

EquationSet extract_equations(const VectorField3& e_field, const VectorField3& b_field,
                              SpacetimeKind kind) {
  const PolyForm f = build_F(e_field, b_field);
  const ThreeFormParts df = split_three_form(exterior_derivative(f));
  const ThreeFormParts dsf = split_three_form(exterior_derivative(star_field(f, kind)));

  const Residual faraday{EquationTag::Faraday, {-df.c[0], -df.c[1], -df.c[2]}};
  const Residual no_monopole{EquationTag::NoMonopole, {-df.g}};

  EquationSet set{kind, {}};
  switch (kind) {
    case SpacetimeKind::Minkowski:
      set.residuals.push_back(Residual{EquationTag::Gauss, {-dsf.g}});
      set.residuals.push_back(Residual{EquationTag::Ampere, {dsf.c[0], dsf.c[1], dsf.c[2]}});
      set.residuals.push_back(faraday);
      set.residuals.push_back(no_monopole);
      break;
    case SpacetimeKind::Galilean:
      // The galilean *F never has a purely spatial part, so d*F carries no
      // volume component and there is no Gauss-type residual to emit.
      if (!dsf.g.is_zero())
        throw std::logic_error("extract_equations: galilean d*F grew a volume part");
      set.residuals.push_back(Residual{EquationTag::Ampere, {dsf.c[0], dsf.c[1], dsf.c[2]}});
      set.residuals.push_back(faraday);
      set.residuals.push_back(no_monopole);
      break;
    case SpacetimeKind::Carrollian:
      set.residuals.push_back(
          Residual{EquationTag::TimeConstancy, {-dsf.c[0], -dsf.c[1], -dsf.c[2]}});
      set.residuals.push_back(Residual{EquationTag::Gauss, {-dsf.g}});
      set.residuals.push_back(faraday);
      set.residuals.push_back(no_monopole);
      break;
  }
  return set;
}

VectorCalculus vector_calculus(const VectorField3& e_field, const VectorField3& b_field) {
  check_field(e_field);
  check_field(b_field);
  const auto div = [](const VectorField3& v) {
    return v[0].derivative(1) + v[1].derivative(2) + v[2].derivative(3);
  };
  const auto curl = [](const VectorField3& v) {
    return VectorField3{v[2].derivative(2) - v[1].derivative(3),
                        v[0].derivative(3) - v[2].derivative(1),
                        v[1].derivative(1) - v[0].derivative(2)};
  };
  const auto dt = [](const VectorField3& v) {
    return VectorField3{v[0].derivative(0), v[1].derivative(0), v[2].derivative(0)};
  };
  return VectorCalculus{div(e_field), curl(e_field), dt(e_field),
                        div(b_field), curl(b_field), dt(b_field)};
}

bool check_boost_covariance(const VectorField3& e_field, const VectorField3& b_field,
                            std::span<const Rational> velocity, SpacetimeKind kind) {
  if (kind == SpacetimeKind::Minkowski)
    throw std::invalid_argument("check_boost_covariance: galilean and carrollian kinds only");
  if (velocity.size() != 3)
    throw std::invalid_argument("check_boost_covariance: velocity must have three components");

  const FrameChange boost = kind == SpacetimeKind::Galilean ? galilei_boost(velocity)
                                                            : carroll_boost(velocity);
  const AffineMap map{boost, std::vector<Rational>(4, Rational(0))};
  const FieldPair transformed = split_F(pullback_field(build_F(e_field, b_field), map));

  const bool before = extract_equations(e_field, b_field, kind).satisfied();
  const bool after = extract_equations(transformed.E, transformed.B, kind).satisfied();
  return before == after;
}

FieldPair fields_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("fields json: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("fields json: top level must be an object");

  const auto read_field = [&](const char* name) {
    VectorField3 field{zero4(), zero4(), zero4()};
    if (!j.contains(name)) return field;
    const auto& arr = j[name];
    if (!arr.is_array() || arr.size() != 3)
      throw ParseError(std::string("fields json: '") + name +
                       "' must be an array of three polynomial strings");
    for (int i = 0; i < 3; ++i) {
      if (!arr[i].is_string())
        throw ParseError(std::string("fields json: '") + name + "' entries must be strings");
      field[static_cast<std::size_t>(i)] = parse_polynomial(arr[i].get<std::string>(), 4);
    }
    return field;
  };
  return FieldPair{read_field("E"), read_field("B")};
}

std::string fields_to_json(const FieldPair& fields) {
  nlohmann::json j;
  nlohmann::json e = nlohmann::json::array(), b = nlohmann::json::array();
  for (const auto& comp : fields.E) e.push_back(to_string(comp));
  for (const auto& comp : fields.B) b.push_back(to_string(comp));
  j["E"] = std::move(e);
  j["B"] = std::move(b);
  return j.dump(2);
}

std::string equations_to_json(const EquationSet& set) {
  nlohmann::json j;
  j["kind"] = kind_name(set.kind);
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& residual : set.residuals) {
    nlohmann::json row;
    row["tag"] = equation_tag_name(residual.tag);
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& comp : residual.components) comps.push_back(to_string(comp));
    row["components"] = std::move(comps);
    row["vanishes"] = residual.vanishes();
    rows.push_back(std::move(row));
  }
  j["residuals"] = std::move(rows);
  j["satisfied"] = set.satisfied();
  return j.dump(2);
}

}  // namespace gcstar
