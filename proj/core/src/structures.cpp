#include "gcstar/structures.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace gcstar {

namespace {

Rational require_nonzero(const Rational& value, const char* what) {
  if (value == 0) throw std::invalid_argument(std::string(what) + " must be nonzero");
  return value;
}

Form epsilon_form(int dim, const Rational& scale) {
  Form f = Form::zero(dim, dim);
  f.set_term(MultiIndex::full(dim), scale);
  return f;
}

IndexedVector canonical_xi(int dim, Variance variance) {
  IndexedVector xi{variance, std::vector<Rational>(static_cast<std::size_t>(dim), Rational(0))};
  xi.entries[0] = 1;
  return xi;
}

SymTensor2 rank_one_companion(const IndexedVector& xi, const Rational& lambda_k,
                              Variance variance) {
  const int dim = static_cast<int>(xi.entries.size());
  RatMatrix m(dim, dim);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b)
      m.at(a, b) = lambda_k * xi.entries[static_cast<std::size_t>(a)] *
                   xi.entries[static_cast<std::size_t>(b)];
  return SymTensor2{variance, std::move(m)};
}

SymTensor2 corank_one_block(int dim, const Rational& lambda_h, Variance variance) {
  RatMatrix m(dim, dim);
  for (int i = 1; i < dim; ++i) m.at(i, i) = lambda_h;
  return SymTensor2{variance, std::move(m)};
}

void check_spatial_n(int n) {
  if (n < 1 || n + 1 > MultiIndex::kMaxDim)
    throw std::invalid_argument("spacetime structure: spatial dimension out of range");
}

}  // namespace

SpacetimeStructure make_minkowski(int n) {
  check_spatial_n(n);
  const int dim = n + 1;
  SpacetimeStructure s;
  s.kind = SpacetimeKind::Minkowski;
  s.dim = dim;
  RatMatrix g(dim, dim);
  g.at(0, 0) = 1;
  for (int i = 1; i < dim; ++i) g.at(i, i) = -1;
  s.metric_or_h = SymTensor2{Variance::Upper, std::move(g)};
  s.vol = epsilon_form(dim, 1);
  s.polyvol = epsilon_form(dim, 1);
  s.lambda_h = -1;
  s.lambda_k = 1;
  s.mu = 1;
  return s;
}

SpacetimeStructure make_galilean(int n, const StructureOverrides& overrides) {
  check_spatial_n(n);
  const int dim = n + 1;
  SpacetimeStructure s;
  s.kind = SpacetimeKind::Galilean;
  s.dim = dim;
  s.lambda_h = require_nonzero(overrides.lambda_h.value_or(Rational(-1)), "lambda_h");
  s.lambda_k = require_nonzero(overrides.lambda_k.value_or(sign_pow(n)), "lambda_k");
  s.mu = require_nonzero(overrides.mu.value_or(Rational(1)), "mu");
  s.metric_or_h = corank_one_block(dim, s.lambda_h, Variance::Upper);
  s.xi = canonical_xi(dim, Variance::Lower);
  s.k = rank_one_companion(*s.xi, s.lambda_k, Variance::Lower);
  s.vol = epsilon_form(dim, 1);
  s.polyvol = epsilon_form(dim, s.mu);
  return s;
}

SpacetimeStructure make_carrollian(int n, const StructureOverrides& overrides) {
  check_spatial_n(n);
  const int dim = n + 1;
  SpacetimeStructure s;
  s.kind = SpacetimeKind::Carrollian;
  s.dim = dim;
  s.lambda_h = require_nonzero(overrides.lambda_h.value_or(Rational(-1)), "lambda_h");
  s.lambda_k = require_nonzero(overrides.lambda_k.value_or(Rational(1)), "lambda_k");
  s.mu = require_nonzero(overrides.mu.value_or(sign_pow(n)), "mu");
  s.metric_or_h = corank_one_block(dim, s.lambda_h, Variance::Lower);
  s.xi = canonical_xi(dim, Variance::Upper);
  s.k = rank_one_companion(*s.xi, s.lambda_k, Variance::Upper);
  s.vol = epsilon_form(dim, 1);
  s.polyvol = epsilon_form(dim, s.mu);
  return s;
}

std::vector<std::string> validate_adapted(const SpacetimeStructure& s) {
  std::vector<std::string> violations;
  const int dim = s.dim;
  const int n = dim - 1;
  const auto flag = [&](const std::string& msg) { violations.push_back(msg); };

  if (dim < 2 || dim > MultiIndex::kMaxDim) {
    flag("dimension out of range");
    return violations;
  }
  const RatMatrix& h = s.metric_or_h.entries;
  if (h.rows() != dim || h.cols() != dim) {
    flag("principal tensor has wrong shape");
    return violations;
  }
  if (!h.is_symmetric()) flag("principal tensor not symmetric");

  if (s.vol != epsilon_form(dim, 1)) flag("volume form not epsilon");
  if (s.polyvol != epsilon_form(dim, s.mu)) flag("top polyvector not mu * epsilon");
  if (s.mu == 0) flag("mu is zero");

  if (s.kind == SpacetimeKind::Minkowski) {
    RatMatrix g(dim, dim);
    g.at(0, 0) = 1;
    for (int i = 1; i < dim; ++i) g.at(i, i) = -1;
    if (s.metric_or_h.variance != Variance::Upper) flag("inverse metric carries lower indices");
    if (h != g) flag("inverse metric not diag(1,-1,...,-1)");
    if (s.xi) flag("unexpected clock (co)vector for minkowski");
    if (s.k) flag("unexpected rank-one companion for minkowski");
    return violations;
  }

  // Degenerate kinds.  The principal tensor's variance and its annihilator's
  // are opposite by construction of the two families.
  const Variance h_variance =
      s.kind == SpacetimeKind::Galilean ? Variance::Upper : Variance::Lower;
  const Variance xi_variance =
      s.kind == SpacetimeKind::Galilean ? Variance::Lower : Variance::Upper;
  if (s.metric_or_h.variance != h_variance) flag("principal tensor has wrong variance");

  if (s.lambda_h == 0) flag("lambda_h is zero");
  if (s.lambda_k == 0) flag("lambda_k is zero");

  if (!s.xi) {
    flag("clock (co)vector missing");
  } else {
    if (s.xi->variance != xi_variance) flag("clock (co)vector has wrong variance");
    if (static_cast<int>(s.xi->entries.size()) != dim) {
      flag("clock (co)vector has wrong length");
    } else {
      IndexedVector canonical = canonical_xi(dim, xi_variance);
      if (s.xi->entries != canonical.entries) flag("clock (co)vector not canonical (1,0,...,0)");
      // Annihilation: contracting xi into either slot of the symmetric
      // principal tensor must give zero.
      for (int b = 0; b < dim; ++b) {
        Rational acc(0);
        for (int a = 0; a < dim; ++a) acc += s.xi->entries[static_cast<std::size_t>(a)] * h.at(a, b);
        if (acc != 0) {
          flag("principal tensor not annihilated by the clock (co)vector");
          break;
        }
      }
    }
  }

  if (h.rank() != n) flag("principal tensor rank is not n");

  bool spatial_canonical = true;
  for (int i = 1; i < dim && spatial_canonical; ++i)
    for (int j = 1; j < dim && spatial_canonical; ++j)
      if (h.at(i, j) != (i == j ? s.lambda_h : Rational(0))) spatial_canonical = false;
  for (int b = 0; b < dim && spatial_canonical; ++b)
    if (h.at(0, b) != 0 || h.at(b, 0) != 0) spatial_canonical = false;
  if (!spatial_canonical) flag("spatial block not lambda_h * identity");

  if (!s.k) {
    flag("rank-one companion missing");
  } else {
    if (s.k->variance == s.metric_or_h.variance) flag("rank-one companion has wrong variance");
    if (s.xi && static_cast<int>(s.xi->entries.size()) == dim) {
      const SymTensor2 expected = rank_one_companion(*s.xi, s.lambda_k, s.k->variance);
      if (s.k->entries != expected.entries)
        flag("rank-one companion not lambda_k * xi (x) xi");
    }
    if (s.k->entries.rows() == dim && s.k->entries.rank() != 1)
      flag("rank-one companion rank is not one");
  }

  return violations;
}

std::string kind_name(SpacetimeKind kind) {
  switch (kind) {
    case SpacetimeKind::Minkowski: return "minkowski";
    case SpacetimeKind::Galilean: return "galilei";
    case SpacetimeKind::Carrollian: return "carroll";
  }
  return "unknown";
}

std::optional<SpacetimeKind> kind_from_name(std::string_view name) {
  if (name == "minkowski") return SpacetimeKind::Minkowski;
  if (name == "galilei" || name == "galilean") return SpacetimeKind::Galilean;
  if (name == "carroll" || name == "carrollian") return SpacetimeKind::Carrollian;
  return std::nullopt;
}

namespace {

Rational rational_from_json(const nlohmann::json& j, const char* field) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    if (auto r = parse_rational(j.get<std::string>())) return *r;
    throw ParseError(std::string("structure json: bad rational in '") + field + "'");
  }
  throw ParseError(std::string("structure json: field '") + field +
                   "' must be an integer or a rational string");
}

}  // namespace

SpacetimeStructure structure_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("structure json: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("structure json: top level must be an object");
  if (!j.contains("kind") || !j["kind"].is_string())
    throw ParseError("structure json: missing string field 'kind'");
  const auto kind = kind_from_name(j["kind"].get<std::string>());
  if (!kind) throw ParseError("structure json: unknown kind '" + j["kind"].get<std::string>() + "'");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw ParseError("structure json: missing integer field 'n'");
  const int n = j["n"].get<int>();
  if (n < 1 || n + 1 > MultiIndex::kMaxDim) throw ParseError("structure json: n out of range");

  StructureOverrides overrides;
  if (j.contains("lambda_h")) overrides.lambda_h = rational_from_json(j["lambda_h"], "lambda_h");
  if (j.contains("lambda_k")) overrides.lambda_k = rational_from_json(j["lambda_k"], "lambda_k");
  if (j.contains("mu")) overrides.mu = rational_from_json(j["mu"], "mu");

  SpacetimeStructure s;
  try {
    switch (*kind) {
      case SpacetimeKind::Minkowski: s = make_minkowski(n); break;
      case SpacetimeKind::Galilean: s = make_galilean(n, overrides); break;
      case SpacetimeKind::Carrollian: s = make_carrollian(n, overrides); break;
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("structure json: ") + e.what());
  }

  const int dim = n + 1;
  if (j.contains("h")) {
    const auto& rows = j["h"];
    if (!rows.is_array() || static_cast<int>(rows.size()) != dim)
      throw ParseError("structure json: 'h' must be a d x d array");
    RatMatrix m(dim, dim);
    for (int r = 0; r < dim; ++r) {
      if (!rows[r].is_array() || static_cast<int>(rows[r].size()) != dim)
        throw ParseError("structure json: 'h' must be a d x d array");
      for (int c = 0; c < dim; ++c) m.at(r, c) = rational_from_json(rows[r][c], "h");
    }
    s.metric_or_h.entries = std::move(m);
  }
  if (j.contains("xi")) {
    const auto& arr = j["xi"];
    if (!arr.is_array() || static_cast<int>(arr.size()) != dim)
      throw ParseError("structure json: 'xi' must have length d");
    if (*kind == SpacetimeKind::Minkowski)
      throw ParseError("structure json: 'xi' is not part of a minkowski structure");
    std::vector<Rational> entries;
    entries.reserve(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) entries.push_back(rational_from_json(arr[i], "xi"));
    s.xi->entries = std::move(entries);
    s.k = rank_one_companion(*s.xi, s.lambda_k, s.k->variance);
  }
  return s;
}

std::string structure_to_json(const SpacetimeStructure& s) {
  nlohmann::json j;
  j["kind"] = kind_name(s.kind);
  j["n"] = s.dim - 1;
  j["lambda_h"] = to_string(s.lambda_h);
  j["lambda_k"] = to_string(s.lambda_k);
  j["mu"] = to_string(s.mu);
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < s.dim; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < s.dim; ++c) row.push_back(to_string(s.metric_or_h.entries.at(r, c)));
    rows.push_back(std::move(row));
  }
  j["h"] = std::move(rows);
  if (s.xi) {
    nlohmann::json xi = nlohmann::json::array();
    for (const auto& v : s.xi->entries) xi.push_back(to_string(v));
    j["xi"] = std::move(xi);
  }
  return j.dump(2);
}

}  // namespace gcstar
