#include "gcstar/form.hpp"

#include <stdexcept>

namespace gcstar {

namespace {

void check_key(const Form& f, const MultiIndex& key) {
  if (key.degree() != f.degree) throw std::invalid_argument("Form: key degree mismatch");
  if (!key.max_index_below(f.dim)) throw std::invalid_argument("Form: index beyond dimension");
}

void check_degree(int dim, int degree) {
  if (dim < 1 || dim > MultiIndex::kMaxDim) throw std::invalid_argument("Form: bad dimension");
  if (degree < 0 || degree > dim) throw std::invalid_argument("Form: bad degree");
}

}  // namespace

Form Form::zero(int dim, int degree) {
  check_degree(dim, degree);
  return Form{dim, degree, {}};
}

Form Form::scalar(int dim, const Rational& value) {
  Form f = zero(dim, 0);
  f.set_term(MultiIndex{}, value);
  return f;
}

Form Form::basis(int dim, const MultiIndex& key) {
  Form f = zero(dim, key.degree());
  f.set_term(key, 1);
  return f;
}

Form Form::basis(int dim, std::initializer_list<int> idxs) {
  return basis(dim, MultiIndex::from_indices(std::span<const int>(idxs.begin(), idxs.size())));
}

Rational Form::coefficient(const MultiIndex& key) const {
  const auto it = terms.find(key);
  return it == terms.end() ? Rational(0) : it->second;
}

void Form::set_term(const MultiIndex& key, const Rational& value) {
  check_key(*this, key);
  if (value == 0)
    terms.erase(key);
  else
    terms[key] = value;
}

void Form::add_term(const MultiIndex& key, const Rational& value) {
  check_key(*this, key);
  const auto [it, inserted] = terms.emplace(key, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms.erase(it);
  } else if (value == 0) {
    terms.erase(it);
  }
}

Form operator+(const Form& a, const Form& b) {
  if (a.dim != b.dim) throw std::invalid_argument("Form +: dimension mismatch");
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree != b.degree) throw std::invalid_argument("Form +: degree mismatch");
  Form out = a;
  for (const auto& [key, value] : b.terms) out.add_term(key, value);
  return out;
}

Form operator-(const Form& a) {
  Form out = a;
  for (auto& [key, value] : out.terms) value = -value;
  return out;
}

Form operator-(const Form& a, const Form& b) { return a + (-b); }

Form operator*(const Rational& c, const Form& a) {
  if (c == 0) return Form::zero(a.dim, a.degree);
  Form out = a;
  for (auto& [key, value] : out.terms) value *= c;
  return out;
}

Form wedge(const Form& a, const Form& b) {
  if (a.dim != b.dim) throw std::invalid_argument("wedge: dimension mismatch");
  const int degree = std::min(a.degree + b.degree, a.dim);
  Form out = Form::zero(a.dim, degree);
  if (a.degree + b.degree > a.dim) return out;  // only the zero form lives up there
  for (const auto& [ka, va] : a.terms) {
    for (const auto& [kb, vb] : b.terms) {
      const int sign = merge_sign(ka, kb);
      if (sign == 0) continue;  // repeated index
      out.add_term(ka.unite(kb), Rational(sign) * va * vb);
    }
  }
  return out;
}

Form eta(const Form& a) { return (a.degree % 2 == 0) ? a : -a; }

SpatialForm::SpatialForm(Form f) : form_(std::move(f)) {
  for (const auto& [key, value] : form_.terms) {
    (void)value;
    if (key.has_temporal()) throw std::invalid_argument("SpatialForm: temporal leg present");
  }
}

SpatialForm SpatialForm::zero(int dim, int degree) { return SpatialForm(Form::zero(dim, degree)); }

Decomposition decompose(const Form& a) {
  // e0 ^ e^J is already canonical for spatial J (index 0 sorts first), so
  // coefficients move across without signs.
  Form s = Form::zero(a.dim, a.degree > 0 ? a.degree - 1 : 0);
  Form r = Form::zero(a.dim, a.degree);
  for (const auto& [key, value] : a.terms) {
    if (key.has_temporal())
      s.set_term(key.without(0), value);
    else
      r.set_term(key, value);
  }
  return Decomposition{SpatialForm(std::move(s)), SpatialForm(std::move(r))};
}

Form recompose(const Decomposition& parts) {
  const Form& s = parts.s_hat.form();
  const Form e0 = Form::basis(s.dim, {0});
  return wedge(e0, s) + parts.r_hat.form();
}

}  // namespace gcstar
