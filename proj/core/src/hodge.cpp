#include "gcstar/hodge.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace gcstar {

bool is_table_variant(StarVariant variant) {
  return variant == StarVariant::TableGalilei4D || variant == StarVariant::TableCarroll4D;
}

bool variant_compatible(SpacetimeKind kind, StarVariant variant) {
  switch (kind) {
    case SpacetimeKind::Minkowski:
      return variant == StarVariant::MinkowskiMetric;
    case SpacetimeKind::Galilean:
      return variant == StarVariant::GalileanH || variant == StarVariant::GalileanK ||
             variant == StarVariant::TableGalilei4D;
    case SpacetimeKind::Carrollian:
      return variant == StarVariant::CarrollianH || variant == StarVariant::CarrollianK ||
             variant == StarVariant::TableCarroll4D;
  }
  return false;
}

std::string variant_name(StarVariant variant) {
  switch (variant) {
    case StarVariant::MinkowskiMetric: return "minkowski-metric";
    case StarVariant::GalileanH: return "galilean-h";
    case StarVariant::GalileanK: return "galilean-k";
    case StarVariant::CarrollianH: return "carrollian-h";
    case StarVariant::CarrollianK: return "carrollian-k";
    case StarVariant::TableGalilei4D: return "table-galilei-4d";
    case StarVariant::TableCarroll4D: return "table-carroll-4d";
  }
  return "unknown";
}

namespace {

bool is_raising(StarVariant variant) {
  return variant == StarVariant::MinkowskiMetric || variant == StarVariant::GalileanH ||
         variant == StarVariant::CarrollianK;
}

const RatMatrix& contraction_tensor(const SpacetimeStructure& s, StarVariant variant) {
  switch (variant) {
    case StarVariant::MinkowskiMetric:
    case StarVariant::GalileanH:
    case StarVariant::CarrollianH:
      return s.metric_or_h.entries;
    case StarVariant::GalileanK:
    case StarVariant::CarrollianK:
      if (!s.k) throw std::invalid_argument("star: structure has no rank-one companion");
      return s.k->entries;
    default:
      throw std::invalid_argument("star: table variants have no single contraction tensor");
  }
}

void check_variant(const SpacetimeStructure& s, StarVariant variant, bool allow_table) {
  if (!variant_compatible(s.kind, variant))
    throw std::invalid_argument("star: variant " + variant_name(variant) +
                                " incompatible with structure kind " + kind_name(s.kind));
  if (!allow_table && is_table_variant(variant))
    throw std::invalid_argument("star: " + variant_name(variant) +
                                " is a degreewise table, not a single contraction");
}

}  // namespace

MixedEpsilon mixed_epsilon(const SpacetimeStructure& s, StarVariant variant, int degree) {
  check_variant(s, variant, /*allow_table=*/false);
  const int d = s.dim;
  if (degree < 0 || degree > d) throw std::invalid_argument("mixed_epsilon: degree out of range");

  const bool raising = is_raising(variant);
  const RatMatrix& tensor = contraction_tensor(s, variant);
  const Rational top =
      raising ? s.vol.coefficient(MultiIndex::full(d)) : s.polyvol.coefficient(MultiIndex::full(d));

  MixedEpsilon table{d, degree, {}};
  if (top == 0) return table;

  const int q = d - degree;
  // Raising sums p tuple slots paired with the upper set; lowering sums q
  // tuple slots paired with the lower set.
  const int slots = raising ? degree : q;

  for_each_index_set(d, degree, [&](MultiIndex upper) {
    const std::vector<int> upper_indices = upper.indices();
    for_each_index_set(d, q, [&](MultiIndex lower) {
      const std::vector<int> lower_indices = lower.indices();
      const std::vector<int>& paired = raising ? upper_indices : lower_indices;
      const std::vector<int>& fixed = raising ? lower_indices : upper_indices;

      // Dummy tuple t_0..t_{slots-1}; epsilon kills any repeat, including a
      // collision with the fixed set, so prune with a bitmask as we go.
      std::vector<int> tuple(static_cast<std::size_t>(slots), 0);
      Rational acc(0);
      const std::uint32_t fixed_mask = raising ? lower.bits() : upper.bits();
      auto descend = [&](auto&& self, int slot, std::uint32_t used, Rational partial) -> void {
        if (slot == slots) {
          std::vector<int> sequence;
          sequence.reserve(static_cast<std::size_t>(d));
          if (raising) {
            sequence.insert(sequence.end(), tuple.begin(), tuple.end());
            sequence.insert(sequence.end(), fixed.begin(), fixed.end());
          } else {
            sequence.insert(sequence.end(), fixed.begin(), fixed.end());
            sequence.insert(sequence.end(), tuple.begin(), tuple.end());
          }
          acc += partial * levi_civita(sequence);
          return;
        }
        for (int t = 0; t < d; ++t) {
          if ((used >> t) & 1u) continue;
          // Raising pairs tensor^{paired[slot] t}; lowering pairs
          // tensor_{paired[slot] t} with t running through polyvol's slots.
          const Rational& factor = tensor.at(paired[static_cast<std::size_t>(slot)], t);
          if (factor == 0) continue;
          tuple[static_cast<std::size_t>(slot)] = t;
          self(self, slot + 1, used | (1u << t), partial * factor);
        }
      };
      descend(descend, 0, fixed_mask, top);
      if (acc != 0) table.components.emplace(std::make_pair(upper, lower), std::move(acc));
    });
  });
  return table;
}

namespace {

Form contract_with_table(const Form& a, const MixedEpsilon& table) {
  Form out = Form::zero(a.dim, a.dim - a.degree);
  for (const auto& [key, coefficient] : a.terms) {
    auto it = table.components.lower_bound(std::make_pair(key, MultiIndex{}));
    for (; it != table.components.end() && it->first.first == key; ++it)
      out.add_term(it->first.second, coefficient * it->second);
  }
  return out;
}

}  // namespace

Form star_oracle(const Form& a, const SpacetimeStructure& s, StarVariant variant) {
  if (a.dim != s.dim) throw std::invalid_argument("star_oracle: dimension mismatch");
  return contract_with_table(a, mixed_epsilon(s, variant, a.degree));
}

SpatialForm hat_star(const SpatialForm& s) {
  const int dim = s.dim();
  const int n = dim - 1;
  if (s.degree() > n)
    throw std::invalid_argument("hat_star: degree exceeds the spatial dimension");
  const MultiIndex spatial_full = MultiIndex::full(dim).without(0);
  Form out = Form::zero(dim, n - s.degree());
  for (const auto& [key, value] : s.form().terms) {
    const MultiIndex complement = MultiIndex::from_bits(spatial_full.bits() & ~key.bits());
    out.add_term(complement, Rational(merge_sign(key, complement)) * value);
  }
  return SpatialForm(std::move(out));
}

Form star_closed(const Form& a, const SpacetimeStructure& s, StarVariant variant) {
  if (a.dim != s.dim) throw std::invalid_argument("star_closed: dimension mismatch");
  check_variant(s, variant, /*allow_table=*/false);
  if (const auto violations = validate_adapted(s); !violations.empty())
    throw std::domain_error("star_closed: structure is not adapted canonical: " + violations.front());

  const int d = a.dim;
  const int n = d - 1;
  const int p = a.degree;
  const Decomposition parts = decompose(a);
  const Form e0 = Form::basis(d, {0});
  Form out = Form::zero(d, d - p);

  const auto pow_of = [](const Rational& base, int exponent) {
    Rational r(1);
    for (int i = 0; i < exponent; ++i) r *= base;
    return r;
  };

  switch (variant) {
    case StarVariant::MinkowskiMetric: {
      if (!parts.r_hat.form().is_zero())
        out = out + wedge(e0, hat_star(parts.r_hat).form());
      if (!parts.s_hat.form().is_zero())
        out = out + hat_star(SpatialForm(eta(parts.s_hat.form()))).form();
      break;
    }
    case StarVariant::GalileanH: {
      if (!parts.r_hat.form().is_zero())
        out = out + pow_of(-s.lambda_h, p) * wedge(e0, hat_star(parts.r_hat).form());
      break;
    }
    case StarVariant::CarrollianH: {
      if (!parts.s_hat.form().is_zero())
        out = out + (s.mu * pow_of(s.lambda_h, n - p + 1)) * hat_star(parts.s_hat).form();
      break;
    }
    case StarVariant::GalileanK: {
      if (p == d) {
        out.add_term(MultiIndex{}, s.mu * a.coefficient(MultiIndex::full(d)));
      } else if (p == n) {
        const MultiIndex omega_hat = MultiIndex::full(d).without(0);
        out.add_term(MultiIndex::from_bits(1u),
                     s.mu * s.lambda_k * sign_pow(n) * a.coefficient(omega_hat));
      }
      break;
    }
    case StarVariant::CarrollianK: {
      if (p == 0) {
        out.add_term(MultiIndex::full(d), a.coefficient(MultiIndex{}));
      } else if (p == 1) {
        out.add_term(MultiIndex::full(d).without(0),
                     s.lambda_k * a.coefficient(MultiIndex::from_bits(1u)));
      }
      break;
    }
    default:
      break;  // unreachable: check_variant rejects table variants
  }
  return out;
}

Form star_spliced(const Form& a, const SpacetimeStructure& s) {
  switch (s.kind) {
    case SpacetimeKind::Minkowski:
      return star_closed(a, s, StarVariant::MinkowskiMetric);
    case SpacetimeKind::Galilean:
      if (a.degree == s.dim)
        return sign_pow(s.spatial_dim()) * star_closed(a, s, StarVariant::GalileanK);
      return star_closed(a, s, StarVariant::GalileanH);
    case SpacetimeKind::Carrollian:
      if (a.degree == 0) return star_closed(a, s, StarVariant::CarrollianK);
      return star_closed(a, s, StarVariant::CarrollianH);
  }
  throw std::invalid_argument("star_spliced: unknown structure kind");
}

Form star_table_4d(const Form& a, SpacetimeKind kind) {
  if (a.dim != 4) throw std::invalid_argument("star_table_4d: only defined in four dimensions");
  static const SpacetimeStructure minkowski = make_minkowski(3);
  static const SpacetimeStructure galilean = make_galilean(3);
  static const SpacetimeStructure carrollian = make_carrollian(3);
  switch (kind) {
    case SpacetimeKind::Minkowski: return star_spliced(a, minkowski);
    case SpacetimeKind::Galilean: return star_spliced(a, galilean);
    case SpacetimeKind::Carrollian: return star_spliced(a, carrollian);
  }
  throw std::invalid_argument("star_table_4d: unknown kind");
}

Form apply_star(const Form& a, const SpacetimeStructure& s, StarVariant variant) {
  if (is_table_variant(variant)) {
    check_variant(s, variant, /*allow_table=*/true);
    if (s.dim != 4)
      throw std::invalid_argument("apply_star: " + variant_name(variant) +
                                  " requires four dimensions");
    return star_spliced(a, s);
  }
  return star_closed(a, s, variant);
}

StarCache::StarCache(SpacetimeStructure s) : structure_(std::move(s)) {}

std::shared_ptr<const MixedEpsilon> StarCache::table(StarVariant variant, int degree) const {
  const auto key = std::make_pair(variant, degree);
  {
    std::shared_lock lock(mutex_);
    if (const auto it = tables_.find(key); it != tables_.end()) return it->second;
  }
  // Build outside any lock; on a race the first insert wins and the others
  // are dropped, so every reader sees one immutable table.
  auto built = std::make_shared<const MixedEpsilon>(mixed_epsilon(structure_, variant, degree));
  std::unique_lock lock(mutex_);
  const auto [it, inserted] = tables_.emplace(key, std::move(built));
  (void)inserted;
  return it->second;
}

Form StarCache::star(const Form& a, StarVariant variant) const {
  if (a.dim != structure_.dim) throw std::invalid_argument("StarCache::star: dimension mismatch");
  const auto t = table(variant, a.degree);
  Form out = Form::zero(a.dim, a.dim - a.degree);
  for (const auto& [key, coefficient] : a.terms) {
    auto it = t->components.lower_bound(std::make_pair(key, MultiIndex{}));
    for (; it != t->components.end() && it->first.first == key; ++it)
      out.add_term(it->first.second, coefficient * it->second);
  }
  return out;
}

}  // namespace gcstar
