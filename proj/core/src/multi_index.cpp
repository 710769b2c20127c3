#include "gcstar/multi_index.hpp"

#include <bit>
#include <stdexcept>

namespace gcstar {

MultiIndex MultiIndex::from_bits(std::uint32_t bits) {
  if (bits >> kMaxDim) throw std::invalid_argument("MultiIndex: index beyond supported maximum");
  return MultiIndex(bits);
}

MultiIndex MultiIndex::from_indices(std::span<const int> indices) {
  std::uint32_t bits = 0;
  for (int i : indices) {
    if (i < 0 || i >= kMaxDim) throw std::invalid_argument("MultiIndex: index out of range");
    const std::uint32_t bit = 1u << i;
    if (bits & bit) throw std::invalid_argument("MultiIndex: repeated index");
    bits |= bit;
  }
  return MultiIndex(bits);
}

MultiIndex MultiIndex::full(int dim) {
  if (dim < 0 || dim > kMaxDim) throw std::invalid_argument("MultiIndex: dimension out of range");
  return MultiIndex(dim == 0 ? 0u : (1u << dim) - 1u);
}

int MultiIndex::degree() const { return std::popcount(bits_); }

MultiIndex MultiIndex::with(int index) const {
  if (contains(index)) throw std::invalid_argument("MultiIndex::with: index already present");
  if (index < 0 || index >= kMaxDim) throw std::invalid_argument("MultiIndex: index out of range");
  return MultiIndex(bits_ | (1u << index));
}

MultiIndex MultiIndex::without(int index) const {
  if (!contains(index)) throw std::invalid_argument("MultiIndex::without: index absent");
  return MultiIndex(bits_ & ~(1u << index));
}

MultiIndex MultiIndex::unite(const MultiIndex& other) const {
  if (!disjoint(other)) throw std::invalid_argument("MultiIndex::unite: sets overlap");
  return MultiIndex(bits_ | other.bits_);
}

std::vector<int> MultiIndex::indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(degree()));
  for (int i = 0; i < kMaxDim; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

bool operator<(const MultiIndex& a, const MultiIndex& b) {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  const auto ia = a.indices(), ib = b.indices();
  return ia < ib;
}

int levi_civita(std::span<const int> sequence) {
  // O(len^2) inversion count; sequences here never exceed 16 entries.
  int inversions = 0;
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    for (std::size_t j = i + 1; j < sequence.size(); ++j) {
      if (sequence[i] == sequence[j]) return 0;
      if (sequence[i] > sequence[j]) ++inversions;
    }
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

int merge_sign(const MultiIndex& a, const MultiIndex& b) {
  if (!a.disjoint(b)) return 0;
  int inversions = 0;
  for (int j : b.indices()) {
    // indices of a strictly above j
    const std::uint32_t above = a.bits() >> (j + 1);
    inversions += std::popcount(above);
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

}  // namespace gcstar
