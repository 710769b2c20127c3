#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gcstar {

/* A basis p-form e^{a} ^ e^{b} ^ ... is labelled by the set of frame indices
   it wedges together, stored as a bitmask over indices 0..dim-1.  Index 0 is
   the temporal leg of an adapted frame, indices 1..n are spatial.

   The canonical representative always lists indices in strictly increasing
   order, so a bare mask is unambiguous; whoever reorders indices owes the
   permutation sign and folds it into the coefficient.  Masks are capped at
   16 indices, comfortably above the dimensions this library is used in. */
class MultiIndex {
 public:
  static constexpr int kMaxDim = 16;

  constexpr MultiIndex() = default;

  static MultiIndex from_bits(std::uint32_t bits);
  // Indices may arrive in any order but must be distinct and in range.
  static MultiIndex from_indices(std::span<const int> indices);
  static MultiIndex from_indices(std::initializer_list<int> indices) {
    return from_indices(std::span<const int>(indices.begin(), indices.size()));
  }
  static MultiIndex full(int dim);  // {0, 1, ..., dim-1}

  std::uint32_t bits() const { return bits_; }
  int degree() const;  // number of indices in the set
  bool empty() const { return bits_ == 0; }
  bool contains(int index) const { return (bits_ >> index) & 1u; }
  bool has_temporal() const { return contains(0); }
  bool max_index_below(int dim) const { return (bits_ >> dim) == 0; }

  MultiIndex with(int index) const;     // index must not be present
  MultiIndex without(int index) const;  // index must be present
  bool disjoint(const MultiIndex& other) const { return (bits_ & other.bits_) == 0; }
  MultiIndex unite(const MultiIndex& other) const;  // sets must be disjoint

  std::vector<int> indices() const;  // ascending

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  // Degree first, then lexicographic on the ascending index lists; gives the
  // order forms print in.
  friend bool operator<(const MultiIndex& a, const MultiIndex& b);

 private:
  explicit constexpr MultiIndex(std::uint32_t bits) : bits_(bits) {}
  std::uint32_t bits_ = 0;
};

// Sign of the permutation that sorts `sequence` ascending, 0 when an entry
// repeats.  On a permutation of 0..d-1 this is the Levi-Civita symbol with
// the convention epsilon_{01...} = +1.
int levi_civita(std::span<const int> sequence);

// Sign picked up by reordering the concatenation (a, b) of two disjoint
// ascending index sets into one ascending run: (-1)^{inversions between them}.
int merge_sign(const MultiIndex& a, const MultiIndex& b);

// Visits every canonical index set of size k drawn from 0..dim-1, in
// increasing numeric mask order (Gosper's hack).
template <typename F>
void for_each_index_set(int dim, int k, F&& f) {
  if (k == 0) {
    f(MultiIndex{});
    return;
  }
  if (k > dim) return;
  std::uint32_t mask = (1u << k) - 1u;
  const std::uint32_t limit = 1u << dim;
  while (mask < limit) {
    f(MultiIndex::from_bits(mask));
    const std::uint32_t c = mask & (~mask + 1u);
    const std::uint32_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
}

}  // namespace gcstar
