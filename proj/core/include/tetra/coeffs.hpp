#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tetra/bigint.hpp"

namespace tetra {

/// C(n, j) by the multiplicative formula; exactly 0 when j is outside 0..n.
/// Throws DomainError for n < 0.
BigInt binomial(index_t n, index_t j);

/// Index of one tetrahedron trinomial coefficient n! / (p! q! r!).
struct TrinomialTriple {
  index_t n = 0;
  index_t p = 0;
  index_t q = 0;
  index_t r = 0;

  bool valid() const noexcept {
    return p >= 0 && q >= 0 && r >= 0 && p + q + r == n;
  }
};

/// Computed as C(n, p) * C(n - p, q). Throws DomainError unless t.valid().
BigInt trinomial(const TrinomialTriple& t);

/// Same value as trinomial() for valid triples, 0 for any other (p, q, r).
/// Throws DomainError only for n < 0.
BigInt trinomial_or_zero(index_t n, index_t p, index_t q, index_t r);

/// Level k of Pascal's tetrahedron as a triangle: entry (s, r) for
/// 0 <= s <= r <= k holds trinomial(k; s, k - r, r - s).
class TetraLevel {
 public:
  explicit TetraLevel(index_t k);

  index_t k() const noexcept { return k_; }
  const BigInt& at(index_t s, index_t r) const;

  /// Row r of the level triangle, s = 0..r.
  std::span<const BigInt> row(index_t r) const;

  /// Dense row-major storage, r outer, s inner.
  std::span<const BigInt> entries() const noexcept { return entries_; }

 private:
  static std::size_t offset(index_t s, index_t r) noexcept {
    return static_cast<std::size_t>(r * (r + 1) / 2 + s);
  }

  index_t k_;
  std::vector<BigInt> entries_;
};

inline TetraLevel tetra_level(index_t k) { return TetraLevel(k); }

}  // namespace tetra
