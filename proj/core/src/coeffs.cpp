#include "tetra/coeffs.hpp"

#include <string>

#include "tetra/errors.hpp"

namespace tetra {

BigInt binomial(index_t n, index_t j) {
  if (n < 0) {
    throw DomainError("binomial: n must be non-negative, got " + std::to_string(n));
  }
  if (j < 0 || j > n) return 0;
  const index_t m = j < n - j ? j : n - j;
  BigInt result = 1;
  // After step t the value is C(n - m + t, t), so each division is exact.
  for (index_t t = 1; t <= m; ++t) {
    result *= n - m + t;
    result /= t;
  }
  return result;
}

BigInt trinomial(const TrinomialTriple& t) {
  if (!t.valid()) {
    throw DomainError("trinomial: invalid triple (n=" + std::to_string(t.n) +
                      ", p=" + std::to_string(t.p) + ", q=" + std::to_string(t.q) +
                      ", r=" + std::to_string(t.r) + ")");
  }
  return binomial(t.n, t.p) * binomial(t.n - t.p, t.q);
}

BigInt trinomial_or_zero(index_t n, index_t p, index_t q, index_t r) {
  if (n < 0) {
    throw DomainError("trinomial_or_zero: n must be non-negative, got " + std::to_string(n));
  }
  const TrinomialTriple t{n, p, q, r};
  return t.valid() ? trinomial(t) : BigInt(0);
}

TetraLevel::TetraLevel(index_t k) : k_(k) {
  if (k < 0) {
    throw DomainError("tetra_level: k must be non-negative, got " + std::to_string(k));
  }
  entries_.reserve(offset(0, k + 1));
  for (index_t r = 0; r <= k; ++r) {
    for (index_t s = 0; s <= r; ++s) {
      entries_.push_back(trinomial({k, s, k - r, r - s}));
    }
  }
}

const BigInt& TetraLevel::at(index_t s, index_t r) const {
  if (r < 0 || r > k_ || s < 0 || s > r) {
    throw DomainError("TetraLevel::at: (s=" + std::to_string(s) + ", r=" + std::to_string(r) +
                      ") outside level " + std::to_string(k_));
  }
  return entries_[offset(s, r)];
}

std::span<const BigInt> TetraLevel::row(index_t r) const {
  if (r < 0 || r > k_) {
    throw DomainError("TetraLevel::row: r=" + std::to_string(r) + " outside level " +
                      std::to_string(k_));
  }
  return std::span<const BigInt>(entries_).subspan(offset(0, r), static_cast<std::size_t>(r + 1));
}

}  // namespace tetra
