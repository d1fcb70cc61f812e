#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tetra/bigint.hpp"
#include "tetra/triangle.hpp"

namespace tetra {

struct TransformSequence {
  std::vector<BigInt> terms;  // b_0..b_n
  std::string source;
};

/// b_n = sum_{i<=n} sum_{j<=i} trinomial(n; j, n-i, i-j) t_j^i, evaluated
/// straight from the double sum (never through the tetrahedron).
TransformSequence tetra_transform(const Triangle& t, index_t n_max,
                                  std::string source = "triangle");

/// Termwise comparison of the alternative transform
/// b*_n = sum_i sum_j trinomial_or_zero(n; i, j, n-i-j) t_j^i against b_n.
/// Reports; never asserts that the two agree.
struct StarComparison {
  TransformSequence standard;
  TransformSequence star;
  std::vector<index_t> differing;  // every n with b_n != b*_n, ascending
  bool agrees() const noexcept { return differing.empty(); }
  std::optional<index_t> first_disagreement() const {
    return differing.empty() ? std::nullopt : std::optional<index_t>(differing.front());
  }
};

StarComparison tetra_transform_star(const Triangle& t, index_t n_max,
                                    std::string source = "triangle");

/// Pascal-face entry h_{j,k}^i = sum_{l=0}^{k} C(2l+i-k, l+j) C(k, l).
BigInt closed_form_entry(index_t i, index_t j, index_t k);

/// b_n = sum_i C(n, i) a_i, same length as a.
std::vector<BigInt> binomial_transform(std::span<const BigInt> a);

/// C(2n, n).
BigInt central_binomial(index_t n);

struct IdentityCheck {
  bool holds = false;
  BigInt lhs;
  BigInt rhs;
  explicit operator bool() const noexcept { return holds; }
};

/// sum_{i=0}^{n} C(n, i) C(n+m, i+k) against C(2n+m, n+k), both sides
/// computed exactly. Requires n >= 0 and 0 <= k <= m (DomainError).
IdentityCheck check_vandermonde_like(index_t n, index_t m, index_t k);

}  // namespace tetra
