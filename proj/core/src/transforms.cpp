#include "tetra/transforms.hpp"

#include <string>

#include "tetra/coeffs.hpp"
#include "tetra/errors.hpp"

namespace tetra {

namespace {

void require_rows(const Triangle& t, index_t n_max, const char* who) {
  if (n_max < 0) throw DomainError(std::string(who) + ": n_max must be non-negative");
  if (t.max_row() < n_max) {
    throw DomainError(std::string(who) + ": b_0..b_" + std::to_string(n_max) +
                      " need triangle rows 0.." + std::to_string(n_max) + ", have 0.." +
                      std::to_string(t.max_row()));
  }
}

}  // namespace

TransformSequence tetra_transform(const Triangle& t, index_t n_max, std::string source) {
  require_rows(t, n_max, "tetra_transform");
  TransformSequence out{{}, std::move(source)};
  out.terms.reserve(static_cast<std::size_t>(n_max + 1));
  for (index_t n = 0; n <= n_max; ++n) {
    BigInt b = 0;
    for (index_t i = 0; i <= n; ++i) {
      for (index_t j = 0; j <= i; ++j) {
        const BigInt& entry = t.at(i, j);
        if (entry != 0) b += trinomial({n, j, n - i, i - j}) * entry;
      }
    }
    out.terms.push_back(std::move(b));
  }
  return out;
}

StarComparison tetra_transform_star(const Triangle& t, index_t n_max, std::string source) {
  require_rows(t, n_max, "tetra_transform_star");
  StarComparison cmp;
  cmp.standard = tetra_transform(t, n_max, source);
  cmp.star.source = std::move(source);
  for (index_t n = 0; n <= n_max; ++n) {
    BigInt b = 0;
    for (index_t i = 0; i <= n; ++i) {
      for (index_t j = 0; j <= i; ++j) {
        const BigInt& entry = t.at(i, j);
        if (entry != 0) b += trinomial_or_zero(n, i, j, n - i - j) * entry;
      }
    }
    if (b != cmp.standard.terms[static_cast<std::size_t>(n)]) cmp.differing.push_back(n);
    cmp.star.terms.push_back(std::move(b));
  }
  return cmp;
}

BigInt closed_form_entry(index_t i, index_t j, index_t k) {
  if (k < 0 || k > i || j < 0 || j > i - k) {
    throw DomainError("closed_form_entry: (i=" + std::to_string(i) + ", j=" + std::to_string(j) +
                      ", k=" + std::to_string(k) + ") outside 0 <= k <= i, 0 <= j <= i - k");
  }
  BigInt sum = 0;
  for (index_t l = 0; l <= k; ++l) sum += binomial(2 * l + i - k, l + j) * binomial(k, l);
  return sum;
}

std::vector<BigInt> binomial_transform(std::span<const BigInt> a) {
  std::vector<BigInt> out;
  out.reserve(a.size());
  // Row n of Pascal's triangle, advanced in place.
  std::vector<BigInt> row;
  for (std::size_t n = 0; n < a.size(); ++n) {
    row.push_back(1);
    for (std::size_t i = n; i > 1; --i) row[i - 1] += row[i - 2];
    BigInt b = 0;
    for (std::size_t i = 0; i <= n; ++i) b += row[i] * a[i];
    out.push_back(std::move(b));
  }
  return out;
}

BigInt central_binomial(index_t n) {
  if (n < 0) throw DomainError("central_binomial: n must be non-negative");
  return binomial(2 * n, n);
}

IdentityCheck check_vandermonde_like(index_t n, index_t m, index_t k) {
  if (n < 0 || k < 0 || k > m) {
    throw DomainError("check_vandermonde_like: need n >= 0 and 0 <= k <= m, got n=" +
                      std::to_string(n) + ", m=" + std::to_string(m) + ", k=" + std::to_string(k));
  }
  IdentityCheck check;
  check.lhs = 0;
  for (index_t i = 0; i <= n; ++i) check.lhs += binomial(n, i) * binomial(n + m, i + k);
  check.rhs = binomial(2 * n + m, n + k);
  check.holds = check.lhs == check.rhs;
  return check;
}

}  // namespace tetra
