#include "tetra/triangle.hpp"

#include <string>

#include "tetra/coeffs.hpp"
#include "tetra/errors.hpp"

namespace tetra {

Triangle Triangle::from_rows(const std::vector<std::vector<BigInt>>& rows) {
  if (rows.empty()) {
    throw ShapeError(0, "triangle must have at least one row");
  }
  std::vector<BigInt> entries;
  entries.reserve(offset(static_cast<index_t>(rows.size()), 0));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != i + 1) {
      throw ShapeError(i, "row " + std::to_string(i) + " must have " + std::to_string(i + 1) +
                              " entries, got " + std::to_string(rows[i].size()));
    }
    entries.insert(entries.end(), rows[i].begin(), rows[i].end());
  }
  return Triangle(static_cast<index_t>(rows.size()) - 1, std::move(entries));
}

const BigInt& Triangle::at(index_t i, index_t j) const {
  if (i < 0 || i > max_row_ || j < 0 || j > i) {
    throw DomainError("triangle entry (i=" + std::to_string(i) + ", j=" + std::to_string(j) +
                      ") outside rows 0.." + std::to_string(max_row_));
  }
  return entries_[offset(i, j)];
}

BigInt Triangle::at_or_zero(index_t i, index_t j) const {
  if (i < 0 || i > max_row_) {
    throw DomainError("triangle row " + std::to_string(i) + " not stored (rows 0.." +
                      std::to_string(max_row_) + ")");
  }
  if (j < 0 || j > i) return 0;
  return entries_[offset(i, j)];
}

std::span<const BigInt> Triangle::row(index_t i) const {
  if (i < 0 || i > max_row_) {
    throw DomainError("triangle row " + std::to_string(i) + " not stored (rows 0.." +
                      std::to_string(max_row_) + ")");
  }
  return std::span<const BigInt>(entries_).subspan(offset(i, 0), static_cast<std::size_t>(i + 1));
}

std::vector<std::vector<BigInt>> Triangle::to_rows() const {
  std::vector<std::vector<BigInt>> rows;
  rows.reserve(row_count());
  for (index_t i = 0; i <= max_row_; ++i) {
    auto r = row(i);
    rows.emplace_back(r.begin(), r.end());
  }
  return rows;
}

Triangle pascal_triangle(index_t max_row) {
  if (max_row < 0) {
    throw DomainError("pascal_triangle: max_row must be non-negative");
  }
  std::vector<std::vector<BigInt>> rows(static_cast<std::size_t>(max_row + 1));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].resize(i + 1);
    rows[i][0] = rows[i][i] = 1;
    for (std::size_t j = 1; j < i; ++j) rows[i][j] = rows[i - 1][j - 1] + rows[i - 1][j];
  }
  return Triangle::from_rows(rows);
}

Triangle gat_triangle(const GatSpec& spec, index_t max_row) {
  if (max_row < 0) {
    throw DomainError("gat_triangle: max_row must be non-negative");
  }
  if (static_cast<index_t>(spec.a.size()) < max_row) {
    throw DomainError("gat_triangle: " + std::to_string(max_row) + " rows need seeds a_1..a_" +
                      std::to_string(max_row) + ", got " + std::to_string(spec.a.size()));
  }
  std::vector<std::vector<BigInt>> rows(static_cast<std::size_t>(max_row + 1));
  rows[0] = {spec.c};
  for (std::size_t i = 1; i < rows.size(); ++i) {
    rows[i].resize(i + 1);
    rows[i][0] = spec.c;
    rows[i][i] = spec.a[i - 1];
    for (std::size_t j = 1; j < i; ++j) rows[i][j] = rows[i - 1][j - 1] + rows[i - 1][j];
  }
  return Triangle::from_rows(rows);
}

BigInt gat_entry_closed(const GatSpec& spec, index_t i, index_t j) {
  if (i < 0 || j < 0 || j > i) {
    throw DomainError("gat_entry_closed: (i=" + std::to_string(i) + ", j=" + std::to_string(j) +
                      ") outside the triangle");
  }
  // The summation form covers interior entries only.
  if (j == 0) return spec.c;
  if (static_cast<index_t>(spec.a.size()) < (j == i ? i : j)) {
    throw DomainError("gat_entry_closed: not enough seeds for (i=" + std::to_string(i) +
                      ", j=" + std::to_string(j) + ")");
  }
  if (j == i) return spec.a[static_cast<std::size_t>(i - 1)];

  BigInt left = 0;
  for (index_t p = 0; p <= i - j - 1; ++p) left += binomial(i - 2 - p, j - 1);
  BigInt seeds = 0;
  for (index_t q = 0; q <= j - 1; ++q) {
    seeds += binomial(i - 2 - q, j - 1 - q) * spec.a[static_cast<std::size_t>(q)];
  }
  return spec.c * left + seeds;
}

bool is_vertically_symmetric(const Triangle& t) {
  for (index_t i = 0; i <= t.max_row(); ++i) {
    for (index_t j = 0; 2 * j < i; ++j) {
      if (t.at(i, j) != t.at(i, i - j)) return false;
    }
  }
  return true;
}

bool satisfies_pascal_rule(const Triangle& t) {
  for (index_t i = 2; i <= t.max_row(); ++i) {
    for (index_t j = 1; j <= i - 1; ++j) {
      if (t.at(i, j) != t.at(i - 1, j - 1) + t.at(i - 1, j)) return false;
    }
  }
  return true;
}

bool has_constant_left_diagonal(const Triangle& t) {
  const BigInt& c = t.at(0, 0);
  for (index_t i = 1; i <= t.max_row(); ++i) {
    if (t.at(i, 0) != c) return false;
  }
  return true;
}

}  // namespace tetra
