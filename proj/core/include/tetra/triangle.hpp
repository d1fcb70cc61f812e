#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tetra/bigint.hpp"

namespace tetra {

/// Finite prefix of an arithmetical triangle: rows 0..max_row(), row i
/// holding t_j^i for j = 0..i. Immutable after construction.
class Triangle {
 public:
  /// Validates shape; throws ShapeError naming the first ragged row.
  static Triangle from_rows(const std::vector<std::vector<BigInt>>& rows);

  index_t max_row() const noexcept { return max_row_; }
  std::size_t row_count() const noexcept { return static_cast<std::size_t>(max_row_ + 1); }

  /// Throws DomainError outside 0 <= j <= i <= max_row().
  const BigInt& at(index_t i, index_t j) const;

  /// Zero-extended lookup: 0 for j outside 0..i. Throws DomainError if i is
  /// not a stored row.
  BigInt at_or_zero(index_t i, index_t j) const;

  std::span<const BigInt> row(index_t i) const;
  std::vector<std::vector<BigInt>> to_rows() const;

  bool operator==(const Triangle&) const = default;

 private:
  Triangle(index_t max_row, std::vector<BigInt> entries)
      : max_row_(max_row), entries_(std::move(entries)) {}

  static std::size_t offset(index_t i, index_t j) noexcept {
    return static_cast<std::size_t>(i * (i + 1) / 2 + j);
  }

  index_t max_row_ = -1;
  std::vector<BigInt> entries_;
};

/// Constant left diagonal c and right-diagonal seeds a_1, a_2, ...
/// The apex t_0^0 is c; there is no a_0.
struct GatSpec {
  BigInt c;
  std::vector<BigInt> a;
};

/// t_j^i = C(i, j) for 0 <= j <= i <= max_row.
Triangle pascal_triangle(index_t max_row);

/// t_0^i = c, t_i^i = a_i (i >= 1), interior by Pascal's rule.
/// Throws DomainError when spec.a holds fewer than max_row seeds.
Triangle gat_triangle(const GatSpec& spec, index_t max_row);

/// Explicit summation form of gat_triangle(spec, i).at(i, j), without
/// building the triangle.
BigInt gat_entry_closed(const GatSpec& spec, index_t i, index_t j);

bool is_vertically_symmetric(const Triangle& t);
bool satisfies_pascal_rule(const Triangle& t);
bool has_constant_left_diagonal(const Triangle& t);

// Interchange formats. JSON is an array of arrays of decimal strings (plain
// JSON integers are accepted on read); CSV is one row per line.
Triangle triangle_from_json(std::string_view text);
std::string triangle_to_json(const Triangle& t);
Triangle triangle_from_csv(std::string_view text);
std::string triangle_to_csv(const Triangle& t);

/// Dispatches on extension: ".csv" reads CSV, anything else JSON.
Triangle load_triangle(const std::filesystem::path& path);
void save_triangle(const Triangle& t, const std::filesystem::path& path);

}  // namespace tetra
