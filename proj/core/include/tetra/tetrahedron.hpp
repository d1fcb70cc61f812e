#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tetra/bigint.hpp"
#include "tetra/triangle.hpp"

namespace tetra {

/// Levels 0..levels() of the tetrahedron H grown from a face triangle T.
/// Level i holds rows k = 0..i and row k holds h_{j,k}^i for j = 0..i-k.
/// Entries live in one contiguous buffer, level-major then row-major.
class Tetrahedron {
 public:
  index_t levels() const noexcept { return levels_; }

  /// h_{j,k}^i. Throws DomainError outside 0 <= k <= i <= levels(),
  /// 0 <= j <= i - k.
  const BigInt& at(index_t i, index_t j, index_t k) const;

  /// Row k of level i, indexed by j.
  std::span<const BigInt> row(index_t i, index_t k) const;

  /// The source triangle (row 0 of every level).
  const Triangle& face() const noexcept { return face_; }

  bool contains(index_t i, index_t j, index_t k) const noexcept {
    return i >= 0 && i <= levels_ && k >= 0 && k <= i && j >= 0 && j <= i - k;
  }

 private:
  Tetrahedron(Triangle face, index_t levels);

  static std::size_t level_offset(index_t i) noexcept {
    return static_cast<std::size_t>(i * (i + 1) * (i + 2) / 6);
  }
  static std::size_t row_offset(index_t i, index_t k) noexcept {
    return static_cast<std::size_t>(k * (i + 1) - k * (k - 1) / 2);
  }
  std::size_t offset(index_t i, index_t j, index_t k) const noexcept {
    return level_offset(i) + row_offset(i, k) + static_cast<std::size_t>(j);
  }

  friend Tetrahedron build(const Triangle& t, index_t levels);

  index_t levels_;
  Triangle face_;
  std::vector<BigInt> data_;
};

/// Zero-extended construction: the face is T with t_j^i = 0 for j outside
/// 0..i, so row k of level i is stored for signed j = -k..i (offset j + k).
class ExtendedTetrahedron {
 public:
  index_t levels() const noexcept { return levels_; }

  /// Throws DomainError outside 0 <= k <= i <= levels(), -k <= j <= i.
  const BigInt& at(index_t i, index_t j, index_t k) const;

  /// Same as at() inside the stored range, 0 for any other j.
  BigInt at_or_zero(index_t i, index_t j, index_t k) const;

  /// Row k of level i; element 0 is j = -k.
  std::span<const BigInt> row(index_t i, index_t k) const;

  const Triangle& face() const noexcept { return face_; }

 private:
  ExtendedTetrahedron(Triangle face, index_t levels);

  std::size_t offset(index_t i, index_t j, index_t k) const noexcept {
    return level_offsets_[static_cast<std::size_t>(i)] +
           static_cast<std::size_t>(k * (i + 1) + k * (k - 1) / 2 + (j + k));
  }
  bool stored(index_t i, index_t j, index_t k) const noexcept {
    return i >= 0 && i <= levels_ && k >= 0 && k <= i && j >= -k && j <= i;
  }

  friend ExtendedTetrahedron build_extended(const Triangle& t, index_t levels);

  index_t levels_;
  Triangle face_;
  std::vector<std::size_t> level_offsets_;
  std::vector<BigInt> data_;
};

/// Grows H by h_{j,k}^i = h_{j,k-1}^{i-1} + h_{j,k-1}^i + h_{j+1,k-1}^i.
/// Throws DomainError when T has fewer than levels+1 rows.
Tetrahedron build(const Triangle& t, index_t levels);

/// Same recursion over the zero-extended face.
ExtendedTetrahedron build_extended(const Triangle& t, index_t levels);

/// h_{j,k}^i as a weighted sum of face entries, the weights being level k
/// of Pascal's tetrahedron placed at (j, i - k).
BigInt entry_explicit(const Triangle& t, index_t i, index_t j, index_t k);

/// The same sum indexed directly by the face position (r, s) of t_s^r.
/// An independent code path for cross-checking entry_explicit.
BigInt entry_explicit_reindexed(const Triangle& t, index_t i, index_t j, index_t k);

/// [h_{0,0}^0, ..., h_{0,n_max}^{n_max}], the edge opposite the face.
std::vector<BigInt> edge_sequence(const Triangle& t, index_t n_max);
std::vector<BigInt> edge_sequence(const Tetrahedron& h, index_t n_max);

/// h_{j0, i-w}^i for i = w..i_max. Requires 0 <= j0 <= w <= i_max.
std::vector<BigInt> diagonal_sequence(const Triangle& t, index_t j0, index_t w, index_t i_max);
std::vector<BigInt> diagonal_sequence(const Tetrahedron& h, index_t j0, index_t w, index_t i_max);

/// h_{j0,k0}^i for i = j0+k0..i_max.
std::vector<BigInt> column_sequence(const Triangle& t, index_t j0, index_t k0, index_t i_max);
std::vector<BigInt> column_sequence(const Tetrahedron& h, index_t j0, index_t k0, index_t i_max);

/// h_{i-(j0+k0),k0}^i for i = j0+k0..i_max, the mirror image of
/// column_sequence under the symmetry plane.
std::vector<BigInt> mirror_column_sequence(const Tetrahedron& h, index_t j0, index_t k0,
                                           index_t i_max);

/// First index at which a checked identity failed, with both sides.
struct Violation {
  index_t i = 0;
  index_t j = 0;
  index_t k = 0;
  BigInt lhs;
  BigInt rhs;
};

struct CheckReport {
  bool holds = true;
  std::size_t checked = 0;
  std::optional<Violation> first_violation;

  explicit operator bool() const noexcept { return holds; }
};

/// Recursive build, entry_explicit and entry_explicit_reindexed agree at
/// every index up to `levels`. lhs of a violation is the built value.
CheckReport verify_explicit_formulas(const Triangle& t, index_t levels);

/// h_{j,k}^i = h_{j-1,k}^{i-1} + h_{j,k}^{i-1} for k+2 <= i,
/// 1 <= j <= i-1-k. Throws PreconditionError unless the face satisfies
/// Pascal's rule.
CheckReport verify_pascal_inheritance(const Tetrahedron& h);

/// h_{j,k}^i = h_{i-(j+k),k}^i at every stored index. Throws
/// PreconditionError unless the face is vertically symmetric.
CheckReport verify_symmetry_plane(const Tetrahedron& h);

struct RecurrenceViolation {
  index_t i = 0;
  BigInt residual;
};

struct RecurrenceReport {
  index_t j = 0;
  index_t k = 0;
  index_t order = 0;  // j + k + 1
  index_t i_lo = 0;
  index_t i_hi = 0;
  bool holds = true;
  std::optional<RecurrenceViolation> first_violation;
};

/// For every i in [i_lo, i_hi]: sum_{l=0}^{m} (-1)^l C(m, l) h_{j,k}^{i+l} = 0
/// with m = j + k + 1. Requires a constant left diagonal and Pascal's rule
/// (PreconditionError otherwise), i_lo >= j + k and i_hi + m levels
/// available (DomainError otherwise).
RecurrenceReport verify_recurrence(const Triangle& t, index_t j, index_t k, index_t i_lo,
                                   index_t i_hi);
RecurrenceReport verify_recurrence(const Tetrahedron& h, index_t j, index_t k, index_t i_lo,
                                   index_t i_hi);

/// h_{j,i}^i for j = -i..i.
std::vector<BigInt> face_row(const ExtendedTetrahedron& e, index_t i);

/// {"levels": L, "extended": bool, "data": [level][row][decimal strings]}
std::string tetrahedron_to_json(const Tetrahedron& h);
std::string tetrahedron_to_json(const ExtendedTetrahedron& e);

}  // namespace tetra
