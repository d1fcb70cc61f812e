#include "tetra/tetrahedron.hpp"

#include <string>

#include "tetra/coeffs.hpp"
#include "tetra/errors.hpp"

namespace tetra {

namespace {

std::string ijk(index_t i, index_t j, index_t k) {
  return "(i=" + std::to_string(i) + ", j=" + std::to_string(j) + ", k=" + std::to_string(k) + ")";
}

Triangle face_prefix(const Triangle& t, index_t levels, const char* who) {
  if (levels < 0) {
    throw DomainError(std::string(who) + ": levels must be non-negative");
  }
  if (t.max_row() < levels) {
    throw DomainError(std::string(who) + ": " + std::to_string(levels) + " levels need rows 0.." +
                      std::to_string(levels) + " of the triangle, which has only 0.." +
                      std::to_string(t.max_row()) + " (short by " +
                      std::to_string(levels - t.max_row()) + ")");
  }
  if (t.max_row() == levels) return t;
  auto rows = t.to_rows();
  rows.resize(static_cast<std::size_t>(levels + 1));
  return Triangle::from_rows(rows);
}

void require_entry_range(const Triangle& t, index_t i, index_t j, index_t k, const char* who) {
  if (k < 0 || k > i || j < 0 || j > i - k) {
    throw DomainError(std::string(who) + ": " + ijk(i, j, k) +
                      " outside 0 <= k <= i, 0 <= j <= i - k");
  }
  if (i > t.max_row()) {
    throw DomainError(std::string(who) + ": level " + std::to_string(i) +
                      " needs triangle rows up to " + std::to_string(i) + ", have " +
                      std::to_string(t.max_row()));
  }
}

void require_recurrence_hypothesis(const Triangle& t) {
  if (!has_constant_left_diagonal(t)) {
    throw PreconditionError("constant left diagonal",
                            "verify_recurrence: the face triangle's left diagonal t_0^i is not "
                            "constant");
  }
  if (!satisfies_pascal_rule(t)) {
    throw PreconditionError("Pascal's rule",
                            "verify_recurrence: the face triangle does not satisfy Pascal's rule");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Tetrahedron

Tetrahedron::Tetrahedron(Triangle face, index_t levels)
    : levels_(levels), face_(std::move(face)), data_(level_offset(levels + 1)) {}

const BigInt& Tetrahedron::at(index_t i, index_t j, index_t k) const {
  if (!contains(i, j, k)) {
    throw DomainError("tetrahedron entry " + ijk(i, j, k) + " outside levels 0.." +
                      std::to_string(levels_) + " (valid: 0 <= k <= i, 0 <= j <= i - k)");
  }
  return data_[offset(i, j, k)];
}

std::span<const BigInt> Tetrahedron::row(index_t i, index_t k) const {
  if (i < 0 || i > levels_ || k < 0 || k > i) {
    throw DomainError("tetrahedron row (i=" + std::to_string(i) + ", k=" + std::to_string(k) +
                      ") outside levels 0.." + std::to_string(levels_));
  }
  return std::span<const BigInt>(data_).subspan(offset(i, 0, k),
                                                static_cast<std::size_t>(i - k + 1));
}

Tetrahedron build(const Triangle& t, index_t levels) {
  Tetrahedron h(face_prefix(t, levels, "build"), levels);
  for (index_t i = 0; i <= levels; ++i) {
    for (index_t j = 0; j <= i; ++j) h.data_[h.offset(i, j, 0)] = h.face_.at(i, j);
    for (index_t k = 1; k <= i; ++k) {
      for (index_t j = 0; j <= i - k; ++j) {
        h.data_[h.offset(i, j, k)] = h.data_[h.offset(i - 1, j, k - 1)] +
                                     h.data_[h.offset(i, j, k - 1)] +
                                     h.data_[h.offset(i, j + 1, k - 1)];
      }
    }
  }
  return h;
}

// ---------------------------------------------------------------------------
// ExtendedTetrahedron

ExtendedTetrahedron::ExtendedTetrahedron(Triangle face, index_t levels)
    : levels_(levels), face_(std::move(face)) {
  level_offsets_.reserve(static_cast<std::size_t>(levels + 2));
  std::size_t total = 0;
  for (index_t i = 0; i <= levels + 1; ++i) {
    level_offsets_.push_back(total);
    total += static_cast<std::size_t>((i + 1) * (i + 1) + i * (i + 1) / 2);
  }
  data_.resize(level_offsets_.back());
  level_offsets_.pop_back();
}

const BigInt& ExtendedTetrahedron::at(index_t i, index_t j, index_t k) const {
  if (!stored(i, j, k)) {
    throw DomainError("extended tetrahedron entry " + ijk(i, j, k) + " outside levels 0.." +
                      std::to_string(levels_) + " (valid: 0 <= k <= i, -k <= j <= i)");
  }
  return data_[offset(i, j, k)];
}

BigInt ExtendedTetrahedron::at_or_zero(index_t i, index_t j, index_t k) const {
  if (i < 0 || i > levels_ || k < 0 || k > i) {
    throw DomainError("extended tetrahedron row (i=" + std::to_string(i) +
                      ", k=" + std::to_string(k) + ") outside levels 0.." +
                      std::to_string(levels_));
  }
  return (j < -k || j > i) ? BigInt(0) : data_[offset(i, j, k)];
}

std::span<const BigInt> ExtendedTetrahedron::row(index_t i, index_t k) const {
  if (i < 0 || i > levels_ || k < 0 || k > i) {
    throw DomainError("extended tetrahedron row (i=" + std::to_string(i) +
                      ", k=" + std::to_string(k) + ") outside levels 0.." +
                      std::to_string(levels_));
  }
  return std::span<const BigInt>(data_).subspan(offset(i, -k, k),
                                                static_cast<std::size_t>(i + k + 1));
}

ExtendedTetrahedron build_extended(const Triangle& t, index_t levels) {
  ExtendedTetrahedron e(face_prefix(t, levels, "build_extended"), levels);
  // Everything outside the stored window -k..i is zero for any face.
  auto get = [&e](index_t i, index_t j, index_t k) -> const BigInt* {
    return e.stored(i, j, k) ? &e.data_[e.offset(i, j, k)] : nullptr;
  };
  for (index_t i = 0; i <= levels; ++i) {
    for (index_t j = 0; j <= i; ++j) e.data_[e.offset(i, j, 0)] = e.face_.at(i, j);
    for (index_t k = 1; k <= i; ++k) {
      for (index_t j = -k; j <= i; ++j) {
        BigInt sum = 0;
        if (const BigInt* v = get(i - 1, j, k - 1)) sum += *v;
        if (const BigInt* v = get(i, j, k - 1)) sum += *v;
        if (const BigInt* v = get(i, j + 1, k - 1)) sum += *v;
        e.data_[e.offset(i, j, k)] = std::move(sum);
      }
    }
  }
  return e;
}

std::vector<BigInt> face_row(const ExtendedTetrahedron& e, index_t i) {
  if (i < 0 || i > e.levels()) {
    throw DomainError("face_row: level " + std::to_string(i) + " outside 0.." +
                      std::to_string(e.levels()));
  }
  auto r = e.row(i, i);
  return {r.begin(), r.end()};
}

// ---------------------------------------------------------------------------
// Explicit entry formulas

BigInt entry_explicit(const Triangle& t, index_t i, index_t j, index_t k) {
  require_entry_range(t, i, j, k, "entry_explicit");
  BigInt sum = 0;
  for (index_t r = 0; r <= k; ++r) {
    for (index_t s = 0; s <= r; ++s) {
      sum += trinomial({k, s, k - r, r - s}) * t.at(i - k + r, j + s);
    }
  }
  return sum;
}

BigInt entry_explicit_reindexed(const Triangle& t, index_t i, index_t j, index_t k) {
  require_entry_range(t, i, j, k, "entry_explicit_reindexed");
  BigInt sum = 0;
  for (index_t r = i - k; r <= i; ++r) {
    for (index_t s = j; s <= j + k - i + r; ++s) {
      sum += trinomial({k, s - j, i - r, k + j + r - s - i}) * t.at(r, s);
    }
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Sequences

std::vector<BigInt> edge_sequence(const Tetrahedron& h, index_t n_max) {
  if (n_max < 0 || n_max > h.levels()) {
    throw DomainError("edge_sequence: n_max=" + std::to_string(n_max) + " outside levels 0.." +
                      std::to_string(h.levels()));
  }
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(n_max + 1));
  for (index_t n = 0; n <= n_max; ++n) out.push_back(h.at(n, 0, n));
  return out;
}

std::vector<BigInt> edge_sequence(const Triangle& t, index_t n_max) {
  return edge_sequence(build(t, n_max), n_max);
}

std::vector<BigInt> diagonal_sequence(const Tetrahedron& h, index_t j0, index_t w, index_t i_max) {
  if (j0 < 0 || j0 > w || w > i_max) {
    throw DomainError("diagonal_sequence: need 0 <= j0 <= w <= i_max, got j0=" +
                      std::to_string(j0) + ", w=" + std::to_string(w) +
                      ", i_max=" + std::to_string(i_max));
  }
  if (i_max > h.levels()) {
    throw DomainError("diagonal_sequence: i_max=" + std::to_string(i_max) +
                      " exceeds built levels " + std::to_string(h.levels()));
  }
  std::vector<BigInt> out;
  for (index_t i = w; i <= i_max; ++i) out.push_back(h.at(i, j0, i - w));
  return out;
}

std::vector<BigInt> diagonal_sequence(const Triangle& t, index_t j0, index_t w, index_t i_max) {
  if (i_max < 0) throw DomainError("diagonal_sequence: i_max must be non-negative");
  return diagonal_sequence(build(t, i_max), j0, w, i_max);
}

std::vector<BigInt> column_sequence(const Tetrahedron& h, index_t j0, index_t k0, index_t i_max) {
  if (j0 < 0 || k0 < 0 || i_max < j0 + k0) {
    throw DomainError("column_sequence: need j0, k0 >= 0 and i_max >= j0 + k0, got j0=" +
                      std::to_string(j0) + ", k0=" + std::to_string(k0) +
                      ", i_max=" + std::to_string(i_max));
  }
  if (i_max > h.levels()) {
    throw DomainError("column_sequence: i_max=" + std::to_string(i_max) +
                      " exceeds built levels " + std::to_string(h.levels()));
  }
  std::vector<BigInt> out;
  for (index_t i = j0 + k0; i <= i_max; ++i) out.push_back(h.at(i, j0, k0));
  return out;
}

std::vector<BigInt> column_sequence(const Triangle& t, index_t j0, index_t k0, index_t i_max) {
  if (i_max < 0) throw DomainError("column_sequence: i_max must be non-negative");
  return column_sequence(build(t, i_max), j0, k0, i_max);
}

std::vector<BigInt> mirror_column_sequence(const Tetrahedron& h, index_t j0, index_t k0,
                                           index_t i_max) {
  if (j0 < 0 || k0 < 0 || i_max < j0 + k0) {
    throw DomainError("mirror_column_sequence: need j0, k0 >= 0 and i_max >= j0 + k0");
  }
  if (i_max > h.levels()) {
    throw DomainError("mirror_column_sequence: i_max=" + std::to_string(i_max) +
                      " exceeds built levels " + std::to_string(h.levels()));
  }
  std::vector<BigInt> out;
  for (index_t i = j0 + k0; i <= i_max; ++i) out.push_back(h.at(i, i - (j0 + k0), k0));
  return out;
}

// ---------------------------------------------------------------------------
// Structural verifiers

CheckReport verify_explicit_formulas(const Triangle& t, index_t levels) {
  const Tetrahedron h = build(t, levels);
  CheckReport report;
  for (index_t i = 0; i <= levels; ++i) {
    for (index_t k = 0; k <= i; ++k) {
      for (index_t j = 0; j <= i - k; ++j) {
        ++report.checked;
        const BigInt& built = h.at(i, j, k);
        BigInt explicit_value = entry_explicit(t, i, j, k);
        if (built != explicit_value) {
          report.holds = false;
          report.first_violation = Violation{i, j, k, built, std::move(explicit_value)};
          return report;
        }
        BigInt reindexed = entry_explicit_reindexed(t, i, j, k);
        if (built != reindexed) {
          report.holds = false;
          report.first_violation = Violation{i, j, k, built, std::move(reindexed)};
          return report;
        }
      }
    }
  }
  return report;
}

CheckReport verify_pascal_inheritance(const Tetrahedron& h) {
  if (!satisfies_pascal_rule(h.face())) {
    throw PreconditionError("Pascal's rule",
                            "verify_pascal_inheritance: the face triangle does not satisfy "
                            "Pascal's rule t_j^i = t_{j-1}^{i-1} + t_j^{i-1}");
  }
  CheckReport report;
  for (index_t i = 2; i <= h.levels(); ++i) {
    for (index_t k = 0; k + 2 <= i; ++k) {
      for (index_t j = 1; j <= i - 1 - k; ++j) {
        ++report.checked;
        const BigInt& lhs = h.at(i, j, k);
        BigInt rhs = h.at(i - 1, j - 1, k) + h.at(i - 1, j, k);
        if (lhs != rhs) {
          report.holds = false;
          report.first_violation = Violation{i, j, k, lhs, std::move(rhs)};
          return report;
        }
      }
    }
  }
  return report;
}

CheckReport verify_symmetry_plane(const Tetrahedron& h) {
  if (!is_vertically_symmetric(h.face())) {
    throw PreconditionError("vertical symmetry axis",
                            "verify_symmetry_plane: the face triangle has no vertical symmetry "
                            "axis (t_j^i != t_{i-j}^i somewhere)");
  }
  CheckReport report;
  for (index_t i = 0; i <= h.levels(); ++i) {
    for (index_t k = 0; k <= i; ++k) {
      for (index_t j = 0; j <= i - k; ++j) {
        ++report.checked;
        const BigInt& lhs = h.at(i, j, k);
        const BigInt& rhs = h.at(i, i - (j + k), k);
        if (lhs != rhs) {
          report.holds = false;
          report.first_violation = Violation{i, j, k, lhs, rhs};
          return report;
        }
      }
    }
  }
  return report;
}

RecurrenceReport verify_recurrence(const Tetrahedron& h, index_t j, index_t k, index_t i_lo,
                                   index_t i_hi) {
  require_recurrence_hypothesis(h.face());
  const index_t order = j + k + 1;
  if (j < 0 || k < 0 || i_lo < j + k || i_hi < i_lo) {
    throw DomainError("verify_recurrence: need j, k >= 0 and j + k <= i_lo <= i_hi, got j=" +
                      std::to_string(j) + ", k=" + std::to_string(k) + ", window [" +
                      std::to_string(i_lo) + ", " + std::to_string(i_hi) + "]");
  }
  if (i_hi + order > h.levels()) {
    throw DomainError("verify_recurrence: window end " + std::to_string(i_hi) + " with order " +
                      std::to_string(order) + " needs levels up to " +
                      std::to_string(i_hi + order) + ", have " + std::to_string(h.levels()));
  }
  std::vector<BigInt> weights;
  for (index_t l = 0; l <= order; ++l) {
    weights.push_back(l % 2 == 0 ? binomial(order, l) : BigInt(-binomial(order, l)));
  }
  RecurrenceReport report{j, k, order, i_lo, i_hi, true, std::nullopt};
  for (index_t i = i_lo; i <= i_hi; ++i) {
    BigInt residual = 0;
    for (index_t l = 0; l <= order; ++l) {
      residual += weights[static_cast<std::size_t>(l)] * h.at(i + l, j, k);
    }
    if (residual != 0) {
      report.holds = false;
      report.first_violation = RecurrenceViolation{i, std::move(residual)};
      break;
    }
  }
  return report;
}

RecurrenceReport verify_recurrence(const Triangle& t, index_t j, index_t k, index_t i_lo,
                                   index_t i_hi) {
  require_recurrence_hypothesis(t);
  const index_t needed = i_hi + j + k + 1;
  if (needed > t.max_row()) {
    throw DomainError("verify_recurrence: window end " + std::to_string(i_hi) +
                      " needs triangle rows up to " + std::to_string(needed) + ", have " +
                      std::to_string(t.max_row()));
  }
  return verify_recurrence(build(t, needed), j, k, i_lo, i_hi);
}

}  // namespace tetra
