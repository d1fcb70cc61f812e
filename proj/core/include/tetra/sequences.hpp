#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tetra/bfile.hpp"
#include "tetra/bigint.hpp"

namespace tetra {

/// A one-parameter slice of the Pascal-face tetrahedron.
struct IndexPattern {
  enum class Kind {
    diagonal,       // h_{j0, i-w}^i,       i = w, w+1, ...
    column,         // h_{j0, k0}^i,         i = j0+k0, ...
    mirror_column,  // h_{i-(j0+k0), k0}^i,  i = j0+k0, ...
  };

  Kind kind = Kind::diagonal;
  index_t j0 = 0;
  index_t param = 0;  // w for diagonal, k0 for the column kinds

  static IndexPattern diagonal(index_t j0, index_t w) { return {Kind::diagonal, j0, w}; }
  static IndexPattern column(index_t j0, index_t k0) { return {Kind::column, j0, k0}; }
  static IndexPattern mirror_column(index_t j0, index_t k0) {
    return {Kind::mirror_column, j0, k0};
  }

  /// Level of the first term.
  index_t first_level() const noexcept { return kind == Kind::diagonal ? param : j0 + param; }

  /// Human-readable form, e.g. "h_{0,n-1}^n" or "h_{n-2,1}^n".
  std::string describe() const;
};

struct SequenceRecord {
  std::string name;
  std::string oeis_id;
  std::vector<std::string> aliases;  // further OEIS ids listing the same terms
  std::vector<IndexPattern> patterns;
  std::vector<BigInt> printed_terms;
  index_t offset_hint = 0;  // OEIS index of the first generated term

  bool answers_to(std::string_view id) const;
};

/// The eight tabulated Pascal-face sequences.
const std::vector<SequenceRecord>& catalog();

/// Catalog lookup by name, OEIS id or alias; nullptr if unknown.
const SequenceRecord* find_record(std::string_view name);

/// First `count` terms from Pascal's tetrahedron. Every pattern of the
/// record is generated and must agree (VerificationError otherwise).
/// Throws DomainError for count < 1.
std::vector<BigInt> generate(const SequenceRecord& record, std::size_t count);

/// Terms of one pattern over Pascal's tetrahedron.
std::vector<BigInt> generate(const IndexPattern& pattern, std::size_t count);

struct MatchReport {
  bool matched = false;
  index_t offset = 0;             // b-file index aligned with generated term 0
  bool used_fallback = false;     // offset came from the sliding search
  std::size_t matched_length = 0; // leading terms that agree at `offset`
  std::size_t requested = 0;
  std::optional<index_t> first_mismatch;  // b-file index
  std::optional<BigInt> expected;         // generated value there
  std::optional<BigInt> found;            // b-file value there, if listed
};

/// Aligns generate(record, count) with the b-file at offset_hint, falling
/// back to offsets 0..3. When nothing aligns the report describes the
/// offset_hint alignment. Throws PreconditionError if the b-file id does not
/// belong to the record.
MatchReport compare(const SequenceRecord& record, const BFile& bfile, std::size_t count);

/// C_m^(alpha)(x) from C_0 = 1, C_1 = 2 alpha x,
/// m C_m = 2x (m + alpha - 1) C_{m-1} - (m + 2 alpha - 2) C_{m-2}.
Rational gegenbauer(index_t m, const Rational& alpha, const Rational& x);

struct GegenbauerDiscrepancy {
  index_t k = 0;  // position in the face row, 0..2i
  index_t m = 0;
  BigInt face_value;
  Rational gegenbauer_value;
  bool integral = false;
};

struct GegenbauerLevel {
  index_t i = 0;
  bool passed = false;
  std::vector<BigInt> face;
  std::optional<GegenbauerDiscrepancy> discrepancy;
};

struct GegenbauerReport {
  std::vector<GegenbauerLevel> levels;
  bool all_passed() const noexcept;
};

/// Level i's extended face row against GegenbauerC(m, -i, -3/2) with
/// m = k for k < i and m = 2i - k otherwise, for i = 0..i_max.
GegenbauerReport check_gegenbauer_conjecture(index_t i_max);

struct ThreePascalLevel {
  index_t i = 0;
  bool passed = false;
  std::vector<BigInt> row;  // h_{j,1}^i for j = -1..i
  std::optional<std::size_t> first_bad;  // position within row
};

struct ThreePascalReport {
  std::vector<ThreePascalLevel> levels;  // i = 1..i_max
  std::vector<index_t> skipped;          // levels without a row k = 1
  std::string note;
  std::size_t fixture_rows_compared = 0;
  std::optional<index_t> fixture_mismatch;  // b-file index of the first difference
  bool all_passed() const noexcept;
};

/// Row k = 1 of each extended level: 1 at both ends, interior
/// t_j^{i-1} + t_j^i + t_{j+1}^i of Pascal's triangle. With a fixture
/// (rows of the 3-Pascal triangle flattened, index 0 = apex), level i is
/// also compared against fixture row i + 1 where the fixture covers it.
ThreePascalReport check_three_pascal(index_t i_max, const BFile* fixture = nullptr);

}  // namespace tetra
