#include "tetra/sequences.hpp"

#include <algorithm>
#include <string>

#include "tetra/errors.hpp"
#include "tetra/tetrahedron.hpp"
#include "tetra/triangle.hpp"

namespace tetra {

namespace {

std::vector<BigInt> terms(std::initializer_list<long long> values) {
  return {values.begin(), values.end()};
}

std::string shifted(char var, index_t delta) {
  if (delta == 0) return std::string(1, var);
  return std::string(1, var) + "-" + std::to_string(delta);
}

index_t last_level(const IndexPattern& p, std::size_t count) {
  return p.first_level() + static_cast<index_t>(count) - 1;
}

std::vector<BigInt> slice(const Tetrahedron& h, const IndexPattern& p, std::size_t count) {
  const index_t i_max = last_level(p, count);
  switch (p.kind) {
    case IndexPattern::Kind::diagonal:
      return diagonal_sequence(h, p.j0, p.param, i_max);
    case IndexPattern::Kind::column:
      return column_sequence(h, p.j0, p.param, i_max);
    case IndexPattern::Kind::mirror_column:
      return mirror_column_sequence(h, p.j0, p.param, i_max);
  }
  throw std::logic_error("unknown IndexPattern kind");
}

}  // namespace

std::string IndexPattern::describe() const {
  switch (kind) {
    case Kind::diagonal:
      return "h_{" + std::to_string(j0) + "," + shifted('n', param) + "}^n";
    case Kind::column:
      return "h_{" + std::to_string(j0) + "," + std::to_string(param) + "}^n";
    case Kind::mirror_column:
      return "h_{" + shifted('n', j0 + param) + "," + std::to_string(param) + "}^n";
  }
  return {};
}

bool SequenceRecord::answers_to(std::string_view id) const {
  if (id == name || id == oeis_id) return true;
  return std::find(aliases.begin(), aliases.end(), id) != aliases.end();
}

const std::vector<SequenceRecord>& catalog() {
  using P = IndexPattern;
  static const std::vector<SequenceRecord> records = {
      {"A026375", "A026375", {}, {P::diagonal(0, 0)},
       terms({1, 3, 11, 45, 195, 873, 3989, 18483, 86515}), 0},
      {"A026378", "A026378", {}, {P::diagonal(0, 1), P::diagonal(1, 1)},
       terms({1, 4, 17, 75, 339, 1558, 7247, 34016, 160795}), 1},
      {"A026388", "A026388", {}, {P::diagonal(0, 2), P::diagonal(2, 2)},
       terms({1, 5, 24, 114, 541, 2573, 12275, 58747, 282003}), 2},
      {"A034942", "A034942", {}, {P::diagonal(0, 3), P::diagonal(3, 3)},
       terms({1, 6, 32, 163, 813, 4013, 19703, 96477, 471811}), 3},
      {"A085362", "A085362", {"A026387"}, {P::diagonal(1, 2)},
       terms({2, 8, 34, 150, 678, 3116, 14494, 68032, 321590}), 1},
      {"A034856", "A034856", {}, {P::column(1, 1), P::mirror_column(1, 1)},
       terms({4, 8, 13, 19, 26, 34, 43, 53, 64, 76, 89, 103, 118}), 2},
      {"A008778", "A008778", {}, {P::column(2, 1), P::mirror_column(2, 1)},
       terms({5, 13, 26, 45, 71, 105, 148, 201, 265, 341, 430}), 1},
      {"A023545", "A023545", {}, {P::column(1, 2), P::mirror_column(1, 2)},
       terms({17, 34, 58, 90, 131, 182, 244, 318, 405, 506, 622}), 0},
  };
  return records;
}

const SequenceRecord* find_record(std::string_view name) {
  for (const auto& r : catalog()) {
    if (r.answers_to(name)) return &r;
  }
  return nullptr;
}

std::vector<BigInt> generate(const IndexPattern& pattern, std::size_t count) {
  if (count < 1) throw DomainError("generate: count must be at least 1");
  const index_t i_max = last_level(pattern, count);
  return slice(build(pascal_triangle(i_max), i_max), pattern, count);
}

std::vector<BigInt> generate(const SequenceRecord& record, std::size_t count) {
  if (count < 1) throw DomainError("generate: count must be at least 1");
  if (record.patterns.empty()) {
    throw DomainError("generate: record " + record.name + " has no index pattern");
  }
  index_t i_max = 0;
  for (const auto& p : record.patterns) i_max = std::max(i_max, last_level(p, count));
  const Tetrahedron h = build(pascal_triangle(i_max), i_max);

  std::vector<BigInt> first = slice(h, record.patterns.front(), count);
  for (std::size_t n = 1; n < record.patterns.size(); ++n) {
    if (slice(h, record.patterns[n], count) != first) {
      throw VerificationError("generate: " + record.name + " patterns " +
                              record.patterns.front().describe() + " and " +
                              record.patterns[n].describe() + " disagree");
    }
  }
  return first;
}

namespace {

MatchReport align(const std::vector<BigInt>& generated, const BFile& bfile, index_t offset) {
  MatchReport report;
  report.offset = offset;
  report.requested = generated.size();
  for (std::size_t t = 0; t < generated.size(); ++t) {
    const index_t at = offset + static_cast<index_t>(t);
    const BigInt* listed = bfile.find(at);
    if (listed == nullptr || *listed != generated[t]) {
      report.first_mismatch = at;
      report.expected = generated[t];
      if (listed != nullptr) report.found = *listed;
      return report;
    }
    ++report.matched_length;
  }
  report.matched = true;
  return report;
}

}  // namespace

MatchReport compare(const SequenceRecord& record, const BFile& bfile, std::size_t count) {
  if (!record.answers_to(bfile.id)) {
    throw PreconditionError("b-file id", "compare: b-file " +
                                             (bfile.id.empty() ? "<no id>" : bfile.id) +
                                             " does not belong to " + record.oeis_id);
  }
  const std::vector<BigInt> generated = generate(record, count);
  MatchReport hinted = align(generated, bfile, record.offset_hint);
  if (hinted.matched) return hinted;
  for (index_t offset = 0; offset <= 3; ++offset) {
    if (offset == record.offset_hint) continue;
    MatchReport alt = align(generated, bfile, offset);
    if (alt.matched) {
      alt.used_fallback = true;
      return alt;
    }
  }
  return hinted;
}

// ---------------------------------------------------------------------------
// Extended-face checks

Rational gegenbauer(index_t m, const Rational& alpha, const Rational& x) {
  if (m < 0) throw DomainError("gegenbauer: degree must be non-negative");
  Rational prev = 1;
  if (m == 0) return prev;
  Rational cur = 2 * alpha * x;
  for (index_t d = 2; d <= m; ++d) {
    Rational next = (2 * x * (d + alpha - 1) * cur - (d + 2 * alpha - 2) * prev) / d;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

bool GegenbauerReport::all_passed() const noexcept {
  return std::all_of(levels.begin(), levels.end(), [](const auto& l) { return l.passed; });
}

GegenbauerReport check_gegenbauer_conjecture(index_t i_max) {
  if (i_max < 0) throw DomainError("check_gegenbauer_conjecture: i_max must be non-negative");
  const ExtendedTetrahedron e = build_extended(pascal_triangle(i_max), i_max);
  const Rational x(-3, 2);
  GegenbauerReport report;
  for (index_t i = 0; i <= i_max; ++i) {
    GegenbauerLevel level{i, true, face_row(e, i), std::nullopt};
    const Rational alpha(-i);
    for (index_t k = 0; k <= 2 * i; ++k) {
      const index_t m = k < i ? k : 2 * i - k;
      Rational g = gegenbauer(m, alpha, x);
      const bool integral = denominator(g) == 1;
      const BigInt& face_value = level.face[static_cast<std::size_t>(k)];
      if (!integral || numerator(g) != face_value) {
        level.passed = false;
        level.discrepancy = GegenbauerDiscrepancy{k, m, face_value, std::move(g), integral};
        break;
      }
    }
    report.levels.push_back(std::move(level));
  }
  return report;
}

bool ThreePascalReport::all_passed() const noexcept {
  return !fixture_mismatch &&
         std::all_of(levels.begin(), levels.end(), [](const auto& l) { return l.passed; });
}

ThreePascalReport check_three_pascal(index_t i_max, const BFile* fixture) {
  if (i_max < 1) throw DomainError("check_three_pascal: i_max must be at least 1");
  const Triangle pascal = pascal_triangle(i_max);
  const ExtendedTetrahedron e = build_extended(pascal, i_max);
  ThreePascalReport report;
  report.skipped.push_back(0);
  report.note = "level 0 has no row k = 1";

  for (index_t i = 1; i <= i_max; ++i) {
    auto r = e.row(i, 1);
    ThreePascalLevel level{i, true, {r.begin(), r.end()}, std::nullopt};
    // Position p holds j = p - 1.
    for (std::size_t p = 0; p < level.row.size(); ++p) {
      const index_t j = static_cast<index_t>(p) - 1;
      BigInt expected = (j == -1 || j == i)
                            ? BigInt(1)
                            : BigInt(pascal.at_or_zero(i - 1, j) + pascal.at_or_zero(i, j) +
                                     pascal.at_or_zero(i, j + 1));
      if (level.row[p] != expected) {
        level.passed = false;
        level.first_bad = p;
        break;
      }
    }
    if (fixture != nullptr && !report.fixture_mismatch) {
      // Fixture row n starts at flattened index n(n+1)/2.
      const index_t n = i + 1;
      const index_t start = n * (n + 1) / 2;
      if (fixture->find(start) != nullptr && fixture->find(start + n) != nullptr) {
        ++report.fixture_rows_compared;
        for (index_t p = 0; p <= n; ++p) {
          if (*fixture->find(start + p) != level.row[static_cast<std::size_t>(p)]) {
            report.fixture_mismatch = start + p;
            break;
          }
        }
      }
    }
    report.levels.push_back(std::move(level));
  }
  return report;
}

}  // namespace tetra
