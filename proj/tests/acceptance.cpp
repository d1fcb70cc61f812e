// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion passes inside its runtime budget.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "tetra/bfile.hpp"
#include "tetra/coeffs.hpp"
#include "tetra/errors.hpp"
#include "tetra/sequences.hpp"
#include "tetra/tetrahedron.hpp"
#include "tetra/transforms.hpp"
#include "tetra/triangle.hpp"

#ifndef TETRA_FIXTURE_DIR
#error "TETRA_FIXTURE_DIR must point at tests/fixtures"
#endif

using namespace tetra;

namespace {

const std::filesystem::path kFixtures{TETRA_FIXTURE_DIR};

// A criterion returns an empty string on success, otherwise what failed.
struct Criterion {
  int number;
  std::string title;
  double budget_seconds;
  std::function<std::string()> body;
};

std::string at(index_t i, index_t j, index_t k) {
  return "(i=" + std::to_string(i) + ", j=" + std::to_string(j) + ", k=" + std::to_string(k) + ")";
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<BigInt> ints(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

std::string table_reproduction() {
  struct Row {
    const char* id;
    std::vector<BigInt> printed;
  };
  const std::vector<Row> table = {
      {"A026375", ints({1, 3, 11, 45, 195, 873, 3989, 18483, 86515})},
      {"A026378", ints({1, 4, 17, 75, 339, 1558, 7247, 34016, 160795})},
      {"A026388", ints({1, 5, 24, 114, 541, 2573, 12275, 58747, 282003})},
      {"A034942", ints({1, 6, 32, 163, 813, 4013, 19703, 96477, 471811})},
      {"A085362", ints({2, 8, 34, 150, 678, 3116, 14494, 68032, 321590})},
      {"A034856", ints({4, 8, 13, 19, 26, 34, 43, 53, 64, 76, 89, 103, 118})},
      {"A008778", ints({5, 13, 26, 45, 71, 105, 148, 201, 265, 341, 430})},
      {"A023545", ints({17, 34, 58, 90, 131, 182, 244, 318, 405, 506, 622})},
  };
  if (catalog().size() != table.size()) return "catalog has " + std::to_string(catalog().size()) + " records";
  for (const auto& row : table) {
    const SequenceRecord* r = find_record(row.id);
    if (r == nullptr) return std::string(row.id) + " missing from catalog";
    if (generate(*r, row.printed.size()) != row.printed) return std::string(row.id) + " prefix differs";
  }
  return {};
}

std::string explicit_equivalence() {
  gen::Source src(0xA11CE);
  for (int trial = 0; trial < 50; ++trial) {
    const Triangle t = src.triangle(15, 1000000);
    const Tetrahedron h = build(t, 15);
    for (index_t i = 0; i <= 15; ++i) {
      for (index_t k = 0; k <= i; ++k) {
        for (index_t j = 0; j <= i - k; ++j) {
          const BigInt& built = h.at(i, j, k);
          if (entry_explicit(t, i, j, k) != built || entry_explicit_reindexed(t, i, j, k) != built) {
            return "triangle " + std::to_string(trial) + " at " + at(i, j, k);
          }
        }
      }
    }
  }
  return {};
}

std::string transform_equals_edge() {
  constexpr index_t n = 60;
  gen::Source src(0xED6E);
  std::vector<Triangle> faces{pascal_triangle(n)};
  for (int g = 0; g < 20; ++g) faces.push_back(gat_triangle(src.gat(n, 1000), n));
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto direct = tetra_transform(faces[f], n).terms;
    const auto edge = edge_sequence(build(faces[f], n), n);
    for (index_t m = 0; m <= n; ++m) {
      if (direct[static_cast<std::size_t>(m)] != edge[static_cast<std::size_t>(m)]) {
        return "face " + std::to_string(f) + " at n=" + std::to_string(m);
      }
    }
  }
  return {};
}

std::string inheritance_and_symmetry() {
  constexpr index_t levels = 20;
  gen::Source src(0x5EED4);
  std::vector<Triangle> gats{pascal_triangle(levels)};
  for (int g = 0; g < 10; ++g) gats.push_back(gat_triangle(src.gat(levels, 1000), levels));
  for (std::size_t g = 0; g < gats.size(); ++g) {
    // Independent check of the inherited Pascal rule on every interior index.
    const Tetrahedron h = build(gats[g], levels);
    for (index_t i = 2; i <= levels; ++i) {
      for (index_t k = 0; k + 2 <= i; ++k) {
        for (index_t j = 1; j <= i - 1 - k; ++j) {
          if (h.at(i, j, k) != h.at(i - 1, j - 1, k) + h.at(i - 1, j, k)) {
            return "GAT " + std::to_string(g) + " inheritance at " + at(i, j, k);
          }
        }
      }
    }
    if (!verify_pascal_inheritance(h)) return "verify_pascal_inheritance rejects GAT " + std::to_string(g);
  }

  std::vector<Triangle> symmetric{pascal_triangle(levels)};
  for (int s = 0; s < 10; ++s) symmetric.push_back(src.symmetric_triangle(levels, 1000000));
  for (int s = 0; s < 5; ++s) symmetric.push_back(gat_triangle(src.symmetric_gat(levels, 1000), levels));
  for (std::size_t s = 0; s < symmetric.size(); ++s) {
    const Tetrahedron h = build(symmetric[s], levels);
    for (index_t i = 0; i <= levels; ++i) {
      for (index_t k = 0; k <= i; ++k) {
        for (index_t j = 0; j <= i - k; ++j) {
          if (h.at(i, j, k) != h.at(i, i - (j + k), k)) {
            return "symmetric face " + std::to_string(s) + " at " + at(i, j, k);
          }
        }
      }
    }
    if (!verify_symmetry_plane(h)) return "verify_symmetry_plane rejects face " + std::to_string(s);
  }
  return {};
}

std::string annihilating_recurrence() {
  constexpr index_t i_hi = 40;
  constexpr index_t top = i_hi + 9;  // window end plus the largest order
  gen::Source src(0xDEC0DE);
  std::vector<Triangle> faces{pascal_triangle(top)};
  for (int g = 0; g < 10; ++g) faces.push_back(gat_triangle(src.gat(top, 1000), top));
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const Tetrahedron h = build(faces[f], top);
    for (index_t s = 0; s <= 8; ++s) {
      for (index_t j = 0; j <= s; ++j) {
        const index_t k = s - j;
        const index_t m = j + k + 1;
        for (index_t i = j + k; i <= i_hi; ++i) {
          BigInt sum = 0;
          for (index_t l = 0; l <= m; ++l) {
            const BigInt term = binomial(m, l) * h.at(i + l, j, k);
            sum += (l % 2 == 0) ? term : BigInt(-term);
          }
          if (sum != 0) return "face " + std::to_string(f) + " residual at " + at(i, j, k);
        }
        if (!verify_recurrence(h, j, k, j + k, i_hi).holds) {
          return "verify_recurrence fails for face " + std::to_string(f);
        }
      }
    }
  }
  return {};
}

std::string vandermonde_sweep() {
  for (index_t n = 0; n <= 30; ++n) {
    for (index_t m = 0; m <= 30; ++m) {
      for (index_t k = 0; k <= m; ++k) {
        BigInt lhs = 0;
        for (index_t i = 0; i <= n; ++i) {
          lhs += oracle::binomial_factorial(n, i) * oracle::binomial_factorial(n + m, i + k);
        }
        const IdentityCheck c = check_vandermonde_like(n, m, k);
        if (!c.holds || c.lhs != lhs || c.rhs != oracle::binomial_factorial(2 * n + m, n + k)) {
          return "(n=" + std::to_string(n) + ", m=" + std::to_string(m) + ", k=" + std::to_string(k) + ")";
        }
      }
    }
  }
  return {};
}

std::string closed_form_and_central() {
  const Tetrahedron h = build(pascal_triangle(25), 25);
  for (index_t i = 0; i <= 25; ++i) {
    for (index_t k = 0; k <= i; ++k) {
      for (index_t j = 0; j <= i - k; ++j) {
        if (closed_form_entry(i, j, k) != h.at(i, j, k)) return "closed form at " + at(i, j, k);
      }
    }
  }
  constexpr index_t n = 100;
  std::vector<BigInt> central;
  for (index_t l = 0; l <= n; ++l) central.push_back(oracle::binomial_factorial(2 * l, l));
  const auto b = tetra_transform(pascal_triangle(n), n).terms;
  if (b != binomial_transform(central)) return "transform of Pascal differs from binomial transform";
  if (b.back() <= BigInt(UINT64_MAX)) return "b_100 unexpectedly fits in 64 bits";
  return {};
}

std::string extended_face_checks() {
  const ThreePascalReport three = check_three_pascal(30);
  if (!three.all_passed() || three.levels.size() != 30) return "check_three_pascal(30) failed";
  for (const auto& level : three.levels) {
    // Level i holds 3-Pascal row n = i + 1: 1, C(n,k) + C(n-2,k-1) for 0 < k < n, 1.
    const index_t n = level.i + 1;
    std::vector<BigInt> expected;
    for (index_t k = 0; k <= n; ++k) {
      expected.push_back(k == 0 || k == n ? BigInt(1) : binomial(n, k) + binomial(n - 2, k - 1));
    }
    if (level.row != expected) return "3-Pascal row at level " + std::to_string(level.i);
  }
  const BFile fixture = load_bfile(kFixtures / "b028262.txt");
  const ThreePascalReport against = check_three_pascal(30, &fixture);
  if (against.fixture_mismatch || against.fixture_rows_compared == 0) return "3-Pascal fixture disagrees";

  const GegenbauerReport geg = check_gegenbauer_conjecture(20);
  if (geg.levels.size() != 21) return "Gegenbauer report covers " + std::to_string(geg.levels.size()) + " levels";
  for (const auto& level : geg.levels) {
    if (!level.passed) return "Gegenbauer fails at i=" + std::to_string(level.i);
    const index_t i = level.i;
    for (index_t k = 0; k <= 2 * i; ++k) {
      const index_t m = k < i ? k : 2 * i - k;
      const Rational g = gegenbauer(m, Rational(-i), Rational(-3, 2));
      if (denominator(g) != 1) return "non-integral Gegenbauer value at i=" + std::to_string(i);
      if (numerator(g) != level.face[static_cast<std::size_t>(k)]) {
        return "Gegenbauer value differs at i=" + std::to_string(i) + ", k=" + std::to_string(k);
      }
    }
  }
  return {};
}

std::string star_report() {
  const char* argv[] = {"tetra", "transform", "--kind", "pascal", "--n", "12", "--star"};
  std::string reports[2];
  for (auto& report : reports) {
    std::ostringstream out, err;
    if (cli::run(7, argv, out, err) != 0) return "star probe exited non-zero: " + err.str();
    report = out.str();
  }
  if (reports[0] != reports[1]) return "star report is not deterministic";
  const bool documents = reports[0].find("diff: agree") != std::string::npos ||
                         reports[0].find("diff: first disagreement at n=") != std::string::npos;
  if (!documents) return "star report does not state agreement or first disagreement";

  const StarComparison cmp = tetra_transform_star(pascal_triangle(12), 12);
  for (index_t n = 0; n <= 12; ++n) {
    const auto u = static_cast<std::size_t>(n);
    const bool differs = cmp.standard.terms[u] != cmp.star.terms[u];
    const bool listed = std::find(cmp.differing.begin(), cmp.differing.end(), n) != cmp.differing.end();
    if (differs != listed) return "differing list wrong at n=" + std::to_string(n);
  }
  return {};
}

std::string bfile_round_trip() {
  std::size_t round_tripped = 0;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(kFixtures)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".txt") continue;
    const std::string text = slurp(entry.path());
    if (serialize_bfile(parse_bfile(text)) != text) return "round trip differs for " + entry.path().string();
    ++round_tripped;
  }
  if (round_tripped < 10) return "only " + std::to_string(round_tripped) + " fixtures found";

  const SequenceRecord& rec = *find_record("A026375");
  if (!compare(rec, load_bfile(kFixtures / "b026375.txt"), 9).matched) return "clean fixture rejected";
  const MatchReport bad = compare(rec, load_bfile(kFixtures / "corrupt" / "b026375.txt"), 9);
  if (bad.matched) return "corrupted fixture accepted";
  if (bad.first_mismatch != 4 || bad.found != BigInt(196) || bad.expected != BigInt(195)) {
    return "corruption reported at the wrong index";
  }
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "catalog prefixes equal the printed table", 1.0, table_reproduction},
      {2, "recursive, explicit and reindexed entries agree (50 random faces, i<=15)", 10.0,
       explicit_equivalence},
      {3, "transform equals edge (Pascal + 20 GATs, n<=60)", 30.0, transform_equals_edge},
      {4, "GAT inheritance and symmetry plane up to level 20", 10.0, inheritance_and_symmetry},
      {5, "alternating recurrence vanishes (j+k<=8, i in [j+k,40])", 20.0, annihilating_recurrence},
      {6, "binomial identity sweep (n<=30, 0<=k<=m<=30)", 5.0, vandermonde_sweep},
      {7, "closed form (i<=25) and central-binomial transform (n<=100)", 10.0,
       closed_form_and_central},
      {8, "3-Pascal rows (i<=30) and Gegenbauer face rows (i<=20)", 10.0, extended_face_checks},
      {9, "star transform report is deterministic", 5.0, star_report},
      {10, "b-file round trip and corrupted index detection", 5.0, bfile_round_trip},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    std::string problem;
    const auto start = std::chrono::steady_clock::now();
    try {
      problem = c.body();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (problem.empty() && seconds > c.budget_seconds) problem = "over runtime budget";
    if (!problem.empty()) ++failures;

    std::ostringstream line;
    line << (problem.empty() ? "PASS" : "FAIL") << " AC" << c.number << ' ' << c.title << " ["
         << std::fixed << std::setprecision(3) << seconds << "s / " << std::setprecision(0)
         << c.budget_seconds << "s]";
    if (!problem.empty()) line << ": " << problem;
    std::cout << line.str() << '\n';
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << '\n';
  return failures == 0 ? 0 : 1;
}
