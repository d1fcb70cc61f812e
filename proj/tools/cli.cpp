#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tetra/bfile.hpp"
#include "tetra/errors.hpp"
#include "tetra/oeis_fetch.hpp"
#include "tetra/sequences.hpp"
#include "tetra/tetrahedron.hpp"
#include "tetra/transforms.hpp"
#include "tetra/triangle.hpp"

namespace tetra::cli {

namespace {

using Json = nlohmann::ordered_json;

// Bad flag combinations that CLI11 cannot express declaratively.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { plain, json, csv };

std::string join(const std::vector<BigInt>& values) {
  std::string out;
  for (std::size_t n = 0; n < values.size(); ++n) {
    if (n > 0) out += ',';
    out += to_decimal(values[n]);
  }
  return out;
}

Json decimal_array(const std::vector<BigInt>& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(to_decimal(v));
  return arr;
}

std::vector<BigInt> parse_list(const std::string& text) {
  std::vector<BigInt> out;
  std::stringstream in(text);
  std::string field;
  while (std::getline(in, field, ',')) {
    field.erase(0, field.find_first_not_of(" \t"));
    field.erase(field.find_last_not_of(" \t") + 1);
    if (!field.empty()) out.push_back(parse_decimal(field));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Source triangle flags shared by most subcommands.

struct SourceOptions {
  std::string kind = "pascal";
  std::optional<index_t> rows;
  std::string c;
  std::string a;
  std::string in;
  std::uint64_t seed = 1;
  std::int64_t bound = 1000000;

  void attach(CLI::App* cmd, bool rows_flag = true) {
    cmd->add_option("--kind", kind, "Face triangle: pascal, gat, file or random")
        ->check(CLI::IsMember({"pascal", "gat", "file", "random"}));
    if (rows_flag) cmd->add_option("--rows", rows, "Last row index of the triangle");
    cmd->add_option("--c", c, "GAT constant left diagonal");
    cmd->add_option("--a", a, "GAT right-diagonal seeds a_1,a_2,...");
    cmd->add_option("--in", in, "Triangle file (.json or .csv)");
    cmd->add_option("--seed", seed, "Seed for --kind random");
    cmd->add_option("--bound", bound, "Entries of --kind random lie in [-bound, bound]");
  }

  std::string describe() const {
    if (kind == "file") return in;
    if (kind == "gat") return "gat(c=" + c + ")";
    if (kind == "random") return "random(seed=" + std::to_string(seed) + ")";
    return kind;
  }

  // Triangle with at least `needed` as last row index (when the kind can
  // grow); file-backed triangles are returned as read.
  Triangle resolve(index_t needed) const {
    if (!in.empty() && kind != "file") throw UsageError("--in requires --kind file");
    const index_t max_row = std::max(needed, rows.value_or(needed));
    if (kind == "pascal") return pascal_triangle(max_row);
    if (kind == "gat") {
      if (c.empty() || a.empty()) throw UsageError("--kind gat requires --c and --a");
      return gat_triangle({parse_decimal(c), parse_list(a)}, max_row);
    }
    if (kind == "random") {
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
      std::vector<std::vector<BigInt>> r(static_cast<std::size_t>(max_row + 1));
      for (std::size_t i = 0; i < r.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) r[i].push_back(BigInt(dist(rng)));
      }
      return Triangle::from_rows(r);
    }
    if (in.empty()) throw UsageError("--kind file requires --in");
    return load_triangle(in);
  }
};

void emit(std::ostream& out, const std::string& text, const std::string& path) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) throw std::runtime_error("cannot write " + path);
}

// Collects PASS/FAIL lines for verify and oeis conjecture.
struct Outcome {
  struct Line {
    std::string name;
    bool pass;
    std::string detail;
  };
  std::vector<Line> lines;

  void add(std::string name, bool pass, std::string detail) {
    lines.push_back({std::move(name), pass, std::move(detail)});
  }
  bool all_pass() const {
    return std::all_of(lines.begin(), lines.end(), [](const Line& l) { return l.pass; });
  }
  int print(std::ostream& out, Format fmt, const std::string& target) const {
    if (fmt == Format::json) {
      Json checks = Json::array();
      for (const auto& l : lines) checks.push_back({{"check", l.name}, {"pass", l.pass}, {"detail", l.detail}});
      out << Json{{"target", target}, {"pass", all_pass()}, {"checks", checks}}.dump() << '\n';
    } else {
      for (const auto& l : lines) {
        out << (l.pass ? "PASS " : "FAIL ") << l.name;
        if (!l.detail.empty()) out << ' ' << l.detail;
        out << '\n';
      }
    }
    return all_pass() ? 0 : 1;
  }
};

std::string violation_text(const CheckReport& r) {
  if (r.holds || !r.first_violation) return std::to_string(r.checked) + " indices";
  const Violation& v = *r.first_violation;
  return "counterexample at (i=" + std::to_string(v.i) + ", j=" + std::to_string(v.j) +
         ", k=" + std::to_string(v.k) + "): " + to_decimal(v.lhs) + " != " + to_decimal(v.rhs);
}

// ---------------------------------------------------------------------------
// Subcommand handlers.

int cmd_triangle(const SourceOptions& src, Format fmt, const std::string& out_path,
                 std::ostream& out) {
  if (src.kind != "file" && !src.rows) throw UsageError("--rows is required for --kind " + src.kind);
  const Triangle t = src.resolve(src.rows.value_or(0));
  const std::string text =
      fmt == Format::json ? triangle_to_json(t) + "\n" : triangle_to_csv(t);
  emit(out, text, out_path);
  return 0;
}

struct TetraOptions {
  index_t levels = 4;
  index_t i = 0, j = 0, k = 0;
  std::optional<index_t> face;
  std::string method = "recursive";
  std::string out;
};

int cmd_tetra_build(const SourceOptions& src, const TetraOptions& o, std::ostream& out) {
  const Tetrahedron h = build(src.resolve(o.levels), o.levels);
  emit(out, tetrahedron_to_json(h) + "\n", o.out);
  return 0;
}

int cmd_tetra_entry(const SourceOptions& src, const TetraOptions& o, Format fmt,
                    std::ostream& out) {
  if (o.k < 0 || o.k > o.i || o.j < 0 || o.j > o.i - o.k) {
    throw DomainError("index (i=" + std::to_string(o.i) + ", j=" + std::to_string(o.j) +
                      ", k=" + std::to_string(o.k) + ") out of range; valid: 0 <= k <= i, " +
                      "0 <= j <= i - k" +
                      (o.i >= 0 && o.k >= 0 && o.k <= o.i
                           ? " (here j in 0.." + std::to_string(o.i - o.k) + ")"
                           : std::string()));
  }
  const Triangle t = src.resolve(o.i);
  BigInt value;
  if (o.method == "explicit") {
    value = entry_explicit(t, o.i, o.j, o.k);
  } else if (o.method == "reindexed") {
    value = entry_explicit_reindexed(t, o.i, o.j, o.k);
  } else {
    value = build(t, o.i).at(o.i, o.j, o.k);
  }
  if (fmt == Format::json) {
    out << Json{{"i", o.i}, {"j", o.j}, {"k", o.k}, {"value", to_decimal(value)}}.dump() << '\n';
  } else {
    out << to_decimal(value) << '\n';
  }
  return 0;
}

int cmd_tetra_extended(const SourceOptions& src, const TetraOptions& o, Format fmt,
                       std::ostream& out) {
  const ExtendedTetrahedron e = build_extended(src.resolve(o.levels), o.levels);
  if (!o.face) {
    emit(out, tetrahedron_to_json(e) + "\n", o.out);
    return 0;
  }
  const auto row = face_row(e, *o.face);
  if (fmt == Format::json) {
    out << Json{{"level", *o.face}, {"j_min", -*o.face}, {"values", decimal_array(row)}}.dump()
        << '\n';
  } else {
    out << join(row) << '\n';
  }
  return 0;
}

int cmd_transform(const SourceOptions& src, index_t n, bool star, Format fmt, std::ostream& out) {
  if (n < 0) throw UsageError("--n must be non-negative");
  const Triangle t = src.resolve(n);
  if (!star) {
    const auto b = tetra_transform(t, n, src.describe());
    if (fmt == Format::json) {
      out << Json{{"source", b.source}, {"b", decimal_array(b.terms)}}.dump() << '\n';
    } else {
      out << join(b.terms) << '\n';
    }
    return 0;
  }
  const StarComparison cmp = tetra_transform_star(t, n, src.describe());
  if (fmt == Format::json) {
    Json doc{{"source", cmp.standard.source},
             {"b", decimal_array(cmp.standard.terms)},
             {"b_star", decimal_array(cmp.star.terms)},
             {"agrees", cmp.agrees()},
             {"first_disagreement", nullptr},
             {"differing", cmp.differing}};
    if (auto first = cmp.first_disagreement()) doc["first_disagreement"] = *first;
    out << doc.dump() << '\n';
  } else {
    out << "b:  " << join(cmp.standard.terms) << '\n';
    out << "b*: " << join(cmp.star.terms) << '\n';
    if (cmp.agrees()) {
      out << "diff: agree on all " << cmp.star.terms.size() << " terms\n";
    } else {
      const auto n0 = static_cast<std::size_t>(*cmp.first_disagreement());
      out << "diff: first disagreement at n=" << n0 << " (b=" << to_decimal(cmp.standard.terms[n0])
          << ", b*=" << to_decimal(cmp.star.terms[n0]) << "); " << cmp.differing.size() << " of "
          << cmp.star.terms.size() << " terms differ\n";
    }
  }
  return 0;
}

struct VerifyOptions {
  std::string target;
  index_t imax = 20;
  index_t nmax = 20;
  index_t levels = 20;
  std::optional<index_t> j, k;
};

int cmd_verify(const SourceOptions& src, const VerifyOptions& v, Format fmt, std::ostream& out) {
  Outcome result;
  const std::string& target = v.target;
  if (target == "theorem1") {
    const index_t top = std::min<index_t>(v.imax, v.levels);
    const CheckReport r = verify_explicit_formulas(src.resolve(top), top);
    result.add("theorem1 explicit=recursive=reindexed levels<=" + std::to_string(top), r.holds,
               violation_text(r));
  } else if (target == "theorem2") {
    const Triangle t = src.resolve(v.nmax);
    const auto direct = tetra_transform(t, v.nmax).terms;
    const auto edge = edge_sequence(t, v.nmax);
    std::string detail = std::to_string(direct.size()) + " terms";
    for (std::size_t n = 0; n < direct.size(); ++n) {
      if (direct[n] != edge[n]) {
        detail = "counterexample at n=" + std::to_string(n) + ": transform " +
                 to_decimal(direct[n]) + " != edge " + to_decimal(edge[n]);
        break;
      }
    }
    result.add("theorem2 transform=edge n<=" + std::to_string(v.nmax), direct == edge, detail);
  } else if (target == "theorem3") {
    const CheckReport r = verify_pascal_inheritance(build(src.resolve(v.levels), v.levels));
    result.add("theorem3 pascal-inheritance levels<=" + std::to_string(v.levels), r.holds,
               violation_text(r));
  } else if (target == "theorem4") {
    const CheckReport r = verify_symmetry_plane(build(src.resolve(v.levels), v.levels));
    result.add("theorem4 symmetry-plane levels<=" + std::to_string(v.levels), r.holds,
               violation_text(r));
  } else if (target == "theorem5") {
    std::vector<std::pair<index_t, index_t>> pairs;
    if (v.j || v.k) {
      pairs.emplace_back(v.j.value_or(0), v.k.value_or(0));
    } else {
      for (index_t s = 0; s <= 4; ++s) {
        for (index_t j = 0; j <= s; ++j) pairs.emplace_back(j, s - j);
      }
    }
    index_t top = 0;
    for (auto [j, k] : pairs) top = std::max(top, v.imax + j + k + 1);
    const Tetrahedron h = build(src.resolve(top), top);
    for (auto [j, k] : pairs) {
      const RecurrenceReport r = verify_recurrence(h, j, k, j + k, v.imax);
      std::string detail = "order=" + std::to_string(r.order) + " i=[" + std::to_string(r.i_lo) +
                           "," + std::to_string(r.i_hi) + "]";
      if (r.first_violation) {
        detail += " residual " + to_decimal(r.first_violation->residual) + " at i=" +
                  std::to_string(r.first_violation->i);
      }
      result.add("theorem5 j=" + std::to_string(j) + " k=" + std::to_string(k), r.holds, detail);
    }
  } else if (target == "identity") {
    std::size_t checked = 0;
    std::string detail;
    bool holds = true;
    for (index_t n = 0; n <= v.nmax && holds; ++n) {
      for (index_t m = 0; m <= v.nmax && holds; ++m) {
        for (index_t k = 0; k <= m; ++k) {
          ++checked;
          const IdentityCheck c = check_vandermonde_like(n, m, k);
          if (!c.holds) {
            holds = false;
            detail = "counterexample (n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                     ", k=" + std::to_string(k) + "): " + to_decimal(c.lhs) +
                     " != " + to_decimal(c.rhs);
            break;
          }
        }
      }
    }
    if (holds) detail = std::to_string(checked) + " (n,m,k) triples";
    result.add("identity n<=" + std::to_string(v.nmax) + " 0<=k<=m<=" + std::to_string(v.nmax),
               holds, detail);
  } else if (target == "closedform") {
    const Tetrahedron h = build(pascal_triangle(v.imax), v.imax);
    bool holds = true;
    std::string detail;
    std::size_t checked = 0;
    for (index_t i = 0; i <= v.imax && holds; ++i) {
      for (index_t k = 0; k <= i && holds; ++k) {
        for (index_t j = 0; j <= i - k; ++j) {
          ++checked;
          if (closed_form_entry(i, j, k) != h.at(i, j, k)) {
            holds = false;
            detail = "counterexample at (i=" + std::to_string(i) + ", j=" + std::to_string(j) +
                     ", k=" + std::to_string(k) + ")";
            break;
          }
        }
      }
    }
    if (holds) detail = std::to_string(checked) + " indices";
    result.add("closedform pascal-face i<=" + std::to_string(v.imax), holds, detail);

    std::vector<BigInt> central;
    for (index_t l = 0; l <= v.imax; ++l) central.push_back(central_binomial(l));
    const bool same =
        tetra_transform(pascal_triangle(v.imax), v.imax).terms == binomial_transform(central);
    result.add("closedform transform=binomial-transform(central) n<=" + std::to_string(v.imax),
               same, "");
  } else {
    throw UsageError("unknown verify target '" + target + "'");
  }
  return result.print(out, fmt, target);
}

struct OeisOptions {
  std::string seq;
  std::string bfile;
  bool fetch = false;
  std::string cache;
  std::optional<std::size_t> count;
  index_t imax = 20;
  std::string which = "gegenbauer";
  std::string fixture;
};

int cmd_oeis_list(Format fmt, std::ostream& out) {
  Json arr = Json::array();
  for (const auto& r : catalog()) {
    std::vector<std::string> patterns;
    for (const auto& p : r.patterns) patterns.push_back(p.describe());
    if (fmt == Format::json) {
      arr.push_back({{"id", r.oeis_id},
                     {"aliases", r.aliases},
                     {"patterns", patterns},
                     {"offset_hint", r.offset_hint},
                     {"terms", decimal_array(r.printed_terms)}});
    } else {
      std::string pats;
      for (const auto& p : patterns) pats += (pats.empty() ? "" : " ") + p;
      out << r.oeis_id << ' ' << pats << ' ' << join(r.printed_terms) << '\n';
    }
  }
  if (fmt == Format::json) out << arr.dump() << '\n';
  return 0;
}

int cmd_oeis_check(const OeisOptions& o, Format fmt, std::ostream& out) {
  if (o.seq.empty()) throw UsageError("oeis check requires --seq");
  const SequenceRecord* record = find_record(o.seq);
  if (record == nullptr) throw UsageError("unknown catalog name '" + o.seq + "' (see `oeis list`)");
  if (o.bfile.empty() == !o.fetch) throw UsageError("oeis check needs exactly one of --bfile or --fetch");

  BFile b;
  if (o.fetch) {
    const std::filesystem::path cache = o.cache.empty() ? default_oeis_cache_dir() : std::filesystem::path(o.cache);
    b = fetch_bfile(record->oeis_id, cache);
  } else {
    b = load_bfile(o.bfile);
    if (b.id.empty()) b.id = record->oeis_id;
  }
  const std::size_t count = o.count.value_or(record->printed_terms.size());
  const MatchReport m = compare(*record, b, count);

  if (fmt == Format::json) {
    Json doc{{"seq", record->oeis_id},
             {"matched", m.matched},
             {"matched_length", m.matched_length},
             {"requested", m.requested},
             {"offset", m.offset},
             {"used_fallback", m.used_fallback},
             {"first_mismatch", nullptr}};
    if (m.first_mismatch) {
      doc["first_mismatch"] = {{"index", *m.first_mismatch},
                               {"expected", to_decimal(*m.expected)},
                               {"found", m.found ? Json(to_decimal(*m.found)) : Json(nullptr)}};
    }
    out << doc.dump() << '\n';
  } else if (m.matched) {
    out << "match " << m.matched_length << ' ' << record->oeis_id << " offset " << m.offset
        << (m.used_fallback ? " (fallback alignment)" : "") << '\n';
  } else {
    out << "mismatch " << record->oeis_id << " at index " << *m.first_mismatch << ": expected "
        << to_decimal(*m.expected) << ", found "
        << (m.found ? to_decimal(*m.found) : std::string("<missing>")) << " (matched "
        << m.matched_length << " of " << m.requested << ")\n";
  }
  return m.matched ? 0 : 1;
}

int cmd_oeis_conjecture(const OeisOptions& o, Format fmt, std::ostream& out) {
  Outcome result;
  if (o.which == "gegenbauer") {
    const GegenbauerReport r = check_gegenbauer_conjecture(o.imax);
    for (const auto& level : r.levels) {
      std::string detail = std::to_string(level.face.size()) + " terms";
      if (level.discrepancy) {
        const auto& d = *level.discrepancy;
        detail = "k=" + std::to_string(d.k) + " m=" + std::to_string(d.m) + ": face " +
                 to_decimal(d.face_value) + " vs GegenbauerC " + d.gegenbauer_value.str() +
                 (d.integral ? "" : " (not an integer)");
      }
      result.add("gegenbauer i=" + std::to_string(level.i), level.passed, detail);
    }
  } else {
    std::optional<BFile> fixture;
    if (!o.fixture.empty()) fixture = load_bfile(o.fixture);
    const ThreePascalReport r = check_three_pascal(o.imax, fixture ? &*fixture : nullptr);
    for (const auto& level : r.levels) {
      result.add("three-pascal i=" + std::to_string(level.i), level.passed,
                 level.passed ? std::to_string(level.row.size()) + " terms"
                              : "position " + std::to_string(*level.first_bad));
    }
    if (fixture) {
      result.add("three-pascal fixture", !r.fixture_mismatch,
                 r.fixture_mismatch ? "first difference at b-file index " +
                                          std::to_string(*r.fixture_mismatch)
                                    : std::to_string(r.fixture_rows_compared) + " rows");
    }
  }
  return result.print(out, fmt, "conjecture " + o.which);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pascal-like tetrahedra, the tetrahedron coefficient transform and its identities",
               "tetra"};
  app.require_subcommand(1);

  std::string format_name = "plain";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"plain", "json", "csv"}));

  // triangle
  SourceOptions tri_src;
  std::string tri_out;
  auto* tri = app.add_subcommand("triangle", "Emit an arithmetical triangle");
  tri_src.attach(tri);
  tri->add_option("--out", tri_out, "Write to a file instead of stdout");

  // tetra
  SourceOptions tet_src;
  TetraOptions tet;
  auto* tetra_cmd = app.add_subcommand("tetra", "Build the tetrahedron or read entries");
  tetra_cmd->require_subcommand(1);
  auto* tet_build = tetra_cmd->add_subcommand("build", "Emit the tetrahedron as JSON");
  auto* tet_entry = tetra_cmd->add_subcommand("entry", "Print one entry h_{j,k}^i");
  auto* tet_ext = tetra_cmd->add_subcommand("extended", "Zero-extended construction");
  for (auto* sub : {tet_build, tet_entry, tet_ext}) tet_src.attach(sub);
  tet_build->add_option("--levels", tet.levels, "Last level index")->required();
  tet_build->add_option("--out", tet.out, "Write to a file instead of stdout");
  tet_entry->add_option("--i", tet.i, "Level")->required();
  tet_entry->add_option("--j", tet.j, "Column")->required();
  tet_entry->add_option("--k", tet.k, "Row")->required();
  tet_entry->add_option("--method", tet.method, "recursive, explicit or reindexed")
      ->check(CLI::IsMember({"recursive", "explicit", "reindexed"}));
  tet_ext->add_option("--levels", tet.levels, "Last level index")->required();
  tet_ext->add_option("--face", tet.face, "Print only the face row h_{j,i}^i, j = -i..i");
  tet_ext->add_option("--out", tet.out, "Write the JSON to a file instead of stdout");

  // transform
  SourceOptions tr_src;
  index_t tr_n = 0;
  bool tr_star = false;
  auto* transform = app.add_subcommand("transform", "Tetrahedron coefficient transform b_0..b_n");
  tr_src.attach(transform);
  transform->add_option("--n", tr_n, "Last term index")->required();
  transform->add_flag("--star", tr_star, "Also evaluate the alternative weights and diff them");

  // verify
  SourceOptions ver_src;
  VerifyOptions ver;
  auto* verify = app.add_subcommand("verify", "Check a theorem or identity");
  ver_src.attach(verify);
  verify->add_option("target", ver.target,
                     "theorem1..theorem5, identity or closedform")
      ->required()
      ->check(CLI::IsMember(
          {"theorem1", "theorem2", "theorem3", "theorem4", "theorem5", "identity", "closedform"}));
  verify->add_option("--imax", ver.imax, "Upper level / window end");
  verify->add_option("--nmax", ver.nmax, "Upper n for theorem2 and identity");
  verify->add_option("--levels", ver.levels, "Levels for theorem1/3/4");
  verify->add_option("--j", ver.j, "theorem5 column");
  verify->add_option("--k", ver.k, "theorem5 row");

  // oeis
  OeisOptions oeis;
  auto* oeis_cmd = app.add_subcommand("oeis", "Catalog sequences and conjecture checks");
  oeis_cmd->require_subcommand(1);
  auto* oeis_list = oeis_cmd->add_subcommand("list", "Print the sequence catalog");
  auto* oeis_check = oeis_cmd->add_subcommand("check", "Compare a catalog sequence with a b-file");
  oeis_check->add_option("--seq", oeis.seq, "Catalog name or OEIS id")->required();
  oeis_check->add_option("--bfile", oeis.bfile, "Local b-file");
  oeis_check->add_flag("--fetch", oeis.fetch, "Download (or reuse a cached) b-file");
  oeis_check->add_option("--cache", oeis.cache, "Cache directory for --fetch");
  oeis_check->add_option("--count", oeis.count, "Number of terms to compare");
  auto* oeis_conj = oeis_cmd->add_subcommand("conjecture", "Extended-face checks up to --imax");
  oeis_conj->add_option("--imax", oeis.imax, "Last level");
  oeis_conj->add_option("--which", oeis.which, "gegenbauer or three-pascal")
      ->check(CLI::IsMember({"gegenbauer", "three-pascal"}));
  oeis_conj->add_option("--fixture", oeis.fixture, "3-Pascal b-file to compare against");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const Format fmt = format_name == "json" ? Format::json
                     : format_name == "csv" ? Format::csv
                                            : Format::plain;
  try {
    if (*tri) return cmd_triangle(tri_src, fmt, tri_out, out);
    if (*tet_build) return cmd_tetra_build(tet_src, tet, out);
    if (*tet_entry) return cmd_tetra_entry(tet_src, tet, fmt, out);
    if (*tet_ext) return cmd_tetra_extended(tet_src, tet, fmt, out);
    if (*transform) return cmd_transform(tr_src, tr_n, tr_star, fmt, out);
    if (*verify) return cmd_verify(ver_src, ver, fmt, out);
    if (*oeis_list) return cmd_oeis_list(fmt, out);
    if (*oeis_check) return cmd_oeis_check(oeis, fmt, out);
    if (*oeis_conj) return cmd_oeis_conjecture(oeis, fmt, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const PreconditionError& e) {
    err << "error: hypothesis unmet (" << e.hypothesis() << "): " << e.what() << '\n';
    return 2;
  } catch (const ShapeError& e) {
    err << "error: shape: " << e.what() << '\n';
    return 1;
  } catch (const TransportError& e) {
    err << "error: "
        << (e.kind() == TransportError::Kind::offline     ? "offline: "
            : e.kind() == TransportError::Kind::not_found ? "not found: "
                                                          : "http: ")
        << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace tetra::cli
