#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "tetra/errors.hpp"
#include "tetra/triangle.hpp"

namespace tetra {

namespace {

BigInt json_number(const nlohmann::json& v, std::size_t row) {
  if (v.is_string()) {
    try {
      return parse_decimal(v.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(0, "row " + std::to_string(row) + ": " + e.what());
    }
  }
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? BigInt(v.get<std::uint64_t>()) : BigInt(v.get<std::int64_t>());
  }
  throw ParseError(0, "row " + std::to_string(row) + ": entries must be decimal strings");
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

Triangle triangle_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError(0, "triangle JSON must be an array of rows");
  std::vector<std::vector<BigInt>> rows;
  rows.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    if (!doc[i].is_array()) throw ParseError(0, "row " + std::to_string(i) + " is not an array");
    auto& row = rows.emplace_back();
    for (const auto& v : doc[i]) row.push_back(json_number(v, i));
  }
  return Triangle::from_rows(rows);
}

std::string triangle_to_json(const Triangle& t) {
  nlohmann::json doc = nlohmann::json::array();
  for (index_t i = 0; i <= t.max_row(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& v : t.row(i)) row.push_back(to_decimal(v));
    doc.push_back(std::move(row));
  }
  return doc.dump();
}

Triangle triangle_from_csv(std::string_view text) {
  std::vector<std::vector<BigInt>> rows;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto& row = rows.emplace_back();
    std::istringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) {
      try {
        row.push_back(parse_decimal(trim(field)));
      } catch (const ParseError& e) {
        throw ParseError(line_no, "line " + std::to_string(line_no) + ": " + e.what());
      }
    }
  }
  return Triangle::from_rows(rows);
}

std::string triangle_to_csv(const Triangle& t) {
  std::string out;
  for (index_t i = 0; i <= t.max_row(); ++i) {
    bool first = true;
    for (const auto& v : t.row(i)) {
      if (!first) out += ',';
      out += to_decimal(v);
      first = false;
    }
    out += '\n';
  }
  return out;
}

Triangle load_triangle(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  return path.extension() == ".csv" ? triangle_from_csv(text) : triangle_from_json(text);
}

void save_triangle(const Triangle& t, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  if (path.extension() == ".csv") {
    out << triangle_to_csv(t);
  } else {
    out << triangle_to_json(t) << '\n';
  }
}

}  // namespace tetra
