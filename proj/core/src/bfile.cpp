#include "tetra/bfile.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "tetra/errors.hpp"

namespace tetra {

const BigInt* BFile::find(index_t n) const noexcept {
  if (entries.empty()) return nullptr;
  const index_t first = entries.front().index;
  if (n < first || n - first >= static_cast<index_t>(entries.size())) return nullptr;
  return &entries[static_cast<std::size_t>(n - first)].value;
}

bool is_valid_oeis_id(std::string_view id) {
  if (id.size() < 2 || id.front() != 'A') return false;
  for (char c : id.substr(1)) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

std::string bfile_name(std::string_view oeis_id) {
  if (!is_valid_oeis_id(oeis_id)) {
    throw DomainError("malformed OEIS id '" + std::string(oeis_id) + "' (expected A<digits>)");
  }
  return "b" + std::string(oeis_id.substr(1)) + ".txt";
}

BFile parse_bfile(std::string_view text, std::string id) {
  BFile out;
  out.id = std::move(id);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (line.front() == '#') {
      out.comments.push_back(line);
      continue;
    }
    std::istringstream fields(line);
    std::string index_text, value_text, extra;
    if (!(fields >> index_text >> value_text) || (fields >> extra)) {
      throw ParseError(line_no, "b-file line " + std::to_string(line_no) +
                                    ": expected \"index value\", got \"" + line + "\"");
    }
    BFileEntry entry;
    try {
      const BigInt index = parse_decimal(index_text);
      if (index > std::numeric_limits<index_t>::max() ||
          index < std::numeric_limits<index_t>::min()) {
        throw ParseError(line_no, "index out of range");
      }
      entry.index = static_cast<index_t>(index);
      entry.value = parse_decimal(value_text);
    } catch (const ParseError& e) {
      throw ParseError(line_no, "b-file line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!out.entries.empty() && entry.index != out.entries.back().index + 1) {
      throw FormatError("b-file line " + std::to_string(line_no) + ": index " +
                        std::to_string(entry.index) + " does not follow " +
                        std::to_string(out.entries.back().index));
    }
    out.entries.push_back(std::move(entry));
  }
  return out;
}

std::string serialize_bfile(const BFile& b) {
  std::string out;
  for (const auto& c : b.comments) {
    out += c;
    out += '\n';
  }
  for (std::size_t n = 0; n < b.entries.size(); ++n) {
    if (n > 0 && b.entries[n].index != b.entries[n - 1].index + 1) {
      throw FormatError("serialize_bfile: indices must be consecutive");
    }
    out += std::to_string(b.entries[n].index);
    out += ' ';
    out += to_decimal(b.entries[n].value);
    out += '\n';
  }
  return out;
}

BFile load_bfile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();

  std::string id;
  const std::string stem = path.stem().string();
  if (stem.size() > 1 && stem.front() == 'b' && is_valid_oeis_id("A" + stem.substr(1))) {
    id = "A" + stem.substr(1);
  }
  return parse_bfile(buf.str(), std::move(id));
}

}  // namespace tetra
