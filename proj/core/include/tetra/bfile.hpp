#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "tetra/bigint.hpp"

namespace tetra {

struct BFileEntry {
  index_t index = 0;
  BigInt value;
  bool operator==(const BFileEntry&) const = default;
};

/// OEIS b-file: "index value" lines with consecutive indices. Leading '#'
/// comment lines are kept verbatim so a canonical file round-trips exactly.
struct BFile {
  std::string id;
  std::vector<std::string> comments;
  std::vector<BFileEntry> entries;

  bool operator==(const BFile&) const = default;

  /// Value at OEIS index n, or nullptr when n is not listed.
  const BigInt* find(index_t n) const noexcept;
};

/// "A" followed by one or more digits.
bool is_valid_oeis_id(std::string_view id);

/// Cache/file name for an id: "A026375" -> "b026375.txt".
std::string bfile_name(std::string_view oeis_id);

/// Throws ParseError (with 1-based line number) on a malformed line and
/// FormatError when indices are not consecutive.
BFile parse_bfile(std::string_view text, std::string id = {});
std::string serialize_bfile(const BFile& b);

/// Reads a file, taking the id from a "b<digits>.txt" file name if present.
BFile load_bfile(const std::filesystem::path& path);

}  // namespace tetra
