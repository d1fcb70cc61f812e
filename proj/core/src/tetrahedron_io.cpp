#include <json.hpp>

#include "tetra/tetrahedron.hpp"

namespace tetra {

namespace {

template <typename H>
std::string dump(const H& h, bool extended) {
  nlohmann::ordered_json data = nlohmann::ordered_json::array();
  for (index_t i = 0; i <= h.levels(); ++i) {
    nlohmann::ordered_json level = nlohmann::ordered_json::array();
    for (index_t k = 0; k <= i; ++k) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (const auto& v : h.row(i, k)) row.push_back(to_decimal(v));
      level.push_back(std::move(row));
    }
    data.push_back(std::move(level));
  }
  nlohmann::ordered_json doc;
  doc["levels"] = h.levels();
  doc["extended"] = extended;
  doc["data"] = std::move(data);
  return doc.dump();
}

}  // namespace

std::string tetrahedron_to_json(const Tetrahedron& h) { return dump(h, false); }
std::string tetrahedron_to_json(const ExtendedTetrahedron& e) { return dump(e, true); }

}  // namespace tetra
