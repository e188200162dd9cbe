#include <stdexcept>

#include <nlohmann/json.hpp>

#include "lcskp/alignment.hpp"

namespace lcskp {

std::string to_json(const ChunkAlignment& a) {
  nlohmann::ordered_json chunks = nlohmann::ordered_json::array();
  for (const auto& c : a.chunks) {
    chunks.push_back({{"x", c.x}, {"y", c.y}, {"len", c.len}});
  }
  nlohmann::ordered_json doc;
  doc["total"] = a.total;
  doc["chunks"] = std::move(chunks);
  return doc.dump();
}

ChunkAlignment alignment_from_json(std::string_view text) {
  try {
    const auto doc = nlohmann::json::parse(text);
    ChunkAlignment a;
    a.total = doc.at("total").get<std::size_t>();
    for (const auto& c : doc.at("chunks")) {
      a.chunks.push_back(
          {c.at("x").get<std::size_t>(), c.at("y").get<std::size_t>(), c.at("len").get<std::size_t>()});
    }
    return a;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed alignment JSON: ") + e.what());
  }
}

}  // namespace lcskp
