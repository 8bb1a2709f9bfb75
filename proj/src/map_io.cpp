#include "ofm/map_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ofm {

std::string serialize_map(const RootedMap& m) {
  nlohmann::ordered_json j;
  j["darts"] = m.dart_count();
  j["alpha"] = m.alpha();
  return j.dump();
}

RootedMap parse_map(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("darts") || !j.contains("alpha"))
    throw std::invalid_argument("map file must be an object with \"darts\" and \"alpha\"");
  if (!j["darts"].is_number_unsigned())
    throw std::invalid_argument("\"darts\" must be a nonnegative integer");
  if (!j["alpha"].is_array())
    throw std::invalid_argument("\"alpha\" must be an array of dart indices");
  std::vector<Dart> alpha;
  alpha.reserve(j["alpha"].size());
  for (const auto& v : j["alpha"]) {
    if (!v.is_number_unsigned())
      throw std::invalid_argument("\"alpha\" entries must be nonnegative integers");
    alpha.push_back(v.get<Dart>());
  }
  if (alpha.size() != j["darts"].get<std::size_t>())
    throw std::invalid_argument("\"darts\" does not match the length of \"alpha\"");
  return RootedMap::from_alpha(std::move(alpha));
}

RootedMap load_map_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_map(buf.str());
}

}  // namespace ofm
