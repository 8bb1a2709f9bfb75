// JSON serialization for rooted maps.
//
// Format: {"darts": 2n, "alpha": [..]} with exactly that key order, plain
// decimal integers, no floats.
#pragma once

#include <string>

#include "ofm/rooted_map.hpp"

namespace ofm {

std::string serialize_map(const RootedMap& m);

// Parses and validates; throws std::invalid_argument naming the violated
// invariant (or the JSON syntax problem).
RootedMap parse_map(const std::string& text);

RootedMap load_map_file(const std::string& path);

}  // namespace ofm
