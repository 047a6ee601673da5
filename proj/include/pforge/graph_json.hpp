#pragma once

#include <string>

#include "pforge/multigraph.hpp"

namespace pforge {

// Graph JSON: {"vertices":[...],"edges":[[u,v,weight,id],...],
// "rotation":{"v":[edge ids]},"markers":{"name":v}}. Edges sorted by id,
// vertices ascending, map keys ascending; output is byte-stable.
std::string to_json(const Multigraph& g);

// Parses the format above. Malformed input raises std::invalid_argument
// with a position or field diagnostic.
Multigraph from_json(const std::string& text);

}  // namespace pforge
