#include "pforge/graph_json.hpp"

#include <sstream>

#include <json.hpp>

namespace pforge {

std::string to_json(const Multigraph& g) {
  std::ostringstream os;
  os << "{\"vertices\":[";
  for (size_t i = 0; i < g.vertices().size(); ++i)
    os << (i ? "," : "") << g.vertices()[i];
  os << "],\"edges\":[";
  for (size_t i = 0; i < g.edges().size(); ++i) {
    const WeightedEdge& e = g.edges()[i];
    os << (i ? "," : "") << '[' << e.u << ',' << e.v << ',' << e.weight << ','
       << e.id << ']';
  }
  os << ']';
  if (g.rotation()) {
    os << ",\"rotation\":{";
    bool first = true;
    for (const auto& [v, cycle] : *g.rotation()) {
      os << (first ? "" : ",") << '"' << v << "\":[";
      for (size_t i = 0; i < cycle.size(); ++i) os << (i ? "," : "") << cycle[i];
      os << ']';
      first = false;
    }
    os << '}';
  }
  if (!g.markers().empty()) {
    os << ",\"markers\":{";
    bool first = true;
    for (const auto& [name, v] : g.markers()) {
      os << (first ? "" : ",") << '"' << name << "\":" << v;
      first = false;
    }
    os << '}';
  }
  os << "}\n";
  return os.str();
}

Multigraph from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  try {
    if (!j.is_object()) throw std::invalid_argument("top level must be an object");
    if (!j.contains("vertices") || !j.contains("edges"))
      throw std::invalid_argument("missing required field 'vertices' or 'edges'");

    std::vector<int> vertices = j.at("vertices").get<std::vector<int>>();

    std::vector<WeightedEdge> edges;
    for (const auto& row : j.at("edges")) {
      if (!row.is_array() || row.size() != 4)
        throw std::invalid_argument("field 'edges': each entry must be [u,v,weight,id]");
      edges.push_back({row[3].get<int>(), row[0].get<int>(), row[1].get<int>(),
                       row[2].get<int>()});
    }

    std::optional<RotationSystem> rotation;
    if (j.contains("rotation")) {
      RotationSystem rot;
      for (const auto& [key, value] : j.at("rotation").items()) {
        int v;
        try {
          v = std::stoi(key);
        } catch (const std::exception&) {
          throw std::invalid_argument("field 'rotation': key '" + key +
                                      "' is not a vertex id");
        }
        rot[v] = value.get<std::vector<int>>();
      }
      rotation = std::move(rot);
    }

    MarkerMap markers;
    if (j.contains("markers"))
      for (const auto& [name, v] : j.at("markers").items())
        markers[name] = v.get<int>();

    return Multigraph(std::move(vertices), std::move(edges), std::move(rotation),
                      std::move(markers));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad graph JSON: ") + e.what());
  }
}

}  // namespace pforge
