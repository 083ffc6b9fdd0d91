#include <set>
#include <string>

#include "dofb/network.hpp"
#include "json.hpp"

namespace dofb {

using nlohmann::json;

namespace {

std::string compact(const json& j) { return j.dump(); }

std::string indented_list(const std::vector<std::string>& items) {
  if (items.empty()) return "[]";
  std::string out = "[\n";
  for (std::size_t i = 0; i < items.size(); ++i) {
    out += "    " + items[i];
    out += i + 1 < items.size() ? ",\n" : "\n";
  }
  out += "  ]";
  return out;
}

std::array<NodeId, 2> read_pair(const json& doc, const char* key) {
  const json& value = doc.at(key);
  if (!value.is_array() || value.size() != 2 || !value[0].is_string() || !value[1].is_string()) {
    throw ParseError(std::string("\"") + key + "\" must be an array of two strings");
  }
  return {value[0].get<std::string>(), value[1].get<std::string>()};
}

}  // namespace

std::string serialize_network(const LayeredNetwork& net) {
  std::vector<std::string> edges;
  for (const Edge& e : net.edges()) edges.push_back(compact(json::array({e.from, e.to})));
  std::vector<std::string> layers;
  for (const auto& layer : net.layers()) layers.push_back(compact(json(layer)));

  const auto& d = net.destinations();
  const auto& s = net.sources();
  std::string out = "{\n";
  out += "  \"destinations\": " + compact(json::array({d[0], d[1]})) + ",\n";
  out += "  \"edges\": " + indented_list(edges) + ",\n";
  out += "  \"layers\": " + indented_list(layers) + ",\n";
  out += "  \"sources\": " + compact(json::array({s[0], s[1]})) + "\n";
  out += "}\n";
  return out;
}

LayeredNetwork parse_network(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("network document must be a JSON object");

  static const std::set<std::string> kKeys{"layers", "edges", "sources", "destinations"};
  for (const auto& [key, value] : doc.items()) {
    if (!kKeys.contains(key)) throw ParseError("unknown key \"" + key + "\"");
  }
  for (const std::string& key : kKeys) {
    if (!doc.contains(key)) throw ParseError("missing key \"" + key + "\"");
  }

  const json& jl = doc["layers"];
  if (!jl.is_array()) throw ParseError("\"layers\" must be an array of string arrays");
  std::vector<std::vector<NodeId>> layers;
  for (const json& layer : jl) {
    if (!layer.is_array()) throw ParseError("\"layers\" must be an array of string arrays");
    auto& out = layers.emplace_back();
    for (const json& n : layer) {
      if (!n.is_string()) throw ParseError("node names must be strings");
      out.push_back(n.get<std::string>());
    }
  }

  const json& je = doc["edges"];
  if (!je.is_array()) throw ParseError("\"edges\" must be an array of [from, to] pairs");
  std::vector<Edge> edges;
  for (const json& e : je) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      throw ParseError("each edge must be a [from, to] pair of strings");
    }
    edges.push_back({e[0].get<std::string>(), e[1].get<std::string>()});
  }

  LayeredNetwork net(std::move(layers), std::move(edges), read_pair(doc, "sources"),
                     read_pair(doc, "destinations"));
  auto violations = validate(net);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return net;
}

}  // namespace dofb
