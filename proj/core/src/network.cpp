#include "dofb/network.hpp"

#include <algorithm>
#include <cctype>

namespace dofb {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// Three-way comparison of two digit runs by numeric value.
int compare_digits(std::string_view a, std::string_view b) {
  while (a.size() > 1 && a.front() == '0') a.remove_prefix(1);
  while (b.size() > 1 && b.front() == '0') b.remove_prefix(1);
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  const int c = a.compare(b);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

std::string edge_text(const Edge& e) { return e.from + "->" + e.to; }

}  // namespace

bool NodeOrder::operator()(std::string_view lhs, std::string_view rhs) const noexcept {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < lhs.size() && j < rhs.size()) {
    if (is_digit(lhs[i]) && is_digit(rhs[j])) {
      std::size_t ie = i;
      std::size_t je = j;
      while (ie < lhs.size() && is_digit(lhs[ie])) ++ie;
      while (je < rhs.size() && is_digit(rhs[je])) ++je;
      const int c = compare_digits(lhs.substr(i, ie - i), rhs.substr(j, je - j));
      if (c != 0) return c < 0;
      i = ie;
      j = je;
    } else {
      if (lhs[i] != rhs[j]) return lhs[i] < rhs[j];
      ++i;
      ++j;
    }
  }
  if ((i < lhs.size()) != (j < rhs.size())) return j < rhs.size();
  return lhs < rhs;
}

bool operator<(const Edge& lhs, const Edge& rhs) noexcept {
  const NodeOrder less;
  if (lhs.from != rhs.from) return less(lhs.from, rhs.from);
  return less(lhs.to, rhs.to);
}

LayeredNetwork::LayeredNetwork(std::vector<std::vector<NodeId>> layers, std::vector<Edge> edges,
                               std::array<NodeId, 2> sources, std::array<NodeId, 2> destinations)
    : layers_(std::move(layers)),
      edges_(std::move(edges)),
      sources_(std::move(sources)),
      destinations_(std::move(destinations)) {
  for (auto& layer : layers_) std::sort(layer.begin(), layer.end(), NodeOrder{});
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t l = 0; l < layers_.size(); ++l) {
    for (const NodeId& n : layers_[l]) {
      layer_index_.emplace(n, l + 1);
      children_.try_emplace(n);
      parents_.try_emplace(n);
    }
  }
  for (const Edge& e : edges_) {
    if (!layer_index_.contains(e.from) || !layer_index_.contains(e.to)) continue;
    children_[e.from].insert(e.to);
    parents_[e.to].insert(e.from);
  }
}

const std::vector<NodeId>& LayeredNetwork::layer(std::size_t index) const {
  if (index == 0 || index > layers_.size()) {
    throw LayerMismatch("layer index " + std::to_string(index) + " outside 1.." +
                        std::to_string(layers_.size()));
  }
  return layers_[index - 1];
}

std::optional<std::size_t> LayeredNetwork::layer_of(std::string_view node) const {
  const auto it = layer_index_.find(node);
  if (it == layer_index_.end()) return std::nullopt;
  return it->second;
}

std::size_t LayeredNetwork::node_count() const noexcept {
  std::size_t n = 0;
  for (const auto& layer : layers_) n += layer.size();
  return n;
}

bool LayeredNetwork::has_edge(std::string_view from, std::string_view to) const {
  const auto it = children_.find(from);
  return it != children_.end() && it->second.contains(to);
}

const NodeSet& LayeredNetwork::children(std::string_view node) const {
  const auto it = children_.find(node);
  if (it == children_.end()) throw UnknownNode(std::string(node));
  return it->second;
}

const NodeSet& LayeredNetwork::predecessors(std::string_view node) const {
  const auto it = parents_.find(node);
  if (it == parents_.end()) throw UnknownNode(std::string(node));
  return it->second;
}

std::vector<Violation> validate(const LayeredNetwork& net) {
  std::vector<Violation> out;
  const auto& layers = net.layers();

  std::map<NodeId, std::size_t, NodeOrder> seen;
  for (std::size_t l = 0; l < layers.size(); ++l) {
    if (layers[l].empty()) out.push_back({"empty layer", "V_" + std::to_string(l + 1)});
    for (const NodeId& n : layers[l]) {
      if (n.empty()) out.push_back({"empty node name", "V_" + std::to_string(l + 1)});
      if (!seen.emplace(n, l + 1).second) out.push_back({"duplicate node name", n});
    }
  }

  const auto& s = net.sources();
  const auto& d = net.destinations();
  const NodeSet terminals{s[0], s[1], d[0], d[1]};
  if (terminals.size() != 4) {
    out.push_back({"s1, s2, d1, d2 must be distinct",
                   s[0] + "," + s[1] + "," + d[0] + "," + d[1]});
  }

  if (layers.size() < 2) {
    out.push_back({"network needs at least two layers", std::to_string(layers.size())});
  } else {
    const NodeSet first(layers.front().begin(), layers.front().end());
    if (first != NodeSet{s[0], s[1]} || layers.front().size() != 2) {
      out.push_back({"V_1 must equal {s1,s2}", s[0] + "," + s[1]});
    }
    const NodeSet last(layers.back().begin(), layers.back().end());
    if (last != NodeSet{d[0], d[1]} || layers.back().size() != 2) {
      out.push_back({"V_r must equal {d1,d2}", d[0] + "," + d[1]});
    }
  }

  const Edge* previous = nullptr;
  for (const Edge& e : net.edges()) {
    if (previous != nullptr && *previous == e) out.push_back({"duplicate edge", edge_text(e)});
    previous = &e;
    if (e.from == e.to) {
      out.push_back({"self-loop", edge_text(e)});
      continue;
    }
    const auto from = seen.find(e.from);
    const auto to = seen.find(e.to);
    if (from == seen.end() || to == seen.end()) {
      out.push_back({"edge references unknown node", edge_text(e)});
      continue;
    }
    if (to->second != from->second + 1) {
      out.push_back({"edge not between adjacent layers", edge_text(e)});
    }
  }
  return out;
}

NodeSet parents(const LayeredNetwork& net, std::string_view v) {
  const auto layer = net.layer_of(v);
  if (!layer) throw UnknownNode(std::string(v));
  if (*layer == 1) throw LayerMismatch("node " + std::string(v) + " is in layer 1 and has no parents");
  return net.predecessors(v);
}

LayeredNetwork flip(const LayeredNetwork& net) {
  const auto& s = net.sources();
  const auto& d = net.destinations();
  auto swap_name = [&](const NodeId& n) -> NodeId {
    if (n == s[0]) return s[1];
    if (n == s[1]) return s[0];
    if (n == d[0]) return d[1];
    if (n == d[1]) return d[0];
    return n;
  };
  std::vector<std::vector<NodeId>> layers;
  for (const auto& layer : net.layers()) {
    auto& out = layers.emplace_back();
    for (const NodeId& n : layer) out.push_back(swap_name(n));
  }
  std::vector<Edge> edges;
  for (const Edge& e : net.edges()) edges.push_back({swap_name(e.from), swap_name(e.to)});
  return LayeredNetwork(std::move(layers), std::move(edges), s, d);
}

LayeredNetwork concatenate(const LayeredNetwork& first, const LayeredNetwork& second) {
  const auto& fl = first.layers();
  const auto& sl = second.layers();
  if (fl.size() < 2 || sl.size() < 2) {
    throw IncompatibleBoundary("both networks need at least two layers");
  }
  const auto& fd = first.destinations();
  const auto& ss = second.sources();
  if (fl.back().size() != 2 || NodeSet(fl.back().begin(), fl.back().end()) != NodeSet{fd[0], fd[1]}) {
    throw IncompatibleBoundary("last layer of first network is not exactly {d1, d2}: " +
                               std::to_string(fl.back().size()) + " boundary node(s)");
  }
  if (sl.front().size() != 2 || NodeSet(sl.front().begin(), sl.front().end()) != NodeSet{ss[0], ss[1]}) {
    throw IncompatibleBoundary("first layer of second network is not exactly {s1, s2}: " +
                               std::to_string(sl.front().size()) + " boundary node(s)");
  }

  std::map<NodeId, NodeId> rename_first;
  std::map<NodeId, NodeId> rename_second;
  std::vector<std::vector<NodeId>> layers;
  std::size_t next = 1;
  auto fresh = [&next]() { return "v" + std::to_string(next++); };

  layers.push_back(fl.front());
  for (const NodeId& n : fl.front()) rename_first[n] = n;
  for (std::size_t l = 1; l + 1 < fl.size(); ++l) {
    auto& out = layers.emplace_back();
    for (const NodeId& n : fl[l]) out.push_back(rename_first[n] = fresh());
  }
  {
    auto& out = layers.emplace_back();
    for (int i = 0; i < 2; ++i) {
      const NodeId name = fresh();
      rename_first[fd[static_cast<std::size_t>(i)]] = name;
      rename_second[ss[static_cast<std::size_t>(i)]] = name;
      out.push_back(name);
    }
  }
  for (std::size_t l = 1; l + 1 < sl.size(); ++l) {
    auto& out = layers.emplace_back();
    for (const NodeId& n : sl[l]) out.push_back(rename_second[n] = fresh());
  }
  layers.push_back(sl.back());
  for (const NodeId& n : sl.back()) rename_second[n] = n;

  std::vector<Edge> edges;
  for (const Edge& e : first.edges()) edges.push_back({rename_first.at(e.from), rename_first.at(e.to)});
  for (const Edge& e : second.edges()) edges.push_back({rename_second.at(e.from), rename_second.at(e.to)});
  return LayeredNetwork(std::move(layers), std::move(edges), first.sources(), second.destinations());
}

}  // namespace dofb
