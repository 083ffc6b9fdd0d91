#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dofb/error.hpp"

namespace dofb {

using NodeId = std::string;

/// Orders node names so that embedded numbers compare numerically
/// ("v2" < "v10"). Ties on the numeric value fall back to plain string order.
struct NodeOrder {
  bool operator()(std::string_view lhs, std::string_view rhs) const noexcept;
  using is_transparent = void;
};

using NodeSet = std::set<NodeId, NodeOrder>;

struct Edge {
  NodeId from;
  NodeId to;

  friend bool operator==(const Edge&, const Edge&) = default;
};

bool operator<(const Edge& lhs, const Edge& rhs) noexcept;

/// Layered two-unicast network: layers V_1..V_r with edges only between
/// consecutive layers, V_1 = {s1, s2} and V_r = {d1, d2}.
///
/// The constructor canonicalizes (node order within each layer, edge order)
/// but does not validate; use validate() or parse_network() for that.
class LayeredNetwork {
 public:
  LayeredNetwork(std::vector<std::vector<NodeId>> layers, std::vector<Edge> edges,
                 std::array<NodeId, 2> sources, std::array<NodeId, 2> destinations);

  const std::vector<std::vector<NodeId>>& layers() const noexcept { return layers_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::array<NodeId, 2>& sources() const noexcept { return sources_; }
  const std::array<NodeId, 2>& destinations() const noexcept { return destinations_; }

  /// Source s_i / destination d_i for i in {1, 2}.
  const NodeId& source(int i) const { return sources_.at(static_cast<std::size_t>(i - 1)); }
  const NodeId& destination(int i) const { return destinations_.at(static_cast<std::size_t>(i - 1)); }

  std::size_t layer_count() const noexcept { return layers_.size(); }
  /// Nodes of layer `index`, 1-based as in V_1..V_r.
  const std::vector<NodeId>& layer(std::size_t index) const;
  /// 1-based layer of `node`, or nullopt if the node is unknown.
  std::optional<std::size_t> layer_of(std::string_view node) const;
  bool contains(std::string_view node) const { return layer_of(node).has_value(); }
  std::size_t node_count() const noexcept;

  bool has_edge(std::string_view from, std::string_view to) const;
  /// Direct successors, canonical order. Throws UnknownNode.
  const NodeSet& children(std::string_view node) const;
  /// Direct predecessors without the layer-1 check of parents().
  const NodeSet& predecessors(std::string_view node) const;

  friend bool operator==(const LayeredNetwork& lhs, const LayeredNetwork& rhs) {
    return lhs.layers_ == rhs.layers_ && lhs.edges_ == rhs.edges_ && lhs.sources_ == rhs.sources_ &&
           lhs.destinations_ == rhs.destinations_;
  }

 private:
  std::vector<std::vector<NodeId>> layers_;
  std::vector<Edge> edges_;
  std::array<NodeId, 2> sources_;
  std::array<NodeId, 2> destinations_;
  std::map<NodeId, std::size_t, NodeOrder> layer_index_;
  std::map<NodeId, NodeSet, NodeOrder> children_;
  std::map<NodeId, NodeSet, NodeOrder> parents_;
};

/// Every violated structural invariant; empty when the network is valid.
std::vector<Violation> validate(const LayeredNetwork& net);

/// Parent set I(v). Throws UnknownNode, or LayerMismatch for a layer-1 node.
NodeSet parents(const LayeredNetwork& net, std::string_view v);

/// Swaps the roles of the two unicast sessions: s1<->s2 and d1<->d2 names.
LayeredNetwork flip(const LayeredNetwork& net);

/// Chains two networks by identifying first's destinations (d1, d2) with
/// second's sources (s1, s2). The identified boundary nodes become relays.
/// Relays are renumbered v1, v2, ... layer by layer; the result keeps first's
/// source names and second's destination names, and has r1 + r2 - 1 layers.
LayeredNetwork concatenate(const LayeredNetwork& first, const LayeredNetwork& second);

/// Canonical JSON document (sorted keys, canonical node and edge order,
/// LF line endings, trailing newline).
std::string serialize_network(const LayeredNetwork& net);

/// Parses and validates a network document. Throws ParseError for malformed
/// input or schema mismatches, ValidationError for invariant violations.
LayeredNetwork parse_network(std::string_view text);

}  // namespace dofb
