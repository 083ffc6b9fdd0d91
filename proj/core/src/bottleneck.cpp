#include "dofb/bottleneck.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "json.hpp"

namespace dofb {

namespace {

void require_known(const LayeredNetwork& net, const NodeSet& nodes) {
  for (const NodeId& n : nodes) {
    if (!net.contains(n)) throw UnknownNode(n);
  }
}

// Nodes reachable from `start` along edges, skipping `removed`.
NodeSet forward_closure(const LayeredNetwork& net, const NodeSet& start, const NodeSet& removed) {
  NodeSet seen;
  std::vector<NodeId> stack;
  for (const NodeId& n : start) {
    if (!removed.contains(n) && seen.insert(n).second) stack.push_back(n);
  }
  while (!stack.empty()) {
    const NodeId n = stack.back();
    stack.pop_back();
    for (const NodeId& c : net.children(n)) {
      if (!removed.contains(c) && seen.insert(c).second) stack.push_back(c);
    }
  }
  return seen;
}

NodeSet backward_closure(const LayeredNetwork& net, const NodeSet& start) {
  NodeSet seen(start);
  std::vector<NodeId> stack(start.begin(), start.end());
  while (!stack.empty()) {
    const NodeId n = stack.back();
    stack.pop_back();
    for (const NodeId& p : net.predecessors(n)) {
      if (seen.insert(p).second) stack.push_back(p);
    }
  }
  return seen;
}

NodeSet both_sources(const LayeredNetwork& net) { return {net.source(1), net.source(2)}; }
NodeSet both_destinations(const LayeredNetwork& net) { return {net.destination(1), net.destination(2)}; }

void check_dest(int dest) {
  if (dest != 1 && dest != 2) throw InvalidParams("destination index must be 1 or 2");
}

bool lexicographically_less(const NodeSet& lhs, const NodeSet& rhs) {
  return std::lexicographical_compare(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), NodeOrder{});
}

struct CutSearch {
  bool found = false;
  NodeSet best_set;
  std::size_t best_rho = 0;
  std::size_t min_size = 0;
};

// Enumerates inclusion-minimal subsets of `pool` that cut s_other from both
// destinations. Rank is monotone under adding columns, so non-minimal cuts
// can never lower rho and are skipped.
CutSearch search_cuts(const LayeredNetwork& net, const NodeId& v, int dest, const NodeSet& pool,
                      std::size_t subset_cap) {
  if (pool.size() > subset_cap) throw CapExceeded(v, pool.size(), subset_cap);
  const std::vector<NodeId> items(pool.begin(), pool.end());
  const std::size_t n = items.size();
  const std::size_t layer = *net.layer_of(v) - 1;
  const NodeSet other_source{net.source(3 - dest)};
  const NodeSet destinations = both_destinations(net);

  std::vector<std::uint32_t> masks(std::size_t{1} << n);
  std::iota(masks.begin(), masks.end(), 0U);
  std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) < std::popcount(b);
  });

  CutSearch out;
  std::vector<std::uint32_t> minimal_cuts;
  for (std::uint32_t mask : masks) {
    const bool dominated = std::any_of(minimal_cuts.begin(), minimal_cuts.end(),
                                       [mask](std::uint32_t cut) { return (mask & cut) == cut; });
    if (dominated) continue;
    NodeSet m;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1U << i)) m.insert(items[i]);
    }
    if (!is_cut(net, m, other_source, destinations)) continue;
    minimal_cuts.push_back(mask);
    const std::size_t rho = structural_rank(transfer_pattern(net, m, layer));
    if (!out.found) out.min_size = m.size();
    if (!out.found || rho < out.best_rho || (rho == out.best_rho && lexicographically_less(m, out.best_set))) {
      out.best_rho = rho;
      out.best_set = std::move(m);
    }
    out.found = true;
  }
  return out;
}

bool cuts_destination(const LayeredNetwork& net, const NodeId& v, int dest) {
  return is_cut(net, NodeSet{v}, both_sources(net), NodeSet{net.destination(dest)});
}

std::vector<NodeId> interior_nodes(const LayeredNetwork& net) {
  std::vector<NodeId> out;
  for (std::size_t l = 2; l < net.layer_count(); ++l) {
    for (const NodeId& n : net.layer(l)) out.push_back(n);
  }
  return out;
}

}  // namespace

bool is_cut(const LayeredNetwork& net, const NodeSet& removed, const NodeSet& from, const NodeSet& to) {
  require_known(net, removed);
  require_known(net, from);
  require_known(net, to);
  for (const NodeId& n : removed) {
    if (from.contains(n) || to.contains(n)) throw OverlapError("cut set contains endpoint " + n);
  }
  const NodeSet reached = forward_closure(net, from, removed);
  return std::none_of(to.begin(), to.end(), [&](const NodeId& n) { return reached.contains(n); });
}

NodeSet prune_parent_set(const LayeredNetwork& net, const NodeId& v, int dest) {
  check_dest(dest);
  const NodeSet candidates = parents(net, v);
  const NodeSet from_source = forward_closure(net, NodeSet{net.source(3 - dest)}, {});
  const NodeSet to_destinations = backward_closure(net, both_destinations(net));
  NodeSet out;
  for (const NodeId& u : candidates) {
    // A source can never be part of a cut separating itself.
    if (u == net.source(3 - dest)) continue;
    if (from_source.contains(u) && to_destinations.contains(u)) out.insert(u);
  }
  return out;
}

std::vector<OmniscientCertificate> find_omniscient(const LayeredNetwork& net) {
  std::vector<OmniscientCertificate> out;
  const auto destinations = both_destinations(net);
  for (int dest : {1, 2}) {
    const NodeSet other_source{net.source(3 - dest)};
    for (const NodeId& v : interior_nodes(net)) {
      if (!cuts_destination(net, v, dest)) continue;
      std::vector<NodeId> witnesses(net.predecessors(v).begin(), net.predecessors(v).end());
      witnesses.push_back(v);
      for (const NodeId& u : witnesses) {
        if (net.layer_of(u) == 1) continue;
        if (is_cut(net, NodeSet{u}, other_source, destinations)) out.push_back({dest, v, u});
      }
    }
  }
  return out;
}

std::vector<BottleneckCertificate> find_bottlenecks(const LayeredNetwork& net, int dest,
                                                    std::size_t subset_cap) {
  check_dest(dest);
  if (subset_cap < 1) throw InvalidParams("subset cap must be at least 1");
  std::vector<BottleneckCertificate> out;
  for (const NodeId& v : interior_nodes(net)) {
    if (!cuts_destination(net, v, dest)) continue;
    const NodeSet pool = prune_parent_set(net, v, dest);
    const CutSearch search = search_cuts(net, v, dest, pool, subset_cap);
    if (!search.found || search.best_rho == 0) continue;
    out.push_back({dest, v, *net.layer_of(v), search.best_set, search.best_rho, search.min_size});
  }
  std::sort(out.begin(), out.end(), [](const BottleneckCertificate& a, const BottleneckCertificate& b) {
    if (a.rho != b.rho) return a.rho < b.rho;
    if (a.layer != b.layer) return a.layer < b.layer;
    return NodeOrder{}(a.node, b.node);
  });
  return out;
}

std::vector<BottleneckCertificate> find_all_bottlenecks(const LayeredNetwork& net, std::size_t subset_cap) {
  auto out = find_bottlenecks(net, 1, subset_cap);
  auto second = find_bottlenecks(net, 2, subset_cap);
  out.insert(out.end(), second.begin(), second.end());
  return out;
}

HalfPlane prior_bound(const BottleneckCertificate& cert, const LayeredNetwork& net, std::size_t subset_cap) {
  const NodeSet pool = prune_parent_set(net, cert.node, cert.dest);
  const CutSearch search = search_cuts(net, cert.node, cert.dest, pool, subset_cap);
  if (!search.found) {
    throw InvalidParams("certificate for " + cert.node + " has no cut parent subset");
  }
  return HalfPlane::bottleneck(cert.dest, Rational(static_cast<std::int64_t>(search.min_size)));
}

HalfPlane bottleneck_bound(const BottleneckCertificate& cert) {
  return HalfPlane::bottleneck(cert.dest, Rational(static_cast<std::int64_t>(cert.rho)));
}

BcModel construct_degraded_bc(const LayeredNetwork& net, const BottleneckCertificate& cert,
                              std::uint64_t seed, const PrimeField& field) {
  if (cert.rho < 1) throw RankSelectionFailure("certificate has rho = 0");
  if (cert.layer < 2) throw RankSelectionFailure("bottleneck node cannot sit in layer 1");
  const std::size_t tx_layer = cert.layer - 1;
  const auto& tx_nodes = net.layer(tx_layer);
  const NodeSet all_tx(tx_nodes.begin(), tx_nodes.end());
  const SupportPattern full = transfer_pattern(net, all_tx, tx_layer);
  const SupportPattern restricted = transfer_pattern(net, cert.parent_set, tx_layer);

  const auto& rx_layer = full.rows();
  const auto pos = std::find(rx_layer.begin(), rx_layer.end(), cert.node);
  if (pos == rx_layer.end()) throw RankSelectionFailure("bottleneck node missing from its layer");
  const auto v_index = static_cast<std::size_t>(pos - rx_layer.begin());

  // Transversal matroid on rows: greedy selection reaches the full rank.
  std::vector<std::size_t> selected{v_index};
  std::size_t current = structural_rank(restricted.select_rows(selected));
  for (std::size_t r = 0; r < rx_layer.size() && current < cert.rho; ++r) {
    if (r == v_index) continue;
    auto trial = selected;
    trial.push_back(r);
    const std::size_t rank = structural_rank(restricted.select_rows(trial));
    if (rank > current) {
      selected = std::move(trial);
      current = rank;
    }
  }
  if (current != cert.rho) {
    throw RankSelectionFailure("selected rows reach rank " + std::to_string(current) + ", expected " +
                               std::to_string(cert.rho));
  }
  const auto check = generic_rank(restricted.select_rows(selected), 8, seed, field);
  if (check.max_field_rank != cert.rho) {
    throw RankSelectionFailure("field evaluation of the selected rows reached rank " +
                               std::to_string(check.max_field_rank));
  }

  BcModel bc;
  bc.tx_nodes = tx_nodes;
  bc.tx_antennas = tx_nodes.size();
  bc.rx1_node = cert.node;
  bc.rho = cert.rho;
  auto row_of = [&](std::size_t r) {
    std::vector<bool> row(tx_nodes.size());
    for (std::size_t c = 0; c < tx_nodes.size(); ++c) row[c] = full.at(r, c);
    return row;
  };
  bc.rx1_row = row_of(v_index);
  for (std::size_t r : selected) {
    bc.rx2_nodes.push_back(rx_layer[r]);
    bc.rx2_rows.push_back(row_of(r));
  }
  return bc;
}

std::string to_json(const BottleneckCertificate& cert) {
  nlohmann::ordered_json j;
  j["dest"] = cert.dest;
  j["node"] = cert.node;
  j["layer"] = cert.layer;
  j["M"] = std::vector<NodeId>(cert.parent_set.begin(), cert.parent_set.end());
  j["rho"] = cert.rho;
  j["prior_M_size"] = cert.prior_m_size;
  return j.dump();
}

}  // namespace dofb
