#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dofb/field.hpp"
#include "dofb/generic_rank.hpp"
#include "dofb/network.hpp"
#include "dofb/rational.hpp"

namespace dofb {

inline constexpr std::size_t kDefaultSubsetCap = 16;

/// Witness that `node` (in layer `layer`) is a rho-bottleneck node for
/// destination `dest`: node cuts {s1, s2} from d_dest, parent_set ⊆ I(node)
/// cuts s_other from {d1, d2}, and the transfer pattern from parent_set to
/// the node's layer has generic rank rho.
struct BottleneckCertificate {
  int dest = 1;
  NodeId node;
  std::size_t layer = 0;
  NodeSet parent_set;
  std::size_t rho = 0;
  /// Size of the smallest cut subset of the pruned parent set (the |M| of
  /// the older set-size bound).
  std::size_t prior_m_size = 0;

  friend bool operator==(const BottleneckCertificate&, const BottleneckCertificate&) = default;
};

/// `node` cuts {s1, s2} from d_dest and `witness` ∈ I(node) ∪ {node} cuts
/// s_other from {d1, d2}.
struct OmniscientCertificate {
  int dest = 1;
  NodeId node;
  NodeId witness;

  friend bool operator==(const OmniscientCertificate&, const OmniscientCertificate&) = default;
};

/// Degraded MIMO broadcast channel built from a bottleneck certificate: the
/// layer before the bottleneck becomes one transmitter, receiver 1 replicates
/// the bottleneck node, receiver 2 gets rho antennas whose first one is the
/// bottleneck node again.
struct BcModel {
  std::vector<NodeId> tx_nodes;
  std::size_t tx_antennas = 0;
  NodeId rx1_node;
  std::vector<bool> rx1_row;  // support over tx_nodes
  std::vector<NodeId> rx2_nodes;
  std::vector<std::vector<bool>> rx2_rows;
  std::size_t rho = 0;
};

/// True iff removing `removed` leaves no directed path from `from` to `to`.
/// Throws OverlapError if `removed` meets `from` or `to`, UnknownNode.
bool is_cut(const LayeredNetwork& net, const NodeSet& removed, const NodeSet& from, const NodeSet& to);

/// Nodes of I(v) that lie on some s_other -> {d1, d2} path.
NodeSet prune_parent_set(const LayeredNetwork& net, const NodeId& v, int dest);

std::vector<OmniscientCertificate> find_omniscient(const LayeredNetwork& net);

/// One minimal-rho certificate per cut node for d_dest, sorted by
/// (rho, layer, node). Throws CapExceeded when a pruned parent set is
/// larger than `subset_cap`.
std::vector<BottleneckCertificate> find_bottlenecks(const LayeredNetwork& net, int dest,
                                                    std::size_t subset_cap = kDefaultSubsetCap);

/// Certificates for both destinations (d1 first).
std::vector<BottleneckCertificate> find_all_bottlenecks(const LayeredNetwork& net,
                                                        std::size_t subset_cap = kDefaultSubsetCap);

/// |M_min|·D_i + D_other <= |M_min| for the certificate's node.
HalfPlane prior_bound(const BottleneckCertificate& cert, const LayeredNetwork& net,
                      std::size_t subset_cap = kDefaultSubsetCap);

/// rho·D_i + D_other <= rho.
HalfPlane bottleneck_bound(const BottleneckCertificate& cert);

/// Throws RankSelectionFailure if rho independent rows cannot be selected.
BcModel construct_degraded_bc(const LayeredNetwork& net, const BottleneckCertificate& cert,
                              std::uint64_t seed, const PrimeField& field = PrimeField{});

/// {"dest", "node", "layer", "M", "rho", "prior_M_size"}
std::string to_json(const BottleneckCertificate& cert);

}  // namespace dofb
