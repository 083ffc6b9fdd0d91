#pragma once

#include <cstdint>
#include <vector>

#include "dofb/field.hpp"
#include "dofb/generic_rank.hpp"
#include "dofb/network.hpp"

// Slow reference implementations used to check the library's algorithms.
namespace dofb::oracle {

/// Largest k such that some k x k submatrix has a permutation whose entries
/// are all set, found by exhaustive search over row/column subsets.
std::size_t brute_force_rank(const SupportPattern& pattern);

/// Nodes of v's parents that appear on some enumerated simple path from
/// s_other to d1 or d2.
NodeSet pruned_parents_by_paths(const LayeredNetwork& net, const NodeId& v, int dest);

/// Whether some path from a node of `from` to a node of `to` avoids `removed`,
/// found by enumerating every path.
bool path_survives(const LayeredNetwork& net, const NodeSet& removed, const NodeSet& from, const NodeSet& to);

/// Rank by textbook Gaussian elimination modulo `modulus`.
std::size_t gaussian_rank(std::vector<Row> rows, std::uint64_t modulus);

}  // namespace dofb::oracle
