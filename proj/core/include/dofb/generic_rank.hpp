#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dofb/field.hpp"
#include "dofb/network.hpp"

namespace dofb {

/// Zero pattern of the transfer matrix from a node set M (columns) to the
/// next layer (rows): entry (u, w) is set iff the edge w -> u exists.
class SupportPattern {
 public:
  SupportPattern() = default;
  SupportPattern(std::vector<NodeId> rows, std::vector<NodeId> cols);

  std::size_t row_count() const noexcept { return rows_.size(); }
  std::size_t col_count() const noexcept { return cols_.size(); }
  const std::vector<NodeId>& rows() const noexcept { return rows_; }
  const std::vector<NodeId>& cols() const noexcept { return cols_; }

  bool at(std::size_t r, std::size_t c) const { return cells_.at(r * cols_.size() + c) != 0; }
  void set(std::size_t r, std::size_t c, bool value = true) { cells_.at(r * cols_.size() + c) = value ? 1 : 0; }

  /// Pattern restricted to the given row indices (in that order).
  SupportPattern select_rows(const std::vector<std::size_t>& row_indices) const;

  /// Builds an anonymous pattern from a boolean table (rows r0.., cols c0..).
  static SupportPattern from_table(const std::vector<std::vector<int>>& table);

  friend bool operator==(const SupportPattern&, const SupportPattern&) = default;

 private:
  std::vector<NodeId> rows_;
  std::vector<NodeId> cols_;
  std::vector<std::uint8_t> cells_;
};

/// Channel gain for edge (from -> to) at a slot. Slots are counted within
/// the hop the edge belongs to, so (edge, slot) is globally unique.
struct GainKey {
  NodeId from;
  NodeId to;
  int slot = 0;

  friend bool operator==(const GainKey&, const GainKey&) = default;
};

struct GainKeyHash {
  std::size_t operator()(const GainKey& key) const noexcept;
};

class GainAssignment {
 public:
  /// Stores a nonzero gain; throws std::invalid_argument for zero.
  void set(const GainKey& key, FieldElement value);
  std::optional<FieldElement> find(const GainKey& key) const;
  /// Throws MissingGain.
  FieldElement at(const GainKey& key) const;
  std::size_t size() const noexcept { return gains_.size(); }

  /// Independent uniform nonzero gains for every set entry of `pattern`
  /// at `slot`, derived deterministically from `seed`.
  static GainAssignment draw_for_pattern(const SupportPattern& pattern, const PrimeField& field,
                                         std::uint64_t seed, int slot = 0);
  /// Gains for every edge of `net` and slots 1..slots_per_hop[h-1] of its hop h.
  static GainAssignment draw_for_network(const LayeredNetwork& net,
                                         const std::vector<int>& slots_per_hop,
                                         const PrimeField& field, std::uint64_t seed);

 private:
  std::unordered_map<GainKey, FieldElement, GainKeyHash> gains_;
};

/// Transfer pattern between M ⊆ V_layer and V_{layer+1} (layer is 1-based).
/// Throws LayerMismatch.
SupportPattern transfer_pattern(const LayeredNetwork& net, const NodeSet& m, std::size_t layer);

/// Maximum bipartite matching size on the set entries (generic rank).
std::size_t structural_rank(const SupportPattern& pattern);

/// Exact rank of the pattern with set entries replaced by their gains.
/// Throws MissingGain.
std::size_t field_rank(const SupportPattern& pattern, const GainAssignment& gains,
                       const PrimeField& field, int slot = 0);

struct GenericRankReport {
  std::size_t rank = 0;             // structural rank, the returned value
  std::size_t max_field_rank = 0;   // best over the randomized trials
  std::vector<std::size_t> field_ranks;
  bool agreement = false;           // max_field_rank == rank
};

/// Structural rank cross-validated by `trials` seeded field evaluations.
/// Throws InternalInconsistency if a field rank exceeds the structural rank.
GenericRankReport generic_rank(const SupportPattern& pattern, int trials, std::uint64_t seed,
                               const PrimeField& field = PrimeField{});

}  // namespace dofb
