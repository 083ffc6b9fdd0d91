#include "dofb/generic_rank.hpp"

#include <functional>
#include <random>
#include <stdexcept>

namespace dofb {

SupportPattern::SupportPattern(std::vector<NodeId> rows, std::vector<NodeId> cols)
    : rows_(std::move(rows)), cols_(std::move(cols)), cells_(rows_.size() * cols_.size(), 0) {}

SupportPattern SupportPattern::select_rows(const std::vector<std::size_t>& row_indices) const {
  std::vector<NodeId> rows;
  for (std::size_t r : row_indices) rows.push_back(rows_.at(r));
  SupportPattern out(std::move(rows), cols_);
  for (std::size_t i = 0; i < row_indices.size(); ++i) {
    for (std::size_t c = 0; c < cols_.size(); ++c) out.set(i, c, at(row_indices[i], c));
  }
  return out;
}

SupportPattern SupportPattern::from_table(const std::vector<std::vector<int>>& table) {
  const std::size_t ncols = table.empty() ? 0 : table.front().size();
  std::vector<NodeId> rows;
  std::vector<NodeId> cols;
  for (std::size_t r = 0; r < table.size(); ++r) rows.push_back("r" + std::to_string(r));
  for (std::size_t c = 0; c < ncols; ++c) cols.push_back("c" + std::to_string(c));
  SupportPattern out(std::move(rows), std::move(cols));
  for (std::size_t r = 0; r < table.size(); ++r) {
    if (table[r].size() != ncols) throw std::invalid_argument("ragged pattern table");
    for (std::size_t c = 0; c < ncols; ++c) out.set(r, c, table[r][c] != 0);
  }
  return out;
}

std::size_t GainKeyHash::operator()(const GainKey& key) const noexcept {
  const std::size_t h1 = std::hash<std::string>{}(key.from);
  const std::size_t h2 = std::hash<std::string>{}(key.to);
  const std::size_t h3 = std::hash<int>{}(key.slot);
  return h1 ^ (h2 * 0x9e3779b97f4a7c15ULL) ^ (h3 * 0xc2b2ae3d27d4eb4fULL);
}

void GainAssignment::set(const GainKey& key, FieldElement value) {
  if (value == 0) throw std::invalid_argument("channel gains must be nonzero");
  gains_[key] = value;
}

std::optional<FieldElement> GainAssignment::find(const GainKey& key) const {
  const auto it = gains_.find(key);
  if (it == gains_.end()) return std::nullopt;
  return it->second;
}

FieldElement GainAssignment::at(const GainKey& key) const {
  const auto it = gains_.find(key);
  if (it == gains_.end()) {
    throw MissingGain("no gain for edge " + key.from + "->" + key.to + " at slot " +
                      std::to_string(key.slot));
  }
  return it->second;
}

GainAssignment GainAssignment::draw_for_pattern(const SupportPattern& pattern, const PrimeField& field,
                                                std::uint64_t seed, int slot) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<FieldElement> dist(1, field.modulus() - 1);
  GainAssignment out;
  for (std::size_t r = 0; r < pattern.row_count(); ++r) {
    for (std::size_t c = 0; c < pattern.col_count(); ++c) {
      if (pattern.at(r, c)) out.set({pattern.cols()[c], pattern.rows()[r], slot}, dist(rng));
    }
  }
  return out;
}

GainAssignment GainAssignment::draw_for_network(const LayeredNetwork& net,
                                                const std::vector<int>& slots_per_hop,
                                                const PrimeField& field, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<FieldElement> dist(1, field.modulus() - 1);
  GainAssignment out;
  for (const Edge& e : net.edges()) {
    const auto layer = net.layer_of(e.from);
    if (!layer || *layer > slots_per_hop.size()) continue;
    const int slots = slots_per_hop[*layer - 1];
    for (int t = 1; t <= slots; ++t) out.set({e.from, e.to, t}, dist(rng));
  }
  return out;
}

SupportPattern transfer_pattern(const LayeredNetwork& net, const NodeSet& m, std::size_t layer) {
  if (layer < 1 || layer + 1 > net.layer_count()) {
    throw LayerMismatch("transfer pattern layer " + std::to_string(layer) + " outside 1.." +
                        std::to_string(net.layer_count() - 1));
  }
  for (const NodeId& n : m) {
    if (net.layer_of(n) != layer) {
      throw LayerMismatch("node " + n + " is not in layer " + std::to_string(layer));
    }
  }
  const auto& next = net.layer(layer + 1);
  SupportPattern out(next, std::vector<NodeId>(m.begin(), m.end()));
  std::size_t c = 0;
  for (const NodeId& w : m) {
    for (std::size_t r = 0; r < next.size(); ++r) out.set(r, c, net.has_edge(w, next[r]));
    ++c;
  }
  return out;
}

namespace {

bool augment(const SupportPattern& pattern, std::size_t row, std::vector<bool>& visited,
             std::vector<std::ptrdiff_t>& col_match) {
  for (std::size_t c = 0; c < pattern.col_count(); ++c) {
    if (!pattern.at(row, c) || visited[c]) continue;
    visited[c] = true;
    if (col_match[c] < 0 || augment(pattern, static_cast<std::size_t>(col_match[c]), visited, col_match)) {
      col_match[c] = static_cast<std::ptrdiff_t>(row);
      return true;
    }
  }
  return false;
}

}  // namespace

std::size_t structural_rank(const SupportPattern& pattern) {
  std::vector<std::ptrdiff_t> col_match(pattern.col_count(), -1);
  std::size_t matched = 0;
  for (std::size_t r = 0; r < pattern.row_count(); ++r) {
    std::vector<bool> visited(pattern.col_count(), false);
    if (augment(pattern, r, visited, col_match)) ++matched;
  }
  return matched;
}

std::size_t field_rank(const SupportPattern& pattern, const GainAssignment& gains,
                       const PrimeField& field, int slot) {
  std::vector<Row> rows;
  rows.reserve(pattern.row_count());
  for (std::size_t r = 0; r < pattern.row_count(); ++r) {
    Row row(pattern.col_count(), 0);
    for (std::size_t c = 0; c < pattern.col_count(); ++c) {
      if (pattern.at(r, c)) row[c] = gains.at({pattern.cols()[c], pattern.rows()[r], slot});
    }
    rows.push_back(std::move(row));
  }
  return matrix_rank(field, rows, pattern.col_count());
}

GenericRankReport generic_rank(const SupportPattern& pattern, int trials, std::uint64_t seed,
                               const PrimeField& field) {
  if (trials < 1) throw InvalidParams("generic_rank needs at least one trial");
  GenericRankReport report;
  report.rank = structural_rank(pattern);
  for (int t = 0; t < trials; ++t) {
    const auto gains = GainAssignment::draw_for_pattern(pattern, field, mix_seed(seed, static_cast<std::uint64_t>(t)));
    const std::size_t r = field_rank(pattern, gains, field);
    if (r > report.rank) {
      throw InternalInconsistency("field rank " + std::to_string(r) + " exceeds structural rank " +
                                  std::to_string(report.rank));
    }
    report.field_ranks.push_back(r);
    report.max_field_rank = std::max(report.max_field_rank, r);
  }
  report.agreement = report.max_field_rank == report.rank;
  return report;
}

}  // namespace dofb
