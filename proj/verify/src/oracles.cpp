#include "dofb/verify/oracles.hpp"

#include <algorithm>
#include <numeric>

namespace dofb::oracle {

namespace {

bool has_full_permutation(const SupportPattern& pattern, const std::vector<std::size_t>& rows,
                          std::vector<std::size_t> cols) {
  std::sort(cols.begin(), cols.end());
  do {
    bool all = true;
    for (std::size_t i = 0; i < rows.size() && all; ++i) all = pattern.at(rows[i], cols[i]);
    if (all) return true;
  } while (std::next_permutation(cols.begin(), cols.end()));
  return false;
}

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (pick[i]) s.push_back(i);
    }
    out.push_back(std::move(s));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

void walk(const LayeredNetwork& net, const NodeId& at, const NodeSet& targets, std::vector<NodeId>& path,
          std::vector<std::vector<NodeId>>& out) {
  path.push_back(at);
  if (targets.count(at)) out.push_back(path);
  for (const NodeId& c : net.children(at)) walk(net, c, targets, path, out);
  path.pop_back();
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<WideProduct>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, b = mulmod(b, b, m)) {
    if (e & 1) r = mulmod(r, b, m);
  }
  return r;
}

}  // namespace

std::size_t brute_force_rank(const SupportPattern& pattern) {
  const std::size_t r = pattern.row_count();
  const std::size_t c = pattern.col_count();
  for (std::size_t k = std::min(r, c); k > 0; --k) {
    const auto row_sets = subsets_of_size(r, k);
    const auto col_sets = subsets_of_size(c, k);
    for (const auto& rows : row_sets) {
      for (const auto& cols : col_sets) {
        if (has_full_permutation(pattern, rows, cols)) return k;
      }
    }
  }
  return 0;
}

NodeSet pruned_parents_by_paths(const LayeredNetwork& net, const NodeId& v, int dest) {
  const NodeSet terminals{net.destination(1), net.destination(2)};
  std::vector<std::vector<NodeId>> paths;
  std::vector<NodeId> scratch;
  walk(net, net.source(3 - dest), terminals, scratch, paths);
  NodeSet on_path;
  for (const auto& p : paths) on_path.insert(p.begin(), p.end());
  NodeSet out;
  on_path.erase(net.source(3 - dest));  // a cut never contains its own endpoint
  for (const NodeId& u : net.predecessors(v)) {
    if (on_path.count(u)) out.insert(u);
  }
  return out;
}

bool path_survives(const LayeredNetwork& net, const NodeSet& removed, const NodeSet& from, const NodeSet& to) {
  std::vector<std::vector<NodeId>> paths;
  std::vector<NodeId> scratch;
  for (const NodeId& f : from) walk(net, f, to, scratch, paths);
  return std::any_of(paths.begin(), paths.end(), [&](const std::vector<NodeId>& p) {
    return std::none_of(p.begin(), p.end(), [&](const NodeId& n) { return removed.count(n) > 0; });
  });
}

std::size_t gaussian_rank(std::vector<Row> rows, std::uint64_t modulus) {
  if (rows.empty()) return 0;
  const std::size_t width = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] % modulus == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const std::uint64_t inv = powmod(rows[rank][col] % modulus, modulus - 2, modulus);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      const std::uint64_t f = mulmod(rows[i][col] % modulus, inv, modulus);
      if (f == 0) continue;
      for (std::size_t j = col; j < width; ++j) {
        rows[i][j] = (rows[i][j] % modulus + modulus - mulmod(f, rows[rank][j] % modulus, modulus)) % modulus;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace dofb::oracle
