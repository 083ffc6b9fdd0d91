#include "dofb/verify/properties.hpp"

#include <algorithm>

#include "dofb/bottleneck.hpp"
#include "dofb/families.hpp"
#include "dofb/region.hpp"
#include "dofb/verify/oracles.hpp"

namespace dofb::prop {

namespace {

template <class T>
const T& pick(Rng& rng, const std::vector<T>& items) {
  return items[std::uniform_int_distribution<std::size_t>(0, items.size() - 1)(rng)];
}

std::vector<NodeId> interior_nodes(const LayeredNetwork& net) {
  std::vector<NodeId> out;
  for (std::size_t l = 2; l < net.layer_count(); ++l) {
    const auto& layer = net.layer(l);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::string describe(const NodeSet& s) {
  std::string out = "{";
  for (const NodeId& n : s) out += (out.size() > 1 ? "," : "") + n;
  return out + "}";
}

bool expected_to_decode(const SchemeBundle& b, int dest) {
  return !(b.name == "2d1d2-no-reconstruction" && dest == 1);
}

std::optional<std::string> reconstruction_soundness(Rng& rng) {
  const SchemeBundle& b = pick(rng, library_schemes());
  const PrimeField field;
  const auto gains = GainAssignment::draw_for_network(b.network, b.program.slots_per_hop(), field, rng());
  const RunResult run = run_scheme(b.network, b.program, b.space, gains, field);
  for (const ReconstructionEvent& e : run.reconstructions) {
    RowBasis span(field, b.space.dim());
    for (const KnowledgeRow& r : run.knowledge.at(e.requester).rows) {
      if (r.at < e.at) span.add(r.row);
    }
    if (!e.in_requester_span || !span.contains(e.row)) {
      return b.name + ": " + e.requester + " reconstructed a row outside its span";
    }
    if (!(e.target_slot < e.at)) return b.name + ": reconstruction is not causal";
  }
  return std::nullopt;
}

std::optional<std::string> decode_determinism(Rng& rng) {
  const SchemeBundle& b = pick(rng, library_schemes());
  const SimReport r = simulate(b.network, b.program, b.space, 8, rng());
  const auto uniform = [](const std::vector<bool>& v) {
    return std::all_of(v.begin(), v.end(), [&](bool x) { return x == v.front(); });
  };
  if (!uniform(r.decoded_d1) || !uniform(r.decoded_d2)) return b.name + ": verdicts differ across trials";
  if (r.decoded_d1.front() != expected_to_decode(b, 1) || r.decoded_d2.front() != expected_to_decode(b, 2)) {
    return b.name + ": unexpected decode verdict";
  }
  return std::nullopt;
}

std::optional<std::string> inner_inside_outer(Rng& rng) {
  const SchemeBundle& b = pick(rng, library_schemes());
  const SimReport r = simulate(b.network, b.program, b.space, 2, rng());
  const DofRegion region = build_region(find_all_bottlenecks(b.network));
  const auto [d1, d2] = achieved_dof(b.program, b.space);
  // A destination that fails to decode contributes zero DoF.
  const DofPoint point{r.decode_d1() == r.trials ? d1 : Rational(0), r.decode_d2() == r.trials ? d2 : Rational(0)};
  if (!region.contains(point)) return b.name + ": achieved " + to_string(point) + " outside the outer region";
  if (expected_to_decode(b, 1) && !region.on_boundary(point)) {
    return b.name + ": achieved " + to_string(point) + " is not on the region boundary";
  }
  return std::nullopt;
}

std::optional<std::string> serialize_round_trip(Rng& rng) {
  const LayeredNetwork net = random_network(rng);
  const std::string text = serialize_network(net);
  const LayeredNetwork back = parse_network(text);
  if (!(back == net)) return "parse(serialize(net)) differs:\n" + text;
  if (serialize_network(back) != text) return "serialization is not stable:\n" + text;
  return std::nullopt;
}

std::optional<std::string> flip_is_involution(Rng& rng) {
  const LayeredNetwork net = random_network(rng);
  if (!(flip(flip(net)) == net)) return "flip(flip(net)) differs:\n" + serialize_network(net);
  return std::nullopt;
}

std::optional<std::string> structural_rank_matches_oracle(Rng& rng) {
  const SupportPattern p = random_pattern(rng, 6, 6);
  const std::size_t fast = structural_rank(p);
  const std::size_t slow = oracle::brute_force_rank(p);
  if (fast != slow) {
    return "structural rank " + std::to_string(fast) + " vs oracle " + std::to_string(slow);
  }
  return std::nullopt;
}

std::optional<std::string> field_rank_bounded(Rng& rng) {
  const SupportPattern p = random_pattern(rng, 8, 8);
  const PrimeField field;
  const auto gains = GainAssignment::draw_for_pattern(p, field, rng());
  const std::size_t fr = field_rank(p, gains, field);
  if (fr > structural_rank(p)) return "field rank exceeds structural rank";
  std::vector<Row> rows(p.row_count(), Row(p.col_count(), 0));
  for (std::size_t r = 0; r < p.row_count(); ++r) {
    for (std::size_t c = 0; c < p.col_count(); ++c) {
      if (p.at(r, c)) rows[r][c] = gains.at({p.cols()[c], p.rows()[r], 0});
    }
  }
  if (oracle::gaussian_rank(rows, field.modulus()) != fr) return "field rank disagrees with plain elimination";
  return std::nullopt;
}

std::optional<std::string> cut_matches_paths(Rng& rng) {
  const LayeredNetwork net = random_network(rng);
  NodeSet removed;
  for (const NodeId& n : interior_nodes(net)) {
    if (rng() % 3 == 0) removed.insert(n);
  }
  const NodeSet from{net.source(1), net.source(2)};
  const NodeSet to{net.destination(1 + static_cast<int>(rng() % 2))};
  if (is_cut(net, removed, from, to) == oracle::path_survives(net, removed, from, to)) {
    return "is_cut disagrees with path enumeration for " + describe(removed);
  }
  return std::nullopt;
}

std::optional<std::string> pruning_matches_paths(Rng& rng) {
  const LayeredNetwork net = random_network(rng);
  const NodeId v = pick(rng, interior_nodes(net));
  const int dest = 1 + static_cast<int>(rng() % 2);
  if (prune_parent_set(net, v, dest) != oracle::pruned_parents_by_paths(net, v, dest)) {
    return "pruned parent set of " + v + " disagrees with path enumeration";
  }
  return std::nullopt;
}

std::optional<std::string> region_vertices_feasible(Rng& rng) {
  std::vector<HalfPlane> bounds;
  const int count = static_cast<int>(rng() % 4);
  for (int i = 0; i < count; ++i) {
    bounds.emplace_back(Rational(static_cast<std::int64_t>(rng() % 5)), Rational(1 + static_cast<std::int64_t>(rng() % 5)),
                        Rational(1 + static_cast<std::int64_t>(rng() % 6)));
    if (rng() % 2) std::swap(bounds.back().a, bounds.back().b);
  }
  const DofRegion region(bounds);
  Rational best = 0;
  for (const DofPoint& p : region.vertices()) {
    if (p.d1 < 0 || p.d2 < 0) return "vertex " + to_string(p) + " has a negative coordinate";
    for (const HalfPlane& h : region.constraints()) {
      if (!h.contains(p.d1, p.d2)) return "vertex " + to_string(p) + " violates " + to_string(h);
    }
    best = std::max(best, p.d1 + p.d2);
  }
  if (best != sum_dof(region)) return "sum DoF differs from the best vertex";
  return std::nullopt;
}

}  // namespace

PropertyOutcome check_property(std::string name, int cases, std::uint64_t seed, const Check& check) {
  PropertyOutcome out;
  out.name = std::move(name);
  for (int i = 0; i < cases; ++i) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(i)));
    std::optional<std::string> failure;
    try {
      failure = check(rng);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    ++out.cases;
    if (failure) {
      if (out.failures++ == 0) out.counterexample = "case " + std::to_string(i) + ": " + *failure;
    }
  }
  return out;
}

SupportPattern random_pattern(Rng& rng, std::size_t max_rows, std::size_t max_cols) {
  const std::size_t rows = 1 + rng() % max_rows;
  const std::size_t cols = 1 + rng() % max_cols;
  const double density = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
  std::bernoulli_distribution coin(density);
  std::vector<std::vector<int>> table(rows, std::vector<int>(cols, 0));
  for (auto& row : table) {
    for (int& cell : row) cell = coin(rng) ? 1 : 0;
  }
  return SupportPattern::from_table(table);
}

LayeredNetwork random_network(Rng& rng) {
  RandomSpec spec;
  spec.relay_layer_sizes.assign(1 + rng() % 3, 0);
  for (std::size_t& size : spec.relay_layer_sizes) size = 1 + rng() % 4;
  spec.density = std::uniform_real_distribution<double>(0.35, 0.9)(rng);
  spec.seed = rng();
  return random_layered(spec);
}

const std::vector<SchemeBundle>& library_schemes() {
  static const std::vector<SchemeBundle> bundles = [] {
    std::vector<SchemeBundle> out{scheme_2d1d2(), scheme_2d1d2_without_reconstruction(), scheme_example1(),
                                  scheme_example2()};
    for (int m = 2; m <= 8; ++m) out.push_back(scheme_m_d1d2(m));
    for (int m = 2; m <= 6; ++m) out.push_back(scheme_two_bounds(m));
    return out;
  }();
  return bundles;
}

std::vector<PropertyOutcome> run_property_suite(std::uint64_t seed, int scale) {
  struct Entry {
    const char* name;
    int cases;
    std::optional<std::string> (*check)(Rng&);
  };
  const Entry entries[] = {
      {"reconstruction soundness", 200, reconstruction_soundness},
      {"decode determinism", 100, decode_determinism},
      {"inner point inside outer region", 100, inner_inside_outer},
      {"serialize round trip", 100, serialize_round_trip},
      {"flip involution", 100, flip_is_involution},
      {"structural rank equals brute force", 300, structural_rank_matches_oracle},
      {"field rank bounded by structural rank", 200, field_rank_bounded},
      {"cut test equals path enumeration", 100, cut_matches_paths},
      {"parent pruning equals path enumeration", 100, pruning_matches_paths},
      {"region vertices feasible", 100, region_vertices_feasible},
  };
  std::vector<PropertyOutcome> out;
  std::uint64_t index = 0;
  for (const Entry& e : entries) {
    out.push_back(check_property(e.name, e.cases * scale, mix_seed(seed, 1000 + index++), e.check));
  }
  return out;
}

}  // namespace dofb::prop
