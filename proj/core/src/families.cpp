#include "dofb/families.hpp"

#include <array>
#include <random>
#include <set>

namespace dofb {

namespace {

using Layers = std::vector<std::vector<NodeId>>;

NodeId v(int index) { return "v" + std::to_string(index); }

LayeredNetwork make(Layers layers, std::vector<Edge> edges) {
  return LayeredNetwork(std::move(layers), std::move(edges), {"s1", "s2"}, {"d1", "d2"});
}

void require_m(int m) {
  if (m < 2) {
    throw InvalidParams("m must be at least 2 (m = " + std::to_string(m) +
                        " leaves d2 without a parent)");
  }
}

bool reaches(const LayeredNetwork& net, const NodeId& from, const NodeId& to) {
  std::vector<NodeId> stack{from};
  NodeSet seen{from};
  while (!stack.empty()) {
    const NodeId n = stack.back();
    stack.pop_back();
    if (n == to) return true;
    for (const NodeId& c : net.children(n)) {
      if (seen.insert(c).second) stack.push_back(c);
    }
  }
  return false;
}

}  // namespace

std::string_view family_name(Family family) noexcept {
  switch (family) {
    case Family::Fig2D1D2: return "fig-2d1d2";
    case Family::Fig3D1D2: return "fig-3d1d2";
    case Family::FigFullDof: return "fig-full-dof";
    case Family::MD1D2: return "m-d1d2";
    case Family::TwoBounds: return "two-bounds";
    case Family::SetSizeToRank: return "set-size-to-rank";
    case Family::D1D2OneHalf: return "d1d2-one-half";
    case Family::RandomLayered: return "random";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) noexcept {
  for (Family f : {Family::Fig2D1D2, Family::Fig3D1D2, Family::FigFullDof, Family::MD1D2,
                   Family::TwoBounds, Family::SetSizeToRank, Family::D1D2OneHalf,
                   Family::RandomLayered}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

LayeredNetwork fig2d1d2() {
  return make({{"s1", "s2"}, {"v1", "v2", "v3"}, {"v4", "v5"}, {"d1", "d2"}},
              {{"s1", "v1"}, {"s2", "v2"}, {"s2", "v3"},
               {"v1", "v4"}, {"v2", "v4"}, {"v3", "v4"}, {"v2", "v5"}, {"v3", "v5"},
               {"v4", "d1"}, {"v5", "d2"}});
}

LayeredNetwork fig3d1d2() {
  return make({{"s1", "s2"}, {"v1", "v2", "v3", "v4"}, {"v5", "v6", "v7"}, {"d1", "d2"}},
              {{"s1", "v1"}, {"s2", "v2"}, {"s2", "v3"}, {"s2", "v4"},
               {"v1", "v5"}, {"v2", "v5"}, {"v2", "v6"}, {"v3", "v5"}, {"v3", "v6"}, {"v3", "v7"},
               {"v4", "v5"}, {"v4", "v7"},
               {"v5", "d1"}, {"v6", "d2"}, {"v7", "d2"}});
}

LayeredNetwork fig_full_dof() {
  // d2 hears only v8; see README "Network families".
  return make({{"s1", "s2"}, {"v1", "v2", "v3", "v4", "v5"}, {"v6", "v7", "v8"}, {"d1", "d2"}},
              {{"s1", "v1"}, {"s1", "v2"}, {"s2", "v3"}, {"s2", "v4"}, {"s2", "v5"},
               {"v1", "v6"}, {"v1", "v7"}, {"v2", "v6"}, {"v2", "v7"},
               {"v3", "v6"}, {"v3", "v8"},
               {"v4", "v6"}, {"v4", "v7"}, {"v4", "v8"},
               {"v5", "v6"}, {"v5", "v7"}, {"v5", "v8"},
               {"v6", "d1"}, {"v7", "d1"}, {"v8", "d2"}});
}

LayeredNetwork m_d1d2(int m) {
  require_m(m);
  Layers layers{{"s1", "s2"}, {}, {}, {"d1", "d2"}};
  for (int j = 1; j <= m + 1; ++j) layers[1].push_back(v(j));
  for (int j = m + 2; j <= 2 * m + 1; ++j) layers[2].push_back(v(j));

  std::vector<Edge> edges{{"s1", v(1)}, {v(1), v(m + 2)}, {v(m + 2), "d1"}};
  for (int j = 2; j <= m + 1; ++j) {
    edges.push_back({"s2", v(j)});
    for (int t = m + 2; t <= 2 * m + 1; ++t) edges.push_back({v(j), v(t)});
  }
  for (int t = m + 3; t <= 2 * m + 1; ++t) edges.push_back({v(t), "d2"});
  return make(std::move(layers), std::move(edges));
}

LayeredNetwork two_bounds(int m) {
  require_m(m);
  // First half: relays v1..v_{2m+1} as in m_d1d2. Boundary: x1 = v_{2m+2}
  // (carries the a-symbols), x2 = v_{2m+3}. Second half is the flipped copy:
  // w1..w_{m+1} = v_{2m+4}..v_{3m+4}, its third layer v_{3m+5}..v_{4m+4}.
  const int x1 = 2 * m + 2;
  const int x2 = 2 * m + 3;
  const int w1 = 2 * m + 4;
  const int y1 = 3 * m + 5;
  const int y_last = 4 * m + 4;

  Layers layers(7);
  layers[0] = {"s1", "s2"};
  for (int j = 1; j <= m + 1; ++j) layers[1].push_back(v(j));
  for (int j = m + 2; j <= 2 * m + 1; ++j) layers[2].push_back(v(j));
  layers[3] = {v(x1), v(x2)};
  for (int j = w1; j <= w1 + m; ++j) layers[4].push_back(v(j));
  for (int j = y1; j <= y_last; ++j) layers[5].push_back(v(j));
  layers[6] = {"d1", "d2"};

  std::vector<Edge> edges{{"s1", v(1)}, {v(1), v(m + 2)}, {v(m + 2), v(x1)}};
  for (int j = 2; j <= m + 1; ++j) {
    edges.push_back({"s2", v(j)});
    for (int t = m + 2; t <= 2 * m + 1; ++t) edges.push_back({v(j), v(t)});
  }
  for (int t = m + 3; t <= 2 * m + 1; ++t) edges.push_back({v(t), v(x2)});

  edges.push_back({v(x2), v(w1)});
  edges.push_back({v(w1), v(y1)});
  edges.push_back({v(y1), "d2"});
  for (int j = w1 + 1; j <= w1 + m; ++j) {
    edges.push_back({v(x1), v(j)});
    for (int t = y1; t <= y_last; ++t) edges.push_back({v(j), v(t)});
  }
  for (int t = y1 + 1; t <= y_last; ++t) edges.push_back({v(t), "d1"});
  return make(std::move(layers), std::move(edges));
}

LayeredNetwork set_size_to_rank(int k) {
  if (k < 0) throw InvalidParams("k must be non-negative");
  const LayeredNetwork base = fig3d1d2();
  Layers layers = base.layers();
  std::vector<Edge> edges = base.edges();
  for (int i = 1; i <= k; ++i) {
    const NodeId u = "u" + std::to_string(i);
    layers[1].push_back(u);
    edges.push_back({"s2", u});
    for (const char* t : {"v5", "v6", "v7"}) edges.push_back({u, t});
  }
  return make(std::move(layers), std::move(edges));
}

LayeredNetwork d1d2_one_half() {
  return make({{"s1", "s2"}, {"v1", "v2", "v3"}, {"d1", "d2"}},
              {{"s1", "v1"}, {"s1", "v2"}, {"s2", "v1"}, {"s2", "v2"}, {"s2", "v3"},
               {"v1", "d1"}, {"v1", "d2"}, {"v2", "d1"}, {"v2", "d2"}, {"v3", "d2"}});
}

LayeredNetwork random_layered(const RandomSpec& spec) {
  if (!(spec.density > 0.0 && spec.density <= 1.0)) {
    throw InvalidParams("density must lie in (0, 1]");
  }
  for (std::size_t size : spec.relay_layer_sizes) {
    if (size == 0) throw InvalidParams("relay layers must be non-empty");
  }
  std::mt19937_64 rng(spec.seed);
  std::bernoulli_distribution coin(spec.density);

  Layers layers{{"s1", "s2"}};
  int next = 1;
  for (std::size_t size : spec.relay_layer_sizes) {
    auto& layer = layers.emplace_back();
    for (std::size_t i = 0; i < size; ++i) layer.push_back(v(next++));
  }
  layers.push_back({"d1", "d2"});

  constexpr int kMaxAttempts = 1000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<Edge> edges;
    for (std::size_t l = 0; l + 1 < layers.size(); ++l) {
      for (const NodeId& from : layers[l]) {
        for (const NodeId& to : layers[l + 1]) {
          if (coin(rng)) edges.push_back({from, to});
        }
      }
    }
    LayeredNetwork net = make(layers, std::move(edges));
    if (reaches(net, "s1", "d1") && reaches(net, "s2", "d2")) return net;
  }
  throw InvalidParams("no network with s1->d1 and s2->d2 paths after 1000 attempts");
}

LayeredNetwork gen_family(const FamilyParams& params) {
  switch (params.family) {
    case Family::Fig2D1D2: return fig2d1d2();
    case Family::Fig3D1D2: return fig3d1d2();
    case Family::FigFullDof: return fig_full_dof();
    case Family::MD1D2: return m_d1d2(params.m);
    case Family::TwoBounds: return two_bounds(params.m);
    case Family::SetSizeToRank: return set_size_to_rank(params.k);
    case Family::D1D2OneHalf: return d1d2_one_half();
    case Family::RandomLayered: return random_layered(params.random);
  }
  throw InvalidParams("unknown family");
}

}  // namespace dofb
