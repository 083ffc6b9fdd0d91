#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dofb/network.hpp"

namespace dofb {

enum class Family {
  Fig2D1D2,
  Fig3D1D2,
  FigFullDof,
  MD1D2,
  TwoBounds,
  SetSizeToRank,
  D1D2OneHalf,
  RandomLayered,
};

/// Relay layer sizes (excluding the source and destination layers), edge
/// density in (0, 1] and seed for Family::RandomLayered.
struct RandomSpec {
  std::vector<std::size_t> relay_layer_sizes{3, 3};
  double density = 0.5;
  std::uint64_t seed = 0;
};

struct FamilyParams {
  Family family = Family::Fig3D1D2;
  int m = 2;
  int k = 0;
  RandomSpec random{};
};

/// CLI spelling, e.g. "fig-3d1d2", "m-d1d2", "two-bounds".
std::string_view family_name(Family family) noexcept;
std::optional<Family> parse_family(std::string_view name) noexcept;

/// Builds the canonical network of a family. Throws InvalidParams.
LayeredNetwork gen_family(const FamilyParams& params);

LayeredNetwork fig2d1d2();
LayeredNetwork fig3d1d2();
LayeredNetwork fig_full_dof();
/// m >= 2. Layers (2, m+1, m, 2); v1 feeds only v_{m+2}.
LayeredNetwork m_d1d2(int m);
/// m >= 2. m_d1d2(m) chained with its session-flipped copy (7 layers).
LayeredNetwork two_bounds(int m);
/// k >= 0 extra second-layer nodes u1..uk, each fed by s2 and feeding v5, v6, v7.
LayeredNetwork set_size_to_rank(int k);
LayeredNetwork d1d2_one_half();
/// Resamples until s1 reaches d1 and s2 reaches d2 (at most 1000 attempts).
LayeredNetwork random_layered(const RandomSpec& spec);

}  // namespace dofb
