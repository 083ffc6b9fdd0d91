#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dofb/generic_rank.hpp"
#include "dofb/network.hpp"
#include "dofb/schemes.hpp"

namespace dofb::prop {

using Rng = std::mt19937_64;

struct PropertyOutcome {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string counterexample;  // first failure, empty if none

  bool passed() const noexcept { return failures == 0 && cases > 0; }
};

/// A check returns nullopt on success or a description of the failing case.
using Check = std::function<std::optional<std::string>(Rng&)>;

/// Runs `cases` independent cases, each with its own generator derived from
/// `seed`. Exceptions count as failures.
PropertyOutcome check_property(std::string name, int cases, std::uint64_t seed, const Check& check);

SupportPattern random_pattern(Rng& rng, std::size_t max_rows, std::size_t max_cols);
LayeredNetwork random_network(Rng& rng);

/// Every built-in (network, scheme) pair, including the failing ablation.
const std::vector<SchemeBundle>& library_schemes();

/// The full property suite; `scale` multiplies every case count.
std::vector<PropertyOutcome> run_property_suite(std::uint64_t seed, int scale = 1);

}  // namespace dofb::prop
