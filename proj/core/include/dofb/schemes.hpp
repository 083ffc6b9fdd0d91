#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dofb/families.hpp"
#include "dofb/network.hpp"
#include "dofb/scheme.hpp"

namespace dofb {

/// A transmission program together with the network it runs on.
struct SchemeBundle {
  std::string name;
  LayeredNetwork network;
  SchemeProgram program;
  SymbolSpace space;
};

/// fig2d1d2, (1/2, 1) in two slots.
SchemeBundle scheme_2d1d2();
/// scheme_2d1d2 without the reconstruction step; d1 cannot decode.
SchemeBundle scheme_2d1d2_without_reconstruction();
/// fig3d1d2, (2/3, 1) in three slots.
SchemeBundle scheme_example1();
/// Full-DoF network, (1, 1) in three slots via retroactive cancellation.
SchemeBundle scheme_example2();
/// mD1D2(m), ((m-1)/m, 1) in m slots. Throws InvalidParams for m < 2.
SchemeBundle scheme_m_d1d2(int m);
/// twoBounds(m), (m/(m+1), m/(m+1)) in m+1 slots per hop.
SchemeBundle scheme_two_bounds(int m);

/// Names accepted by scheme_by_name.
std::vector<std::string> scheme_names();
/// Looks a scheme up by name; `m` is used by the parameterized schemes.
/// Throws InvalidParams for unknown names.
SchemeBundle scheme_by_name(std::string_view name, int m = 2);
/// Built-in scheme for a generator family, if there is one.
std::optional<SchemeBundle> scheme_for_family(const FamilyParams& params);

}  // namespace dofb
