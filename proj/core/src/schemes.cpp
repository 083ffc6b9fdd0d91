#include "dofb/schemes.hpp"

namespace dofb {

namespace {

NodeId v(int index) { return "v" + std::to_string(index); }

RowSpec sym(const SymbolSpace& space, int session, int index) {
  return {Term{1, ref::Symbol{space.column(session, index)}}};
}

RowSpec rec(int hop, int slot) { return {Term{1, ref::Reception{{hop, slot}}}}; }

RowSpec recon(const NodeId& target, int hop, int slot) {
  return {Term{1, ref::Reconstructed{target, {hop, slot}}}};
}

RowSpec cleaned(int hop, int slot, int keep) { return {Term{1, ref::Cleaned{{hop, slot}, keep}}}; }

void require_m(int m) {
  if (m < 2) throw InvalidParams("m must be at least 2");
}

// Both sources send their symbols one per slot.
HopPlan source_hop(const SymbolSpace& space, int slots) {
  HopPlan hop(slots);
  for (int t = 1; t <= space.p; ++t) hop.send(t, "s1", sym(space, 1, t));
  for (int t = 1; t <= space.q; ++t) hop.send(t, "s2", sym(space, 2, t));
  return hop;
}

// The m-node bottleneck strategy between a layer holding one clean-path relay
// `path` (knowing `path_count` symbols of `path_session`) and `m` relays `dense`
// knowing all m symbols of the other session. `pinned` is the single-parent
// receiver; the remaining receivers collect the dense session's equations.
HopPlan bottleneck_hop(const SymbolSpace& space, int slots, const NodeId& path, int path_session,
                       int path_count, const std::vector<NodeId>& dense, const NodeId& pinned, int hop_index) {
  const int dense_session = 3 - path_session;
  HopPlan hop(slots);
  for (std::size_t j = 0; j < dense.size(); ++j) {
    hop.send(1, dense[j], sym(space, dense_session, static_cast<int>(j) + 1));
  }
  for (int i = 1; i <= path_count; ++i) hop.send(i + 1, path, sym(space, path_session, i));
  hop.send(2, dense.front(), recon(pinned, hop_index, 1));
  return hop;
}

// Forwarding hop: `pinned` sends its clean symbols, and `collectors` deliver
// their slot-1 receptions round-robin followed by the shared slot-2 row.
HopPlan forward_hop(const SymbolSpace& space, int slots, const NodeId& pinned, int pinned_session, int pinned_count,
                    const std::vector<NodeId>& collectors, int from_hop) {
  HopPlan hop(slots);
  for (int t = 1; t <= pinned_count; ++t) hop.send(t, pinned, sym(space, pinned_session, t));
  for (std::size_t i = 0; i < collectors.size(); ++i) {
    hop.send(static_cast<int>(i) + 1, collectors[i], rec(from_hop, 1));
  }
  hop.send(static_cast<int>(collectors.size()) + 1, collectors.front(), rec(from_hop, 2));
  return hop;
}

std::vector<NodeId> relay_range(int first, int last) {
  std::vector<NodeId> out;
  for (int j = first; j <= last; ++j) out.push_back(v(j));
  return out;
}

}  // namespace

SchemeBundle scheme_2d1d2() {
  SymbolSpace space(1, 2);
  SchemeProgram program;
  program.hops.push_back(source_hop(space, 2));

  HopPlan relay(2);
  relay.send(1, "v2", sym(space, 2, 1));
  relay.send(1, "v3", sym(space, 2, 2));
  relay.send(2, "v1", sym(space, 1, 1));
  relay.send(2, "v3", recon("v4", 2, 1));
  program.hops.push_back(std::move(relay));

  HopPlan last(2);
  last.send(1, "v4", sym(space, 1, 1));
  last.send(1, "v5", rec(2, 1));
  last.send(2, "v5", rec(2, 2));
  program.hops.push_back(std::move(last));
  return {"2d1d2", fig2d1d2(), std::move(program), space};
}

SchemeBundle scheme_2d1d2_without_reconstruction() {
  SchemeBundle bundle = scheme_2d1d2();
  bundle.name = "2d1d2-no-reconstruction";
  HopPlan& relay = bundle.program.hops[1];
  relay.send(2, "v3", sym(bundle.space, 2, 2));
  // v4 cannot isolate a1 any more, so it forwards what it heard.
  HopPlan& last = bundle.program.hops[2];
  last.send(1, "v4", rec(2, 2));
  return bundle;
}

SchemeBundle scheme_example1() {
  SymbolSpace space(2, 3);
  SchemeProgram program;
  program.hops.push_back(source_hop(space, 3));

  HopPlan relay(3);
  relay.send(1, "v2", sym(space, 2, 1));
  relay.send(1, "v3", sym(space, 2, 2));
  relay.send(1, "v4", sym(space, 2, 3));
  relay.send(2, "v1", sym(space, 1, 1));
  relay.send(2, "v3", recon("v5", 2, 1));
  relay.send(3, "v1", sym(space, 1, 2));
  program.hops.push_back(std::move(relay));

  HopPlan last(3);
  last.send(1, "v5", sym(space, 1, 1));
  last.send(1, "v6", rec(2, 1));
  last.send(2, "v5", sym(space, 1, 2));
  last.send(2, "v7", rec(2, 1));
  last.send(3, "v6", rec(2, 2));
  program.hops.push_back(std::move(last));
  return {"example1", fig3d1d2(), std::move(program), space};
}

SchemeBundle scheme_example2() {
  SymbolSpace space(3, 3);
  SchemeProgram program;
  program.hops.push_back(source_hop(space, 3));

  HopPlan relay(3);
  relay.send(1, "v3", sym(space, 2, 1));
  relay.send(1, "v4", sym(space, 2, 2));
  relay.send(1, "v5", sym(space, 2, 3));
  relay.send(2, "v1", sym(space, 1, 1));
  relay.send(2, "v2", sym(space, 1, 2));
  relay.send(2, "v3", recon("v6", 2, 1));
  relay.send(3, "v1", sym(space, 1, 3));
  relay.send(3, "v4", recon("v7", 2, 1));
  program.hops.push_back(std::move(relay));

  HopPlan last(3);
  last.send(1, "v6", cleaned(2, 2, 1));
  last.send(1, "v8", rec(2, 1));
  last.send(2, "v7", rec(2, 2));
  last.send(2, "v8", rec(2, 2));
  last.send(3, "v7", sym(space, 1, 3));
  last.send(3, "v8", rec(2, 3));
  program.hops.push_back(std::move(last));
  return {"example2", fig_full_dof(), std::move(program), space};
}

SchemeBundle scheme_m_d1d2(int m) {
  require_m(m);
  SymbolSpace space(m - 1, m);
  SchemeProgram program;
  program.hops.push_back(source_hop(space, m));
  program.hops.push_back(bottleneck_hop(space, m, v(1), 1, m - 1, relay_range(2, m + 1), v(m + 2), 2));
  program.hops.push_back(forward_hop(space, m, v(m + 2), 1, m - 1, relay_range(m + 3, 2 * m + 1), 2));
  return {"m-d1d2", m_d1d2(m), std::move(program), space};
}

SchemeBundle scheme_two_bounds(int m) {
  require_m(m);
  const int slots = m + 1;
  const NodeId x1 = v(2 * m + 2);
  const NodeId x2 = v(2 * m + 3);
  const int w1 = 2 * m + 4;
  const int y1 = 3 * m + 5;

  SymbolSpace space(m, m);
  SchemeProgram program;
  program.hops.push_back(source_hop(space, slots));
  // First half: the a-path gets one extra slot while s2 stays silent.
  program.hops.push_back(bottleneck_hop(space, slots, v(1), 1, m, relay_range(2, m + 1), v(m + 2), 2));
  program.hops.push_back(forward_hop(space, slots, v(m + 2), 1, m, relay_range(m + 3, 2 * m + 1), 2));

  HopPlan boundary(slots);
  for (int t = 1; t <= m; ++t) {
    boundary.send(t, x1, sym(space, 1, t));
    boundary.send(t, x2, sym(space, 2, t));
  }
  program.hops.push_back(std::move(boundary));

  // Second half: roles of the sessions swapped.
  program.hops.push_back(bottleneck_hop(space, slots, v(w1), 2, m, relay_range(w1 + 1, w1 + m), v(y1), 5));
  program.hops.push_back(forward_hop(space, slots, v(y1), 2, m, relay_range(y1 + 1, y1 + m - 1), 5));
  return {"two-bounds", two_bounds(m), std::move(program), space};
}

std::vector<std::string> scheme_names() {
  return {"2d1d2", "2d1d2-no-reconstruction", "example1", "example2", "m-d1d2", "two-bounds"};
}

SchemeBundle scheme_by_name(std::string_view name, int m) {
  if (name == "2d1d2") return scheme_2d1d2();
  if (name == "2d1d2-no-reconstruction") return scheme_2d1d2_without_reconstruction();
  if (name == "example1") return scheme_example1();
  if (name == "example2") return scheme_example2();
  if (name == "m-d1d2") return scheme_m_d1d2(m);
  if (name == "two-bounds") return scheme_two_bounds(m);
  throw InvalidParams("unknown scheme: " + std::string(name));
}

std::optional<SchemeBundle> scheme_for_family(const FamilyParams& params) {
  switch (params.family) {
    case Family::Fig2D1D2: return scheme_2d1d2();
    case Family::Fig3D1D2: return scheme_example1();
    case Family::FigFullDof: return scheme_example2();
    case Family::MD1D2: return scheme_m_d1d2(params.m);
    case Family::TwoBounds: return scheme_two_bounds(params.m);
    default: return std::nullopt;
  }
}

}  // namespace dofb
