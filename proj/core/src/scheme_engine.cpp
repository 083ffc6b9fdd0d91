#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "dofb/scheme.hpp"

namespace dofb {

namespace {

std::string slot_text(SlotRef at) {
  return "hop " + std::to_string(at.hop) + " slot " + std::to_string(at.slot);
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

class Executor {
 public:
  Executor(const LayeredNetwork& net, const SchemeProgram& scheme, const SymbolSpace& space,
           const GainAssignment& gains, const PrimeField& field)
      : net_(net), scheme_(scheme), space_(space), gains_(gains), field_(field) {}

  RunResult run() {
    check_shape();
    for (const auto& layer : net_.layers()) {
      for (const NodeId& n : layer) result_.knowledge[n];
    }
    for (int i = 1; i <= space_.p; ++i) give_own(net_.source(1), space_.column(1, i));
    for (int i = 1; i <= space_.q; ++i) give_own(net_.source(2), space_.column(2, i));

    for (std::size_t h = 0; h < scheme_.hops.size(); ++h) {
      const HopPlan& plan = scheme_.hops[h];
      for (int t = 1; t <= plan.slots; ++t) {
        execute_slot(SlotRef{static_cast<int>(h + 1), t}, plan.actions[static_cast<std::size_t>(t - 1)]);
      }
    }
    return std::move(result_);
  }

 private:
  void check_shape() const {
    if (scheme_.hops.size() + 1 != net_.layer_count()) {
      throw SchemeError(SchemeError::Kind::ShapeMismatch, {}, "",
                        "program has " + std::to_string(scheme_.hops.size()) + " hops, network needs " +
                            std::to_string(net_.layer_count() - 1));
    }
    for (std::size_t h = 0; h < scheme_.hops.size(); ++h) {
      const HopPlan& plan = scheme_.hops[h];
      if (plan.slots < 1 || plan.actions.size() != static_cast<std::size_t>(plan.slots)) {
        throw SchemeError(SchemeError::Kind::ShapeMismatch, {static_cast<int>(h + 1), 1}, "",
                          "hop slot count does not match its action table");
      }
    }
  }

  void give_own(const NodeId& source, std::size_t column) {
    result_.knowledge[source].rows.push_back({space_.unit(column), Provenance::OwnSymbol, {0, 0}});
  }

  void execute_slot(SlotRef now, const std::map<NodeId, RowSpec, NodeOrder>& actions) {
    std::map<NodeId, Row, NodeOrder> transmitted;
    for (const auto& [node, spec] : actions) {
      if (net_.layer_of(node) != static_cast<std::size_t>(now.hop)) {
        throw SchemeError(SchemeError::Kind::IllegalAction, now, node,
                          "node does not belong to transmitting layer " + std::to_string(now.hop));
      }
      if (spec.empty()) continue;
      Row row(space_.dim(), 0);
      for (const Term& term : spec) {
        const Row part = resolve(node, term.source, now);
        for (std::size_t c = 0; c < row.size(); ++c) row[c] = field_.add(row[c], field_.mul(term.weight, part[c]));
      }
      result_.trace.push_back({now, node, true, row});
      transmitted.emplace(node, std::move(row));
    }

    for (const NodeId& u : net_.layer(static_cast<std::size_t>(now.hop + 1))) {
      Row row(space_.dim(), 0);
      bool heard = false;
      for (const NodeId& n : net_.predecessors(u)) {
        const auto it = transmitted.find(n);
        if (it == transmitted.end()) continue;
        heard = true;
        const FieldElement g = gains_.at({n, u, now.slot});
        for (std::size_t c = 0; c < row.size(); ++c) row[c] = field_.add(row[c], field_.mul(g, it->second[c]));
      }
      if (!heard) continue;
      NodeKnowledge& k = result_.knowledge[u];
      k.rows.push_back({row, Provenance::Reception, now});
      k.receptions[now] = row;
      result_.trace.push_back({now, u, false, std::move(row)});
    }
  }

  Row resolve(const NodeId& node, const KnowledgeRef& source, SlotRef now) {
    const NodeKnowledge& own = result_.knowledge.at(node);
    return std::visit(
        Overloaded{
            [&](const ref::Symbol& s) -> Row {
              if (s.column >= space_.dim()) {
                throw SchemeError(SchemeError::Kind::UnknownRef, now, node,
                                  "symbol column " + std::to_string(s.column) + " outside symbol space");
              }
              Row unit = space_.unit(s.column);
              if (!span_of(own).contains(unit)) {
                throw SchemeError(SchemeError::Kind::UnavailableFunctional, now, node,
                                  "symbol " + space_.name(s.column) + " is not in the node's span");
              }
              return unit;
            },
            [&](const ref::Reception& r) -> Row { return own_reception(node, own, r.at, now); },
            [&](const ref::Reconstructed& r) -> Row {
              Row row = reconstruct_row(result_.knowledge, node, r.target, r.at, now, field_);
              result_.reconstructions.push_back({now, node, r.target, r.at, row, span_of(own).contains(row)});
              return row;
            },
            [&](const ref::Cleaned& c) -> Row { return cleaned(node, own, c, now); },
        },
        source);
  }

  Row own_reception(const NodeId& node, const NodeKnowledge& own, SlotRef at, SlotRef now) const {
    const auto it = own.receptions.find(at);
    if (it == own.receptions.end()) {
      throw SchemeError(SchemeError::Kind::UnknownRef, now, node, "no reception at " + slot_text(at));
    }
    return it->second;
  }

  Row cleaned(const NodeId& node, const NodeKnowledge& own, const ref::Cleaned& c, SlotRef now) const {
    if (c.keep_session != 1 && c.keep_session != 2) {
      throw SchemeError(SchemeError::Kind::UnknownRef, now, node, "session must be 1 or 2");
    }
    const Row target = own_reception(node, own, c.at, now);
    const auto keep = session_columns(c.keep_session);
    const auto drop = session_columns(3 - c.keep_session);

    // Echelon form with kept columns first: rows pivoting on a dropped
    // column are interference-only and span exactly that part of the span.
    std::vector<std::size_t> order(keep);
    order.insert(order.end(), drop.begin(), drop.end());
    RowBasis ordered(field_, order);
    for (const KnowledgeRow& r : own.rows) ordered.add(r.row);
    RowBasis interference(field_, space_.dim());
    for (std::size_t i = 0; i < ordered.rank(); ++i) {
      if (std::find(drop.begin(), drop.end(), ordered.pivots()[i]) != drop.end()) {
        interference.add(ordered.rows()[i]);
      }
    }
    Row out = interference.reduce(target);
    for (std::size_t col : drop) {
      if (out[col] != 0) {
        throw SchemeError(SchemeError::Kind::UnavailableFunctional, now, node,
                          "interference in reception at " + slot_text(c.at) + " cannot be removed");
      }
    }
    return out;
  }

  std::vector<std::size_t> session_columns(int session) const {
    std::vector<std::size_t> cols;
    const int count = session == 1 ? space_.p : space_.q;
    for (int i = 1; i <= count; ++i) cols.push_back(space_.column(session, i));
    return cols;
  }

  RowBasis span_of(const NodeKnowledge& k) const {
    RowBasis basis(field_, space_.dim());
    for (const KnowledgeRow& r : k.rows) basis.add(r.row);
    return basis;
  }

  const LayeredNetwork& net_;
  const SchemeProgram& scheme_;
  const SymbolSpace& space_;
  const GainAssignment& gains_;
  const PrimeField& field_;
  RunResult result_;
};

}  // namespace

SymbolSpace::SymbolSpace(int p_, int q_) : p(p_), q(q_) {
  if (p < 0 || q < 0 || p + q < 1) throw InvalidParams("symbol space needs p, q >= 0 and p + q >= 1");
}

std::size_t SymbolSpace::column(int session, int index) const {
  const int count = session == 1 ? p : q;
  if ((session != 1 && session != 2) || index < 1 || index > count) {
    throw std::invalid_argument("symbol index out of range");
  }
  return static_cast<std::size_t>(session == 1 ? index - 1 : p + index - 1);
}

std::string SymbolSpace::name(std::size_t col) const {
  if (col < static_cast<std::size_t>(p)) return "a" + std::to_string(col + 1);
  return "b" + std::to_string(col - static_cast<std::size_t>(p) + 1);
}

std::size_t SymbolSpace::column_of(std::string_view symbol) const {
  if (symbol.size() < 2 || (symbol[0] != 'a' && symbol[0] != 'b')) {
    throw std::invalid_argument("bad symbol name: " + std::string(symbol));
  }
  int index = 0;
  for (char ch : symbol.substr(1)) {
    if (ch < '0' || ch > '9') throw std::invalid_argument("bad symbol name: " + std::string(symbol));
    index = index * 10 + (ch - '0');
  }
  return column(symbol[0] == 'a' ? 1 : 2, index);
}

Row SymbolSpace::unit(std::size_t col) const {
  Row row(dim(), 0);
  row.at(col) = 1;
  return row;
}

HopPlan::HopPlan(int slot_count) : slots(slot_count), actions(static_cast<std::size_t>(std::max(slot_count, 0))) {}

void HopPlan::send(int slot, const NodeId& node, RowSpec spec) {
  if (slot < 1 || slot > slots) throw std::out_of_range("slot outside hop");
  actions[static_cast<std::size_t>(slot - 1)][node] = std::move(spec);
}

std::vector<int> SchemeProgram::slots_per_hop() const {
  std::vector<int> out;
  for (const HopPlan& h : hops) out.push_back(h.slots);
  return out;
}

int SchemeProgram::block_length() const {
  int out = 0;
  for (const HopPlan& h : hops) out = std::max(out, h.slots);
  return out;
}

std::vector<Row> NodeKnowledge::matrix() const {
  std::vector<Row> out;
  out.reserve(rows.size());
  for (const KnowledgeRow& r : rows) out.push_back(r.row);
  return out;
}

std::string_view to_string(SchemeError::Kind kind) noexcept {
  switch (kind) {
    case SchemeError::Kind::IllegalAction: return "IllegalAction";
    case SchemeError::Kind::IllegalReconstruction: return "IllegalReconstruction";
    case SchemeError::Kind::CausalityViolation: return "CausalityViolation";
    case SchemeError::Kind::UnknownRef: return "UnknownRef";
    case SchemeError::Kind::UnavailableFunctional: return "UnavailableFunctional";
    case SchemeError::Kind::ShapeMismatch: return "ShapeMismatch";
  }
  return "SchemeError";
}

SchemeError::SchemeError(Kind kind, SlotRef at, NodeId node, const std::string& detail)
    : Error(std::string(to_string(kind)) + " at " + slot_text(at) + (node.empty() ? "" : " node " + node) +
            ": " + detail),
      kind_(kind),
      at_(at),
      node_(std::move(node)) {}

RunResult run_scheme(const LayeredNetwork& net, const SchemeProgram& scheme, const SymbolSpace& space,
                     const GainAssignment& gains, const PrimeField& field) {
  return Executor(net, scheme, space, gains, field).run();
}

Row reconstruct_row(const KnowledgeState& state, const NodeId& requester, const NodeId& target,
                    SlotRef target_slot, SlotRef now, const PrimeField& field) {
  if (!(target_slot < now)) {
    throw SchemeError(SchemeError::Kind::CausalityViolation, now, requester,
                      "reconstruction of " + target + " at " + slot_text(target_slot) +
                          " needs channel state that is not yet known");
  }
  const auto who = state.find(requester);
  const auto tgt = state.find(target);
  if (who == state.end() || tgt == state.end()) {
    throw SchemeError(SchemeError::Kind::UnknownRef, now, requester, "unknown node " + target);
  }
  const auto rec = tgt->second.receptions.find(target_slot);
  if (rec == tgt->second.receptions.end()) {
    throw SchemeError(SchemeError::Kind::UnknownRef, now, requester,
                      target + " received nothing at " + slot_text(target_slot));
  }
  RowBasis basis(field, rec->second.size());
  for (const KnowledgeRow& r : who->second.rows) basis.add(r.row);
  if (!basis.contains(rec->second)) {
    throw SchemeError(SchemeError::Kind::IllegalReconstruction, now, requester,
                      "reception of " + target + " at " + slot_text(target_slot) +
                          " is not computable from the node's knowledge");
  }
  return rec->second;
}

bool decode_check(const std::vector<Row>& rows, const SymbolSpace& space, int session, const PrimeField& field) {
  if (session != 1 && session != 2) throw std::invalid_argument("session must be 1 or 2");
  const std::size_t width = space.dim();
  std::vector<Row> interference;
  interference.reserve(rows.size());
  for (const Row& r : rows) {
    Row projected = r;
    const int count = session == 1 ? space.p : space.q;
    for (int i = 1; i <= count; ++i) projected[space.column(session, i)] = 0;
    interference.push_back(std::move(projected));
  }
  const std::size_t wanted = static_cast<std::size_t>(session == 1 ? space.p : space.q);
  return matrix_rank(field, rows, width) == matrix_rank(field, interference, width) + wanted;
}

std::pair<Rational, Rational> achieved_dof(const SchemeProgram& scheme, const SymbolSpace& space) {
  const int t = scheme.block_length();
  if (t < 1) throw InvalidParams("scheme has no hops");
  return {Rational(space.p, t), Rational(space.q, t)};
}

int SimReport::decode_d1() const {
  return static_cast<int>(std::count(decoded_d1.begin(), decoded_d1.end(), true));
}

int SimReport::decode_d2() const {
  return static_cast<int>(std::count(decoded_d2.begin(), decoded_d2.end(), true));
}

SimReport simulate(const LayeredNetwork& net, const SchemeProgram& scheme, const SymbolSpace& space, int trials,
                   std::uint64_t seed, const PrimeField& field) {
  if (trials < 1) throw InvalidParams("trials must be at least 1");
  SimReport report;
  report.trials = trials;
  report.seed = seed;
  const auto slots = scheme.slots_per_hop();
  for (int t = 0; t < trials; ++t) {
    const auto gains =
        GainAssignment::draw_for_network(net, slots, field, mix_seed(seed, static_cast<std::uint64_t>(t)));
    const RunResult run = run_scheme(net, scheme, space, gains, field);
    report.decoded_d1.push_back(decode_check(run.knowledge.at(net.destination(1)).matrix(), space, 1, field));
    report.decoded_d2.push_back(decode_check(run.knowledge.at(net.destination(2)).matrix(), space, 2, field));
  }
  if (report.decode_d1() == trials && report.decode_d2() == trials) report.achieved = achieved_dof(scheme, space);
  return report;
}

}  // namespace dofb
