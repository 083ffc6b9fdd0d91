#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "dofb/field.hpp"
#include "dofb/generic_rank.hpp"
#include "dofb/network.hpp"
#include "dofb/rational.hpp"

namespace dofb {

/// Global symbol vector (a_1..a_p, b_1..b_q); a-symbols belong to session 1.
struct SymbolSpace {
  int p = 0;
  int q = 0;

  SymbolSpace(int p_, int q_);
  std::size_t dim() const noexcept { return static_cast<std::size_t>(p + q); }
  /// Column of a_i (session 1) or b_i (session 2), i 1-based.
  std::size_t column(int session, int index) const;
  /// "a3" / "b1" for a column.
  std::string name(std::size_t column) const;
  /// Inverse of name(); throws std::invalid_argument.
  std::size_t column_of(std::string_view symbol) const;
  Row unit(std::size_t column) const;

  friend bool operator==(const SymbolSpace&, const SymbolSpace&) = default;
};

/// Position in hop-sequential execution; hops and slots are 1-based.
struct SlotRef {
  int hop = 1;
  int slot = 1;

  friend auto operator<=>(const SlotRef&, const SlotRef&) = default;
};

namespace ref {

/// A clean symbol e(column); legal iff it lies in the sender's span.
struct Symbol {
  std::size_t column = 0;
  friend bool operator==(const Symbol&, const Symbol&) = default;
};

/// The sender's own reception at (hop, slot).
struct Reception {
  SlotRef at;
  friend bool operator==(const Reception&, const Reception&) = default;
};

/// Another node's past reception, rebuilt from delayed channel knowledge.
struct Reconstructed {
  NodeId target;
  SlotRef at;
  friend bool operator==(const Reconstructed&, const Reconstructed&) = default;
};

/// The sender's own reception at (hop, slot) with the other session's
/// interference removed using interference-only rows it already holds.
struct Cleaned {
  SlotRef at;
  int keep_session = 1;
  friend bool operator==(const Cleaned&, const Cleaned&) = default;
};

}  // namespace ref

using KnowledgeRef = std::variant<ref::Symbol, ref::Reception, ref::Reconstructed, ref::Cleaned>;

struct Term {
  FieldElement weight = 1;
  KnowledgeRef source;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Linear combination the node transmits; an empty spec means silence.
using RowSpec = std::vector<Term>;

struct HopPlan {
  int slots = 1;
  /// slots entries, each mapping a transmitting node to its RowSpec; absent
  /// nodes stay silent.
  std::vector<std::map<NodeId, RowSpec, NodeOrder>> actions;

  explicit HopPlan(int slot_count = 1);
  void send(int slot, const NodeId& node, RowSpec spec);
  friend bool operator==(const HopPlan&, const HopPlan&) = default;
};

struct SchemeProgram {
  std::vector<HopPlan> hops;

  std::vector<int> slots_per_hop() const;
  /// Largest per-hop slot count (block length for DoF accounting).
  int block_length() const;
  friend bool operator==(const SchemeProgram&, const SchemeProgram&) = default;
};

enum class Provenance { OwnSymbol, Reception };

struct KnowledgeRow {
  Row row;
  Provenance provenance = Provenance::OwnSymbol;
  SlotRef at{};
};

struct NodeKnowledge {
  std::vector<KnowledgeRow> rows;
  std::map<SlotRef, Row> receptions;

  std::vector<Row> matrix() const;
};

using KnowledgeState = std::map<NodeId, NodeKnowledge, NodeOrder>;

class SchemeError : public Error {
 public:
  enum class Kind {
    IllegalAction,
    IllegalReconstruction,
    CausalityViolation,
    UnknownRef,
    UnavailableFunctional,
    ShapeMismatch,
  };

  SchemeError(Kind kind, SlotRef at, NodeId node, const std::string& detail);
  Kind kind() const noexcept { return kind_; }
  SlotRef at() const noexcept { return at_; }
  const NodeId& node() const noexcept { return node_; }

 private:
  Kind kind_;
  SlotRef at_;
  NodeId node_;
};

std::string_view to_string(SchemeError::Kind kind) noexcept;

struct TraceEntry {
  SlotRef at;
  NodeId node;
  bool transmit = true;  // false: reception
  Row row;
};

struct ReconstructionEvent {
  SlotRef at;
  NodeId requester;
  NodeId target;
  SlotRef target_slot;
  Row row;
  bool in_requester_span = false;
};

struct RunResult {
  KnowledgeState knowledge;
  std::vector<TraceEntry> trace;
  std::vector<ReconstructionEvent> reconstructions;
};

/// Executes the program hop by hop. Throws SchemeError on illegal programs
/// and MissingGain when `gains` lacks an (edge, slot) that is used.
RunResult run_scheme(const LayeredNetwork& net, const SchemeProgram& scheme, const SymbolSpace& space,
                     const GainAssignment& gains, const PrimeField& field = PrimeField{});

/// Reception row of `target` at `target_slot`, provided the slot is strictly
/// before `now` and the row lies in the span of `requester`'s knowledge.
Row reconstruct_row(const KnowledgeState& state, const NodeId& requester, const NodeId& target,
                    SlotRef target_slot, SlotRef now, const PrimeField& field);

/// Session 1 (a-symbols) or 2 (b-symbols) recoverable from `rows` despite
/// unknown symbols of the other session.
bool decode_check(const std::vector<Row>& rows, const SymbolSpace& space, int session,
                  const PrimeField& field);

std::pair<Rational, Rational> achieved_dof(const SchemeProgram& scheme, const SymbolSpace& space);

struct SimReport {
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<bool> decoded_d1;
  std::vector<bool> decoded_d2;
  std::optional<std::pair<Rational, Rational>> achieved;

  int decode_d1() const;
  int decode_d2() const;
};

/// `trials` independent gain draws (per-trial seeds derived from `seed`).
SimReport simulate(const LayeredNetwork& net, const SchemeProgram& scheme, const SymbolSpace& space,
                   int trials, std::uint64_t seed, const PrimeField& field = PrimeField{});

/// {"trials", "seed", "decode_d1", "decode_d2", "achieved_dof": ["p/T","q/T"] | null}
std::string to_json(const SimReport& report);

std::string scheme_to_json(const SchemeProgram& scheme, const SymbolSpace& space);
/// Throws ParseError.
std::pair<SchemeProgram, SymbolSpace> scheme_from_json(std::string_view text);

}  // namespace dofb
