#include <gtest/gtest.h>

#include "dofb/families.hpp"
#include "dofb/schemes.hpp"
#include "dofb/verify/oracles.hpp"

using namespace dofb;

namespace {

const PrimeField kField;

GainAssignment gains_for(const SchemeBundle& b, std::uint64_t seed) {
  return GainAssignment::draw_for_network(b.network, b.program.slots_per_hop(), kField, seed);
}

RunResult run(const SchemeBundle& b, std::uint64_t seed = 1) {
  return run_scheme(b.network, b.program, b.space, gains_for(b, seed), kField);
}

bool spans_unit(const NodeKnowledge& k, const SymbolSpace& space, std::size_t column) {
  RowBasis basis(kField, space.dim());
  for (const auto& r : k.rows) basis.add(r.row);
  return basis.contains(space.unit(column));
}

SchemeError::Kind error_kind(const SchemeBundle& b) {
  try {
    run(b);
  } catch (const SchemeError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no SchemeError";
  return SchemeError::Kind::ShapeMismatch;
}

}  // namespace

TEST(SymbolSpace, Columns) {
  const SymbolSpace s(2, 3);
  EXPECT_EQ(s.dim(), 5u);
  EXPECT_EQ(s.column(1, 2), 1u);
  EXPECT_EQ(s.column(2, 1), 2u);
  EXPECT_EQ(s.name(4), "b3");
  EXPECT_EQ(s.column_of("a1"), 0u);
  EXPECT_EQ(s.column_of("b2"), 3u);
  EXPECT_THROW(s.column_of("c1"), std::invalid_argument);
  EXPECT_THROW(s.column(1, 3), std::invalid_argument);
  EXPECT_THROW(SymbolSpace(0, 0), InvalidParams);
}

TEST(RunScheme, Example1DeliversBothSessions) {
  const SchemeBundle b = scheme_example1();
  const RunResult r = run(b);
  for (int i = 1; i <= 2; ++i) EXPECT_TRUE(decode_check(r.knowledge.at("d1").matrix(), b.space, 1, kField));
  EXPECT_EQ(matrix_rank(kField, r.knowledge.at("d2").matrix(), b.space.dim()), 3u);
  EXPECT_EQ(oracle::gaussian_rank(r.knowledge.at("d2").matrix(), kField.modulus()), 3u);
  EXPECT_TRUE(decode_check(r.knowledge.at("d2").matrix(), b.space, 2, kField));
}

TEST(RunScheme, Example1ReconstructsV5SlotOne) {
  const RunResult r = run(scheme_example1());
  ASSERT_EQ(r.reconstructions.size(), 1u);
  const ReconstructionEvent& e = r.reconstructions[0];
  EXPECT_EQ(e.requester, "v3");
  EXPECT_EQ(e.target, "v5");
  EXPECT_EQ(e.at, (SlotRef{2, 2}));
  EXPECT_EQ(e.target_slot, (SlotRef{2, 1}));
  EXPECT_TRUE(e.in_requester_span);
}

TEST(RunScheme, AllSilentLeavesRelaysEmpty) {
  const SchemeBundle base = scheme_example1();
  SchemeProgram silent;
  for (int h = 0; h < 3; ++h) silent.hops.emplace_back(3);
  const RunResult r = run_scheme(base.network, silent, base.space, gains_for(base, 0), kField);
  for (const auto& [node, k] : r.knowledge) {
    if (node == "s1") {
      EXPECT_EQ(k.rows.size(), 2u);
    } else if (node == "s2") {
      EXPECT_EQ(k.rows.size(), 3u);
    } else {
      EXPECT_TRUE(k.rows.empty()) << node;
    }
  }
}

TEST(RunScheme, MD1D2PinnedRelayLearnsCleanSymbols) {
  const SchemeBundle b = scheme_m_d1d2(4);
  const RunResult r = run(b);
  for (int i = 1; i <= 3; ++i) EXPECT_TRUE(spans_unit(r.knowledge.at("v6"), b.space, b.space.column(1, i)));
}

TEST(RunScheme, Example2RetroactiveCancellation) {
  const SchemeBundle b = scheme_example2();
  const RunResult r = run(b);
  EXPECT_TRUE(spans_unit(r.knowledge.at("v7"), b.space, b.space.column(1, 3)));
  // v8 collects three independent pure-b rows.
  const auto v8 = r.knowledge.at("v8").matrix();
  EXPECT_EQ(matrix_rank(kField, v8, b.space.dim()), 3u);
  for (const Row& row : v8) {
    for (int i = 1; i <= 3; ++i) EXPECT_EQ(row[b.space.column(1, i)], 0u);
  }
}

TEST(RunScheme, SourcesStartWithIdentityRows) {
  const SchemeBundle b = scheme_example1();
  const RunResult r = run(b);
  const auto& s1 = r.knowledge.at("s1").rows;
  ASSERT_EQ(s1.size(), 2u);
  EXPECT_EQ(s1[0].row, b.space.unit(0));
  EXPECT_EQ(s1[0].provenance, Provenance::OwnSymbol);
}

TEST(RunScheme, IllegalActionOutsideLayer) {
  SchemeBundle b = scheme_example1();
  b.program.hops[0].send(1, "v1", {Term{1, ref::Symbol{0}}});
  EXPECT_EQ(error_kind(b), SchemeError::Kind::IllegalAction);
}

TEST(RunScheme, ShapeMismatch) {
  SchemeBundle b = scheme_example1();
  b.program.hops.pop_back();
  EXPECT_EQ(error_kind(b), SchemeError::Kind::ShapeMismatch);
}

TEST(RunScheme, UnavailableSymbol) {
  SchemeBundle b = scheme_example1();
  b.program.hops[1].send(1, "v1", {Term{1, ref::Symbol{b.space.column(2, 1)}}});
  EXPECT_EQ(error_kind(b), SchemeError::Kind::UnavailableFunctional);
}

TEST(RunScheme, UnknownReception) {
  SchemeBundle b = scheme_example1();
  b.program.hops[2].send(3, "v7", {Term{1, ref::Reception{{2, 3}}}});
  EXPECT_EQ(error_kind(b), SchemeError::Kind::UnknownRef);
}

TEST(RunScheme, ReconstructionWithoutTheSymbols) {
  SchemeBundle b = scheme_example1();
  b.program.hops[1].send(3, "v1", {Term{1, ref::Reconstructed{"v5", {2, 1}}}});
  EXPECT_EQ(error_kind(b), SchemeError::Kind::IllegalReconstruction);
}

TEST(RunScheme, ReconstructionOfTheCurrentSlot) {
  SchemeBundle b = scheme_example1();
  b.program.hops[1].send(1, "v3", {Term{1, ref::Reconstructed{"v5", {2, 1}}}});
  EXPECT_EQ(error_kind(b), SchemeError::Kind::CausalityViolation);
}

TEST(RunScheme, CleaningNeedsInterferenceRows) {
  SchemeBundle b = scheme_example2();
  // v6's slot-3 reception carries v7's b-row, which v6 never learns alone.
  b.program.hops[2].send(2, "v6", {Term{1, ref::Cleaned{{2, 3}, 1}}});
  EXPECT_EQ(error_kind(b), SchemeError::Kind::UnavailableFunctional);
}

TEST(RunScheme, ErrorMessageNamesPosition) {
  SchemeBundle b = scheme_example1();
  b.program.hops[1].send(3, "v1", {Term{1, ref::Reconstructed{"v5", {2, 1}}}});
  try {
    run(b);
    FAIL();
  } catch (const SchemeError& e) {
    EXPECT_EQ(e.at(), (SlotRef{2, 3}));
    EXPECT_EQ(e.node(), "v1");
    EXPECT_NE(std::string(e.what()).find("hop 2 slot 3"), std::string::npos);
  }
}

TEST(RunScheme, MissingGain) {
  const SchemeBundle b = scheme_example1();
  EXPECT_THROW(run_scheme(b.network, b.program, b.space, GainAssignment{}, kField), MissingGain);
}

TEST(ReconstructRow, DirectCalls) {
  const SchemeBundle b = scheme_example1();
  const RunResult r = run(b);
  EXPECT_NO_THROW(reconstruct_row(r.knowledge, "v3", "v5", {2, 1}, {2, 2}, kField));
  EXPECT_THROW(reconstruct_row(r.knowledge, "v1", "v6", {2, 1}, {2, 2}, kField), SchemeError);
  EXPECT_THROW(reconstruct_row(r.knowledge, "v3", "v5", {2, 2}, {2, 2}, kField), SchemeError);
  EXPECT_THROW(reconstruct_row(r.knowledge, "v3", "v5", {1, 3}, {2, 2}, kField), SchemeError);
}

TEST(DecodeCheck, Examples) {
  const SymbolSpace two_a(2, 0);
  EXPECT_TRUE(decode_check({Row{1, 0}, Row{0, 1}}, two_a, 1, kField));
  const SymbolSpace one_each(1, 1);
  EXPECT_FALSE(decode_check({Row{1, 1}}, one_each, 1, kField));
  EXPECT_TRUE(decode_check({Row{1, 1}, Row{0, 5}}, one_each, 1, kField));
  EXPECT_TRUE(decode_check({Row{1, 1}, Row{0, 5}}, one_each, 2, kField));
  EXPECT_FALSE(decode_check({}, one_each, 2, kField));
}

TEST(AchievedDof, Examples) {
  for (const auto& [b, d1, d2] : {std::tuple{scheme_example1(), Rational(2, 3), Rational(1)},
                                   std::tuple{scheme_example2(), Rational(1), Rational(1)},
                                   std::tuple{scheme_two_bounds(2), Rational(2, 3), Rational(2, 3)},
                                   std::tuple{scheme_2d1d2(), Rational(1, 2), Rational(1)}}) {
    EXPECT_EQ(achieved_dof(b.program, b.space), std::pair(d1, d2)) << b.name;
  }
  EXPECT_THROW(achieved_dof(SchemeProgram{}, SymbolSpace(1, 1)), InvalidParams);
}

TEST(Simulate, LibrarySchemes) {
  const SimReport ex1 = simulate(fig3d1d2(), scheme_example1().program, scheme_example1().space, 100, 0);
  EXPECT_EQ(ex1.decode_d1(), 100);
  EXPECT_EQ(ex1.decode_d2(), 100);
  ASSERT_TRUE(ex1.achieved.has_value());
  EXPECT_EQ(*ex1.achieved, std::pair(Rational(2, 3), Rational(1)));
  const SchemeBundle ex2 = scheme_example2();
  const SimReport r2 = simulate(ex2.network, ex2.program, ex2.space, 100, 3);
  EXPECT_EQ(r2.decode_d1(), 100);
  EXPECT_EQ(*r2.achieved, std::pair(Rational(1), Rational(1)));
}

TEST(Simulate, MissingEquationNeverDecodes) {
  SchemeBundle b = scheme_example1();
  b.program.hops[2].actions[2].clear();  // drop d2's third equation
  const SimReport r = simulate(b.network, b.program, b.space, 100, 0);
  EXPECT_EQ(r.decode_d1(), 100);
  EXPECT_EQ(r.decode_d2(), 0);
  EXPECT_FALSE(r.achieved.has_value());
}

TEST(Simulate, DeterministicForSeed) {
  const SchemeBundle b = scheme_two_bounds(3);
  const auto a = simulate(b.network, b.program, b.space, 10, 7);
  const auto c = simulate(b.network, b.program, b.space, 10, 7);
  EXPECT_EQ(to_json(a), to_json(c));
  EXPECT_THROW(simulate(b.network, b.program, b.space, 0, 7), InvalidParams);
}

TEST(SimReportJson, Format) {
  const SchemeBundle b = scheme_2d1d2();
  const std::string json = to_json(simulate(b.network, b.program, b.space, 3, 5));
  EXPECT_EQ(json,
            "{\n  \"achieved_dof\": [\n    \"1/2\",\n    \"1\"\n  ],\n  \"decode_d1\": 3,\n  \"decode_d2\": 3,\n"
            "  \"seed\": 5,\n  \"trials\": 3\n}\n");
}

TEST(SchemeJson, RoundTrip) {
  for (const SchemeBundle& b : {scheme_example1(), scheme_example2(), scheme_two_bounds(3)}) {
    const auto [program, space] = scheme_from_json(scheme_to_json(b.program, b.space));
    EXPECT_EQ(program, b.program) << b.name;
    EXPECT_EQ(space, b.space);
  }
}

TEST(SchemeJson, Errors) {
  EXPECT_THROW(scheme_from_json("[]"), ParseError);
  EXPECT_THROW(scheme_from_json(R"({"p":1,"q":1,"hops":[{"slots":2,"actions":[{}]}]})"), ParseError);
  EXPECT_THROW(scheme_from_json(R"({"p":1,"q":1,"hops":[{"slots":1,"actions":[{"v1":[{"ref":"nope"}]}]}]})"),
               ParseError);
  EXPECT_THROW(scheme_from_json(R"({"p":1,"q":1,"hops":[{"slots":1,"actions":[{"v1":[{"ref":"symbol","symbol":"a7"}]}]}]})"),
               ParseError);
  EXPECT_THROW(scheme_from_json(R"({"p":1,"q":1,"hops":[],"x":0})"), ParseError);
}
