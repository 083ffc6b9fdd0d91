#include "dofb/verify/acceptance.hpp"

#include <fstream>
#include <sstream>

#include "dofb/bottleneck.hpp"
#include "dofb/families.hpp"
#include "dofb/region.hpp"
#include "dofb/schemes.hpp"
#include "dofb/verify/oracles.hpp"
#include "dofb/verify/properties.hpp"

namespace dofb::verify {

namespace {

// Collects sub-checks of one criterion; the criterion passes when all do.
class Checks {
 public:
  void expect(bool ok, const std::string& what, const std::string& got) {
    expected_.push_back(what);
    computed_.push_back(got);
    pass_ = pass_ && ok;
    if (!ok) failed_.push_back(what);
  }

  CriterionResult finish(int id, std::string name) const {
    CriterionResult r{id, std::move(name), join(expected_), join(computed_), pass_};
    if (!failed_.empty()) r.computed += " [failed: " + join(failed_) + "]";
    return r;
  }

 private:
  static std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const std::string& s : items) out += (out.empty() ? "" : "; ") + s;
    return out;
  }

  std::vector<std::string> expected_;
  std::vector<std::string> computed_;
  std::vector<std::string> failed_;
  bool pass_ = true;
};

std::string pair_text(const Rational& a, const Rational& b) { return "(" + to_string(a) + "," + to_string(b) + ")"; }

std::string set_text(const NodeSet& s) {
  std::string out = "{";
  for (const NodeId& n : s) out += (out.size() > 1 ? "," : "") + n;
  return out + "}";
}

std::string vertices_text(const DofRegion& region) {
  std::string out;
  for (const DofPoint& p : region.vertices()) out += to_string(p);
  return out;
}

std::optional<std::string> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void compare_golden(Checks& checks, const AcceptanceOptions& options, const std::string& file,
                    const std::string& actual) {
  if (!options.golden_dir) return;
  const auto stored = read_file(*options.golden_dir / file);
  checks.expect(stored && *stored == actual, "golden " + file + " matches",
                stored ? (*stored == actual ? "identical" : "differs") : "missing");
}

struct SimSummary {
  int decoded = 0;
  int trials = 0;
  std::optional<std::pair<Rational, Rational>> achieved;
};

SimSummary simulate_bundle(const SchemeBundle& b, const AcceptanceOptions& options, std::uint64_t seed) {
  const SimReport r = simulate(b.network, b.program, b.space, options.trials, seed);
  return {std::min(r.decode_d1(), r.decode_d2()), r.trials, r.achieved};
}

std::string decode_text(const SimSummary& s) {
  return std::to_string(s.decoded) + "/" + std::to_string(s.trials) + " achieved " +
         (s.achieved ? pair_text(s.achieved->first, s.achieved->second) : std::string("none"));
}

bool achieves(const SimSummary& s, const Rational& d1, const Rational& d2) {
  return s.decoded == s.trials && s.achieved && s.achieved->first == d1 && s.achieved->second == d2;
}

CriterionResult criterion_fig3(const AcceptanceOptions& options) {
  Checks c;
  const LayeredNetwork net = fig3d1d2();
  const auto certs = find_all_bottlenecks(net);
  const bool one = certs.size() == 1;
  c.expect(one && certs[0].dest == 1 && certs[0].node == "v5" && certs[0].parent_set == NodeSet{"v2", "v3", "v4"} &&
               certs[0].rho == 3,
           "one d1 certificate v5 M={v2,v3,v4} rho=3",
           std::to_string(certs.size()) + " certificate(s)" +
               (one ? " d" + std::to_string(certs[0].dest) + " " + certs[0].node + " M=" + set_text(certs[0].parent_set) +
                          " rho=" + std::to_string(certs[0].rho)
                    : ""));
  if (one) {
    const std::string bound = to_string(bottleneck_bound(certs[0]));
    c.expect(bound == "3 D1 + D2 <= 3", "bound 3 D1 + D2 <= 3", bound);
  }
  const DofRegion region = build_region(certs);
  const std::vector<DofPoint> want{{0, 0}, {1, 0}, {Rational(2, 3), 1}, {0, 1}};
  c.expect(region.vertices() == want, "vertices (0,0)(1,0)(2/3,1)(0,1)", vertices_text(region));
  const Rational sum = sum_dof(region);
  c.expect(sum == Rational(5, 3), "sum DoF 5/3", to_string(sum));
  compare_golden(c, options, "fig-3d1d2.json", serialize_network(net));
  compare_golden(c, options, "fig-3d1d2-region.csv", region_csv(region));
  return c.finish(1, "fig-3d1d2 bottleneck and region");
}

CriterionResult criterion_fig2(const AcceptanceOptions& options) {
  Checks c;
  const LayeredNetwork net = fig2d1d2();
  const auto d1 = find_bottlenecks(net, 1);
  const bool found = !d1.empty() && d1[0].node == "v4" && d1[0].rho == 2;
  c.expect(found, "d1 certificate v4 rho=2",
           d1.empty() ? "none" : d1[0].node + " rho=" + std::to_string(d1[0].rho));
  if (!d1.empty()) {
    const std::string bound = to_string(bottleneck_bound(d1[0]));
    c.expect(bound == "2 D1 + D2 <= 2", "bound 2 D1 + D2 <= 2", bound);
  }
  const SchemeBundle b = scheme_2d1d2();
  for (std::uint64_t k = 0; k < 5; ++k) {
    const SimSummary s = simulate_bundle(b, options, options.seed + k);
    c.expect(achieves(s, Rational(1, 2), 1), "seed " + std::to_string(options.seed + k) + " all decode (1/2,1)",
             decode_text(s));
  }
  compare_golden(c, options, "fig-2d1d2.json", serialize_network(net));
  return c.finish(2, "fig-2d1d2 bound and (1/2,1) scheme");
}

CriterionResult criterion_full_dof(const AcceptanceOptions& options) {
  Checks c;
  for (const auto& [name, net] : {std::pair{std::string("fig-full-dof"), fig_full_dof()},
                                  std::pair{std::string("d1d2-one-half"), d1d2_one_half()}}) {
    const auto certs = find_all_bottlenecks(net);
    const auto omni = find_omniscient(net);
    c.expect(certs.empty() && omni.empty(), name + " no certificates, no omniscient nodes",
             std::to_string(certs.size()) + " certificates, " + std::to_string(omni.size()) + " omniscient");
    compare_golden(c, options, name + ".json", serialize_network(net));
  }
  const SimSummary s = simulate_bundle(scheme_example2(), options, options.seed);
  c.expect(achieves(s, 1, 1), "example2 all decode (1,1)", decode_text(s));
  return c.finish(3, "full-DoF networks have no bottlenecks");
}

CriterionResult criterion_m_d1d2(const AcceptanceOptions& options) {
  Checks c;
  for (int m = 2; m <= 8; ++m) {
    const SchemeBundle b = scheme_m_d1d2(m);
    const auto certs = find_all_bottlenecks(b.network);
    std::size_t rho = 0;
    for (const auto& cert : certs) {
      if (cert.dest == 1 && (rho == 0 || cert.rho < rho)) rho = cert.rho;
    }
    const SimSummary s = simulate_bundle(b, options, options.seed);
    const Rational d1(m - 1, m);
    const bool vertex = build_region(certs).is_vertex({d1, 1});
    c.expect(rho == static_cast<std::size_t>(m) && achieves(s, d1, 1) && vertex,
             "m=" + std::to_string(m) + " rho=" + std::to_string(m) + " achieves " + pair_text(d1, 1) + " vertex",
             "rho=" + std::to_string(rho) + " " + decode_text(s) + (vertex ? " vertex" : " not a vertex"));
  }
  return c.finish(4, "m-d1d2 tightness for m=2..8");
}

CriterionResult criterion_two_bounds(const AcceptanceOptions& options) {
  Checks c;
  for (int m = 2; m <= 6; ++m) {
    const SchemeBundle b = scheme_two_bounds(m);
    const auto certs = find_all_bottlenecks(b.network);
    const bool shape = certs.size() == 2 && certs[0].dest == 1 && certs[1].dest == 2 &&
                       certs[0].rho == static_cast<std::size_t>(m) && certs[1].rho == static_cast<std::size_t>(m);
    const Rational sum = sum_dof(build_region(certs));
    const Rational want = 2 - Rational(2, m + 1);
    const SimSummary s = simulate_bundle(b, options, options.seed);
    const Rational point(m, m + 1);
    std::string rhos;
    for (const auto& cert : certs) rhos += (rhos.empty() ? "" : ",") + std::to_string(cert.rho);
    const std::string label = "two-bounds m=" + std::to_string(m) + " | sum ";
    c.expect(shape && sum == want && in_S(sum) && achieves(s, point, point),
             label + to_string(want) + " | in_S yes | rho=" + std::to_string(m) + "," + std::to_string(m) + " | " +
                 pair_text(point, point),
             label + to_string(sum) + " | in_S " + (in_S(sum) ? "yes" : "no") + " | rho=" + rhos + " | " +
                 decode_text(s));
  }
  return c.finish(5, "two-bounds sum DoF in S for m=2..6");
}

CriterionResult criterion_set_size(const AcceptanceOptions&) {
  Checks c;
  Rational previous = -1;
  for (int k = 0; k <= 5; ++k) {
    const LayeredNetwork net = set_size_to_rank(k);
    const auto certs = find_bottlenecks(net, 1);
    if (certs.empty()) {
      c.expect(false, "k=" + std::to_string(k) + " has a d1 certificate", "none");
      continue;
    }
    const BoundGap gap = compare_bounds(bottleneck_bound(certs[0]), prior_bound(certs[0], net));
    const Rational want(2 + k, 3 + k);
    const bool ok = certs[0].rho == 3 && gap.new_intercept == Rational(2, 3) && gap.prior_intercept == want &&
                    gap.prior_intercept > previous && gap.prior_intercept < 1;
    c.expect(ok, "k=" + std::to_string(k) + " rho=3 prior intercept " + to_string(want),
             "k=" + std::to_string(k) + " rho=" + std::to_string(certs[0].rho) + " prior intercept " +
                 to_string(gap.prior_intercept));
    previous = gap.prior_intercept;
  }
  return c.finish(6, "set-size bound gap grows with k");
}

CriterionResult criterion_rank_oracle(const AcceptanceOptions& options) {
  Checks c;
  int agree = 0;
  int bounded = 0;
  const PrimeField field;
  constexpr int kPatterns = 200;
  constexpr int kDraws = 8;
  for (int i = 0; i < kPatterns; ++i) {
    prop::Rng rng(mix_seed(options.seed ^ 0x7a11, static_cast<std::uint64_t>(i)));
    const SupportPattern p = prop::random_pattern(rng, 8, 8);
    const std::size_t rank = structural_rank(p);
    if (rank == oracle::brute_force_rank(p)) ++agree;
    bool ok = true;
    for (int d = 0; d < kDraws; ++d) {
      const auto gains = GainAssignment::draw_for_pattern(p, field, rng());
      ok = ok && field_rank(p, gains, field) <= rank;
    }
    if (ok) ++bounded;
  }
  c.expect(agree == kPatterns, "structural rank equals brute force on 200 patterns",
           std::to_string(agree) + "/" + std::to_string(kPatterns));
  c.expect(bounded == kPatterns, "field rank <= structural rank on 8 draws each",
           std::to_string(bounded) + "/" + std::to_string(kPatterns));
  return c.finish(7, "rank oracle equivalence");
}

std::string witness_text(const Expressibility& e) {
  const auto side = [](const std::optional<std::int64_t>& m) { return m ? std::to_string(*m) : std::string("inf"); };
  return e.expressible ? "expressible (" + side(e.m1) + "," + side(e.m2) + ")" : "not expressible";
}

CriterionResult criterion_expressibility(const AcceptanceOptions&) {
  Checks c;
  const Expressibility half = expressible_by_bottleneck_bounds(DofRegion({HalfPlane(1, 1, Rational(3, 2))}));
  c.expect(!half.expressible, "D1 + D2 <= 3/2 not expressible", witness_text(half));
  const Expressibility fig3 = expressible_by_bottleneck_bounds(build_region(find_all_bottlenecks(fig3d1d2())));
  c.expect(fig3.expressible && fig3.m1 == 3 && !fig3.m2, "fig-3d1d2 expressible (3,inf)", witness_text(fig3));
  return c.finish(8, "expressibility by bottleneck bounds");
}

CriterionResult criterion_properties(const AcceptanceOptions& options) {
  Checks c;
  int total = 0;
  for (const prop::PropertyOutcome& o : prop::run_property_suite(options.seed)) {
    total += o.cases;
    c.expect(o.passed(), o.name, std::to_string(o.cases - o.failures) + "/" + std::to_string(o.cases) +
                                     (o.counterexample.empty() ? "" : " " + o.counterexample));
  }
  c.expect(total >= 1000, ">= 1000 cases", std::to_string(total) + " cases");
  return c.finish(9, "property suite");
}

CriterionResult criterion_degraded_bc(const AcceptanceOptions& options) {
  Checks c;
  std::vector<LayeredNetwork> nets{fig3d1d2(), fig2d1d2()};
  for (int m = 2; m <= 8; ++m) nets.push_back(m_d1d2(m));
  for (int m = 2; m <= 6; ++m) nets.push_back(two_bounds(m));
  int checked = 0;
  int good = 0;
  std::string first_bad;
  for (const LayeredNetwork& net : nets) {
    for (const BottleneckCertificate& cert : find_all_bottlenecks(net)) {
      ++checked;
      const BcModel bc = construct_degraded_bc(net, cert, options.seed);
      SupportPattern rx2(bc.rx2_nodes, bc.tx_nodes);
      for (std::size_t r = 0; r < bc.rx2_rows.size(); ++r) {
        for (std::size_t t = 0; t < bc.tx_nodes.size(); ++t) rx2.set(r, t, bc.rx2_rows[r][t]);
      }
      const bool ok = bc.rx2_rows.size() == cert.rho && !bc.rx2_nodes.empty() && bc.rx2_nodes[0] == cert.node &&
                      bc.rx2_rows[0] == bc.rx1_row && oracle::brute_force_rank(rx2) == cert.rho;
      if (ok) {
        ++good;
      } else if (first_bad.empty()) {
        first_bad = " first failure at " + cert.node;
      }
    }
  }
  c.expect(good == checked && checked > 0, "every certificate gives rank-rho rx2 with row 0 = bottleneck row",
           std::to_string(good) + "/" + std::to_string(checked) + first_bad);
  return c.finish(10, "degraded broadcast construction");
}

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
  using Fn = CriterionResult (*)(const AcceptanceOptions&);
  static constexpr Fn table[kCriterionCount] = {
      criterion_fig3,       criterion_fig2,         criterion_full_dof, criterion_m_d1d2,
      criterion_two_bounds, criterion_set_size,     criterion_rank_oracle, criterion_expressibility,
      criterion_properties, criterion_degraded_bc,
  };
  if (id < 1 || id > kCriterionCount) return {id, "unknown criterion", "", "", false};
  try {
    return table[id - 1](options);
  } catch (const std::exception& e) {
    return {id, "criterion " + std::to_string(id), "no error", std::string("exception: ") + e.what(), false};
  }
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, options));
  return out;
}

std::string format_line(const CriterionResult& r) {
  return std::string(r.pass ? "PASS" : "FAIL") + "  " + std::to_string(r.id) + "  " + r.name +
         " | expected: " + r.expected + " | computed: " + r.computed;
}

}  // namespace dofb::verify
