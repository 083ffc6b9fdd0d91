#include "dofb/cli.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "dofb/bottleneck.hpp"
#include "dofb/families.hpp"
#include "dofb/network.hpp"
#include "dofb/region.hpp"
#include "dofb/schemes.hpp"
#include "dofb/verify/acceptance.hpp"
#include "json.hpp"

namespace dofb::cli {

namespace {

using json = nlohmann::ordered_json;

struct Config {
  std::string family;
  int m = 2;
  int k = 0;
  std::string net;
  std::string scheme;
  int trials = 100;
  std::uint64_t seed = 0;
  std::size_t subset_cap = kDefaultSubsetCap;
  std::string out;
  std::vector<std::size_t> layers{3, 3};
  double density = 0.5;
  std::string golden_dir;
};

struct Input {
  LayeredNetwork network;
  std::optional<FamilyParams> family;
  std::string label;
};

// Raised for problems with the command line itself (exit 2).
struct UsageError : Error {
  using Error::Error;
};

// Scheme and network do not belong together (exit 4).
struct SchemeMismatch : Error {
  using Error::Error;
};

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw UsageError("cannot write " + path);
}

FamilyParams family_params(const Config& cfg) {
  const auto family = parse_family(cfg.family);
  if (!family) throw UsageError("unknown family: " + cfg.family);
  FamilyParams p;
  p.family = *family;
  p.m = cfg.m;
  p.k = cfg.k;
  p.random.relay_layer_sizes = cfg.layers;
  p.random.density = cfg.density;
  p.random.seed = cfg.seed;
  return p;
}

Input load_input(const Config& cfg) {
  if (cfg.net.empty() == cfg.family.empty()) throw UsageError("give exactly one of --net or --family");
  if (!cfg.net.empty()) return {parse_network(read_text(cfg.net)), std::nullopt, cfg.net};
  const FamilyParams params = family_params(cfg);
  return {gen_family(params), params, cfg.family};
}

json parsed(const std::string& text) { return json::parse(text); }

json optional_int(const std::optional<std::int64_t>& v) { return v ? json(*v) : json(nullptr); }

int cmd_generate(const Config& cfg, std::ostream& out) {
  if (cfg.family.empty()) throw UsageError("generate needs --family");
  const LayeredNetwork net = gen_family(family_params(cfg));
  const std::string text = serialize_network(net);
  if (cfg.out.empty()) {
    out << text;
  } else {
    write_text(cfg.out, text);
    out << json{{"family", cfg.family}, {"out", cfg.out}, {"nodes", net.node_count()}}.dump(2) << "\n";
  }
  return kOk;
}

int cmd_analyze(const Config& cfg, std::ostream& out) {
  const Input in = load_input(cfg);
  const auto certs = find_all_bottlenecks(in.network, cfg.subset_cap);

  json omniscient = json::array();
  for (const OmniscientCertificate& o : find_omniscient(in.network)) {
    omniscient.push_back({{"dest", o.dest}, {"node", o.node}, {"witness", o.witness}});
  }
  json certificates = json::array();
  json bounds = json::array();
  json prior = json::array();
  json gaps = json::array();
  for (const BottleneckCertificate& c : certs) {
    certificates.push_back(parsed(to_json(c)));
    const HalfPlane now = bottleneck_bound(c);
    const HalfPlane old = prior_bound(c, in.network, cfg.subset_cap);
    bounds.push_back(to_string(now));
    prior.push_back(to_string(old));
    const BoundGap g = compare_bounds(now, old);
    gaps.push_back({{"dest", g.dest},
                    {"new_intercept", to_string(g.new_intercept)},
                    {"prior_intercept", to_string(g.prior_intercept)},
                    {"gap", to_string(g.gap)}});
  }
  const DofRegion region = build_region(certs);
  const Rational sum = sum_dof(region);
  const Expressibility e = expressible_by_bottleneck_bounds(region);

  json report = {
      {"network", in.label},
      {"subset_cap", cfg.subset_cap},
      {"omniscient", omniscient},
      {"certificates", certificates},
      {"bounds", bounds},
      {"prior_bounds", prior},
      {"bound_gaps", gaps},
      {"region", parsed(region_json(region))},
      {"prior_region", parsed(region_json(build_prior_region(certs)))},
      {"sum_dof", to_string(sum)},
      {"in_S", in_S(sum)},
      {"expressible", {{"expressible", e.expressible}, {"m1", optional_int(e.m1)}, {"m2", optional_int(e.m2)}}},
  };
  out << report.dump(2) << "\n";
  return kOk;
}

bool is_file(const std::string& path) {
  std::error_code ec;
  return std::filesystem::is_regular_file(path, ec);
}

SchemeBundle resolve_scheme(const Config& cfg, const Input& in) {
  if (!cfg.scheme.empty() && is_file(cfg.scheme)) {
    auto [program, space] = scheme_from_json(read_text(cfg.scheme));
    return {cfg.scheme, in.network, std::move(program), space};
  }
  std::optional<SchemeBundle> bundle;
  if (!cfg.scheme.empty()) {
    try {
      bundle = scheme_by_name(cfg.scheme, cfg.m);
    } catch (const InvalidParams& e) {
      throw UsageError(e.what());
    }
  } else if (in.family) {
    bundle = scheme_for_family(*in.family);
  }
  if (!bundle) throw UsageError("no built-in scheme for this network; pass --scheme");
  if (!(bundle->network == in.network)) {
    throw SchemeMismatch("scheme " + bundle->name + " does not run on network " + in.label);
  }
  return *bundle;
}

int cmd_simulate(const Config& cfg, std::ostream& out, std::ostream& err) {
  const Input in = load_input(cfg);
  const SchemeBundle bundle = resolve_scheme(cfg, in);
  const PrimeField field = PrimeField::from_environment();
  SimReport report;
  try {
    report = simulate(in.network, bundle.program, bundle.space, cfg.trials, cfg.seed, field);
  } catch (const SchemeError& e) {
    throw SchemeMismatch(e.what());
  }
  out << to_json(report);
  if (report.decode_d1() < report.trials || report.decode_d2() < report.trials) {
    err << "decode failure: d1 " << report.decode_d1() << "/" << report.trials << ", d2 " << report.decode_d2() << "/"
        << report.trials << "\n";
    return kDecodeFailure;
  }
  return kOk;
}

int cmd_scheme(const Config& cfg, std::ostream& out) {
  if (cfg.scheme.empty()) throw UsageError("scheme needs --scheme");
  SchemeBundle bundle = [&] {
    try {
      return scheme_by_name(cfg.scheme, cfg.m);
    } catch (const InvalidParams& e) {
      throw UsageError(e.what());
    }
  }();
  const std::string text = scheme_to_json(bundle.program, bundle.space);
  if (cfg.out.empty()) {
    out << text;
  } else {
    write_text(cfg.out, text);
    out << json{{"scheme", bundle.name}, {"out", cfg.out}}.dump(2) << "\n";
  }
  return kOk;
}

int cmd_region(const Config& cfg, std::ostream& out) {
  const Input in = load_input(cfg);
  const DofRegion region = build_region(find_all_bottlenecks(in.network, cfg.subset_cap));
  if (!cfg.out.empty()) write_text(cfg.out, region_csv(region));
  out << region_json(region);
  return kOk;
}

int cmd_verify_all(const Config& cfg, std::ostream& out, std::ostream& err) {
  verify::AcceptanceOptions options;
  options.seed = cfg.seed;
  options.trials = cfg.trials;
  if (!cfg.golden_dir.empty()) options.golden_dir = cfg.golden_dir;

  json rows = json::array();
  int failed = 0;
  for (const verify::CriterionResult& r : verify::run_acceptance(options)) {
    err << verify::format_line(r) << "\n";
    if (!r.pass) ++failed;
    rows.push_back({{"id", r.id}, {"name", r.name}, {"expected", r.expected}, {"computed", r.computed}, {"pass", r.pass}});
  }
  out << json{{"seed", cfg.seed}, {"criteria", rows}, {"failed", failed}}.dump(2) << "\n";
  return failed == 0 ? kOk : kAcceptanceFailure;
}

void add_input_options(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--net", cfg.net, "Network JSON file");
  cmd->add_option("--family", cfg.family, "Generator family");
  cmd->add_option("--m", cfg.m, "Family parameter m");
  cmd->add_option("--k", cfg.k, "Family parameter k");
  cmd->add_option("--layers", cfg.layers, "Relay layer sizes for the random family")->delimiter(',');
  cmd->add_option("--density", cfg.density, "Edge density for the random family");
  cmd->add_option("--seed", cfg.seed, "Random seed");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Bottleneck analysis and scheme simulation for layered two-unicast networks", "dofb"};
  app.require_subcommand(1);

  auto* generate = app.add_subcommand("generate", "Write a generated network as JSON");
  add_input_options(generate, cfg);
  generate->add_option("--out", cfg.out, "Output file");

  auto* analyze = app.add_subcommand("analyze", "Bottleneck certificates, bounds and region");
  add_input_options(analyze, cfg);
  analyze->add_option("--subset-cap", cfg.subset_cap, "Largest parent set to enumerate")->check(CLI::PositiveNumber);

  auto* sim = app.add_subcommand("simulate", "Run a transmission scheme over random gains");
  add_input_options(sim, cfg);
  sim->add_option("--scheme", cfg.scheme, "Built-in scheme name or scheme JSON file");
  sim->add_option("--trials", cfg.trials, "Number of gain draws")->check(CLI::PositiveNumber);

  auto* scheme = app.add_subcommand("scheme", "Export a built-in scheme as JSON");
  scheme->add_option("--scheme", cfg.scheme, "Built-in scheme name")->required();
  scheme->add_option("--m", cfg.m, "Scheme parameter m");
  scheme->add_option("--out", cfg.out, "Output file");

  auto* region = app.add_subcommand("region", "Outer-bound region vertices");
  add_input_options(region, cfg);
  region->add_option("--subset-cap", cfg.subset_cap, "Largest parent set to enumerate")->check(CLI::PositiveNumber);
  region->add_option("--out", cfg.out, "CSV output file");

  auto* verify_all = app.add_subcommand("verify-all", "Run every acceptance criterion");
  verify_all->add_option("--seed", cfg.seed, "Random seed");
  verify_all->add_option("--trials", cfg.trials, "Gain draws per simulation")->check(CLI::PositiveNumber);
  verify_all->add_option("--golden-dir", cfg.golden_dir, "Directory of reference files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    err << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (generate->parsed()) return cmd_generate(cfg, out);
    if (analyze->parsed()) return cmd_analyze(cfg, out);
    if (sim->parsed()) return cmd_simulate(cfg, out, err);
    if (scheme->parsed()) return cmd_scheme(cfg, out);
    if (region->parsed()) return cmd_region(cfg, out);
    if (verify_all->parsed()) return cmd_verify_all(cfg, out, err);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const SchemeMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kMismatch;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    for (const Violation& v : e.violations()) err << "  " << v.subject << ": " << v.message << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace dofb::cli
