#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "dofb/verify/acceptance.hpp"

int main(int argc, char** argv) {
  dofb::verify::AcceptanceOptions options;
  std::string golden;
  CLI::App app{"Acceptance criteria"};
  app.add_option("--seed", options.seed, "Random seed");
  app.add_option("--trials", options.trials, "Gain draws per simulation");
  app.add_option("--golden-dir", golden, "Directory of reference files");
  CLI11_PARSE(app, argc, argv);
  if (!golden.empty()) options.golden_dir = golden;

  int failed = 0;
  for (const auto& r : dofb::verify::run_acceptance(options)) {
    std::cout << dofb::verify::format_line(r) << "\n";
    if (!r.pass) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
