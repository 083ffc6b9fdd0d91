#include "dofb/error.hpp"

#include <string>

namespace dofb {

namespace {

std::string summarize(const std::vector<Violation>& violations) {
  std::string out = "network violates " + std::to_string(violations.size()) + " invariant(s)";
  for (const Violation& v : violations) {
    out += "; " + v.message;
    if (!v.subject.empty()) out += " (" + v.subject + ")";
  }
  return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(summarize(violations)), violations_(std::move(violations)) {}

CapExceeded::CapExceeded(std::string node, std::size_t set_size, std::size_t cap)
    : Error("pruned parent set of " + node + " has " + std::to_string(set_size) +
            " nodes, above subset cap " + std::to_string(cap) + "; raise --subset-cap"),
      set_size_(set_size),
      cap_(cap) {}

}  // namespace dofb
