#include <string>

#include "dofb/scheme.hpp"
#include "json.hpp"

namespace dofb {

using nlohmann::json;

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

json term_to_json(const Term& term, const SymbolSpace& space) {
  json out = json::object();
  out["weight"] = term.weight;
  std::visit(Overloaded{
                 [&](const ref::Symbol& s) {
                   out["ref"] = "symbol";
                   out["symbol"] = space.name(s.column);
                 },
                 [&](const ref::Reception& r) {
                   out["ref"] = "reception";
                   out["hop"] = r.at.hop;
                   out["slot"] = r.at.slot;
                 },
                 [&](const ref::Reconstructed& r) {
                   out["ref"] = "reconstructed";
                   out["node"] = r.target;
                   out["hop"] = r.at.hop;
                   out["slot"] = r.at.slot;
                 },
                 [&](const ref::Cleaned& c) {
                   out["ref"] = "cleaned";
                   out["hop"] = c.at.hop;
                   out["slot"] = c.at.slot;
                   out["keep"] = c.keep_session == 1 ? "a" : "b";
                 },
             },
             term.source);
  return out;
}

int read_int(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw ParseError(std::string("\"") + key + "\" must be an integer");
  }
  return j.at(key).get<int>();
}

std::string read_string(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string()) {
    throw ParseError(std::string("\"") + key + "\" must be a string");
  }
  return j.at(key).get<std::string>();
}

SlotRef read_slot(const json& j) { return {read_int(j, "hop"), read_int(j, "slot")}; }

Term term_from_json(const json& j, const SymbolSpace& space) {
  if (!j.is_object()) throw ParseError("term must be an object");
  Term term;
  if (j.contains("weight")) {
    if (!j.at("weight").is_number_unsigned() || j.at("weight").get<std::uint64_t>() == 0) {
      throw ParseError("\"weight\" must be a positive integer");
    }
    term.weight = j.at("weight").get<std::uint64_t>();
  }
  const std::string kind = read_string(j, "ref");
  if (kind == "symbol") {
    try {
      term.source = ref::Symbol{space.column_of(read_string(j, "symbol"))};
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  } else if (kind == "reception") {
    term.source = ref::Reception{read_slot(j)};
  } else if (kind == "reconstructed") {
    term.source = ref::Reconstructed{read_string(j, "node"), read_slot(j)};
  } else if (kind == "cleaned") {
    const std::string keep = read_string(j, "keep");
    if (keep != "a" && keep != "b") throw ParseError("\"keep\" must be \"a\" or \"b\"");
    term.source = ref::Cleaned{read_slot(j), keep == "a" ? 1 : 2};
  } else {
    throw ParseError("unknown ref kind: " + kind);
  }
  return term;
}

}  // namespace

std::string to_json(const SimReport& report) {
  json out = json::object();
  out["trials"] = report.trials;
  out["seed"] = report.seed;
  out["decode_d1"] = report.decode_d1();
  out["decode_d2"] = report.decode_d2();
  if (report.achieved) {
    out["achieved_dof"] = json::array({to_string(report.achieved->first), to_string(report.achieved->second)});
  } else {
    out["achieved_dof"] = nullptr;
  }
  return out.dump(2) + "\n";
}

std::string scheme_to_json(const SchemeProgram& scheme, const SymbolSpace& space) {
  json hops = json::array();
  for (const HopPlan& hop : scheme.hops) {
    json slots = json::array();
    for (const auto& actions : hop.actions) {
      json slot = json::object();
      for (const auto& [node, spec] : actions) {
        json terms = json::array();
        for (const Term& t : spec) terms.push_back(term_to_json(t, space));
        slot[node] = std::move(terms);
      }
      slots.push_back(std::move(slot));
    }
    hops.push_back(json{{"slots", hop.slots}, {"actions", std::move(slots)}});
  }
  json out{{"p", space.p}, {"q", space.q}, {"hops", std::move(hops)}};
  return out.dump(2) + "\n";
}

std::pair<SchemeProgram, SymbolSpace> scheme_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("scheme document must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "p" && key != "q" && key != "hops") throw ParseError("unknown key: " + key);
  }
  SymbolSpace space = [&] {
    try {
      return SymbolSpace(read_int(doc, "p"), read_int(doc, "q"));
    } catch (const InvalidParams& e) {
      throw ParseError(e.what());
    }
  }();
  if (!doc.contains("hops") || !doc.at("hops").is_array()) throw ParseError("\"hops\" must be an array");

  SchemeProgram program;
  for (const json& h : doc.at("hops")) {
    if (!h.is_object()) throw ParseError("hop must be an object");
    const int slots = read_int(h, "slots");
    if (slots < 1) throw ParseError("\"slots\" must be at least 1");
    if (!h.contains("actions") || !h.at("actions").is_array() ||
        h.at("actions").size() != static_cast<std::size_t>(slots)) {
      throw ParseError("\"actions\" must be an array with one entry per slot");
    }
    HopPlan plan(slots);
    for (int t = 0; t < slots; ++t) {
      const json& slot = h.at("actions")[static_cast<std::size_t>(t)];
      if (!slot.is_object()) throw ParseError("slot actions must be an object");
      for (const auto& [node, terms] : slot.items()) {
        if (!terms.is_array()) throw ParseError("actions of " + node + " must be an array");
        RowSpec spec;
        for (const json& term : terms) spec.push_back(term_from_json(term, space));
        plan.send(t + 1, node, std::move(spec));
      }
    }
    program.hops.push_back(std::move(plan));
  }
  return {std::move(program), space};
}

}  // namespace dofb
