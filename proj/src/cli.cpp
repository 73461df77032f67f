#include "rif/cli.hpp"

#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rif/calculus.hpp"
#include "rif/formula.hpp"
#include "rif/frame.hpp"
#include "rif/io.hpp"
#include "rif/semantics.hpp"
#include "rif/standard.hpp"

namespace rif {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

RoutleyFrame load_valid_frame(const std::string& spec) {
  RoutleyFrame frame = load_frame(spec);
  auto proto = frame.validate_proto();
  if (!proto.empty()) {
    std::string msg = "frame '" + spec + "' is not a proto frame:";
    for (const auto& v : proto) msg += " " + describe(frame, v);
    throw ValidationError(msg);
  }
  auto star = frame.validate_routley_if();
  if (!star.empty()) {
    std::string msg = "frame '" + spec + "' violates the star laws:";
    for (const auto& v : star) msg += " " + describe(frame, v);
    throw ValidationError(msg);
  }
  return frame;
}

std::string state_set_text(const RoutleyFrame& frame, StateSet set) {
  std::string out = "{";
  bool first = true;
  for (State s = 0; s < frame.size(); ++s)
    if (set_has(set, s)) {
      if (!first) out += ", ";
      out += frame.name_of(s);
      first = false;
    }
  return out + "}";
}

void print_valuation(const RoutleyFrame& frame, const Valuation& val, std::ostream& out) {
  for (const auto& [atom, filter] : val)
    out << "V(" << atom << ") = " << state_set_text(frame, filter) << "\n";
}

int cmd_parse(const std::string& text, bool as_pair, bool as_json, std::ostream& out) {
  json j;
  if (as_pair) {
    ConsequencePair pair = parse_pair(text);
    if (as_json) {
      j = {{"query", "parse"},
           {"kind", "pair"},
           {"rendered", render(pair)},
           {"lhs", render(pair.lhs)},
           {"rhs", render(pair.rhs)},
           {"atoms", atoms(pair)}};
      out << j.dump() << "\n";
    } else {
      out << render(pair) << "\n";
    }
  } else {
    FormulaPtr f = parse_formula(text);
    if (as_json) {
      j = {{"query", "parse"},
           {"kind", "formula"},
           {"rendered", render(f)},
           {"atoms", atoms(*f)},
           {"depth", f->depth()}};
      out << j.dump() << "\n";
    } else {
      out << render(f) << "\n";
    }
  }
  return kExitOk;
}

int cmd_frame_check(const std::string& spec, bool as_json, std::ostream& out) {
  RoutleyFrame frame = load_frame(spec);
  auto proto = frame.validate_proto();
  std::vector<FrameViolation> star;
  if (proto.empty()) star = frame.validate_routley_if();

  if (as_json) {
    json j = {{"query", "frame-check"},
              {"frame", spec},
              {"proto_ok", proto.empty()},
              {"routley_if_ok", proto.empty() && star.empty()},
              {"proto_violations", violations_to_json(frame, proto)},
              {"star_violations", violations_to_json(frame, star)}};
    out << j.dump() << "\n";
  } else {
    if (proto.empty() && star.empty()) {
      out << "ok: Routley information frame\n";
    } else {
      for (const auto& v : proto) out << "proto violation: " << describe(frame, v) << "\n";
      for (const auto& v : star) out << "star violation: " << describe(frame, v) << "\n";
    }
  }
  return kExitOk;
}

int cmd_frame_show(const std::string& name, bool as_json, std::ostream& out) {
  RoutleyFrame frame = load_frame(name);
  if (as_json) {
    json j = {{"query", "frame-show"}, {"frame", frame_to_json(frame)}};
    out << j.dump() << "\n";
  } else {
    out << frame_to_json(frame).dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_eval(const std::string& frame_spec, const std::string& valuation_path,
             const std::string& state_name, const std::string& formula_text,
             bool as_json, std::ostream& out) {
  RoutleyFrame frame = load_valid_frame(frame_spec);
  Valuation val = load_valuation(frame, valuation_path);
  auto state = frame.index_of(state_name);
  if (!state) throw UsageError("unknown state '" + state_name + "'");
  FormulaPtr f = parse_formula(formula_text);
  bool result = supports(frame, val, *state, *f);
  if (as_json) {
    json j = {{"query", "eval"},
              {"frame", frame_spec},
              {"state", state_name},
              {"formula", render(f)},
              {"supports", result}};
    out << j.dump() << "\n";
  } else {
    out << (result ? "supports" : "does not support") << "\n";
  }
  return kExitOk;
}

int cmd_valid(const std::string& frame_spec, const std::string& pair_text, int workers,
              bool as_json, std::ostream& out) {
  RoutleyFrame frame = load_valid_frame(frame_spec);
  ConsequencePair pair = parse_pair(pair_text);
  FrameValidity v = valid_in_frame(frame, pair, workers);
  if (as_json) {
    json j = {{"query", "valid"},
              {"frame", frame_spec},
              {"pair", render(pair)},
              {"valid", v.valid}};
    if (!v.valid) j["countermodel"] = countermodel_to_json(*v.countermodel);
    out << j.dump() << "\n";
  } else {
    if (v.valid) {
      out << "valid\n";
    } else {
      out << "invalid\n";
      out << "witness state: " << frame.name_of(v.countermodel->witness) << "\n";
      print_valuation(frame, v.countermodel->valuation, out);
    }
  }
  return kExitOk;
}

int cmd_countermodel(const std::string& pair_text, int max_size, int workers,
                     bool as_json, std::ostream& out) {
  if (max_size < 2 || max_size > enumeration_limit())
    throw UsageError("--max-size must be within 2.." + std::to_string(enumeration_limit()));
  ConsequencePair pair = parse_pair(pair_text);
  auto cm = find_countermodel(pair, max_size, workers);
  if (as_json) {
    json j = {{"query", "countermodel"},
              {"pair", render(pair)},
              {"max_size", max_size},
              {"found", cm.has_value()}};
    if (cm) j["countermodel"] = countermodel_to_json(*cm);
    out << j.dump() << "\n";
  } else {
    if (!cm) {
      out << "no countermodel with up to " << max_size << " states\n";
    } else {
      out << "countermodel found (" << cm->frame.size() << " states)\n";
      out << countermodel_to_json(*cm).dump(2) << "\n";
    }
  }
  return kExitOk;
}

int cmd_prove(const std::string& system_name, const std::string& pair_text, int depth,
              unsigned k_max, std::uint64_t max_nodes, bool as_json, std::ostream& out) {
  auto sys_id = system_from_name(system_name);
  if (!sys_id) throw UsageError("unknown system '" + system_name + "'");
  if (depth < 1) throw UsageError("--depth must be positive");
  ConsequencePair pair = parse_pair(pair_text);
  ProveOptions options;
  options.depth_bound = depth;
  options.k_max = k_max;
  options.node_budget = max_nodes;
  auto derivation = prove(system(*sys_id), pair, options);
  if (as_json) {
    json j = {{"query", "prove"},
              {"system", system_name},
              {"pair", render(pair)},
              {"depth", depth},
              {"k_max", k_max},
              {"proved", derivation.has_value()}};
    if (derivation) j["derivation"] = derivation_to_json(*derivation);
    out << j.dump() << "\n";
  } else {
    if (!derivation) {
      out << "unknown (not derived within the bounds)\n";
    } else {
      out << derivation_to_text(*derivation);
    }
  }
  return kExitOk;
}

int cmd_decide_kl(const std::string& pair_text, bool as_json, std::ostream& out) {
  ConsequencePair pair = parse_pair(pair_text);
  bool valid = decide_kl(pair);
  if (as_json) {
    json j = {{"query", "decide-kl"}, {"pair", render(pair)}, {"valid", valid}};
    out << j.dump() << "\n";
  } else {
    out << (valid ? "valid" : "invalid") << "\n";
  }
  return kExitOk;
}

int cmd_enumerate(int size, bool up_to_iso, bool count_only, bool as_json,
                  std::ostream& out) {
  if (size < 2 || size > enumeration_limit())
    throw UsageError("--size must be within 2.." + std::to_string(enumeration_limit()));
  if (count_only) {
    std::uint64_t count = count_routley_ifs(size, up_to_iso);
    if (as_json) {
      json j = {{"query", "enumerate"},
                {"size", size},
                {"up_to_iso", up_to_iso},
                {"count", count}};
      out << j.dump() << "\n";
    } else {
      out << count << "\n";
    }
    return kExitOk;
  }
  if (as_json) {
    json frames = json::array();
    std::uint64_t count = 0;
    enumerate_routley_ifs(size, up_to_iso, [&](const RoutleyFrame& frame) {
      frames.push_back(frame_to_json(frame));
      ++count;
      return true;
    });
    json j = {{"query", "enumerate"},
              {"size", size},
              {"up_to_iso", up_to_iso},
              {"count", count},
              {"frames", frames}};
    out << j.dump() << "\n";
  } else {
    enumerate_routley_ifs(size, up_to_iso, [&](const RoutleyFrame& frame) {
      out << frame_to_json(frame).dump() << "\n";
      return true;
    });
  }
  return kExitOk;
}

// The pinned example suite: facts about the built-in frames that must keep
// reproducing exactly. Each check is independent; failures do not stop the
// rest of the suite.
int cmd_paper_suite(bool as_json, std::ostream& out) {
  auto up = [](const RoutleyFrame& f, const char* s) {
    return f.principal_upset(*f.index_of(s));
  };
  auto states = [](const RoutleyFrame& f, std::initializer_list<const char*> names) {
    StateSet set = 0;
    for (const char* name : names) set |= state_bit(*f.index_of(name));
    return set;
  };

  std::vector<std::pair<std::string, std::function<bool()>>> checks;

  checks.emplace_back("fig1_left: ~~p |- p fails with V(p)={v,i} at t", [&] {
    RoutleyFrame f = builtin_frame("fig1_left");
    Valuation val{{"p", states(f, {"v", "i"})}};
    ConsequencePair pair = parse_pair("~~p |- p");
    State t = *f.index_of("t");
    return !valid_in_model(f, val, pair) && supports(f, val, t, *pair.lhs) &&
           !supports(f, val, t, *pair.rhs);
  });

  checks.emplace_back("fig1_right: p |- ~~p fails with V(p)={v,i} at v", [&] {
    RoutleyFrame f = builtin_frame("fig1_right");
    Valuation val{{"p", states(f, {"v", "i"})}};
    ConsequencePair pair = parse_pair("p |- ~~p");
    State v = *f.index_of("v");
    return !valid_in_model(f, val, pair) && supports(f, val, v, *pair.lhs) &&
           !supports(f, val, v, *pair.rhs);
  });

  checks.emplace_back("fig1_right: ~p & ~q |- ~(p | q) fails at s", [&] {
    RoutleyFrame f = builtin_frame("fig1_right");
    Valuation val{{"p", up(f, "t")}, {"q", up(f, "u")}};
    ConsequencePair pair = parse_pair("~p & ~q |- ~(p | q)");
    State s = *f.index_of("s");
    return !valid_in_model(f, val, pair) && supports(f, val, s, *pair.lhs) &&
           !supports(f, val, s, *pair.rhs);
  });

  checks.emplace_back("fig2_n5: distributivity fails at w", [&] {
    RoutleyFrame f = builtin_frame("fig2_n5");
    Valuation val{{"p", up(f, "w")}, {"q", up(f, "t")}, {"r", up(f, "v")}};
    ConsequencePair pair = parse_pair("p & (q | r) |- (p & q) | (p & r)");
    State w = *f.index_of("w");
    if (valid_in_model(f, val, pair) || !supports(f, val, w, *pair.lhs) ||
        supports(f, val, w, *pair.rhs))
      return false;
    FrameValidity fv = valid_in_frame(f, pair);
    return !fv.valid;
  });

  checks.emplace_back("fig2_n5: w supports q | r but neither disjunct", [&] {
    RoutleyFrame f = builtin_frame("fig2_n5");
    Valuation val{{"q", up(f, "t")}, {"r", up(f, "v")}};
    State w = *f.index_of("w");
    return supports(f, val, w, *parse_formula("q | r")) &&
           !supports(f, val, w, *parse_formula("q")) &&
           !supports(f, val, w, *parse_formula("r"));
  });

  checks.emplace_back("i supports every sample formula, e none", [&] {
    for (const char* name : {"fig1_left", "fig1_right", "fig2_n5", "ikl"}) {
      RoutleyFrame f = builtin_frame(name);
      auto filters = f.proper_filters();
      Valuation val{{"p", filters.front()}, {"q", filters.back()}};
      for (const char* text : {"p", "~p", "p | q", "~~p & (p | ~q)"}) {
        FormulaPtr g = parse_formula(text);
        if (!supports(f, val, f.top_i(), *g)) return false;
        if (supports(f, val, f.bottom_e(), *g)) return false;
      }
    }
    return true;
  });

  checks.emplace_back("fig1_left satisfies DN1 and DM2 but not DN2", [&] {
    RoutleyFrame f = builtin_frame("fig1_left");
    return check_condition(f, FrameCondition::DN1) &&
           check_condition(f, FrameCondition::DM2) &&
           !check_condition(f, FrameCondition::DN2);
  });

  checks.emplace_back("fig1_right satisfies DN2 but neither DN1 nor DM2", [&] {
    RoutleyFrame f = builtin_frame("fig1_right");
    return check_condition(f, FrameCondition::DN2) &&
           !check_condition(f, FrameCondition::DN1) &&
           !check_condition(f, FrameCondition::DM2);
  });

  checks.emplace_back("ikl satisfies DN1, DN2 and DM2", [&] {
    RoutleyFrame f = builtin_frame("ikl");
    return check_condition(f, FrameCondition::DN1) &&
           check_condition(f, FrameCondition::DN2) &&
           check_condition(f, FrameCondition::DM2);
  });

  checks.emplace_back("DM1 is valid on every builtin frame", [&] {
    ConsequencePair pair = parse_pair("~(p & q) |- ~p | ~q");
    for (const char* name : {"fig1_left", "fig1_right", "fig2_n5", "ikl"})
      if (!valid_in_frame(builtin_frame(name), pair).valid) return false;
    return true;
  });

  checks.emplace_back("DM2* and D* are valid on every builtin frame", [&] {
    ConsequencePair dm2s = parse_pair("~~p & ~~q |- ~(~p | ~q)");
    ConsequencePair ds = parse_pair("p & (~q | ~r) |- (p & ~q) | (p & ~r)");
    for (const char* name : {"fig1_left", "fig1_right", "fig2_n5", "ikl"}) {
      RoutleyFrame f = builtin_frame(name);
      if (!valid_in_frame(f, dm2s).valid) return false;
      if (!valid_in_frame(f, ds).valid) return false;
    }
    return true;
  });

  checks.emplace_back("KA is valid on ikl", [&] {
    return valid_in_frame(builtin_frame("ikl"), parse_pair("p & ~p |- q | ~q")).valid;
  });

  checks.emplace_back("decide-kl: KA and DN2 in, p |- q out", [&] {
    return decide_kl(parse_pair("p & ~p |- q | ~q")) &&
           decide_kl(parse_pair("~~p |- p")) && decide_kl(parse_pair("p |- ~~p")) &&
           !decide_kl(parse_pair("p |- q"));
  });

  checks.emplace_back("ikl has exactly the filters {i}, {s,i}, {t,s,i}", [&] {
    RoutleyFrame f = builtin_frame("ikl");
    auto filters = f.proper_filters();
    std::vector<StateSet> expected = {up(f, "i"), up(f, "s"), up(f, "t")};
    std::sort(expected.begin(), expected.end());
    return filters == expected;
  });

  checks.emplace_back("linearity/involutivity of the builtins", [&] {
    RoutleyFrame ikl = builtin_frame("ikl");
    RoutleyFrame l = builtin_frame("fig1_left");
    RoutleyFrame r = builtin_frame("fig1_right");
    RoutleyFrame n5 = builtin_frame("fig2_n5");
    return ikl.is_linear() && ikl.is_involutive() && !l.is_linear() &&
           !l.is_involutive() && !r.is_involutive() && !n5.is_linear();
  });

  checks.emplace_back("builtins pass both validators", [&] {
    for (const char* name : {"fig1_left", "fig1_right", "fig2_n5", "ikl"}) {
      RoutleyFrame f = builtin_frame(name);
      if (!f.is_routley_if()) return false;
    }
    return true;
  });

  checks.emplace_back("chain_involutive(1) is isomorphic to ikl", [&] {
    return builtin_frame("chain_involutive(1)").canonical_encoding() ==
           builtin_frame("ikl").canonical_encoding();
  });

  checks.emplace_back("L1/L2 instances valid on linear builtins", [&] {
    Substitution subst{{MetaVar::Alpha, parse_formula("p")},
                       {MetaVar::Beta, parse_formula("q")}};
    for (const char* name : {"ikl", "chain_involutive(1)", "chain_involutive(2)"}) {
      RoutleyFrame f = builtin_frame(name);
      for (unsigned k = 0; k <= 1; ++k) {
        if (!valid_in_frame(f, instantiate(SchemaId::L1, subst, k)).valid) return false;
        if (!valid_in_frame(f, instantiate(SchemaId::L2, subst, k)).valid) return false;
      }
    }
    return true;
  });

  checks.emplace_back("L1*/L2* instances valid on every builtin", [&] {
    Substitution subst{{MetaVar::Alpha, parse_formula("p")},
                       {MetaVar::Beta, parse_formula("q")}};
    for (const char* name : {"fig1_left", "fig1_right", "fig2_n5", "ikl"}) {
      RoutleyFrame f = builtin_frame(name);
      for (unsigned k = 1; k <= 2; ++k) {
        if (!valid_in_frame(f, instantiate(SchemaId::L1_STAR, subst, k)).valid)
          return false;
        if (!valid_in_frame(f, instantiate(SchemaId::L2_STAR, subst, k)).valid)
          return false;
      }
    }
    return true;
  });

  checks.emplace_back("prove: DM2 in DLLR, DM1 in LRIF", [&] {
    auto d1 = prove(system(SystemId::DLLR), parse_pair("~p & ~q |- ~(p | q)"));
    auto d2 = prove(system(SystemId::LRIF), parse_pair("~(p & q) |- ~p | ~q"));
    if (!d1 || !d2) return false;
    return check_derivation(system(SystemId::DLLR), *d1, 3).empty() &&
           check_derivation(system(SystemId::LRIF), *d2, 3).empty();
  });

  bool all_pass = true;
  json results = json::array();
  for (auto& [name, run] : checks) {
    bool pass = false;
    try {
      pass = run();
    } catch (const std::exception&) {
      pass = false;
    }
    all_pass = all_pass && pass;
    if (as_json)
      results.push_back({{"name", name}, {"pass", pass}});
    else
      out << (pass ? "[ ok ] " : "[FAIL] ") << name << "\n";
  }
  if (as_json) {
    json j = {{"query", "paper-suite"}, {"checks", results}, {"all_pass", all_pass}};
    out << j.dump() << "\n";
  } else {
    out << (all_pass ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
  }
  return all_pass ? kExitOk : kExitSuiteFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"workbench for information frames with Routley-star negation"};
  app.name("rif");
  app.fallthrough();
  app.require_subcommand(1);

  bool as_json = false;
  std::uint64_t seed = 12345;
  app.add_flag("--json", as_json, "emit machine-readable JSON");
  app.add_option("--seed", seed,
                 "seed for randomized corpora (reserved; commands are deterministic)");

  std::string text, frame_spec, valuation_path, state_name, formula_text, pair_text;
  std::string system_name;
  bool as_pair = false, up_to_iso = false, count_only = false;
  int workers = 1, max_size = 5, size = 2, depth = 6;
  unsigned k_max = 3;
  std::uint64_t max_nodes = 200000;

  auto* parse_cmd = app.add_subcommand("parse", "parse and re-render a formula or pair");
  parse_cmd->add_option("text", text, "formula (or pair with --pair)")->required();
  parse_cmd->add_flag("--pair", as_pair, "treat the input as 'lhs |- rhs'");

  auto* check_cmd = app.add_subcommand("frame-check", "validate a frame file or builtin");
  check_cmd->add_option("frame", frame_spec, "builtin name or JSON file")->required();

  auto* show_cmd = app.add_subcommand("frame-show", "print a frame in the file format");
  show_cmd->add_option("frame", frame_spec, "builtin name or JSON file")->required();

  auto* eval_cmd = app.add_subcommand("eval", "does a state support a formula?");
  eval_cmd->add_option("--frame", frame_spec, "builtin name or JSON file")->required();
  eval_cmd->add_option("--valuation", valuation_path, "valuation JSON file")->required();
  eval_cmd->add_option("--state", state_name, "state name")->required();
  eval_cmd->add_option("--formula", formula_text, "formula text")->required();

  auto* valid_cmd = app.add_subcommand("valid", "is a pair valid in a frame?");
  valid_cmd->add_option("--frame", frame_spec, "builtin name or JSON file")->required();
  valid_cmd->add_option("--pair", pair_text, "consequence pair 'lhs |- rhs'")->required();
  valid_cmd->add_option("--workers", workers, "worker threads for the valuation scan");

  auto* counter_cmd = app.add_subcommand("countermodel", "search for a countermodel");
  counter_cmd->add_option("--pair", pair_text, "consequence pair")->required();
  counter_cmd->add_option("--max-size", max_size, "largest frame size to try");
  counter_cmd->add_option("--workers", workers, "worker threads");

  auto* prove_cmd = app.add_subcommand("prove", "bounded backward proof search");
  prove_cmd->add_option("--system", system_name,
                        "DLL, DLLR, DLLR_DN, CLASSICAL, LinDLLR, KL or LRIF")
      ->required();
  prove_cmd->add_option("--pair", pair_text, "consequence pair")->required();
  prove_cmd->add_option("--depth", depth, "maximum derivation height");
  prove_cmd->add_option("--k-max", k_max, "cap on k for the indexed axiom families");
  prove_cmd->add_option("--max-nodes", max_nodes, "search node budget");

  auto* kl_cmd = app.add_subcommand("decide-kl", "decide membership in Kalman logic");
  kl_cmd->add_option("--pair", pair_text, "consequence pair")->required();

  auto* enum_cmd = app.add_subcommand("enumerate", "enumerate frames of a given size");
  enum_cmd->add_option("--size", size, "number of states")->required();
  enum_cmd->add_flag("--up-to-iso", up_to_iso, "one representative per isomorphism class");
  enum_cmd->add_flag("--count-only", count_only, "print only the number of frames");

  auto* suite_cmd = app.add_subcommand("paper-suite", "run the pinned example suite");

  {
    std::vector<std::string> full = {"rif"};
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(full.size());
    for (const auto& a : full) argv.push_back(a.c_str());
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
      return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    } catch (const CLI::ParseError& e) {
      app.exit(e, out, err);
      return kExitUsage;
    }
  }

  try {
    if (parse_cmd->parsed()) return cmd_parse(text, as_pair, as_json, out);
    if (check_cmd->parsed()) return cmd_frame_check(frame_spec, as_json, out);
    if (show_cmd->parsed()) return cmd_frame_show(frame_spec, as_json, out);
    if (eval_cmd->parsed())
      return cmd_eval(frame_spec, valuation_path, state_name, formula_text, as_json, out);
    if (valid_cmd->parsed()) {
      if (workers < 1) throw UsageError("--workers must be at least 1");
      return cmd_valid(frame_spec, pair_text, workers, as_json, out);
    }
    if (counter_cmd->parsed()) {
      if (workers < 1) throw UsageError("--workers must be at least 1");
      return cmd_countermodel(pair_text, max_size, workers, as_json, out);
    }
    if (prove_cmd->parsed())
      return cmd_prove(system_name, pair_text, depth, k_max, max_nodes, as_json, out);
    if (kl_cmd->parsed()) return cmd_decide_kl(pair_text, as_json, out);
    if (enum_cmd->parsed())
      return cmd_enumerate(size, up_to_iso, count_only, as_json, out);
    if (suite_cmd->parsed()) return cmd_paper_suite(as_json, out);
    err << "no command given\n";
    return kExitUsage;
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& ex) {
    err << "syntax error: " << ex.what() << "\n";
    return kExitSyntax;
  } catch (const UnmappedAtomError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitSyntax;
  } catch (const ValidationError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitInvalidFrame;
  } catch (const IoError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitIo;
  } catch (const FrameError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitIo;
  }
}

}  // namespace rif
