#include "rif/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace rif {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

namespace {

json parse_json(const std::string& text, const std::string& what) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw IoError("malformed JSON in " + what);
  return j;
}

State state_index(const RoutleyFrame& frame, const json& j, const char* what) {
  if (!j.is_string())
    throw FrameError(std::string(what) + " must be a state name");
  auto idx = frame.index_of(j.get<std::string>());
  if (!idx)
    throw FrameError("unknown state '" + j.get<std::string>() + "' in " + what);
  return *idx;
}

std::vector<std::string> names_from_json(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw FrameError(std::string("missing '") + key + "' list");
  std::vector<std::string> names;
  for (const auto& v : j[key]) {
    if (!v.is_string()) throw FrameError(std::string(key) + " entries must be strings");
    names.push_back(v.get<std::string>());
  }
  return names;
}

int find_name(const std::vector<std::string>& names, const std::string& name,
              const char* what) {
  for (std::size_t s = 0; s < names.size(); ++s)
    if (names[s] == name) return static_cast<int>(s);
  throw FrameError("unknown state '" + name + "' in " + what);
}

}  // namespace

json frame_to_json(const RoutleyFrame& frame) {
  json j;
  j["states"] = frame.state_names();
  j["e"] = frame.name_of(frame.bottom_e());
  j["i"] = frame.name_of(frame.top_i());
  json meet = json::array();
  for (State s = 0; s < frame.size(); ++s)
    for (State t = s; t < frame.size(); ++t)
      meet.push_back({frame.name_of(s), frame.name_of(t),
                      frame.name_of(frame.meet(s, t))});
  j["meet"] = meet;
  json star = json::object();
  for (State s = 0; s < frame.size(); ++s)
    star[frame.name_of(s)] = frame.name_of(frame.star(s));
  j["star"] = star;
  return j;
}

RoutleyFrame frame_from_json(const json& j) {
  if (!j.is_object()) throw FrameError("frame file must be a JSON object");
  auto names = names_from_json(j, "states");
  int n = static_cast<int>(names.size());
  if (n < 2 || n > kMaxStates) throw FrameError("frame needs 2..32 states");

  if (!j.contains("e") || !j["e"].is_string()) throw FrameError("missing 'e'");
  if (!j.contains("i") || !j["i"].is_string()) throw FrameError("missing 'i'");
  State e = static_cast<State>(find_name(names, j["e"].get<std::string>(), "'e'"));
  State i = static_cast<State>(find_name(names, j["i"].get<std::string>(), "'i'"));

  std::vector<State> star(n, 0);
  {
    if (!j.contains("star") || !j["star"].is_object())
      throw FrameError("missing 'star' map");
    std::vector<bool> seen(n, false);
    for (const auto& [from, to] : j["star"].items()) {
      if (!to.is_string()) throw FrameError("star entries must be state names");
      int a = find_name(names, from, "'star'");
      int b = find_name(names, to.get<std::string>(), "'star'");
      star[a] = static_cast<State>(b);
      seen[a] = true;
    }
    for (int s = 0; s < n; ++s)
      if (!seen[s]) throw FrameError("star map misses state '" + names[s] + "'");
  }

  bool has_meet = j.contains("meet");
  bool has_hasse = j.contains("hasse");
  if (has_meet == has_hasse)
    throw FrameError("frame needs exactly one of 'meet' and 'hasse'");

  if (has_hasse) {
    if (!j["hasse"].is_array()) throw FrameError("'hasse' must be a list of pairs");
    std::vector<std::pair<State, State>> covers;
    for (const auto& pair : j["hasse"]) {
      if (!pair.is_array() || pair.size() != 2)
        throw FrameError("'hasse' entries must be [below, above] pairs");
      State a = static_cast<State>(find_name(names, pair[0].get<std::string>(), "'hasse'"));
      State b = static_cast<State>(find_name(names, pair[1].get<std::string>(), "'hasse'"));
      covers.emplace_back(a, b);
    }
    return RoutleyFrame::from_hasse(std::move(names), covers, std::move(star), e, i);
  }

  if (!j["meet"].is_array()) throw FrameError("'meet' must be a list of triples");
  std::vector<int> meet(n * n, -1);
  for (const auto& triple : j["meet"]) {
    if (!triple.is_array() || triple.size() != 3)
      throw FrameError("'meet' entries must be [a, b, a.b] triples");
    int a = find_name(names, triple[0].get<std::string>(), "'meet'");
    int b = find_name(names, triple[1].get<std::string>(), "'meet'");
    int m = find_name(names, triple[2].get<std::string>(), "'meet'");
    for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
      int& slot = meet[x * n + y];
      if (slot != -1 && slot != m)
        throw FrameError("conflicting 'meet' entries for '" + names[x] + "', '" +
                         names[y] + "'");
      slot = m;
    }
  }
  std::vector<State> table(n * n);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      if (meet[s * n + t] == -1)
        throw FrameError("'meet' table misses the pair '" + names[s] + "', '" +
                         names[t] + "'");
      table[s * n + t] = static_cast<State>(meet[s * n + t]);
    }
  return RoutleyFrame(std::move(names), std::move(table), std::move(star), e, i);
}

RoutleyFrame load_frame(const std::string& name_or_path) {
  if (is_builtin_frame_name(name_or_path)) return builtin_frame(name_or_path);
  return frame_from_json(parse_json(read_file(name_or_path), name_or_path));
}

std::string describe(const RoutleyFrame& frame, const FrameViolation& v) {
  std::string out{violation_name(v.kind)};
  out += " [";
  for (std::size_t j = 0; j < v.witness.size(); ++j) {
    if (j) out += ", ";
    out += frame.name_of(v.witness[j]);
  }
  out += "]";
  return out;
}

json violations_to_json(const RoutleyFrame& frame, const std::vector<FrameViolation>& vs) {
  json out = json::array();
  for (const auto& v : vs) {
    json witness = json::array();
    for (State s : v.witness) witness.push_back(frame.name_of(s));
    out.push_back({{"kind", violation_name(v.kind)}, {"witness", witness}});
  }
  return out;
}

json valuation_to_json(const RoutleyFrame& frame, const Valuation& val) {
  json j = json::object();
  for (const auto& [atom, filter] : val) {
    json states = json::array();
    for (State s = 0; s < frame.size(); ++s)
      if (set_has(filter, s)) states.push_back(frame.name_of(s));
    j[atom] = states;
  }
  return j;
}

Valuation valuation_from_json(const RoutleyFrame& frame, const json& j) {
  if (!j.is_object()) throw FrameError("valuation file must be a JSON object");
  Valuation val;
  for (const auto& [atom, states] : j.items()) {
    if (!Formula::valid_atom_name(atom))
      throw FrameError("bad atom name '" + atom + "' in valuation");
    if (!states.is_array())
      throw FrameError("valuation of '" + atom + "' must be a list of states");
    StateSet filter = 0;
    for (const auto& s : states)
      filter |= state_bit(state_index(frame, s, "valuation"));
    if (!is_proper_filter(frame, filter))
      throw ValidationError("valuation of '" + atom + "' is not a proper filter");
    val[atom] = filter;
  }
  return val;
}

Valuation load_valuation(const RoutleyFrame& frame, const std::string& path) {
  return valuation_from_json(frame, parse_json(read_file(path), path));
}

json countermodel_to_json(const Countermodel& cm) {
  return json{{"frame", frame_to_json(cm.frame)},
              {"valuation", valuation_to_json(cm.frame, cm.valuation)},
              {"witness", cm.frame.name_of(cm.witness)}};
}

json standard_frame_to_json(const StandardFrame& frame) {
  json j;
  j["states"] = frame.world_names();
  json order = json::array();
  for (StandardFrame::World v = 0; v < frame.size(); ++v)
    for (StandardFrame::World w = 0; w < frame.size(); ++w)
      if (v != w && frame.leq(v, w))
        order.push_back({frame.name_of(v), frame.name_of(w)});
  j["order"] = order;
  json star = json::object();
  for (StandardFrame::World w = 0; w < frame.size(); ++w)
    star[frame.name_of(w)] = frame.name_of(frame.star(w));
  j["star"] = star;
  return j;
}

StandardFrame standard_frame_from_json(const json& j) {
  if (!j.is_object()) throw FrameError("standard frame file must be a JSON object");
  auto names = names_from_json(j, "states");
  int n = static_cast<int>(names.size());

  if (!j.contains("order") || !j["order"].is_array())
    throw FrameError("missing 'order' list");
  std::vector<std::pair<StandardFrame::World, StandardFrame::World>> covers;
  for (const auto& pair : j["order"]) {
    if (!pair.is_array() || pair.size() != 2)
      throw FrameError("'order' entries must be [below, above] pairs");
    auto a = find_name(names, pair[0].get<std::string>(), "'order'");
    auto b = find_name(names, pair[1].get<std::string>(), "'order'");
    covers.emplace_back(static_cast<StandardFrame::World>(a),
                        static_cast<StandardFrame::World>(b));
  }

  if (!j.contains("star") || !j["star"].is_object())
    throw FrameError("missing 'star' map");
  std::vector<StandardFrame::World> star(n, 0);
  std::vector<bool> seen(n, false);
  for (const auto& [from, to] : j["star"].items()) {
    int a = find_name(names, from, "'star'");
    int b = find_name(names, to.get<std::string>(), "'star'");
    star[a] = static_cast<StandardFrame::World>(b);
    seen[a] = true;
  }
  for (int w = 0; w < n; ++w)
    if (!seen[w]) throw FrameError("star map misses world '" + names[w] + "'");

  return StandardFrame(std::move(names), covers, std::move(star));
}

namespace {

std::string justification_text(const DerivationNode& node) {
  if (node.rule) return std::string(rule_name(*node.rule));
  const AxiomInstance& inst = *node.axiom;
  std::string out{schema_name(inst.schema)};
  if (inst.k) out += "; k=" + std::to_string(*inst.k);
  for (const auto& [var, formula] : inst.subst) {
    out += "; ";
    out += metavar_name(var);
    out += " := " + render(formula);
  }
  return out;
}

void derivation_text_rec(const DerivationNode& node, int depth, std::string& out) {
  out.append(2 * depth, ' ');
  out += render(node.conclusion);
  out += "  [" + justification_text(node) + "]\n";
  for (const auto& child : node.premises)
    derivation_text_rec(child, depth + 1, out);
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return {};
  std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

struct TextLine {
  int depth;
  DerivationNode node;  // premises filled in later for rule nodes
};

TextLine parse_derivation_line(const std::string& raw) {
  std::size_t indent = 0;
  while (indent < raw.size() && raw[indent] == ' ') ++indent;
  if (indent % 2 != 0) throw IoError("derivation indentation must be two spaces per level");

  std::size_t open = raw.find('[', indent);
  std::size_t close = raw.rfind(']');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw IoError("derivation line misses its [justification]");

  DerivationNode node;
  node.conclusion = parse_pair(trim(raw.substr(indent, open - indent)));

  std::string just = raw.substr(open + 1, close - open - 1);
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t semi = just.find(';', start);
    parts.push_back(trim(just.substr(start, semi - start)));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }

  const std::string& head = parts[0];
  if (auto rule = rule_from_name(head)) {
    if (parts.size() > 1) throw IoError("rule justification takes no arguments");
    node.rule = *rule;
  } else if (auto schema = schema_from_name(head)) {
    AxiomInstance inst;
    inst.schema = *schema;
    for (std::size_t p = 1; p < parts.size(); ++p) {
      const std::string& part = parts[p];
      if (part.rfind("k=", 0) == 0) {
        inst.k = static_cast<unsigned>(std::stoul(part.substr(2)));
        continue;
      }
      std::size_t assign = part.find(":=");
      if (assign == std::string::npos)
        throw IoError("bad axiom argument '" + part + "'");
      auto var = metavar_from_name(trim(part.substr(0, assign)));
      if (!var) throw IoError("unknown metavariable in '" + part + "'");
      inst.subst[*var] = parse_formula(trim(part.substr(assign + 2)));
    }
    node.axiom = std::move(inst);
  } else {
    throw IoError("unknown justification '" + head + "'");
  }
  return {static_cast<int>(indent / 2), std::move(node)};
}

DerivationNode assemble(std::vector<TextLine>& lines, std::size_t& pos, int depth) {
  if (pos >= lines.size() || lines[pos].depth != depth)
    throw IoError("bad derivation indentation structure");
  DerivationNode node = std::move(lines[pos].node);
  ++pos;
  while (pos < lines.size() && lines[pos].depth > depth) {
    node.premises.push_back(assemble(lines, pos, depth + 1));
  }
  return node;
}

}  // namespace

std::string derivation_to_text(const Derivation& d) {
  std::string out;
  derivation_text_rec(d, 0, out);
  return out;
}

Derivation derivation_from_text(const std::string& text) {
  std::vector<TextLine> lines;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    if (trim(raw).empty()) continue;
    lines.push_back(parse_derivation_line(raw));
  }
  if (lines.empty()) throw IoError("empty derivation");
  std::size_t pos = 0;
  DerivationNode root = assemble(lines, pos, 0);
  if (pos != lines.size()) throw IoError("derivation has more than one root");
  return root;
}

json derivation_to_json(const Derivation& d) {
  json j;
  j["conclusion"] = render(d.conclusion);
  if (d.rule) {
    j["rule"] = rule_name(*d.rule);
    json premises = json::array();
    for (const auto& child : d.premises) premises.push_back(derivation_to_json(child));
    j["premises"] = premises;
  } else if (d.axiom) {
    j["axiom"] = schema_name(d.axiom->schema);
    if (d.axiom->k) j["k"] = *d.axiom->k;
    json subst = json::object();
    for (const auto& [var, formula] : d.axiom->subst)
      subst[std::string(metavar_name(var))] = render(formula);
    j["subst"] = subst;
  }
  return j;
}

Derivation derivation_from_json(const json& j) {
  if (!j.is_object() || !j.contains("conclusion"))
    throw IoError("derivation node needs a 'conclusion'");
  DerivationNode node;
  node.conclusion = parse_pair(j["conclusion"].get<std::string>());
  if (j.contains("rule")) {
    auto rule = rule_from_name(j["rule"].get<std::string>());
    if (!rule) throw IoError("unknown rule '" + j["rule"].get<std::string>() + "'");
    node.rule = *rule;
    if (j.contains("premises"))
      for (const auto& child : j["premises"])
        node.premises.push_back(derivation_from_json(child));
  } else if (j.contains("axiom")) {
    AxiomInstance inst;
    auto schema = schema_from_name(j["axiom"].get<std::string>());
    if (!schema) throw IoError("unknown schema '" + j["axiom"].get<std::string>() + "'");
    inst.schema = *schema;
    if (j.contains("k")) inst.k = j["k"].get<unsigned>();
    if (j.contains("subst"))
      for (const auto& [name, formula] : j["subst"].items()) {
        auto var = metavar_from_name(name);
        if (!var) throw IoError("unknown metavariable '" + name + "'");
        inst.subst[*var] = parse_formula(formula.get<std::string>());
      }
    node.axiom = std::move(inst);
  } else {
    throw IoError("derivation node needs 'rule' or 'axiom'");
  }
  return node;
}

}  // namespace rif
