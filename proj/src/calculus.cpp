#include "rif/calculus.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <utility>

#include "rif/frame.hpp"
#include "rif/semantics.hpp"

namespace rif {

bool schema_indexed(SchemaId id) {
  switch (id) {
    case SchemaId::L1:
    case SchemaId::L2:
    case SchemaId::L1_STAR:
    case SchemaId::L2_STAR:
      return true;
    default:
      return false;
  }
}

unsigned schema_min_k(SchemaId id) {
  switch (id) {
    case SchemaId::L1_STAR:
    case SchemaId::L2_STAR:
      return 1;
    default:
      return 0;
  }
}

std::string_view schema_name(SchemaId id) {
  switch (id) {
    case SchemaId::ID: return "ID";
    case SchemaId::E_AND_1: return "E_AND_1";
    case SchemaId::E_AND_2: return "E_AND_2";
    case SchemaId::I_OR_1: return "I_OR_1";
    case SchemaId::I_OR_2: return "I_OR_2";
    case SchemaId::D: return "D";
    case SchemaId::DM1: return "DM1";
    case SchemaId::DM2: return "DM2";
    case SchemaId::DM2_STAR: return "DM2_STAR";
    case SchemaId::D_STAR: return "D_STAR";
    case SchemaId::DN1: return "DN1";
    case SchemaId::DN2: return "DN2";
    case SchemaId::EM: return "EM";
    case SchemaId::EFQ: return "EFQ";
    case SchemaId::KA: return "KA";
    case SchemaId::L1: return "L1";
    case SchemaId::L2: return "L2";
    case SchemaId::L1_STAR: return "L1_STAR";
    case SchemaId::L2_STAR: return "L2_STAR";
  }
  return "?";
}

namespace {

constexpr SchemaId kAllSchemas[] = {
    SchemaId::ID,   SchemaId::E_AND_1, SchemaId::E_AND_2,  SchemaId::I_OR_1,
    SchemaId::I_OR_2, SchemaId::D,     SchemaId::DM1,      SchemaId::DM2,
    SchemaId::DM2_STAR, SchemaId::D_STAR, SchemaId::DN1,   SchemaId::DN2,
    SchemaId::EM,   SchemaId::EFQ,     SchemaId::KA,       SchemaId::L1,
    SchemaId::L2,   SchemaId::L1_STAR, SchemaId::L2_STAR,
};

}  // namespace

std::optional<SchemaId> schema_from_name(std::string_view name) {
  for (SchemaId id : kAllSchemas)
    if (schema_name(id) == name) return id;
  return std::nullopt;
}

std::string_view metavar_name(MetaVar v) {
  switch (v) {
    case MetaVar::Alpha: return "alpha";
    case MetaVar::Beta: return "beta";
    case MetaVar::Gamma: return "gamma";
  }
  return "?";
}

std::optional<MetaVar> metavar_from_name(std::string_view name) {
  if (name == "alpha") return MetaVar::Alpha;
  if (name == "beta") return MetaVar::Beta;
  if (name == "gamma") return MetaVar::Gamma;
  return std::nullopt;
}

std::string_view rule_name(RuleId id) {
  switch (id) {
    case RuleId::T: return "T";
    case RuleId::I_AND: return "I_AND";
    case RuleId::E_OR: return "E_OR";
    case RuleId::N: return "N";
  }
  return "?";
}

std::optional<RuleId> rule_from_name(std::string_view name) {
  if (name == "T") return RuleId::T;
  if (name == "I_AND") return RuleId::I_AND;
  if (name == "E_OR") return RuleId::E_OR;
  if (name == "N") return RuleId::N;
  return std::nullopt;
}

int rule_premise_count(RuleId id) { return id == RuleId::N ? 1 : 2; }

bool DeductiveSystem::has_axiom(SchemaId s) const {
  return std::find(axioms.begin(), axioms.end(), s) != axioms.end();
}

bool DeductiveSystem::has_rule(RuleId r) const {
  return std::find(rules.begin(), rules.end(), r) != rules.end();
}

namespace {

std::vector<DeductiveSystem> make_systems() {
  using S = SchemaId;
  using R = RuleId;
  std::vector<SchemaId> dll_ax = {S::ID, S::E_AND_1, S::E_AND_2, S::I_OR_1, S::I_OR_2, S::D};
  std::vector<RuleId> dll_rules = {R::T, R::I_AND, R::E_OR};

  auto extend = [](std::vector<SchemaId> ax, std::vector<SchemaId> more) {
    ax.insert(ax.end(), more.begin(), more.end());
    return ax;
  };

  std::vector<SchemaId> dllr_ax = extend(dll_ax, {S::DM1, S::DM2});
  std::vector<RuleId> dllr_rules = {R::T, R::I_AND, R::E_OR, R::N};

  std::vector<DeductiveSystem> out;
  out.push_back({SystemId::DLL, "DLL", dll_ax, dll_rules});
  out.push_back({SystemId::DLLR, "DLLR", dllr_ax, dllr_rules});
  out.push_back({SystemId::DLLR_DN, "DLLR_DN", extend(dllr_ax, {S::DN1, S::DN2}), dllr_rules});
  out.push_back({SystemId::CLASSICAL, "CLASSICAL",
                 extend(dllr_ax, {S::DN1, S::DN2, S::EM, S::EFQ}), dllr_rules});
  out.push_back({SystemId::LinDLLR, "LinDLLR", extend(dllr_ax, {S::L1, S::L2}), dllr_rules});
  out.push_back({SystemId::KL, "KL", extend(dllr_ax, {S::DN1, S::DN2, S::KA}), dllr_rules});
  out.push_back({SystemId::LRIF, "LRIF",
                 {S::ID, S::E_AND_1, S::E_AND_2, S::I_OR_1, S::I_OR_2, S::DM1,
                  S::DM2_STAR, S::D_STAR, S::L1_STAR, S::L2_STAR},
                 dllr_rules});
  return out;
}

const std::vector<DeductiveSystem>& systems() {
  static const std::vector<DeductiveSystem> all = make_systems();
  return all;
}

}  // namespace

const DeductiveSystem& system(SystemId id) {
  for (const auto& s : systems())
    if (s.id == id) return s;
  throw std::logic_error("unknown system id");
}

std::optional<SystemId> system_from_name(std::string_view name) {
  for (const auto& s : systems())
    if (s.name == name) return s.id;
  return std::nullopt;
}

const std::vector<SystemId>& all_systems() {
  static const std::vector<SystemId> ids = [] {
    std::vector<SystemId> v;
    for (const auto& s : systems()) v.push_back(s.id);
    return v;
  }();
  return ids;
}

namespace {

// Schema shapes as tiny templates over the three metavariables.
struct Pattern;
using Pat = std::shared_ptr<const Pattern>;

struct Pattern {
  enum class Kind : std::uint8_t { Var, Neg, And, Or } kind;
  MetaVar var{};
  Pat a, b;
};

Pat pv(MetaVar v) { return std::make_shared<Pattern>(Pattern{Pattern::Kind::Var, v, nullptr, nullptr}); }
Pat pneg(Pat p) { return std::make_shared<Pattern>(Pattern{Pattern::Kind::Neg, {}, std::move(p), nullptr}); }
Pat pand(Pat a, Pat b) { return std::make_shared<Pattern>(Pattern{Pattern::Kind::And, {}, std::move(a), std::move(b)}); }
Pat por(Pat a, Pat b) { return std::make_shared<Pattern>(Pattern{Pattern::Kind::Or, {}, std::move(a), std::move(b)}); }

Pat pnegn(unsigned n, Pat p) {
  for (unsigned j = 0; j < n; ++j) p = pneg(std::move(p));
  return p;
}

std::pair<Pat, Pat> schema_patterns(SchemaId id, unsigned k) {
  Pat a = pv(MetaVar::Alpha), b = pv(MetaVar::Beta), g = pv(MetaVar::Gamma);
  switch (id) {
    case SchemaId::ID: return {a, a};
    case SchemaId::E_AND_1: return {pand(a, b), a};
    case SchemaId::E_AND_2: return {pand(a, b), b};
    case SchemaId::I_OR_1: return {a, por(a, b)};
    case SchemaId::I_OR_2: return {b, por(a, b)};
    case SchemaId::D: return {pand(a, por(b, g)), por(pand(a, b), pand(a, g))};
    case SchemaId::DM1: return {pneg(pand(a, b)), por(pneg(a), pneg(b))};
    case SchemaId::DM2: return {pand(pneg(a), pneg(b)), pneg(por(a, b))};
    case SchemaId::DM2_STAR:
      return {pand(pneg(pneg(a)), pneg(pneg(b))), pneg(por(pneg(a), pneg(b)))};
    case SchemaId::D_STAR:
      return {pand(a, por(pneg(b), pneg(g))), por(pand(a, pneg(b)), pand(a, pneg(g)))};
    case SchemaId::DN1: return {a, pneg(pneg(a))};
    case SchemaId::DN2: return {pneg(pneg(a)), a};
    case SchemaId::EM: return {b, por(a, pneg(a))};
    case SchemaId::EFQ: return {pand(a, pneg(a)), b};
    case SchemaId::KA: return {pand(a, pneg(a)), por(b, pneg(b))};
    case SchemaId::L1: return {pand(a, pnegn(2 * k, b)), por(pnegn(2 * k, a), b)};
    case SchemaId::L2:
      return {pand(a, pnegn(2 * k + 1, a)), por(b, pnegn(2 * k + 1, b))};
    case SchemaId::L1_STAR:
      return {pand(pneg(a), pnegn(2 * k + 1, b)), por(pnegn(2 * k + 1, a), pneg(b))};
    case SchemaId::L2_STAR:
      return {pand(pneg(a), pnegn(2 * k, a)), por(pneg(b), pnegn(2 * k, b))};
  }
  throw std::logic_error("unknown schema id");
}

bool match_pattern(const Pat& pat, const FormulaPtr& f, Substitution& subst) {
  switch (pat->kind) {
    case Pattern::Kind::Var: {
      auto it = subst.find(pat->var);
      if (it != subst.end()) return equal(it->second, f);
      subst.emplace(pat->var, f);
      return true;
    }
    case Pattern::Kind::Neg:
      return f->is(FormulaKind::Neg) && match_pattern(pat->a, f->body(), subst);
    case Pattern::Kind::And:
      return f->is(FormulaKind::And) && match_pattern(pat->a, f->left(), subst) &&
             match_pattern(pat->b, f->right(), subst);
    case Pattern::Kind::Or:
      return f->is(FormulaKind::Or) && match_pattern(pat->a, f->left(), subst) &&
             match_pattern(pat->b, f->right(), subst);
  }
  return false;
}

FormulaPtr instantiate_pattern(const Pat& pat, const Substitution& subst,
                               SchemaId id) {
  switch (pat->kind) {
    case Pattern::Kind::Var: {
      auto it = subst.find(pat->var);
      if (it == subst.end())
        throw std::invalid_argument(std::string(schema_name(id)) + " needs " +
                                    std::string(metavar_name(pat->var)));
      return it->second;
    }
    case Pattern::Kind::Neg:
      return Formula::neg(instantiate_pattern(pat->a, subst, id));
    case Pattern::Kind::And:
      return Formula::conj(instantiate_pattern(pat->a, subst, id),
                           instantiate_pattern(pat->b, subst, id));
    case Pattern::Kind::Or:
      return Formula::disj(instantiate_pattern(pat->a, subst, id),
                           instantiate_pattern(pat->b, subst, id));
  }
  throw std::logic_error("bad pattern");
}

}  // namespace

ConsequencePair instantiate(SchemaId schema, const Substitution& subst,
                            std::optional<unsigned> k) {
  if (schema_indexed(schema)) {
    if (!k)
      throw std::invalid_argument(std::string(schema_name(schema)) + " needs k");
    if (*k < schema_min_k(schema))
      throw std::invalid_argument(std::string(schema_name(schema)) + " needs k >= " +
                                  std::to_string(schema_min_k(schema)));
  } else if (k) {
    throw std::invalid_argument(std::string(schema_name(schema)) +
                                " does not take k");
  }
  auto [lhs, rhs] = schema_patterns(schema, k.value_or(0));
  return {instantiate_pattern(lhs, subst, schema),
          instantiate_pattern(rhs, subst, schema)};
}

std::vector<AxiomInstance> match_axiom(const ConsequencePair& pair,
                                       const DeductiveSystem& sys, unsigned k_max) {
  std::vector<AxiomInstance> out;
  for (SchemaId id : sys.axioms) {
    if (!schema_indexed(id)) {
      auto [l, r] = schema_patterns(id, 0);
      Substitution subst;
      if (match_pattern(l, pair.lhs, subst) && match_pattern(r, pair.rhs, subst))
        out.push_back({id, std::move(subst), std::nullopt});
      continue;
    }
    for (unsigned k = schema_min_k(id); k <= k_max; ++k) {
      auto [l, r] = schema_patterns(id, k);
      Substitution subst;
      if (match_pattern(l, pair.lhs, subst) && match_pattern(r, pair.rhs, subst))
        out.push_back({id, std::move(subst), k});
    }
  }
  return out;
}

DerivationNode DerivationNode::leaf(ConsequencePair conclusion, AxiomInstance inst) {
  DerivationNode n;
  n.conclusion = std::move(conclusion);
  n.axiom = std::move(inst);
  return n;
}

DerivationNode DerivationNode::app(ConsequencePair conclusion, RuleId rule,
                                   std::vector<DerivationNode> premises) {
  DerivationNode n;
  n.conclusion = std::move(conclusion);
  n.rule = rule;
  n.premises = std::move(premises);
  return n;
}

namespace {

void check_node(const DeductiveSystem& sys, const DerivationNode& node,
                unsigned k_max, const std::string& path,
                std::vector<NodeError>& errors) {
  auto add = [&](std::string msg) { errors.push_back({path, std::move(msg)}); };

  if (node.axiom && node.rule) {
    add("node has both an axiom and a rule justification");
  } else if (node.axiom) {
    const AxiomInstance& inst = *node.axiom;
    if (!node.premises.empty()) add("axiom node must not have premises");
    if (!sys.has_axiom(inst.schema)) {
      add("schema " + std::string(schema_name(inst.schema)) + " is not in " + sys.name);
    } else {
      try {
        if (inst.k && *inst.k > k_max)
          add("k=" + std::to_string(*inst.k) + " exceeds k_max=" + std::to_string(k_max));
        else if (!equal(instantiate(inst.schema, inst.subst, inst.k), node.conclusion))
          add("conclusion is not the " + std::string(schema_name(inst.schema)) +
              " instance of its substitution");
      } catch (const std::invalid_argument& ex) {
        add(ex.what());
      }
    }
  } else if (node.rule) {
    RuleId rule = *node.rule;
    if (!sys.has_rule(rule)) {
      add("rule " + std::string(rule_name(rule)) + " is not in " + sys.name);
    } else if (static_cast<int>(node.premises.size()) != rule_premise_count(rule)) {
      add("rule " + std::string(rule_name(rule)) + " needs " +
          std::to_string(rule_premise_count(rule)) + " premises");
    } else {
      const ConsequencePair& c = node.conclusion;
      auto shape_error = [&]() {
        add("premises do not have the " + std::string(rule_name(rule)) + " shape");
      };
      switch (rule) {
        case RuleId::T: {
          const auto& p0 = node.premises[0].conclusion;
          const auto& p1 = node.premises[1].conclusion;
          if (!(equal(p0.lhs, c.lhs) && equal(p0.rhs, p1.lhs) && equal(p1.rhs, c.rhs)))
            shape_error();
          break;
        }
        case RuleId::I_AND: {
          const auto& p0 = node.premises[0].conclusion;
          const auto& p1 = node.premises[1].conclusion;
          if (!c.rhs->is(FormulaKind::And) || !equal(p0.lhs, c.lhs) ||
              !equal(p1.lhs, c.lhs) || !equal(p0.rhs, c.rhs->left()) ||
              !equal(p1.rhs, c.rhs->right()))
            shape_error();
          break;
        }
        case RuleId::E_OR: {
          const auto& p0 = node.premises[0].conclusion;
          const auto& p1 = node.premises[1].conclusion;
          if (!c.lhs->is(FormulaKind::Or) || !equal(p0.rhs, c.rhs) ||
              !equal(p1.rhs, c.rhs) || !equal(p0.lhs, c.lhs->left()) ||
              !equal(p1.lhs, c.lhs->right()))
            shape_error();
          break;
        }
        case RuleId::N: {
          const auto& p0 = node.premises[0].conclusion;
          if (!c.lhs->is(FormulaKind::Neg) || !c.rhs->is(FormulaKind::Neg) ||
              !equal(p0.lhs, c.rhs->body()) || !equal(p0.rhs, c.lhs->body()))
            shape_error();
          break;
        }
      }
    }
  } else {
    add("node has no justification");
  }

  for (std::size_t j = 0; j < node.premises.size(); ++j) {
    std::string child = path.empty() ? std::to_string(j) : path + "." + std::to_string(j);
    check_node(sys, node.premises[j], k_max, child, errors);
  }
}

}  // namespace

std::vector<NodeError> check_derivation(const DeductiveSystem& sys,
                                        const Derivation& d, unsigned k_max) {
  std::vector<NodeError> errors;
  check_node(sys, d, k_max, "", errors);
  return errors;
}

namespace {

// Cut candidates: subformulas of the goal, their negation towers up to
// 2*k_max+1 deep, and one layer of binary combinations, in structural order.
std::vector<FormulaPtr> cut_candidates(const ConsequencePair& goal, unsigned k_max) {
  std::set<FormulaPtr, FormulaLess> base;
  auto add_subformulas = [&](const FormulaPtr& f) {
    auto rec = [&](auto&& self, const FormulaPtr& g) -> void {
      base.insert(g);
      switch (g->kind()) {
        case FormulaKind::Atom: return;
        case FormulaKind::Neg: self(self, g->body()); return;
        case FormulaKind::And:
        case FormulaKind::Or:
          self(self, g->left());
          self(self, g->right());
          return;
      }
    };
    rec(rec, f);
  };
  add_subformulas(goal.lhs);
  add_subformulas(goal.rhs);

  std::vector<FormulaPtr> with_negs(base.begin(), base.end());
  for (const FormulaPtr& f : std::vector<FormulaPtr>(with_negs)) {
    FormulaPtr cur = f;
    for (unsigned j = 1; j <= 2 * k_max + 1; ++j) {
      cur = Formula::neg(cur);
      with_negs.push_back(cur);
    }
  }

  std::set<FormulaPtr, FormulaLess> all(with_negs.begin(), with_negs.end());
  for (const FormulaPtr& f : with_negs)
    for (const FormulaPtr& g : with_negs) {
      all.insert(Formula::conj(f, g));
      all.insert(Formula::disj(f, g));
    }
  return {all.begin(), all.end()};
}

class Prover {
public:
  Prover(const DeductiveSystem& sys, const ConsequencePair& goal, ProveOptions opt)
      : sys_(sys), opt_(opt), candidates_(cut_candidates(goal, opt.k_max)) {}

  std::optional<Derivation> run(const ConsequencePair& goal) {
    for (int depth = 1; depth <= opt_.depth_bound; ++depth) {
      auto result = search(goal, depth);
      if (result) return result;
      if (exhausted_) break;
    }
    return std::nullopt;
  }

private:
  std::optional<Derivation> search(const ConsequencePair& goal, int depth) {
    std::string key = render(goal);
    if (auto it = proved_.find(key); it != proved_.end()) return it->second;
    if (auto it = failed_.find(key); it != failed_.end() && it->second >= depth)
      return std::nullopt;
    if (nodes_ >= opt_.node_budget) {
      exhausted_ = true;
      return std::nullopt;
    }
    ++nodes_;

    auto instances = match_axiom(goal, sys_, opt_.k_max);
    if (!instances.empty()) {
      Derivation node = DerivationNode::leaf(goal, instances.front());
      proved_.emplace(std::move(key), node);
      return node;
    }
    if (depth <= 1) {
      record_failure(std::move(key), depth);
      return std::nullopt;
    }

    for (RuleId rule : {RuleId::I_AND, RuleId::E_OR, RuleId::N, RuleId::T}) {
      if (!sys_.has_rule(rule)) continue;
      auto result = try_rule(goal, rule, depth);
      if (result) {
        proved_.emplace(std::move(key), *result);
        return result;
      }
      if (exhausted_) return std::nullopt;
    }

    record_failure(std::move(key), depth);
    return std::nullopt;
  }

  std::optional<Derivation> try_rule(const ConsequencePair& goal, RuleId rule,
                                     int depth) {
    switch (rule) {
      case RuleId::I_AND: {
        if (!goal.rhs->is(FormulaKind::And)) return std::nullopt;
        auto p0 = search({goal.lhs, goal.rhs->left()}, depth - 1);
        if (!p0) return std::nullopt;
        auto p1 = search({goal.lhs, goal.rhs->right()}, depth - 1);
        if (!p1) return std::nullopt;
        return DerivationNode::app(goal, rule, {std::move(*p0), std::move(*p1)});
      }
      case RuleId::E_OR: {
        if (!goal.lhs->is(FormulaKind::Or)) return std::nullopt;
        auto p0 = search({goal.lhs->left(), goal.rhs}, depth - 1);
        if (!p0) return std::nullopt;
        auto p1 = search({goal.lhs->right(), goal.rhs}, depth - 1);
        if (!p1) return std::nullopt;
        return DerivationNode::app(goal, rule, {std::move(*p0), std::move(*p1)});
      }
      case RuleId::N: {
        if (!goal.lhs->is(FormulaKind::Neg) || !goal.rhs->is(FormulaKind::Neg))
          return std::nullopt;
        auto p0 = search({goal.rhs->body(), goal.lhs->body()}, depth - 1);
        if (!p0) return std::nullopt;
        return DerivationNode::app(goal, rule, {std::move(*p0)});
      }
      case RuleId::T: {
        for (const FormulaPtr& cut : candidates_) {
          if (exhausted_) return std::nullopt;
          if (equal(cut, goal.lhs) || equal(cut, goal.rhs)) continue;
          auto p0 = search({goal.lhs, cut}, depth - 1);
          if (!p0) continue;
          auto p1 = search({cut, goal.rhs}, depth - 1);
          if (!p1) continue;
          return DerivationNode::app(goal, rule, {std::move(*p0), std::move(*p1)});
        }
        return std::nullopt;
      }
    }
    return std::nullopt;
  }

  void record_failure(std::string key, int depth) {
    if (exhausted_) return;  // truncated searches prove nothing
    auto [it, inserted] = failed_.emplace(std::move(key), depth);
    if (!inserted && it->second < depth) it->second = depth;
  }

  const DeductiveSystem& sys_;
  ProveOptions opt_;
  std::vector<FormulaPtr> candidates_;
  std::map<std::string, Derivation> proved_;
  std::map<std::string, int> failed_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

std::optional<Derivation> prove(const DeductiveSystem& sys, const ConsequencePair& goal,
                                const ProveOptions& options) {
  if (options.depth_bound < 1) throw std::invalid_argument("depth bound must be positive");
  return Prover(sys, goal, options).run(goal);
}

bool decide_kl(const ConsequencePair& pair) {
  static const RoutleyFrame ikl = builtin_frame("ikl");
  return valid_in_frame(ikl, pair).valid;
}

}  // namespace rif
