#ifndef RIF_CALCULUS_HPP
#define RIF_CALCULUS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rif/formula.hpp"

namespace rif {

// Axiom schemata. L1/L2 and their starred variants are k-indexed families;
// the others are plain. Instantiating a schema at a substitution (and a k,
// where indexed) produces one consequence pair.
enum class SchemaId : std::uint8_t {
  ID,
  E_AND_1,
  E_AND_2,
  I_OR_1,
  I_OR_2,
  D,
  DM1,
  DM2,
  DM2_STAR,
  D_STAR,
  DN1,
  DN2,
  EM,
  EFQ,
  KA,
  L1,
  L2,
  L1_STAR,
  L2_STAR,
};

bool schema_indexed(SchemaId id);
// Smallest admissible k; the starred families start at 1, L1/L2 at 0.
unsigned schema_min_k(SchemaId id);
std::string_view schema_name(SchemaId id);
std::optional<SchemaId> schema_from_name(std::string_view name);

enum class MetaVar : std::uint8_t { Alpha, Beta, Gamma };
std::string_view metavar_name(MetaVar v);
std::optional<MetaVar> metavar_from_name(std::string_view name);

using Substitution = std::map<MetaVar, FormulaPtr>;

enum class RuleId : std::uint8_t { T, I_AND, E_OR, N };
std::string_view rule_name(RuleId id);
std::optional<RuleId> rule_from_name(std::string_view name);
int rule_premise_count(RuleId id);

enum class SystemId : std::uint8_t { DLL, DLLR, DLLR_DN, CLASSICAL, LinDLLR, KL, LRIF };

struct DeductiveSystem {
  SystemId id;
  std::string name;
  std::vector<SchemaId> axioms;
  std::vector<RuleId> rules;

  bool has_axiom(SchemaId s) const;
  bool has_rule(RuleId r) const;
};

const DeductiveSystem& system(SystemId id);
std::optional<SystemId> system_from_name(std::string_view name);
const std::vector<SystemId>& all_systems();

// Template substitution; indexed schemata expand their negation towers at
// the given k. Throws std::invalid_argument on a missing metavariable, on a
// k below the family's minimum, or on a k supplied for a plain schema.
ConsequencePair instantiate(SchemaId schema, const Substitution& subst,
                            std::optional<unsigned> k = std::nullopt);

struct AxiomInstance {
  SchemaId schema;
  Substitution subst;
  std::optional<unsigned> k;
};

// Every (schema, substitution, k <= k_max) of the system whose instance is
// syntactically the given pair, in schema order then k ascending.
std::vector<AxiomInstance> match_axiom(const ConsequencePair& pair,
                                       const DeductiveSystem& sys, unsigned k_max);

// A derivation tree node: a conclusion justified either by an axiom
// instance (leaf) or a rule applied to premise subtrees.
struct DerivationNode {
  ConsequencePair conclusion;
  std::optional<AxiomInstance> axiom;
  std::optional<RuleId> rule;
  std::vector<DerivationNode> premises;

  static DerivationNode leaf(ConsequencePair conclusion, AxiomInstance inst);
  static DerivationNode app(ConsequencePair conclusion, RuleId rule,
                            std::vector<DerivationNode> premises);
};

using Derivation = DerivationNode;

struct NodeError {
  std::string path;  // child indices from the root, e.g. "0.1"; "" = root
  std::string message;
};

// Empty result means the derivation is valid in the system: every axiom
// node re-instantiates to its conclusion with an admissible k <= k_max, and
// every rule node has the rule's shape.
std::vector<NodeError> check_derivation(const DeductiveSystem& sys,
                                        const Derivation& d, unsigned k_max);

struct ProveOptions {
  int depth_bound = 6;       // maximum derivation height
  unsigned k_max = 3;        // cap on k for indexed axiom families
  std::uint64_t node_budget = 200000;  // search node cap; exceeded => Unknown
};

// Backward iterative-deepening search. A result always passes
// check_derivation; std::nullopt ("Unknown") asserts nothing, since the
// search is bounded in depth, in k, and in explored nodes. Deterministic:
// rules are tried in a fixed order and cut formulas in structural order.
std::optional<Derivation> prove(const DeductiveSystem& sys, const ConsequencePair& goal,
                                const ProveOptions& options = {});

// Membership in the logic decided by the four-element chain frame "ikl":
// the pair is valid there iff it is derivable in the KL system.
bool decide_kl(const ConsequencePair& pair);

}  // namespace rif

#endif  // RIF_CALCULUS_HPP
