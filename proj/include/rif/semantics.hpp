#ifndef RIF_SEMANTICS_HPP
#define RIF_SEMANTICS_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "rif/formula.hpp"
#include "rif/frame.hpp"

namespace rif {

// Atom -> proper filter. Which atoms must be mapped depends on the formulas
// evaluated; an unmapped atom is an error, never silently false.
using Valuation = std::map<std::string, StateSet>;

class UnmappedAtomError : public std::runtime_error {
public:
  explicit UnmappedAtomError(const std::string& atom)
      : std::runtime_error("atom '" + atom + "' has no valuation"), atom_(atom) {}
  const std::string& atom() const { return atom_; }

private:
  std::string atom_;
};

struct InfoModel {
  RoutleyFrame frame;
  Valuation valuation;
};

// Checks that every filter in the valuation satisfies the proper-filter law;
// returns the offending atom, or nullopt if all images are filters.
std::optional<std::string> find_improper_valuation_entry(const RoutleyFrame& frame,
                                                         const Valuation& valuation);

// The set of states supporting f. Clauses: an atom holds where its filter
// says; a conjunction where both conjuncts hold; a disjunction at s when
// t . u <= s for some t supporting the left and u supporting the right; a
// negation at s when star(s) fails the body.
StateSet proposition(const RoutleyFrame& frame, const Valuation& valuation,
                     const Formula& f);

bool supports(const RoutleyFrame& frame, const Valuation& valuation, State s,
              const Formula& f);

// ||lhs|| subset of ||rhs||.
bool valid_in_model(const RoutleyFrame& frame, const Valuation& valuation,
                    const ConsequencePair& pair);

StateSet proposition(const InfoModel& model, const Formula& f);
bool supports(const InfoModel& model, State s, const Formula& f);
bool valid_in_model(const InfoModel& model, const ConsequencePair& pair);

struct Countermodel {
  RoutleyFrame frame;
  Valuation valuation;
  State witness;  // supports the pair's lhs, not its rhs
};

struct FrameValidity {
  bool valid;
  std::optional<Countermodel> countermodel;  // engaged iff !valid
};

// Valid under every assignment of proper filters to the pair's atoms.
// The scan over valuations may be split across `workers` threads; the
// reported countermodel is always the first one in valuation order.
FrameValidity valid_in_frame(const RoutleyFrame& frame, const ConsequencePair& pair,
                             int workers = 1);

enum class FrameCondition { DN1, DN2, DM2 };

// DN1: s <= s**; DN2: s** <= s; DM2: t.u <= s* forces t <= s* or u <= s*.
bool check_condition(const RoutleyFrame& frame, FrameCondition cond);

// Scans frames of 2..max_states states (canonical representatives, in
// enumeration order) and their valuations; first hit wins. A nullopt result
// asserts nothing beyond "no countermodel up to max_states".
std::optional<Countermodel> find_countermodel(const ConsequencePair& pair,
                                              int max_states, int workers = 1);

}  // namespace rif

#endif  // RIF_SEMANTICS_HPP
