#ifndef RIF_FORMULA_HPP
#define RIF_FORMULA_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rif {

// The object language: atoms, ~ (negation), & (conjunction), | (disjunction).
// Trees are immutable and freely shared; equality is syntactic.

enum class FormulaKind : std::uint8_t { Atom, Neg, And, Or };

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

class Formula {
public:
  static FormulaPtr atom(std::string name);
  static FormulaPtr neg(FormulaPtr body);
  static FormulaPtr conj(FormulaPtr left, FormulaPtr right);
  static FormulaPtr disj(FormulaPtr left, FormulaPtr right);

  FormulaKind kind() const { return kind_; }
  bool is(FormulaKind k) const { return kind_ == k; }

  const std::string& atom_name() const;  // Atom only
  const FormulaPtr& left() const;        // And/Or only
  const FormulaPtr& right() const;       // And/Or only
  const FormulaPtr& body() const;        // Neg only

  // Atom has depth 0; every connective adds 1.
  int depth() const { return depth_; }

  static bool valid_atom_name(std::string_view name);

private:
  Formula(FormulaKind k, std::string name, FormulaPtr l, FormulaPtr r);

  FormulaKind kind_;
  std::string name_;
  FormulaPtr left_;
  FormulaPtr right_;
  int depth_;
};

bool equal(const Formula& a, const Formula& b);
bool equal(const FormulaPtr& a, const FormulaPtr& b);

// Total structural order: by kind (Atom < Neg < And < Or), then contents.
// Used for deterministic tie-breaking; not a semantic relation.
int compare(const Formula& a, const Formula& b);
int compare(const FormulaPtr& a, const FormulaPtr& b);

std::size_t hash_value(const Formula& f);

struct FormulaLess {
  bool operator()(const FormulaPtr& a, const FormulaPtr& b) const {
    return compare(a, b) < 0;
  }
};

// A single-premise, single-conclusion consequence pair "lhs |- rhs".
struct ConsequencePair {
  FormulaPtr lhs;
  FormulaPtr rhs;
};

bool equal(const ConsequencePair& a, const ConsequencePair& b);
int compare(const ConsequencePair& a, const ConsequencePair& b);

struct PairLess {
  bool operator()(const ConsequencePair& a, const ConsequencePair& b) const {
    return compare(a, b) < 0;
  }
};

// Syntax error with a byte offset into the input text.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& msg, std::size_t position);
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// Grammar: '~' binds tightest, then '&', then '|'; binaries associate left;
// atoms are [a-z][a-z0-9_]*. The unicode spellings of the connectives and
// the turnstile are accepted on input but never produced on output.
FormulaPtr parse_formula(std::string_view text);
ConsequencePair parse_pair(std::string_view text);  // "<formula> |- <formula>"

// Minimal parentheses; parse_formula(render(f)) == f.
std::string render(const Formula& f);
std::string render(const FormulaPtr& f);
std::string render(const ConsequencePair& p);

// n nested negations; neg_power(0, f) == f.
FormulaPtr neg_power(unsigned n, FormulaPtr f);

std::set<std::string> atoms(const Formula& f);
std::set<std::string> atoms(const ConsequencePair& p);
void collect_atoms(const Formula& f, std::set<std::string>& out);

}  // namespace rif

#endif  // RIF_FORMULA_HPP
