#ifndef RIF_FRAME_HPP
#define RIF_FRAME_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rif {

// States are indices into a frame's carrier; sets of states are bitsets.
// Carriers are capped at 32 states so every filter/upset fits in one word.
using State = std::uint8_t;
using StateSet = std::uint32_t;

constexpr int kMaxStates = 32;

constexpr StateSet state_bit(State s) { return StateSet{1} << s; }
constexpr bool set_has(StateSet set, State s) { return (set >> s) & 1u; }

enum class ViolationKind : std::uint8_t {
  NotAssociative,
  NotCommutative,
  NotIdempotent,
  UnitLaw,
  AnnihilatorLaw,
  EPrimeness,
  StarOnUnits,
  StarNotAntitone,
  StarMeetCondition,
  IEqualsE,
};

std::string_view violation_name(ViolationKind k);

struct FrameViolation {
  ViolationKind kind;
  std::vector<State> witness;
};

// Malformed input or misuse (out-of-range table entries, bad state names,
// calling the star-law validator on a broken semilattice, ...). Distinct
// from FrameViolation, which reports a law failure in well-formed tables.
class FrameError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A finite carrier with a total binary table (the meet "common content"
// operation), a unary star map, and designated least/greatest elements.
// Construction checks well-formedness only; the algebraic laws are the
// validators' job, so invalid candidate structures can be represented and
// inspected.
class RoutleyFrame {
public:
  RoutleyFrame(std::vector<std::string> state_names,
               std::vector<State> meet_table,  // row-major n*n
               std::vector<State> star_map,
               State bottom_e, State top_i);

  // Builds the meet table from covering pairs of the intended order.
  // Rejects inputs whose induced order is not a meet-semilattice.
  static RoutleyFrame from_hasse(std::vector<std::string> state_names,
                                 const std::vector<std::pair<State, State>>& covers,
                                 std::vector<State> star_map,
                                 State bottom_e, State top_i);

  int size() const { return n_; }
  StateSet all_states() const { return n_ == 32 ? ~StateSet{0} : (StateSet{1} << n_) - 1; }

  const std::string& name_of(State s) const { return names_[s]; }
  const std::vector<std::string>& state_names() const { return names_; }
  std::optional<State> index_of(std::string_view name) const;

  State meet(State s, State t) const { return meet_[s * n_ + t]; }
  State star(State s) const { return star_[s]; }
  State star_n(State s, unsigned n) const;
  bool leq(State s, State t) const { return meet(s, t) == s; }

  State bottom_e() const { return e_; }
  State top_i() const { return i_; }

  // {t | s <= t}, precomputed.
  StateSet upset(State s) const { return upsets_[s]; }

  const std::vector<State>& meet_table() const { return meet_; }
  const std::vector<State>& star_map() const { return star_; }

  // Semilattice laws, unit/annihilator behaviour of i/e, and e-primeness.
  std::vector<FrameViolation> validate_proto() const;
  // Star laws: i*/e* swap, antitonicity, and the meet-star condition.
  // Requires a proto-valid frame (throws FrameError otherwise).
  std::vector<FrameViolation> validate_routley_if() const;

  bool is_proto() const { return validate_proto().empty(); }
  bool is_routley_if() const {
    return is_proto() && validate_routley_if().empty();
  }

  bool is_linear() const;
  bool is_involutive() const;

  // All proper filters, ascending by bitmask.
  std::vector<StateSet> proper_filters() const;
  // {t | s <= t}; rejects s == e, whose upset would contain e.
  StateSet principal_upset(State s) const;

  // Byte encoding of (n, meet, star); equal iff identical labeled frames.
  std::string encoding() const;
  // Minimum encoding over all relabelings that fix e at index 0 and i at
  // index n-1. Equal iff isomorphic.
  std::string canonical_encoding() const;
  bool is_canonical_representative() const { return encoding() == canonical_encoding(); }

private:
  void recompute_upsets();

  int n_;
  std::vector<std::string> names_;
  std::vector<State> meet_;
  std::vector<State> star_;
  State e_;
  State i_;
  std::vector<StateSet> upsets_;
};

// The biconditional filter law: i in F, e not in F, and
// meet(t,u) in F iff t in F and u in F.
bool is_proper_filter(const RoutleyFrame& frame, StateSet candidate);

// Built-in frames: fig1_left, fig1_right, fig2_n5, ikl, chain_involutive(k).
RoutleyFrame builtin_frame(std::string_view name);
bool is_builtin_frame_name(std::string_view name);
std::vector<std::string> builtin_frame_names();

// Streams every structure on n labeled states that passes both validators,
// in a fixed deterministic order; with up_to_iso, only canonical
// representatives. The callback returns false to stop early.
void enumerate_routley_ifs(int n, bool up_to_iso,
                           const std::function<bool(const RoutleyFrame&)>& yield);

// Same, but only the semilattice laws are required; the star map ranges
// over all functions on the carrier.
void enumerate_proto_ifs(int n, const std::function<bool(const RoutleyFrame&)>& yield);

std::uint64_t count_routley_ifs(int n, bool up_to_iso);

// Default cap for enumeration sizes; RIF_ENUM_LIMIT overrides.
int enumeration_limit();

}  // namespace rif

#endif  // RIF_FRAME_HPP
