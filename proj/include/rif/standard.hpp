#ifndef RIF_STANDARD_HPP
#define RIF_STANDARD_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rif/formula.hpp"
#include "rif/frame.hpp"  // State/StateSet aliases and FrameError

namespace rif {

// Worlds-with-order frames for the truth-conditional reading: a partial
// order, an antitone star, no designated top/bottom, and the classical
// disjunction clause. Kept apart from RoutleyFrame on purpose; the two
// structures obey different laws.
class StandardFrame {
public:
  using World = State;
  using WorldSet = StateSet;

  // `covers` lists pairs (v, w) with v below w; the order is the
  // reflexive-transitive closure. Rejects cycles and non-antitone stars.
  StandardFrame(std::vector<std::string> world_names,
                const std::vector<std::pair<World, World>>& covers,
                std::vector<World> star_map);

  int size() const { return n_; }
  const std::string& name_of(World w) const { return names_[w]; }
  const std::vector<std::string>& world_names() const { return names_; }
  std::optional<World> index_of(std::string_view name) const;

  bool leq(World v, World w) const { return set_has(up_[v], w); }
  World star(World w) const { return star_[w]; }
  WorldSet upset(World w) const { return up_[w]; }
  bool is_upward_closed(WorldSet set) const;

private:
  int n_;
  std::vector<std::string> names_;
  std::vector<WorldSet> up_;  // up_[w] = {v | w <= v}
  std::vector<World> star_;
};

struct StandardModel {
  StandardFrame frame;
  // Every image must be upward closed.
  std::map<std::string, StandardFrame::WorldSet> valuation;
};

// Throws FrameError if some valuation image is not upward closed.
void validate_standard_valuation(const StandardFrame& frame,
                                 const std::map<std::string, StandardFrame::WorldSet>& valuation);

bool truth(const StandardModel& model, StandardFrame::World w, const Formula& f);

struct StandardValidity {
  bool valid;
  std::optional<StandardFrame::World> witness;  // truth(lhs) but not truth(rhs)
};

StandardValidity valid_in_standard_model(const StandardModel& model,
                                         const ConsequencePair& pair);

}  // namespace rif

#endif  // RIF_STANDARD_HPP
