#include "rif/standard.hpp"

#include <set>

#include "rif/semantics.hpp"  // UnmappedAtomError

namespace rif {

StandardFrame::StandardFrame(std::vector<std::string> world_names,
                             const std::vector<std::pair<World, World>>& covers,
                             std::vector<World> star_map)
    : n_(static_cast<int>(world_names.size())),
      names_(std::move(world_names)),
      star_(std::move(star_map)) {
  if (n_ < 1) throw FrameError("a standard frame needs at least one world");
  if (n_ > kMaxStates) throw FrameError("world count exceeds the cap");
  std::set<std::string> seen;
  for (const auto& name : names_) {
    if (name.empty()) throw FrameError("empty world name");
    if (!seen.insert(name).second)
      throw FrameError("duplicate world name '" + name + "'");
  }
  if (star_.size() != static_cast<std::size_t>(n_))
    throw FrameError("star map must have one entry per world");
  for (World w : star_)
    if (w >= n_) throw FrameError("star map entry out of range");

  std::vector<bool> lt(n_ * n_, false);
  for (auto [a, b] : covers) {
    if (a >= n_ || b >= n_) throw FrameError("order pair out of range");
    if (a == b) throw FrameError("order pair relates a world to itself");
    lt[a * n_ + b] = true;
  }
  for (int k = 0; k < n_; ++k)
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        if (lt[a * n_ + k] && lt[k * n_ + b]) lt[a * n_ + b] = true;
  for (int a = 0; a < n_; ++a)
    if (lt[a * n_ + a]) throw FrameError("order contains a cycle");

  up_.assign(n_, 0);
  for (World w = 0; w < n_; ++w) {
    up_[w] |= state_bit(w);
    for (World v = 0; v < n_; ++v)
      if (lt[w * n_ + v]) up_[w] |= state_bit(v);
  }

  for (World v = 0; v < n_; ++v)
    for (World w = 0; w < n_; ++w)
      if (leq(v, w) && !leq(star_[w], star_[v]))
        throw FrameError("star is not antitone ('" + names_[v] + "' <= '" +
                         names_[w] + "')");
}

std::optional<StandardFrame::World> StandardFrame::index_of(std::string_view name) const {
  for (int w = 0; w < n_; ++w)
    if (names_[w] == name) return static_cast<World>(w);
  return std::nullopt;
}

bool StandardFrame::is_upward_closed(WorldSet set) const {
  for (World w = 0; w < n_; ++w)
    if (set_has(set, w) && (up_[w] & ~set) != 0) return false;
  return true;
}

void validate_standard_valuation(
    const StandardFrame& frame,
    const std::map<std::string, StandardFrame::WorldSet>& valuation) {
  for (const auto& [atom, set] : valuation)
    if (!frame.is_upward_closed(set))
      throw FrameError("valuation of '" + atom + "' is not upward closed");
}

bool truth(const StandardModel& model, StandardFrame::World w, const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Atom: {
      auto it = model.valuation.find(f.atom_name());
      if (it == model.valuation.end()) throw UnmappedAtomError(f.atom_name());
      return set_has(it->second, w);
    }
    case FormulaKind::And:
      return truth(model, w, *f.left()) && truth(model, w, *f.right());
    case FormulaKind::Or:
      return truth(model, w, *f.left()) || truth(model, w, *f.right());
    case FormulaKind::Neg:
      return !truth(model, model.frame.star(w), *f.body());
  }
  return false;
}

StandardValidity valid_in_standard_model(const StandardModel& model,
                                         const ConsequencePair& pair) {
  for (StandardFrame::World w = 0; w < model.frame.size(); ++w)
    if (truth(model, w, *pair.lhs) && !truth(model, w, *pair.rhs))
      return {false, w};
  return {true, std::nullopt};
}

}  // namespace rif
