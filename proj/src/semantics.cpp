#include "rif/semantics.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <thread>
#include <unordered_map>
#include <vector>

namespace rif {

std::optional<std::string> find_improper_valuation_entry(const RoutleyFrame& frame,
                                                         const Valuation& valuation) {
  for (const auto& [atom, filter] : valuation)
    if (!is_proper_filter(frame, filter)) return atom;
  return std::nullopt;
}

namespace {

class Evaluator {
public:
  Evaluator(const RoutleyFrame& frame, const Valuation& valuation)
      : frame_(frame), valuation_(valuation) {}

  StateSet eval(const Formula& f) {
    auto it = memo_.find(&f);
    if (it != memo_.end()) return it->second;
    StateSet result = 0;
    switch (f.kind()) {
      case FormulaKind::Atom: {
        auto v = valuation_.find(f.atom_name());
        if (v == valuation_.end()) throw UnmappedAtomError(f.atom_name());
        result = v->second;
        break;
      }
      case FormulaKind::And:
        result = eval(*f.left()) & eval(*f.right());
        break;
      case FormulaKind::Or: {
        StateSet left = eval(*f.left());
        StateSet right = eval(*f.right());
        for (StateSet l = left; l;) {
          State t = static_cast<State>(std::countr_zero(l));
          l &= l - 1;
          for (StateSet r = right; r;) {
            State u = static_cast<State>(std::countr_zero(r));
            r &= r - 1;
            result |= frame_.upset(frame_.meet(t, u));
          }
        }
        break;
      }
      case FormulaKind::Neg: {
        StateSet body = eval(*f.body());
        for (State s = 0; s < frame_.size(); ++s)
          if (!set_has(body, frame_.star(s))) result |= state_bit(s);
        break;
      }
    }
    memo_.emplace(&f, result);
    return result;
  }

private:
  const RoutleyFrame& frame_;
  const Valuation& valuation_;
  std::unordered_map<const Formula*, StateSet> memo_;
};

// Smallest index in [0, total) accepted by `hit`, scanned in chunks by
// `workers` threads. The minimum is taken over all hits, so the result does
// not depend on scheduling.
std::optional<std::uint64_t> min_hit_index(std::uint64_t total, int workers,
                                           const std::function<bool(std::uint64_t)>& hit) {
  if (total == 0) return std::nullopt;
  if (workers <= 1) {
    for (std::uint64_t v = 0; v < total; ++v)
      if (hit(v)) return v;
    return std::nullopt;
  }

  constexpr std::uint64_t kChunk = 64;
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{UINT64_MAX};

  auto worker = [&]() {
    while (true) {
      std::uint64_t start = next.fetch_add(kChunk);
      if (start >= total || start > best.load()) break;
      std::uint64_t end = std::min(start + kChunk, total);
      for (std::uint64_t v = start; v < end; ++v) {
        if (v > best.load()) break;
        if (hit(v)) {
          std::uint64_t cur = best.load();
          while (v < cur && !best.compare_exchange_weak(cur, v)) {
          }
          break;
        }
      }
    }
  };

  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::uint64_t found = best.load();
  if (found == UINT64_MAX) return std::nullopt;
  return found;
}

}  // namespace

StateSet proposition(const RoutleyFrame& frame, const Valuation& valuation,
                     const Formula& f) {
  return Evaluator(frame, valuation).eval(f);
}

bool supports(const RoutleyFrame& frame, const Valuation& valuation, State s,
              const Formula& f) {
  return set_has(proposition(frame, valuation, f), s);
}

bool valid_in_model(const RoutleyFrame& frame, const Valuation& valuation,
                    const ConsequencePair& pair) {
  Evaluator ev(frame, valuation);
  StateSet lhs = ev.eval(*pair.lhs);
  StateSet rhs = ev.eval(*pair.rhs);
  return (lhs & ~rhs) == 0;
}

StateSet proposition(const InfoModel& model, const Formula& f) {
  return proposition(model.frame, model.valuation, f);
}

bool supports(const InfoModel& model, State s, const Formula& f) {
  return supports(model.frame, model.valuation, s, f);
}

bool valid_in_model(const InfoModel& model, const ConsequencePair& pair) {
  return valid_in_model(model.frame, model.valuation, pair);
}

namespace {

Valuation decode_valuation(const std::vector<std::string>& atom_list,
                           const std::vector<StateSet>& filters, std::uint64_t index) {
  Valuation val;
  for (const auto& atom : atom_list) {
    val[atom] = filters[index % filters.size()];
    index /= filters.size();
  }
  return val;
}

}  // namespace

FrameValidity valid_in_frame(const RoutleyFrame& frame, const ConsequencePair& pair,
                             int workers) {
  std::vector<StateSet> filters = frame.proper_filters();
  std::set<std::string> atom_set = atoms(pair);
  std::vector<std::string> atom_list(atom_set.begin(), atom_set.end());

  if (filters.empty())
    throw FrameError("frame has no proper filters; no valuation exists");

  std::uint64_t total = 1;
  for (std::size_t j = 0; j < atom_list.size(); ++j) total *= filters.size();

  auto hit = [&](std::uint64_t index) {
    Valuation val = decode_valuation(atom_list, filters, index);
    return !valid_in_model(frame, val, pair);
  };

  auto found = min_hit_index(total, workers, hit);
  if (!found) return {true, std::nullopt};

  Valuation val = decode_valuation(atom_list, filters, *found);
  Evaluator ev(frame, val);
  StateSet diff = ev.eval(*pair.lhs) & ~ev.eval(*pair.rhs);
  State witness = static_cast<State>(std::countr_zero(diff));
  return {false, Countermodel{frame, std::move(val), witness}};
}

bool check_condition(const RoutleyFrame& frame, FrameCondition cond) {
  int n = frame.size();
  switch (cond) {
    case FrameCondition::DN1:
      for (State s = 0; s < n; ++s)
        if (!frame.leq(s, frame.star_n(s, 2))) return false;
      return true;
    case FrameCondition::DN2:
      for (State s = 0; s < n; ++s)
        if (!frame.leq(frame.star_n(s, 2), s)) return false;
      return true;
    case FrameCondition::DM2:
      for (State s = 0; s < n; ++s) {
        State star = frame.star(s);
        for (State t = 0; t < n; ++t)
          for (State u = 0; u < n; ++u)
            if (frame.leq(frame.meet(t, u), star) &&
                !frame.leq(t, star) && !frame.leq(u, star))
              return false;
      }
      return true;
  }
  return false;
}

std::optional<Countermodel> find_countermodel(const ConsequencePair& pair,
                                              int max_states, int workers) {
  if (max_states < 2 || max_states > enumeration_limit())
    throw FrameError("countermodel size bound outside 2.." +
                     std::to_string(enumeration_limit()));
  std::optional<Countermodel> result;
  for (int n = 2; n <= max_states && !result; ++n) {
    enumerate_routley_ifs(n, /*up_to_iso=*/true, [&](const RoutleyFrame& frame) {
      FrameValidity v = valid_in_frame(frame, pair, workers);
      if (!v.valid) {
        result = std::move(v.countermodel);
        return false;
      }
      return true;
    });
  }
  return result;
}

}  // namespace rif
