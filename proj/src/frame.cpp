#include "rif/frame.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <set>
#include <string>

namespace rif {

std::string_view violation_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::NotAssociative: return "NotAssociative";
    case ViolationKind::NotCommutative: return "NotCommutative";
    case ViolationKind::NotIdempotent: return "NotIdempotent";
    case ViolationKind::UnitLaw: return "UnitLaw";
    case ViolationKind::AnnihilatorLaw: return "AnnihilatorLaw";
    case ViolationKind::EPrimeness: return "EPrimeness";
    case ViolationKind::StarOnUnits: return "StarOnUnits";
    case ViolationKind::StarNotAntitone: return "StarNotAntitone";
    case ViolationKind::StarMeetCondition: return "StarMeetCondition";
    case ViolationKind::IEqualsE: return "IEqualsE";
  }
  return "?";
}

RoutleyFrame::RoutleyFrame(std::vector<std::string> state_names,
                           std::vector<State> meet_table,
                           std::vector<State> star_map,
                           State bottom_e, State top_i)
    : n_(static_cast<int>(state_names.size())),
      names_(std::move(state_names)),
      meet_(std::move(meet_table)),
      star_(std::move(star_map)),
      e_(bottom_e),
      i_(top_i) {
  if (n_ < 2) throw FrameError("a frame needs at least 2 states");
  if (n_ > kMaxStates)
    throw FrameError("state count " + std::to_string(n_) + " exceeds the cap of " +
                     std::to_string(kMaxStates));
  std::set<std::string> seen;
  for (const auto& name : names_) {
    if (name.empty()) throw FrameError("empty state name");
    if (!seen.insert(name).second)
      throw FrameError("duplicate state name '" + name + "'");
  }
  if (meet_.size() != static_cast<std::size_t>(n_) * n_)
    throw FrameError("meet table must have n*n entries");
  if (star_.size() != static_cast<std::size_t>(n_))
    throw FrameError("star map must have n entries");
  for (State v : meet_)
    if (v >= n_) throw FrameError("meet table entry out of range");
  for (State v : star_)
    if (v >= n_) throw FrameError("star map entry out of range");
  if (e_ >= n_ || i_ >= n_) throw FrameError("e/i index out of range");
  recompute_upsets();
}

void RoutleyFrame::recompute_upsets() {
  upsets_.assign(n_, 0);
  for (State s = 0; s < n_; ++s)
    for (State t = 0; t < n_; ++t)
      if (leq(s, t)) upsets_[s] |= state_bit(t);
}

RoutleyFrame RoutleyFrame::from_hasse(std::vector<std::string> state_names,
                                      const std::vector<std::pair<State, State>>& covers,
                                      std::vector<State> star_map,
                                      State bottom_e, State top_i) {
  int n = static_cast<int>(state_names.size());
  if (n < 2 || n > kMaxStates) throw FrameError("bad state count for hasse input");
  std::vector<bool> lt(n * n, false);
  for (auto [a, b] : covers) {
    if (a >= n || b >= n) throw FrameError("hasse cover out of range");
    if (a == b) throw FrameError("hasse cover relates a state to itself");
    lt[a * n + b] = true;
  }
  // Warshall closure of the strict part.
  for (int k = 0; k < n; ++k)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (lt[a * n + k] && lt[k * n + b]) lt[a * n + b] = true;
  for (int a = 0; a < n; ++a)
    if (lt[a * n + a]) throw FrameError("hasse input contains a cycle");

  auto leq = [&](int a, int b) { return a == b || lt[a * n + b]; };
  std::vector<State> meet(n * n);
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      int best = -1;
      for (int x = 0; x < n; ++x) {
        if (!leq(x, s) || !leq(x, t)) continue;
        if (best == -1 || leq(best, x)) best = x;
      }
      if (best == -1)
        throw FrameError("not a meet-semilattice: '" + state_names[s] + "' and '" +
                         state_names[t] + "' have no lower bound");
      for (int x = 0; x < n; ++x)
        if (leq(x, s) && leq(x, t) && !leq(x, best))
          throw FrameError("not a meet-semilattice: '" + state_names[s] + "' and '" +
                           state_names[t] + "' have no greatest lower bound");
      meet[s * n + t] = static_cast<State>(best);
    }
  }
  return RoutleyFrame(std::move(state_names), std::move(meet), std::move(star_map),
                      bottom_e, top_i);
}

std::optional<State> RoutleyFrame::index_of(std::string_view name) const {
  for (int s = 0; s < n_; ++s)
    if (names_[s] == name) return static_cast<State>(s);
  return std::nullopt;
}

State RoutleyFrame::star_n(State s, unsigned n) const {
  for (unsigned k = 0; k < n; ++k) s = star_[s];
  return s;
}

std::vector<FrameViolation> RoutleyFrame::validate_proto() const {
  std::vector<FrameViolation> out;
  auto report = [&](ViolationKind k, std::vector<State> w) {
    out.push_back({k, std::move(w)});
  };

  if (e_ == i_) report(ViolationKind::IEqualsE, {e_});

  bool done = false;
  for (State s = 0; s < n_ && !done; ++s)
    for (State t = 0; t < n_ && !done; ++t)
      if (meet(s, t) != meet(t, s)) {
        report(ViolationKind::NotCommutative, {s, t});
        done = true;
      }

  for (State s = 0; s < n_; ++s)
    if (meet(s, s) != s) {
      report(ViolationKind::NotIdempotent, {s});
      break;
    }

  done = false;
  for (State s = 0; s < n_ && !done; ++s)
    for (State t = 0; t < n_ && !done; ++t)
      for (State u = 0; u < n_ && !done; ++u)
        if (meet(meet(s, t), u) != meet(s, meet(t, u))) {
          report(ViolationKind::NotAssociative, {s, t, u});
          done = true;
        }

  for (State s = 0; s < n_; ++s)
    if (meet(s, i_) != s) {
      report(ViolationKind::UnitLaw, {s});
      break;
    }

  for (State s = 0; s < n_; ++s)
    if (meet(s, e_) != e_) {
      report(ViolationKind::AnnihilatorLaw, {s});
      break;
    }

  done = false;
  for (State t = 0; t < n_ && !done; ++t)
    for (State u = 0; u < n_ && !done; ++u)
      if (meet(t, u) == e_ && t != e_ && u != e_) {
        report(ViolationKind::EPrimeness, {t, u});
        done = true;
      }

  return out;
}

std::vector<FrameViolation> RoutleyFrame::validate_routley_if() const {
  if (!validate_proto().empty())
    throw FrameError("star-law validation requires a proto-valid frame");

  std::vector<FrameViolation> out;
  if (star_[i_] != e_) out.push_back({ViolationKind::StarOnUnits, {i_}});
  else if (star_[e_] != i_) out.push_back({ViolationKind::StarOnUnits, {e_}});

  bool done = false;
  for (State t = 0; t < n_ && !done; ++t)
    for (State u = 0; u < n_ && !done; ++u)
      if (leq(t, u) && !leq(star_[u], star_[t])) {
        out.push_back({ViolationKind::StarNotAntitone, {t, u}});
        done = true;
      }

  done = false;
  for (State t = 0; t < n_ && !done; ++t)
    for (State u = 0; u < n_ && !done; ++u) {
      State m = star_[meet(t, u)];
      if (!leq(m, star_[t]) && !leq(m, star_[u])) {
        out.push_back({ViolationKind::StarMeetCondition, {t, u}});
        done = true;
      }
    }

  return out;
}

bool RoutleyFrame::is_linear() const {
  for (State s = 0; s < n_; ++s)
    for (State t = 0; t < n_; ++t)
      if (!leq(s, t) && !leq(t, s)) return false;
  return true;
}

bool RoutleyFrame::is_involutive() const {
  for (State s = 0; s < n_; ++s)
    if (star_[star_[s]] != s) return false;
  return true;
}

bool is_proper_filter(const RoutleyFrame& frame, StateSet candidate) {
  if (!set_has(candidate, frame.top_i())) return false;
  if (set_has(candidate, frame.bottom_e())) return false;
  int n = frame.size();
  for (State t = 0; t < n; ++t)
    for (State u = 0; u < n; ++u) {
      bool both = set_has(candidate, t) && set_has(candidate, u);
      if (set_has(candidate, frame.meet(t, u)) != both) return false;
    }
  return true;
}

std::vector<StateSet> RoutleyFrame::proper_filters() const {
  // States in a linear extension of >=, so every state above s is decided
  // before s is; membership then has only the two local constraints below.
  std::vector<State> order(n_);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](State a, State b) {
    int ca = std::popcount(upsets_[a]), cb = std::popcount(upsets_[b]);
    return ca != cb ? ca < cb : a < b;
  });

  std::vector<StateSet> found;
  std::vector<signed char> member(n_, -1);

  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n_) {
      StateSet f = 0;
      for (State s = 0; s < n_; ++s)
        if (member[s] == 1) f |= state_bit(s);
      found.push_back(f);
      return;
    }
    State s = order[pos];
    bool forced_in = (s == i_);
    bool forced_out = (s == e_);
    for (int j = 0; j < pos && !forced_out; ++j) {
      State t = order[j];
      if (member[t] == 0 && leq(s, t)) forced_out = true;
    }
    for (int j = 0; j < pos && !forced_in; ++j) {
      State t = order[j];
      if (member[t] != 1) continue;
      for (int k = j; k < pos; ++k) {
        State u = order[k];
        if (member[u] == 1 && meet(t, u) == s) {
          forced_in = true;
          break;
        }
      }
    }
    if (forced_in && forced_out) return;
    if (forced_in || forced_out) {
      member[s] = forced_in ? 1 : 0;
      self(self, pos + 1);
    } else {
      member[s] = 0;
      self(self, pos + 1);
      member[s] = 1;
      self(self, pos + 1);
    }
    member[s] = -1;
  };
  rec(rec, 0);

  std::sort(found.begin(), found.end());
  return found;
}

StateSet RoutleyFrame::principal_upset(State s) const {
  if (s >= n_) throw FrameError("state out of range");
  if (s == e_)
    throw FrameError("the upset of '" + names_[e_] + "' contains the bottom state and is not a proper filter");
  return upsets_[s];
}

std::string RoutleyFrame::encoding() const {
  std::string out;
  out.reserve(1 + meet_.size() + star_.size());
  out.push_back(static_cast<char>(n_));
  for (State v : meet_) out.push_back(static_cast<char>(v));
  for (State v : star_) out.push_back(static_cast<char>(v));
  return out;
}

std::string RoutleyFrame::canonical_encoding() const {
  if (n_ > 12) throw FrameError("canonicalization limited to 12 states");
  // Only relabelings fixing e -> 0 and i -> n-1 are considered; both are
  // structure-determined, so this loses nothing.
  std::vector<State> to_std(n_), from_std(n_);
  {
    int next = 1;
    for (State s = 0; s < n_; ++s) {
      if (s == e_) to_std[s] = 0;
      else if (s == i_) to_std[s] = static_cast<State>(n_ - 1);
      else to_std[s] = static_cast<State>(next++);
    }
  }
  std::vector<State> middles;
  for (int v = 1; v < n_ - 1; ++v) middles.push_back(static_cast<State>(v));

  std::string best;
  std::vector<State> perm(n_);
  do {
    perm[0] = 0;
    perm[n_ - 1] = static_cast<State>(n_ - 1);
    for (std::size_t j = 0; j < middles.size(); ++j)
      perm[j + 1] = middles[j];
    // total relabeling: s -> perm[to_std[s]]
    std::string enc(1 + static_cast<std::size_t>(n_) * n_ + n_, '\0');
    enc[0] = static_cast<char>(n_);
    auto lab = [&](State s) { return perm[to_std[s]]; };
    for (State s = 0; s < n_; ++s)
      for (State t = 0; t < n_; ++t)
        enc[1 + lab(s) * n_ + lab(t)] = static_cast<char>(lab(meet(s, t)));
    for (State s = 0; s < n_; ++s)
      enc[1 + static_cast<std::size_t>(n_) * n_ + lab(s)] = static_cast<char>(lab(star_[s]));
    if (best.empty() || enc < best) best = enc;
  } while (std::next_permutation(middles.begin(), middles.end()));
  return best;
}

namespace {

RoutleyFrame make_builtin(const std::vector<std::string>& names,
                          const std::vector<std::pair<int, int>>& covers,
                          const std::vector<int>& star) {
  std::vector<std::pair<State, State>> cv;
  for (auto [a, b] : covers) cv.emplace_back(static_cast<State>(a), static_cast<State>(b));
  std::vector<State> st;
  for (int v : star) st.push_back(static_cast<State>(v));
  return RoutleyFrame::from_hasse(names, cv, st, 0,
                                  static_cast<State>(names.size() - 1));
}

RoutleyFrame chain_involutive(int k) {
  if (k < 0) throw FrameError("chain_involutive needs k >= 0");
  int n = 2 * k + 2;
  if (n > kMaxStates) throw FrameError("chain_involutive(k) exceeds the state cap");
  std::vector<std::string> names;
  names.push_back("e");
  for (int j = 1; j <= 2 * k; ++j) names.push_back("s" + std::to_string(j));
  names.push_back("i");
  std::vector<std::pair<int, int>> covers;
  for (int j = 0; j + 1 < n; ++j) covers.emplace_back(j, j + 1);
  std::vector<int> star(n);
  for (int j = 0; j < n; ++j) star[j] = n - 1 - j;
  return make_builtin(names, covers, star);
}

}  // namespace

RoutleyFrame builtin_frame(std::string_view name) {
  if (name == "fig1_left") {
    //   e < s < {t,u} < v < i, t and u incomparable, t.u = s
    return make_builtin({"e", "s", "t", "u", "v", "i"},
                        {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 5}},
                        {5, 4, 4, 4, 4, 0});
  }
  if (name == "fig1_right") {
    return make_builtin({"e", "s", "t", "u", "v", "i"},
                        {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 5}},
                        {5, 1, 1, 1, 1, 0});
  }
  if (name == "fig2_n5") {
    // N5: e < s < t < u < i and s < w < v < u
    return make_builtin({"e", "s", "t", "w", "v", "u", "i"},
                        {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {2, 5}, {4, 5}, {5, 6}},
                        {6, 5, 5, 5, 5, 5, 0});
  }
  if (name == "ikl") {
    // 4-chain e < t < s < i with t and s swapped by star
    return make_builtin({"e", "t", "s", "i"}, {{0, 1}, {1, 2}, {2, 3}},
                        {3, 2, 1, 0});
  }
  if (name.rfind("chain_involutive(", 0) == 0 && name.back() == ')') {
    std::string inner(name.substr(17, name.size() - 18));
    if (inner.empty() || inner.find_first_not_of("0123456789") != std::string::npos)
      throw FrameError("bad chain_involutive argument '" + inner + "'");
    return chain_involutive(std::stoi(inner));
  }
  throw FrameError("unknown builtin frame '" + std::string(name) + "'");
}

bool is_builtin_frame_name(std::string_view name) {
  if (name == "fig1_left" || name == "fig1_right" || name == "fig2_n5" || name == "ikl")
    return true;
  return name.rfind("chain_involutive(", 0) == 0 && name.size() >= 19 && name.back() == ')';
}

std::vector<std::string> builtin_frame_names() {
  return {"fig1_left", "fig1_right", "fig2_n5", "ikl", "chain_involutive(k)"};
}

int enumeration_limit() {
  if (const char* env = std::getenv("RIF_ENUM_LIMIT")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 2 && v <= 12) return static_cast<int>(v);
  }
  return 7;
}

namespace {

std::vector<std::string> generated_names(int n) {
  std::vector<std::string> names;
  names.push_back("e");
  for (int j = 1; j < n - 1; ++j) names.push_back("s" + std::to_string(j));
  names.push_back("i");
  return names;
}

// Enumerates every order on {0..n-1} with 0 bottom and n-1 top whose meets
// exist and avoid the bottom for non-bottom pairs, yielding the meet table.
// Choice order per middle pair: incomparable, a < b, b < a.
bool enumerate_meet_tables(int n, const std::function<bool(const std::vector<State>&)>& yield) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 1; a < n - 1; ++a)
    for (int b = a + 1; b < n - 1; ++b) pairs.emplace_back(a, b);

  std::vector<signed char> rel(n * n, 0);  // 1 means row < col
  for (int x = 1; x < n; ++x) rel[0 * n + x] = 1;
  for (int x = 0; x < n - 1; ++x) rel[x * n + (n - 1)] = 1;

  auto leq = [&](int a, int b) { return a == b || rel[a * n + b] == 1; };

  std::vector<State> meet(n * n);

  auto emit = [&]() -> bool {
    for (int a = 1; a < n - 1; ++a)
      for (int b = 1; b < n - 1; ++b)
        for (int c = 1; c < n - 1; ++c)
          if (rel[a * n + b] && rel[b * n + c] && !rel[a * n + c]) return true;
    for (int s = 0; s < n; ++s)
      for (int t = s; t < n; ++t) {
        int best = -1;
        for (int x = 0; x < n; ++x) {
          if (!leq(x, s) || !leq(x, t)) continue;
          if (best == -1 || leq(best, x)) best = x;
        }
        if (best == -1) return true;
        for (int x = 0; x < n; ++x)
          if (leq(x, s) && leq(x, t) && !leq(x, best)) return true;
        if (best == 0 && s != 0 && t != 0) return true;  // bottom as meet of non-bottoms
        meet[s * n + t] = static_cast<State>(best);
        meet[t * n + s] = static_cast<State>(best);
      }
    return yield(meet);
  };

  auto rec = [&](auto&& self, std::size_t idx) -> bool {
    if (idx == pairs.size()) return emit();
    auto [a, b] = pairs[idx];
    if (!self(self, idx + 1)) return false;  // incomparable
    rel[a * n + b] = 1;
    if (!self(self, idx + 1)) return false;  // a < b
    rel[a * n + b] = 0;
    rel[b * n + a] = 1;
    if (!self(self, idx + 1)) return false;  // b < a
    rel[b * n + a] = 0;
    return true;
  };
  return rec(rec, 0);
}

bool routley_star_ok(int n, const std::vector<State>& meet, const std::vector<State>& star) {
  auto leq = [&](State a, State b) { return meet[a * n + b] == a; };
  if (star[n - 1] != 0 || star[0] != n - 1) return false;
  for (State t = 0; t < n; ++t)
    for (State u = 0; u < n; ++u) {
      if (leq(t, u) && !leq(star[u], star[t])) return false;
      State m = star[meet[t * n + u]];
      if (!leq(m, star[t]) && !leq(m, star[u])) return false;
    }
  return true;
}

}  // namespace

void enumerate_routley_ifs(int n, bool up_to_iso,
                           const std::function<bool(const RoutleyFrame&)>& yield) {
  if (n < 2 || n > enumeration_limit())
    throw FrameError("enumeration size " + std::to_string(n) +
                     " outside 2.." + std::to_string(enumeration_limit()));
  auto names = generated_names(n);
  enumerate_meet_tables(n, [&](const std::vector<State>& meet) -> bool {
    std::vector<State> star(n, 0);
    star[0] = static_cast<State>(n - 1);
    star[n - 1] = 0;
    // Odometer over the middle entries, lexicographic.
    bool more = true;
    while (more) {
      if (routley_star_ok(n, meet, star)) {
        RoutleyFrame frame(names, meet, star, 0, static_cast<State>(n - 1));
        if (!up_to_iso || frame.is_canonical_representative())
          if (!yield(frame)) return false;
      }
      more = false;
      for (int j = 1; j < n - 1; ++j) {
        if (star[j] + 1 < n) {
          ++star[j];
          more = true;
          break;
        }
        star[j] = 0;
      }
    }
    return true;
  });
}

void enumerate_proto_ifs(int n, const std::function<bool(const RoutleyFrame&)>& yield) {
  if (n < 2 || n > enumeration_limit())
    throw FrameError("enumeration size " + std::to_string(n) +
                     " outside 2.." + std::to_string(enumeration_limit()));
  auto names = generated_names(n);
  enumerate_meet_tables(n, [&](const std::vector<State>& meet) -> bool {
    std::vector<State> star(n, 0);
    while (true) {
      RoutleyFrame frame(names, meet, star, 0, static_cast<State>(n - 1));
      if (!yield(frame)) return false;
      bool more = false;
      for (int j = 0; j < n; ++j) {
        if (star[j] + 1 < n) {
          ++star[j];
          more = true;
          break;
        }
        star[j] = 0;
      }
      if (!more) break;
    }
    return true;
  });
}

std::uint64_t count_routley_ifs(int n, bool up_to_iso) {
  std::uint64_t count = 0;
  enumerate_routley_ifs(n, up_to_iso, [&](const RoutleyFrame&) {
    ++count;
    return true;
  });
  return count;
}

}  // namespace rif
