#include <doctest.h>

#include <random>
#include <set>

#include "gen.hpp"
#include "rif/calculus.hpp"
#include "rif/semantics.hpp"

using namespace rif;

namespace {

State idx(const RoutleyFrame& f, const char* name) { return *f.index_of(name); }

StateSet states_of(const RoutleyFrame& f, std::initializer_list<const char*> names) {
  StateSet set = 0;
  for (const char* name : names) set |= state_bit(*f.index_of(name));
  return set;
}

// Literal-clause oracle, deliberately slow: the disjunction clause is the
// raw double loop over supporting states, recomputed from scratch.
bool oracle_supports(const RoutleyFrame& f, const Valuation& val, State s,
                     const Formula& g) {
  switch (g.kind()) {
    case FormulaKind::Atom:
      return set_has(val.at(g.atom_name()), s);
    case FormulaKind::And:
      return oracle_supports(f, val, s, *g.left()) &&
             oracle_supports(f, val, s, *g.right());
    case FormulaKind::Or:
      for (State t = 0; t < f.size(); ++t)
        for (State u = 0; u < f.size(); ++u)
          if (f.leq(f.meet(t, u), s) && oracle_supports(f, val, t, *g.left()) &&
              oracle_supports(f, val, u, *g.right()))
            return true;
      return false;
    case FormulaKind::Neg:
      return !oracle_supports(f, val, f.star(s), *g.body());
  }
  return false;
}

StateSet oracle_proposition(const RoutleyFrame& f, const Valuation& val,
                            const Formula& g) {
  StateSet out = 0;
  for (State s = 0; s < f.size(); ++s)
    if (oracle_supports(f, val, s, g)) out |= state_bit(s);
  return out;
}

std::vector<Valuation> all_valuations(const RoutleyFrame& f,
                                      const std::vector<std::string>& atom_list) {
  auto filters = f.proper_filters();
  std::vector<Valuation> out;
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < atom_list.size(); ++j) total *= filters.size();
  for (std::uint64_t index = 0; index < total; ++index) {
    Valuation val;
    std::uint64_t rest = index;
    for (const auto& atom : atom_list) {
      val[atom] = filters[rest % filters.size()];
      rest /= filters.size();
    }
    out.push_back(std::move(val));
  }
  return out;
}

}  // namespace

TEST_CASE("support clauses on the diamond frames") {
  RoutleyFrame left = builtin_frame("fig1_left");
  Valuation val{{"p", states_of(left, {"v", "i"})}};
  State t = idx(left, "t");
  CHECK(supports(left, val, t, *parse_formula("~~p")));
  CHECK(!supports(left, val, t, *parse_formula("p")));
  CHECK(!valid_in_model(left, val, parse_pair("~~p |- p")));

  // frozen from the literal-clause oracle
  CHECK(proposition(left, val, *parse_formula("~p")) == states_of(left, {"i"}));
  CHECK(proposition(left, val, *parse_formula("~~p")) ==
        states_of(left, {"s", "t", "u", "v", "i"}));

  RoutleyFrame right = builtin_frame("fig1_right");
  Valuation rv{{"p", states_of(right, {"v", "i"})}};
  CHECK(proposition(right, rv, *parse_formula("~~p")) == states_of(right, {"i"}));
  CHECK(!valid_in_model(right, rv, parse_pair("p |- ~~p")));

  Valuation tu{{"p", right.principal_upset(idx(right, "t"))},
               {"q", right.principal_upset(idx(right, "u"))}};
  State s = idx(right, "s");
  CHECK(supports(right, tu, s, *parse_formula("~p & ~q")));
  CHECK(!supports(right, tu, s, *parse_formula("~(p | q)")));
  CHECK(!valid_in_model(right, tu, parse_pair("~p & ~q |- ~(p | q)")));
}

TEST_CASE("the top state supports everything and the bottom nothing") {
  std::mt19937_64 rng(11);
  for (const char* name : {"fig1_left", "fig2_n5", "ikl"}) {
    RoutleyFrame f = builtin_frame(name);
    auto filters = f.proper_filters();
    Valuation val{{"p", filters[rng() % filters.size()]},
                  {"q", filters[rng() % filters.size()]}};
    for (int round = 0; round < 30; ++round) {
      FormulaPtr g = testgen::random_formula(rng, {"p", "q"}, 3);
      CHECK(supports(f, val, f.top_i(), *g));
      CHECK(!supports(f, val, f.bottom_e(), *g));
    }
  }
}

TEST_CASE("disjunction support without a supporting disjunct") {
  RoutleyFrame n5 = builtin_frame("fig2_n5");
  Valuation val{{"q", n5.principal_upset(idx(n5, "t"))},
                {"r", n5.principal_upset(idx(n5, "v"))}};
  State w = idx(n5, "w");
  CHECK(supports(n5, val, w, *parse_formula("q | r")));
  CHECK(!supports(n5, val, w, *parse_formula("q")));
  CHECK(!supports(n5, val, w, *parse_formula("r")));
}

TEST_CASE("evaluator agrees with the literal-clause oracle") {
  std::mt19937_64 rng(20240902);
  std::vector<RoutleyFrame> frames;
  for (const char* name : {"fig1_left", "fig1_right", "fig2_n5", "ikl"})
    frames.push_back(builtin_frame(name));
  for (const RoutleyFrame& f : testgen::collect_routley_ifs(2, 4, true))
    frames.push_back(f);

  for (const RoutleyFrame& f : frames) {
    auto filters = f.proper_filters();
    for (int round = 0; round < 15; ++round) {
      Valuation val{{"p", filters[rng() % filters.size()]},
                    {"q", filters[rng() % filters.size()]}};
      FormulaPtr g = testgen::random_formula(rng, {"p", "q"}, 3);
      CHECK(proposition(f, val, *g) == oracle_proposition(f, val, *g));
    }
  }
}

TEST_CASE("atom propositions are the valuation and unmapped atoms throw") {
  RoutleyFrame f = builtin_frame("ikl");
  Valuation val{{"p", f.principal_upset(idx(f, "s"))}};
  CHECK(proposition(f, val, *parse_formula("p")) == val["p"]);
  CHECK_THROWS_AS(proposition(f, val, *parse_formula("q")), UnmappedAtomError);
  CHECK_THROWS_AS(valid_in_model(f, val, parse_pair("p |- q")), UnmappedAtomError);
}

TEST_CASE("identity pairs are valid in every model") {
  std::mt19937_64 rng(5);
  RoutleyFrame f = builtin_frame("fig2_n5");
  auto filters = f.proper_filters();
  for (int round = 0; round < 25; ++round) {
    Valuation val{{"p", filters[rng() % filters.size()]},
                  {"q", filters[rng() % filters.size()]}};
    FormulaPtr g = testgen::random_formula(rng, {"p", "q"}, 3);
    CHECK(valid_in_model(f, val, {g, g}));
  }
}

TEST_CASE("valid_in_frame finds the distributivity counterexample at w") {
  RoutleyFrame n5 = builtin_frame("fig2_n5");
  ConsequencePair d = parse_pair("p & (q | r) |- (p & q) | (p & r)");
  FrameValidity v = valid_in_frame(n5, d);
  REQUIRE(!v.valid);
  REQUIRE(v.countermodel.has_value());
  CHECK(n5.name_of(v.countermodel->witness) == "w");
  // the returned witness really separates the two sides
  CHECK(supports(n5, v.countermodel->valuation, v.countermodel->witness, *d.lhs));
  CHECK(!supports(n5, v.countermodel->valuation, v.countermodel->witness, *d.rhs));

  CHECK(valid_in_frame(n5, parse_pair("~(p & q) |- ~p | ~q")).valid);
  CHECK(valid_in_frame(builtin_frame("ikl"), parse_pair("p & ~p |- q | ~q")).valid);
}

TEST_CASE("valid_in_frame is worker-count independent") {
  RoutleyFrame n5 = builtin_frame("fig2_n5");
  ConsequencePair d = parse_pair("p & (q | r) |- (p & q) | (p & r)");
  FrameValidity v1 = valid_in_frame(n5, d, 1);
  for (int workers : {2, 3, 8}) {
    FrameValidity v = valid_in_frame(n5, d, workers);
    REQUIRE(!v.valid);
    CHECK(v.countermodel->witness == v1.countermodel->witness);
    CHECK(v.countermodel->valuation == v1.countermodel->valuation);
  }
}

TEST_CASE("frame conditions match the built-in frames") {
  RoutleyFrame left = builtin_frame("fig1_left");
  CHECK(check_condition(left, FrameCondition::DN1));
  CHECK(check_condition(left, FrameCondition::DM2));
  CHECK(!check_condition(left, FrameCondition::DN2));

  RoutleyFrame right = builtin_frame("fig1_right");
  CHECK(check_condition(right, FrameCondition::DN2));
  CHECK(!check_condition(right, FrameCondition::DN1));
  CHECK(!check_condition(right, FrameCondition::DM2));

  RoutleyFrame ikl = builtin_frame("ikl");
  CHECK(check_condition(ikl, FrameCondition::DN1));
  CHECK(check_condition(ikl, FrameCondition::DN2));
  CHECK(check_condition(ikl, FrameCondition::DM2));
}

TEST_CASE("find_countermodel returns verified countermodels") {
  auto cm = find_countermodel(parse_pair("~~p |- p"), 6);
  REQUIRE(cm.has_value());
  CHECK(!valid_in_model(cm->frame, cm->valuation, parse_pair("~~p |- p")));
  CHECK(supports(cm->frame, cm->valuation, cm->witness, *parse_formula("~~p")));
  CHECK(!supports(cm->frame, cm->valuation, cm->witness, *parse_formula("p")));
  CHECK(cm->frame.is_routley_if());

  CHECK(!find_countermodel(parse_pair("p |- p"), 4).has_value());

  auto dm2 = find_countermodel(parse_pair("~p & ~q |- ~(p | q)"), 6);
  REQUIRE(dm2.has_value());
  CHECK(!valid_in_model(dm2->frame, dm2->valuation, parse_pair("~p & ~q |- ~(p | q)")));
}

TEST_CASE("find_countermodel is deterministic across worker counts") {
  auto a = find_countermodel(parse_pair("~~p |- p"), 5, 1);
  auto b = find_countermodel(parse_pair("~~p |- p"), 5, 4);
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(a->frame.encoding() == b->frame.encoding());
  CHECK(a->valuation == b->valuation);
  CHECK(a->witness == b->witness);
}

TEST_CASE("propositions are proper filters exactly on star-lawful frames") {
  auto formulas = testgen::all_formulas_up_to_depth({"p"}, 2);
  for (int n = 2; n <= 3; ++n) {
    enumerate_proto_ifs(n, [&](const RoutleyFrame& f) {
      bool lawful = f.validate_routley_if().empty();
      bool preserved = true;
      for (const Valuation& val : all_valuations(f, {"p"}))
        for (const auto& g : formulas)
          if (!is_proper_filter(f, proposition(f, val, *g))) {
            preserved = false;
            break;
          }
      CHECK(lawful == preserved);
      return true;
    });
  }
}

TEST_CASE("failing star laws are witnessed by a non-filter negation") {
  // on each proto frame failing some star law, the construction from the
  // law's failure produces a valuation whose ~p is not a filter
  int exercised = 0;
  for (int n = 2; n <= 3; ++n) {
    enumerate_proto_ifs(n, [&](const RoutleyFrame& f) {
      auto vs = f.validate_routley_if();
      if (vs.empty()) return true;
      ++exercised;
      Valuation val;
      if (f.star(f.top_i()) != f.bottom_e()) {
        val["p"] = f.principal_upset(f.star(f.top_i()));
      } else if (f.star(f.bottom_e()) != f.top_i()) {
        val["p"] = state_bit(f.top_i());
      } else {
        // antitone failure first, matching the construction's order
        State wit_t = 0, wit_u = 0;
        bool antitone_failure = false;
        for (State t = 0; t < f.size() && !antitone_failure; ++t)
          for (State u = 0; u < f.size() && !antitone_failure; ++u)
            if (f.leq(t, u) && !f.leq(f.star(u), f.star(t))) {
              antitone_failure = true;
              wit_t = t;
              wit_u = u;
            }
        if (antitone_failure) {
          val["p"] = f.principal_upset(f.star(wit_u));
        } else {
          bool found = false;
          for (State t = 0; t < f.size() && !found; ++t)
            for (State u = 0; u < f.size() && !found; ++u) {
              State m = f.star(f.meet(t, u));
              if (!f.leq(m, f.star(t)) && !f.leq(m, f.star(u))) {
                val["p"] = f.principal_upset(m);
                found = true;
              }
            }
          REQUIRE(found);
        }
      }
      REQUIRE(is_proper_filter(f, val["p"]));
      CHECK(!is_proper_filter(f, proposition(f, val, *parse_formula("~p"))));
      return true;
    });
  }
  CHECK(exercised > 0);
}

TEST_CASE("disjunctions of negations behave classically") {
  std::mt19937_64 rng(42);
  for (const RoutleyFrame& f : testgen::collect_routley_ifs(2, 4, true)) {
    auto filters = f.proper_filters();
    for (int round = 0; round < 10; ++round) {
      Valuation val{{"p", filters[rng() % filters.size()]},
                    {"q", filters[rng() % filters.size()]}};
      FormulaPtr a = testgen::random_formula(rng, {"p", "q"}, 2);
      FormulaPtr b = testgen::random_formula(rng, {"p", "q"}, 2);
      FormulaPtr na = Formula::neg(a), nb = Formula::neg(b);
      StateSet either = proposition(f, val, *na) | proposition(f, val, *nb);
      CHECK(proposition(f, val, *Formula::disj(na, nb)) == either);
    }
  }
}

TEST_CASE("rules preserve validity inside a model") {
  std::mt19937_64 rng(77);
  for (const char* name : {"fig1_left", "fig2_n5", "ikl"}) {
    RoutleyFrame f = builtin_frame(name);
    auto filters = f.proper_filters();
    int done = 0;
    for (int round = 0; round < 400 && done < 60; ++round) {
      Valuation val{{"p", filters[rng() % filters.size()]},
                    {"q", filters[rng() % filters.size()]},
                    {"r", filters[rng() % filters.size()]}};
      FormulaPtr a = testgen::random_formula(rng, {"p", "q", "r"}, 2);
      FormulaPtr b = testgen::random_formula(rng, {"p", "q", "r"}, 2);
      FormulaPtr c = testgen::random_formula(rng, {"p", "q", "r"}, 2);
      // (N)
      if (valid_in_model(f, val, {a, b})) {
        CHECK(valid_in_model(f, val, {Formula::neg(b), Formula::neg(a)}));
        ++done;
      }
      // (T)
      if (valid_in_model(f, val, {a, b}) && valid_in_model(f, val, {b, c}))
        CHECK(valid_in_model(f, val, {a, c}));
      // (i&)
      if (valid_in_model(f, val, {a, b}) && valid_in_model(f, val, {a, c}))
        CHECK(valid_in_model(f, val, {a, Formula::conj(b, c)}));
      // (e|)
      if (valid_in_model(f, val, {a, c}) && valid_in_model(f, val, {b, c}))
        CHECK(valid_in_model(f, val, {Formula::disj(a, b), c}));
    }
    CHECK(done > 0);
  }
}

TEST_CASE("frame conditions coincide with their characteristic pairs") {
  ConsequencePair dn1 = parse_pair("p |- ~~p");
  ConsequencePair dn2 = parse_pair("~~p |- p");
  ConsequencePair dm2 = parse_pair("~p & ~q |- ~(p | q)");
  for (const RoutleyFrame& f : testgen::collect_routley_ifs(2, 4, false)) {
    CHECK(valid_in_frame(f, dn1).valid == check_condition(f, FrameCondition::DN1));
    CHECK(valid_in_frame(f, dn2).valid == check_condition(f, FrameCondition::DN2));
    CHECK(valid_in_frame(f, dm2).valid == check_condition(f, FrameCondition::DM2));
  }
}

TEST_CASE("both double negation pairs force linearity, not conversely") {
  ConsequencePair dn1 = parse_pair("p |- ~~p");
  ConsequencePair dn2 = parse_pair("~~p |- p");
  for (const RoutleyFrame& f : testgen::collect_routley_ifs(2, 5, true)) {
    if (valid_in_frame(f, dn1).valid && valid_in_frame(f, dn2).valid)
      CHECK(f.is_linear());
  }

  // a linear frame that is not involutive: 3-chain with m* = e
  RoutleyFrame chain({"e", "m", "i"}, {0, 0, 0, 0, 1, 1, 0, 1, 2}, {2, 0, 0}, 0, 2);
  REQUIRE(chain.is_routley_if());
  CHECK(chain.is_linear());
  CHECK(!chain.is_involutive());
}

TEST_CASE("disjunction is classical on linear frames") {
  std::mt19937_64 rng(4242);
  for (const char* name : {"ikl", "chain_involutive(2)"}) {
    RoutleyFrame f = builtin_frame(name);
    auto filters = f.proper_filters();
    for (int round = 0; round < 20; ++round) {
      Valuation val{{"p", filters[rng() % filters.size()]},
                    {"q", filters[rng() % filters.size()]}};
      FormulaPtr a = testgen::random_formula(rng, {"p", "q"}, 2);
      FormulaPtr b = testgen::random_formula(rng, {"p", "q"}, 2);
      CHECK(proposition(f, val, *Formula::disj(a, b)) ==
            (proposition(f, val, *a) | proposition(f, val, *b)));
    }
  }
}

TEST_CASE("every realizable proposition is a proper filter (frames <= 5)") {
  // closure of {V(p), V(q)} under the three semantic operations, three
  // rounds deep, covers every formula of depth <= 3 over two atoms
  for (const RoutleyFrame& f : testgen::collect_routley_ifs(2, 5, true)) {
    auto filters = f.proper_filters();
    auto neg_prop = [&](StateSet p) {
      StateSet out = 0;
      for (State s = 0; s < f.size(); ++s)
        if (!set_has(p, f.star(s))) out |= state_bit(s);
      return out;
    };
    auto or_prop = [&](StateSet l, StateSet r) {
      StateSet out = 0;
      for (State t = 0; t < f.size(); ++t) {
        if (!set_has(l, t)) continue;
        for (State u = 0; u < f.size(); ++u)
          if (set_has(r, u)) out |= f.upset(f.meet(t, u));
      }
      return out;
    };
    for (StateSet f1 : filters)
      for (StateSet f2 : filters) {
        std::set<StateSet> props{f1, f2};
        for (int round = 0; round < 3; ++round) {
          std::set<StateSet> next = props;
          for (StateSet p : props) {
            next.insert(neg_prop(p));
            for (StateSet q : props) {
              next.insert(p & q);
              next.insert(or_prop(p, q));
            }
          }
          props = std::move(next);
        }
        for (StateSet p : props) CHECK(is_proper_filter(f, p));
      }
  }
}

TEST_CASE("the indexed axiom families hold on every enumerated frame") {
  std::vector<Substitution> substs = {
      {{MetaVar::Alpha, parse_formula("p")}, {MetaVar::Beta, parse_formula("q")}},
      {{MetaVar::Alpha, parse_formula("~p | q")}, {MetaVar::Beta, parse_formula("p & ~q")}},
      {{MetaVar::Alpha, parse_formula("~~q")}, {MetaVar::Beta, parse_formula("q")}},
  };

  // L1*/L2*, k = 1..3, on every frame with up to 5 states
  auto all5 = testgen::collect_routley_ifs(2, 5, false);
  for (const auto& subst : substs)
    for (unsigned k = 1; k <= 3; ++k) {
      ConsequencePair l1s = instantiate(SchemaId::L1_STAR, subst, k);
      ConsequencePair l2s = instantiate(SchemaId::L2_STAR, subst, k);
      for (const RoutleyFrame& f : all5) {
        CHECK(valid_in_frame(f, l1s).valid);
        CHECK(valid_in_frame(f, l2s).valid);
      }
    }

  // L1/L2, k = 0..3, on every linear frame with up to 6 states
  std::vector<RoutleyFrame> linear6;
  for (const RoutleyFrame& f : testgen::collect_routley_ifs(2, 6, false))
    if (f.is_linear()) linear6.push_back(f);
  for (const auto& subst : substs)
    for (unsigned k = 0; k <= 3; ++k) {
      ConsequencePair l1 = instantiate(SchemaId::L1, subst, k);
      ConsequencePair l2 = instantiate(SchemaId::L2, subst, k);
      for (const RoutleyFrame& f : linear6) {
        CHECK(valid_in_frame(f, l1).valid);
        CHECK(valid_in_frame(f, l2).valid);
      }
    }
}

TEST_CASE("valuation entries are checked by the filter law helper") {
  RoutleyFrame f = builtin_frame("ikl");
  Valuation good{{"p", f.principal_upset(idx(f, "s"))}};
  CHECK(!find_improper_valuation_entry(f, good).has_value());
  Valuation bad{{"p", state_bit(idx(f, "t"))}};  // not upward closed
  CHECK(find_improper_valuation_entry(f, bad) == std::string("p"));
}
