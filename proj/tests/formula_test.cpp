#include <doctest.h>

#include <random>

#include "gen.hpp"
#include "rif/formula.hpp"

using namespace rif;

TEST_CASE("parser follows the precedence and grammar") {
  FormulaPtr f = parse_formula("p & ~q");
  REQUIRE(f->is(FormulaKind::And));
  CHECK(f->left()->atom_name() == "p");
  CHECK(f->right()->is(FormulaKind::Neg));
  CHECK(f->right()->body()->atom_name() == "q");

  f = parse_formula("p | q & r");
  REQUIRE(f->is(FormulaKind::Or));
  CHECK(f->left()->atom_name() == "p");
  CHECK(f->right()->is(FormulaKind::And));

  f = parse_formula("~(p & q)");
  REQUIRE(f->is(FormulaKind::Neg));
  CHECK(f->body()->is(FormulaKind::And));

  // left associativity
  CHECK(render(parse_formula("p & q & r")) == "p & q & r");
  CHECK(equal(parse_formula("p & q & r"),
              Formula::conj(Formula::conj(Formula::atom("p"), Formula::atom("q")),
                            Formula::atom("r"))));

  CHECK(parse_formula("long_name2 | x0")->left()->atom_name() == "long_name2");
}

TEST_CASE("parser accepts the unicode spellings") {
  CHECK(render(parse_formula("¬p ∧ q")) == "~p & q");
  CHECK(render(parse_formula("p ∨ ¬¬q")) == "p | ~~q");
  CHECK(render(parse_pair("p ⊢ q")) == "p |- q");
}

TEST_CASE("parse_pair splits at the turnstile") {
  ConsequencePair pair = parse_pair("~~p |- p");
  CHECK(render(pair.lhs) == "~~p");
  CHECK(render(pair.rhs) == "p");

  pair = parse_pair("p & (q | r) |- (p & q) | (p & r)");
  CHECK(pair.lhs->is(FormulaKind::And));
  CHECK(pair.rhs->is(FormulaKind::Or));
  CHECK(render(pair) == "p & (q | r) |- p & q | p & r");  // minimal parentheses
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse_pair("p |- "), ParseError);
  CHECK_THROWS_AS(parse_formula(""), ParseError);
  CHECK_THROWS_AS(parse_formula("p & & q"), ParseError);
  CHECK_THROWS_AS(parse_formula("(p | q"), ParseError);
  CHECK_THROWS_AS(parse_formula("p q"), ParseError);
  CHECK_THROWS_AS(parse_formula("P"), ParseError);
  CHECK_THROWS_AS(parse_pair("p"), ParseError);
  CHECK_THROWS_AS(parse_pair("p |- q |- r"), ParseError);

  try {
    parse_formula("p & $");
    FAIL("expected ParseError");
  } catch (const ParseError& ex) {
    CHECK(ex.position() == 4);
  }
}

TEST_CASE("render uses minimal parentheses") {
  CHECK(render(Formula::conj(Formula::atom("p"), Formula::neg(Formula::atom("q")))) ==
        "p & ~q");
  CHECK(render(Formula::neg(Formula::neg(Formula::atom("p")))) == "~~p");
  CHECK(render(Formula::disj(Formula::atom("p"),
                             Formula::conj(Formula::atom("q"), Formula::atom("r")))) ==
        "p | q & r");
  CHECK(render(Formula::conj(Formula::disj(Formula::atom("p"), Formula::atom("q")),
                             Formula::atom("r"))) == "(p | q) & r");
  CHECK(render(Formula::conj(Formula::atom("p"),
                             Formula::conj(Formula::atom("q"), Formula::atom("r")))) ==
        "p & (q & r)");
  CHECK(render(Formula::neg(Formula::disj(Formula::atom("p"), Formula::atom("q")))) ==
        "~(p | q)");
}

TEST_CASE("neg_power stacks negations") {
  FormulaPtr p = Formula::atom("p");
  CHECK(equal(neg_power(0, p), p));
  CHECK(render(neg_power(2, p)) == "~~p");
  FormulaPtr pq = Formula::conj(Formula::atom("p"), Formula::atom("q"));
  CHECK(render(neg_power(3, pq)) == "~~~(p & q)");
}

TEST_CASE("atoms collects exactly the names") {
  CHECK(atoms(*parse_formula("~~p")) == std::set<std::string>{"p"});
  CHECK(atoms(*parse_formula("p & (q | p)")) == std::set<std::string>{"p", "q"});
  CHECK(atoms(*parse_formula("z")) == std::set<std::string>{"z"});
  CHECK(atoms(parse_pair("p |- q")) == std::set<std::string>{"p", "q"});
}

TEST_CASE("atom construction enforces the name shape") {
  CHECK_THROWS_AS(Formula::atom("P"), std::invalid_argument);
  CHECK_THROWS_AS(Formula::atom(""), std::invalid_argument);
  CHECK_THROWS_AS(Formula::atom("1p"), std::invalid_argument);
  CHECK_THROWS_AS(Formula::atom("p q"), std::invalid_argument);
  CHECK(Formula::atom("p_1")->atom_name() == "p_1");
}

TEST_CASE("round trip: parse after render is the identity") {
  std::mt19937_64 rng(20240901);
  std::vector<std::string> pool = {"p", "q", "r", "ab", "x1"};
  for (int round = 0; round < 500; ++round) {
    FormulaPtr f = testgen::random_formula(rng, pool, 4);
    CAPTURE(render(f));
    CHECK(equal(parse_formula(render(f)), f));
  }
  for (int round = 0; round < 200; ++round) {
    ConsequencePair pair = testgen::random_pair(rng, pool, 3);
    CHECK(equal(parse_pair(render(pair)), pair));
  }
}

TEST_CASE("neg_power composes additively and keeps atoms") {
  std::mt19937_64 rng(7);
  std::vector<std::string> pool = {"p", "q"};
  for (int round = 0; round < 100; ++round) {
    FormulaPtr f = testgen::random_formula(rng, pool, 3);
    unsigned m = rng() % 4, n = rng() % 4;
    CHECK(equal(neg_power(m, neg_power(n, f)), neg_power(m + n, f)));
    CHECK(atoms(*neg_power(n, f)) == atoms(*f));
  }
}

TEST_CASE("structural compare is a total order consistent with equal") {
  std::mt19937_64 rng(99);
  std::vector<std::string> pool = {"p", "q", "r"};
  std::vector<FormulaPtr> fs;
  for (int j = 0; j < 40; ++j) fs.push_back(testgen::random_formula(rng, pool, 3));
  for (const auto& a : fs)
    for (const auto& b : fs) {
      CHECK((compare(a, b) == 0) == equal(a, b));
      CHECK(compare(a, b) == -compare(b, a));
      for (const auto& c : fs)
        if (compare(a, b) <= 0 && compare(b, c) <= 0) CHECK(compare(a, c) <= 0);
    }
}

TEST_CASE("depth counts connectives") {
  CHECK(parse_formula("p")->depth() == 0);
  CHECK(parse_formula("~p")->depth() == 1);
  CHECK(parse_formula("~p & q")->depth() == 2);
  CHECK(parse_formula("~(p & q) | r")->depth() == 3);
}
