#include "rif/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <utility>
#include <vector>

namespace rif {

Formula::Formula(FormulaKind k, std::string name, FormulaPtr l, FormulaPtr r)
    : kind_(k), name_(std::move(name)), left_(std::move(l)), right_(std::move(r)) {
  switch (kind_) {
    case FormulaKind::Atom:
      depth_ = 0;
      break;
    case FormulaKind::Neg:
      depth_ = 1 + left_->depth();
      break;
    case FormulaKind::And:
    case FormulaKind::Or:
      depth_ = 1 + std::max(left_->depth(), right_->depth());
      break;
  }
}

bool Formula::valid_atom_name(std::string_view name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  });
}

FormulaPtr Formula::atom(std::string name) {
  if (!valid_atom_name(name))
    throw std::invalid_argument("bad atom name: '" + name + "'");
  return FormulaPtr(new Formula(FormulaKind::Atom, std::move(name), nullptr, nullptr));
}

FormulaPtr Formula::neg(FormulaPtr body) {
  if (!body) throw std::invalid_argument("null formula");
  return FormulaPtr(new Formula(FormulaKind::Neg, {}, std::move(body), nullptr));
}

FormulaPtr Formula::conj(FormulaPtr left, FormulaPtr right) {
  if (!left || !right) throw std::invalid_argument("null formula");
  return FormulaPtr(new Formula(FormulaKind::And, {}, std::move(left), std::move(right)));
}

FormulaPtr Formula::disj(FormulaPtr left, FormulaPtr right) {
  if (!left || !right) throw std::invalid_argument("null formula");
  return FormulaPtr(new Formula(FormulaKind::Or, {}, std::move(left), std::move(right)));
}

const std::string& Formula::atom_name() const {
  if (kind_ != FormulaKind::Atom) throw std::logic_error("atom_name on non-atom");
  return name_;
}

const FormulaPtr& Formula::left() const {
  if (kind_ != FormulaKind::And && kind_ != FormulaKind::Or)
    throw std::logic_error("left on non-binary formula");
  return left_;
}

const FormulaPtr& Formula::right() const {
  if (kind_ != FormulaKind::And && kind_ != FormulaKind::Or)
    throw std::logic_error("right on non-binary formula");
  return right_;
}

const FormulaPtr& Formula::body() const {
  if (kind_ != FormulaKind::Neg) throw std::logic_error("body on non-negation");
  return left_;
}

bool equal(const Formula& a, const Formula& b) {
  if (&a == &b) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case FormulaKind::Atom:
      return a.atom_name() == b.atom_name();
    case FormulaKind::Neg:
      return equal(*a.body(), *b.body());
    case FormulaKind::And:
    case FormulaKind::Or:
      return equal(*a.left(), *b.left()) && equal(*a.right(), *b.right());
  }
  return false;
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  return a == b || (a && b && equal(*a, *b));
}

int compare(const Formula& a, const Formula& b) {
  if (&a == &b) return 0;
  if (a.kind() != b.kind())
    return static_cast<int>(a.kind()) < static_cast<int>(b.kind()) ? -1 : 1;
  switch (a.kind()) {
    case FormulaKind::Atom:
      return a.atom_name().compare(b.atom_name());
    case FormulaKind::Neg:
      return compare(*a.body(), *b.body());
    case FormulaKind::And:
    case FormulaKind::Or: {
      int c = compare(*a.left(), *b.left());
      return c != 0 ? c : compare(*a.right(), *b.right());
    }
  }
  return 0;
}

int compare(const FormulaPtr& a, const FormulaPtr& b) { return compare(*a, *b); }

std::size_t hash_value(const Formula& f) {
  auto mix = [](std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
  };
  std::size_t h = static_cast<std::size_t>(f.kind()) + 1;
  switch (f.kind()) {
    case FormulaKind::Atom:
      return mix(h, std::hash<std::string>{}(f.atom_name()));
    case FormulaKind::Neg:
      return mix(h, hash_value(*f.body()));
    case FormulaKind::And:
    case FormulaKind::Or:
      return mix(mix(h, hash_value(*f.left())), hash_value(*f.right()));
  }
  return h;
}

bool equal(const ConsequencePair& a, const ConsequencePair& b) {
  return equal(a.lhs, b.lhs) && equal(a.rhs, b.rhs);
}

int compare(const ConsequencePair& a, const ConsequencePair& b) {
  int c = compare(a.lhs, b.lhs);
  return c != 0 ? c : compare(a.rhs, b.rhs);
}

ParseError::ParseError(const std::string& msg, std::size_t position)
    : std::runtime_error(msg + " (at offset " + std::to_string(position) + ")"),
      position_(position) {}

namespace {

enum class Tok : std::uint8_t { Atom, Tilde, Amp, Pipe, LParen, RParen, Turnstile, End };

struct Token {
  Tok tok;
  std::string text;  // atom name
  std::size_t pos;
};

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

private:
  void advance() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    std::size_t start = pos_;
    if (pos_ >= text_.size()) {
      current_ = {Tok::End, {}, start};
      return;
    }
    char c = text_[pos_];
    if (c == '~') {
      ++pos_;
      current_ = {Tok::Tilde, {}, start};
    } else if (c == '&') {
      ++pos_;
      current_ = {Tok::Amp, {}, start};
    } else if (c == '|') {
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
        pos_ += 2;
        current_ = {Tok::Turnstile, {}, start};
      } else {
        ++pos_;
        current_ = {Tok::Pipe, {}, start};
      }
    } else if (c == '(') {
      ++pos_;
      current_ = {Tok::LParen, {}, start};
    } else if (c == ')') {
      ++pos_;
      current_ = {Tok::RParen, {}, start};
    } else if (c >= 'a' && c <= 'z') {
      std::size_t end = pos_ + 1;
      while (end < text_.size()) {
        char d = text_[end];
        if ((d >= 'a' && d <= 'z') || (d >= '0' && d <= '9') || d == '_')
          ++end;
        else
          break;
      }
      current_ = {Tok::Atom, std::string(text_.substr(pos_, end - pos_)), start};
      pos_ = end;
    } else if (match_utf8("¬")) {  // ¬
      current_ = {Tok::Tilde, {}, start};
    } else if (match_utf8("∧")) {  // ∧
      current_ = {Tok::Amp, {}, start};
    } else if (match_utf8("∨")) {  // ∨
      current_ = {Tok::Pipe, {}, start};
    } else if (match_utf8("⊢")) {  // ⊢
      current_ = {Tok::Turnstile, {}, start};
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
  }

  bool match_utf8(std::string_view seq) {
    if (text_.substr(pos_, seq.size()) == seq) {
      pos_ += seq.size();
      return true;
    }
    return false;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_;
};

class Parser {
public:
  explicit Parser(std::string_view text) : lex_(text) {}

  FormulaPtr formula() {
    FormulaPtr f = disjunction();
    expect_end();
    return f;
  }

  ConsequencePair pair() {
    FormulaPtr lhs = disjunction();
    if (lex_.peek().tok != Tok::Turnstile)
      throw ParseError("expected '|-'", lex_.peek().pos);
    lex_.take();
    FormulaPtr rhs = disjunction();
    expect_end();
    return {std::move(lhs), std::move(rhs)};
  }

private:
  FormulaPtr disjunction() {
    FormulaPtr f = conjunction();
    while (lex_.peek().tok == Tok::Pipe) {
      lex_.take();
      f = Formula::disj(std::move(f), conjunction());
    }
    return f;
  }

  FormulaPtr conjunction() {
    FormulaPtr f = unary();
    while (lex_.peek().tok == Tok::Amp) {
      lex_.take();
      f = Formula::conj(std::move(f), unary());
    }
    return f;
  }

  FormulaPtr unary() {
    const Token& t = lex_.peek();
    switch (t.tok) {
      case Tok::Tilde:
        lex_.take();
        return Formula::neg(unary());
      case Tok::Atom:
        return Formula::atom(lex_.take().text);
      case Tok::LParen: {
        lex_.take();
        FormulaPtr f = disjunction();
        if (lex_.peek().tok != Tok::RParen)
          throw ParseError("expected ')'", lex_.peek().pos);
        lex_.take();
        return f;
      }
      case Tok::End:
        throw ParseError("unexpected end of input", t.pos);
      default:
        throw ParseError("expected a formula", t.pos);
    }
  }

  void expect_end() {
    if (lex_.peek().tok != Tok::End)
      throw ParseError("trailing input", lex_.peek().pos);
  }

  Lexer lex_;
};

int precedence(FormulaKind k) {
  switch (k) {
    case FormulaKind::Or: return 0;
    case FormulaKind::And: return 1;
    case FormulaKind::Neg: return 2;
    case FormulaKind::Atom: return 3;
  }
  return 3;
}

void render_into(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case FormulaKind::Atom:
      out += f.atom_name();
      return;
    case FormulaKind::Neg: {
      out += '~';
      bool parens = precedence(f.body()->kind()) < precedence(FormulaKind::Neg);
      if (parens) out += '(';
      render_into(*f.body(), out);
      if (parens) out += ')';
      return;
    }
    case FormulaKind::And:
    case FormulaKind::Or: {
      int p = precedence(f.kind());
      bool lparens = precedence(f.left()->kind()) < p;
      bool rparens = precedence(f.right()->kind()) <= p;  // left-associative
      if (lparens) out += '(';
      render_into(*f.left(), out);
      if (lparens) out += ')';
      out += (f.kind() == FormulaKind::And) ? " & " : " | ";
      if (rparens) out += '(';
      render_into(*f.right(), out);
      if (rparens) out += ')';
      return;
    }
  }
}

}  // namespace

FormulaPtr parse_formula(std::string_view text) { return Parser(text).formula(); }

ConsequencePair parse_pair(std::string_view text) { return Parser(text).pair(); }

std::string render(const Formula& f) {
  std::string out;
  render_into(f, out);
  return out;
}

std::string render(const FormulaPtr& f) { return render(*f); }

std::string render(const ConsequencePair& p) {
  return render(*p.lhs) + " |- " + render(*p.rhs);
}

FormulaPtr neg_power(unsigned n, FormulaPtr f) {
  for (unsigned k = 0; k < n; ++k) f = Formula::neg(std::move(f));
  return f;
}

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case FormulaKind::Atom:
      out.insert(f.atom_name());
      return;
    case FormulaKind::Neg:
      collect_atoms(*f.body(), out);
      return;
    case FormulaKind::And:
    case FormulaKind::Or:
      collect_atoms(*f.left(), out);
      collect_atoms(*f.right(), out);
      return;
  }
}

std::set<std::string> atoms(const Formula& f) {
  std::set<std::string> out;
  collect_atoms(f, out);
  return out;
}

std::set<std::string> atoms(const ConsequencePair& p) {
  std::set<std::string> out;
  collect_atoms(*p.lhs, out);
  collect_atoms(*p.rhs, out);
  return out;
}

}  // namespace rif
