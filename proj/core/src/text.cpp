#include "veritas/text.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <vector>

namespace veritas {

namespace {

enum class Tok {
  LBrack, RBrack, LParen, RParen, Bang, Pipe, Amp, Arrow, DArrow,
  Equals, Comma, Dot, Nat, Ident, End,
};

struct Token {
  Tok type;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(const std::string& input) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](Tok t, std::string text, std::size_t pos) {
    out.push_back({t, std::move(text), pos});
  };
  while (i < input.size()) {
    char c = input[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    switch (c) {
      case '[': push(Tok::LBrack, "[", i); ++i; continue;
      case ']': push(Tok::RBrack, "]", i); ++i; continue;
      case '(': push(Tok::LParen, "(", i); ++i; continue;
      case ')': push(Tok::RParen, ")", i); ++i; continue;
      case '!': push(Tok::Bang, "!", i); ++i; continue;
      case '|': push(Tok::Pipe, "|", i); ++i; continue;
      case '&': push(Tok::Amp, "&", i); ++i; continue;
      case '=': push(Tok::Equals, "=", i); ++i; continue;
      case ',': push(Tok::Comma, ",", i); ++i; continue;
      case '.': push(Tok::Dot, ".", i); ++i; continue;
      case '-':
        if (i + 1 < input.size() && input[i + 1] == '>') {
          push(Tok::Arrow, "->", i);
          i += 2;
          continue;
        }
        throw ParseError("unexpected '-'", i);
      case '<':
        if (i + 2 < input.size() && input[i + 1] == '-' && input[i + 2] == '>') {
          push(Tok::DArrow, "<->", i);
          i += 3;
          continue;
        }
        throw ParseError("unexpected '<'", i);
      default:
        break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < input.size() && std::isdigit(static_cast<unsigned char>(input[i]))) ++i;
      push(Tok::Nat, input.substr(start, i - start), start);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i;
      while (i < input.size() &&
             (std::isalnum(static_cast<unsigned char>(input[i])) || input[i] == '_')) {
        ++i;
      }
      push(Tok::Ident, input.substr(start, i - start), start);
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", i);
  }
  push(Tok::End, "", input.size());
  return out;
}

bool is_variable_name(const std::string& s) {
  if (s.size() < 2 || s[0] != 'v') return false;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::uint64_t parse_u64(const std::string& digits, std::size_t pos) {
  std::uint64_t value = 0;
  for (char c : digits) {
    std::uint64_t d = static_cast<std::uint64_t>(c - '0');
    if (value > (std::numeric_limits<std::uint64_t>::max() - d) / 10) {
      throw ParseError("numeral too large", pos);
    }
    value = value * 10 + d;
  }
  return value;
}

class Parser {
 public:
  Parser(const std::string& text, const Signature& sig)
      : tokens_(tokenize(text)), sig_(sig) {}

  Sentence parse_full_sentence() {
    Sentence s = parse_iff();
    expect_end();
    return s;
  }

  BaseFormula parse_full_base() {
    BaseFormula f = parse_base_iff();
    expect_end();
    return f;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = index_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }

  Token take() { return tokens_[index_ < tokens_.size() - 1 ? index_++ : index_]; }

  void expect(Tok t, const char* what) {
    if (peek().type != t) throw ParseError(std::string("expected ") + what, peek().pos);
    take();
  }

  void expect_end() {
    if (peek().type != Tok::End) throw ParseError("unexpected trailing input", peek().pos);
  }

  bool at_keyword(const char* kw) const {
    return peek().type == Tok::Ident && peek().text == kw;
  }

  // --- sentence level ---

  Sentence parse_iff() {
    Sentence s = parse_imp();
    while (peek().type == Tok::DArrow) {
      take();
      s = Sentence::biconditional(std::move(s), parse_imp());
    }
    return s;
  }

  Sentence parse_imp() {
    Sentence s = parse_or();
    while (peek().type == Tok::Arrow) {
      take();
      s = Sentence::implication(std::move(s), parse_or());
    }
    return s;
  }

  Sentence parse_or() {
    Sentence s = parse_and();
    while (peek().type == Tok::Pipe) {
      take();
      s = Sentence::disjunction(std::move(s), parse_and());
    }
    return s;
  }

  Sentence parse_and() {
    Sentence s = parse_unary();
    while (peek().type == Tok::Amp) {
      take();
      s = Sentence::conjunction(std::move(s), parse_unary());
    }
    return s;
  }

  Sentence parse_unary() {
    if (peek().type == Tok::Bang) {
      take();
      return Sentence::negation(parse_unary());
    }
    return parse_atom();
  }

  Sentence parse_atom() {
    const Token& t = peek();
    if (t.type == Tok::LParen) {
      take();
      Sentence s = parse_iff();
      expect(Tok::RParen, "')'");
      return s;
    }
    if (t.type == Tok::LBrack) {
      std::size_t start = t.pos;
      take();
      BaseFormula f = parse_base_iff();
      expect(Tok::RBrack, "']'");
      return make_base(std::move(f), start);
    }
    if (t.type == Tok::Ident && t.text == "T") {
      take();
      expect(Tok::LParen, "'(' after T");
      if (peek().type != Tok::Nat) throw ParseError("expected numeral inside T(...)", peek().pos);
      Token num = take();
      expect(Tok::RParen, "')'");
      return Sentence::t_app(Nat(num.text, 10));
    }
    if (at_keyword("exists") || at_keyword("forall")) {
      bool existential = t.text == "exists";
      if (peek(1).type == Tok::Ident && peek(1).text == "x") {
        std::size_t start = t.pos;
        take();  // quantifier
        take();  // x
        expect(Tok::Dot, "'.'");
        if (!at_keyword("T")) throw ParseError("expected T(x)", peek().pos);
        take();
        expect(Tok::LParen, "'('");
        if (!(peek().type == Tok::Ident && peek().text == "x")) {
          throw ParseError("expected x inside T(...)", peek().pos);
        }
        take();
        expect(Tok::RParen, "')'");
        (void)start;
        return existential ? Sentence::exists_t() : Sentence::forall_t();
      }
      // Quantifier over a vN variable opens a bare base sentence.
      return parse_bare_base(t.pos);
    }
    if (t.type == Tok::Nat || t.type == Tok::Ident) {
      if (t.type == Tok::Ident && t.text == "x") throw ParseError("'x' is reserved", t.pos);
      return parse_bare_base(t.pos);
    }
    throw ParseError("expected a sentence", t.pos);
  }

  Sentence parse_bare_base(std::size_t start) {
    BaseFormula f = parse_base_iff();
    return make_base(std::move(f), start);
  }

  Sentence make_base(BaseFormula f, std::size_t pos) {
    if (!f.is_closed()) throw ParseError("free variable in base sentence", pos);
    return Sentence::base(std::move(f));
  }

  // --- base formula level ---

  BaseFormula parse_base_iff() {
    BaseFormula f = parse_base_imp();
    while (peek().type == Tok::DArrow) {
      take();
      f = BaseFormula::biconditional(std::move(f), parse_base_imp());
    }
    return f;
  }

  BaseFormula parse_base_imp() {
    BaseFormula f = parse_base_or();
    while (peek().type == Tok::Arrow) {
      take();
      f = BaseFormula::implication(std::move(f), parse_base_or());
    }
    return f;
  }

  BaseFormula parse_base_or() {
    BaseFormula f = parse_base_and();
    while (peek().type == Tok::Pipe) {
      take();
      f = BaseFormula::disjunction(std::move(f), parse_base_and());
    }
    return f;
  }

  BaseFormula parse_base_and() {
    BaseFormula f = parse_base_unary();
    while (peek().type == Tok::Amp) {
      take();
      f = BaseFormula::conjunction(std::move(f), parse_base_unary());
    }
    return f;
  }

  BaseFormula parse_base_unary() {
    if (peek().type == Tok::Bang) {
      take();
      return BaseFormula::negation(parse_base_unary());
    }
    if (at_keyword("exists") || at_keyword("forall")) {
      bool existential = peek().text == "exists";
      take();
      const Token& var = peek();
      if (!(var.type == Tok::Ident && is_variable_name(var.text))) {
        throw ParseError("expected a variable v<N> after quantifier", var.pos);
      }
      std::uint64_t index = parse_u64(var.text.substr(1), var.pos);
      take();
      expect(Tok::Dot, "'.'");
      BaseFormula body = parse_base_iff();  // maximal scope
      return existential ? BaseFormula::exists(index, std::move(body))
                         : BaseFormula::forall(index, std::move(body));
    }
    return parse_base_atom();
  }

  BaseFormula parse_base_atom() {
    const Token& t = peek();
    if (t.type == Tok::LParen) {
      take();
      BaseFormula f = parse_base_iff();
      expect(Tok::RParen, "')'");
      return f;
    }
    if (t.type == Tok::Ident && !is_variable_name(t.text)) {
      if (t.text == "T" || t.text == "x" || t.text == "exists" || t.text == "forall") {
        throw ParseError("'" + t.text + "' is reserved", t.pos);
      }
      if (peek(1).type == Tok::LParen) {
        // Relation application.
        Token name = take();
        auto rel = sig_.relation_index(name.text);
        if (!rel) throw ParseError("unknown symbol '" + name.text + "'", name.pos);
        take();  // (
        std::vector<Term> args;
        args.push_back(parse_term());
        while (peek().type == Tok::Comma) {
          take();
          args.push_back(parse_term());
        }
        expect(Tok::RParen, "')'");
        if (args.size() != sig_.relations()[*rel].arity) {
          throw ParseError("arity mismatch for '" + name.text + "'", name.pos);
        }
        return BaseFormula::relation(*rel, std::move(args));
      }
    }
    // Equality atom.
    Term lhs = parse_term();
    expect(Tok::Equals, "'='");
    Term rhs = parse_term();
    return BaseFormula::equal(lhs, rhs);
  }

  Term parse_term() {
    const Token& t = peek();
    if (t.type == Tok::Nat) {
      Token num = take();
      return Term::element(parse_u64(num.text, num.pos));
    }
    if (t.type == Tok::Ident) {
      if (is_variable_name(t.text)) {
        Token var = take();
        return Term::variable(parse_u64(var.text.substr(1), var.pos));
      }
      if (t.text == "T" || t.text == "x" || t.text == "exists" || t.text == "forall") {
        throw ParseError("'" + t.text + "' is reserved", t.pos);
      }
      auto c = sig_.constant_index(t.text);
      if (!c) throw ParseError("unknown symbol '" + t.text + "'", t.pos);
      take();
      return Term::constant(*c);
    }
    throw ParseError("expected a term", t.pos);
  }

  std::vector<Token> tokens_;
  std::size_t index_ = 0;
  const Signature& sig_;
};

std::string print_term(const Term& t, const Signature& sig) {
  switch (t.kind) {
    case Term::Kind::Variable:
      return "v" + std::to_string(t.value);
    case Term::Kind::Constant:
      if (t.value >= sig.constants().size()) {
        throw std::invalid_argument("constant index outside signature");
      }
      return sig.constants()[static_cast<std::size_t>(t.value)];
    case Term::Kind::Element:
      return std::to_string(t.value);
  }
  return {};
}

}  // namespace

Sentence parse_sentence(const std::string& text, const Signature& sig) {
  return Parser(text, sig).parse_full_sentence();
}

BaseFormula parse_base_formula(const std::string& text, const Signature& sig) {
  return Parser(text, sig).parse_full_base();
}

namespace {

// tokens_follow: more tokens follow in the current bracket scope, so a
// quantifier here must be parenthesized or its maximal-scope body would
// swallow them on re-parse.
std::string print_base_rec(const BaseFormula& f, const Signature& sig, bool tokens_follow) {
  using Kind = BaseFormula::Kind;
  switch (f.kind()) {
    case Kind::Equal:
      return print_term(f.lhs_term(), sig) + " = " + print_term(f.rhs_term(), sig);
    case Kind::Relation: {
      if (f.relation_index() >= sig.relations().size()) {
        throw std::invalid_argument("relation index outside signature");
      }
      std::string out = sig.relations()[f.relation_index()].name + "(";
      const auto& args = f.arguments();
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) out += ", ";
        out += print_term(args[i], sig);
      }
      return out + ")";
    }
    case Kind::Not:
      return "!" + print_base_rec(f.body(), sig, tokens_follow);
    case Kind::Or:
      return "(" + print_base_rec(f.left(), sig, true) + " | " +
             print_base_rec(f.right(), sig, false) + ")";
    case Kind::And:
      return "(" + print_base_rec(f.left(), sig, true) + " & " +
             print_base_rec(f.right(), sig, false) + ")";
    case Kind::Imp:
      return "(" + print_base_rec(f.left(), sig, true) + " -> " +
             print_base_rec(f.right(), sig, false) + ")";
    case Kind::Iff:
      return "(" + print_base_rec(f.left(), sig, true) + " <-> " +
             print_base_rec(f.right(), sig, false) + ")";
    case Kind::Exists:
    case Kind::Forall: {
      std::string quantifier = f.kind() == Kind::Exists ? "exists" : "forall";
      std::string inner = quantifier + " v" + std::to_string(f.variable()) + ". " +
                          print_base_rec(f.body(), sig, false);
      return tokens_follow ? "(" + inner + ")" : inner;
    }
  }
  return {};
}

}  // namespace

std::string print_base_formula(const BaseFormula& f, const Signature& sig) {
  return print_base_rec(f, sig, false);
}

std::string print_sentence(const Sentence& s, const Signature& sig) {
  using Kind = Sentence::Kind;
  switch (s.kind()) {
    case Kind::Base:
      return "[" + print_base_formula(s.base_formula(), sig) + "]";
    case Kind::TApp:
      return "T(" + to_decimal(s.t_arg()) + ")";
    case Kind::Not:
      return "!" + print_sentence(s.child(), sig);
    case Kind::Or:
      return "(" + print_sentence(s.left(), sig) + " | " + print_sentence(s.right(), sig) + ")";
    case Kind::And:
      return "(" + print_sentence(s.left(), sig) + " & " + print_sentence(s.right(), sig) + ")";
    case Kind::Imp:
      return "(" + print_sentence(s.left(), sig) + " -> " + print_sentence(s.right(), sig) + ")";
    case Kind::Iff:
      return "(" + print_sentence(s.left(), sig) + " <-> " + print_sentence(s.right(), sig) + ")";
    case Kind::ExistsT:
      return "exists x. T(x)";
    case Kind::ForallT:
      return "forall x. T(x)";
  }
  return {};
}

}  // namespace veritas
