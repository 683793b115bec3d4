#pragma once

#include <cctype>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace arcdiag {

/// Syntax tree of the morphism expression language.
///   expr    := ['-'] term (('+'|'-') term)*
///   term    := factor ('*' factor)*          tensor, left factor on top
///   factor  := atom ('.' atom)*              composition, left is upper
///   atom    := [coeff] primary ['^' nat]
///   coeff   := int ['/' int] ['*']
///   primary := 'id' '(' nat ')' | '1_X' | '1_1' | ident | '(' expr ')' | '0'
/// '^n' is an n-fold composite; "z*" is accepted for "z^*" when the '*' is
/// not followed by an atom.
struct Expr {
  enum class Kind { Gen, Id, Zero, Tensor, Compose, Add, Scale, Power };

  Kind kind = Kind::Zero;
  std::string text;  // generator name, or the coefficient literal of Scale
  unsigned k = 0;    // arity of Id, exponent of Power
  std::shared_ptr<const Expr> a;
  std::shared_ptr<const Expr> b;
};

using ExprPtr = std::shared_ptr<const Expr>;

namespace ex {
inline ExprPtr make(Expr e) { return std::make_shared<const Expr>(std::move(e)); }
inline ExprPtr gen(std::string name) { return make({Expr::Kind::Gen, std::move(name), 0, nullptr, nullptr}); }
inline ExprPtr id(unsigned k) { return make({Expr::Kind::Id, {}, k, nullptr, nullptr}); }
inline ExprPtr zero() { return make({Expr::Kind::Zero, {}, 0, nullptr, nullptr}); }
inline ExprPtr tensor(ExprPtr a, ExprPtr b) { return make({Expr::Kind::Tensor, {}, 0, std::move(a), std::move(b)}); }
inline ExprPtr compose(ExprPtr a, ExprPtr b) { return make({Expr::Kind::Compose, {}, 0, std::move(a), std::move(b)}); }
inline ExprPtr add(ExprPtr a, ExprPtr b) { return make({Expr::Kind::Add, {}, 0, std::move(a), std::move(b)}); }
inline ExprPtr scale(std::string coeff, ExprPtr a) {
  return make({Expr::Kind::Scale, std::move(coeff), 0, std::move(a), nullptr});
}
inline ExprPtr power(ExprPtr a, unsigned k) { return make({Expr::Kind::Power, {}, k, std::move(a), nullptr}); }
}  // namespace ex

inline bool same_tree(const Expr& x, const Expr& y) {
  if (x.kind != y.kind || x.text != y.text || x.k != y.k) return false;
  if (bool(x.a) != bool(y.a) || bool(x.b) != bool(y.b)) return false;
  if (x.a && !same_tree(*x.a, *y.a)) return false;
  if (x.b && !same_tree(*x.b, *y.b)) return false;
  return true;
}

/// Fully bracketed structural rendering, e.g. "Tensor(Compose(a,b),c)".
inline std::string tree_string(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Gen: return e.text;
    case Expr::Kind::Id: return "id(" + std::to_string(e.k) + ")";
    case Expr::Kind::Zero: return "0";
    case Expr::Kind::Tensor: return "Tensor(" + tree_string(*e.a) + "," + tree_string(*e.b) + ")";
    case Expr::Kind::Compose: return "Compose(" + tree_string(*e.a) + "," + tree_string(*e.b) + ")";
    case Expr::Kind::Add: return "Add(" + tree_string(*e.a) + "," + tree_string(*e.b) + ")";
    case Expr::Kind::Scale: return "Scale(" + e.text + "," + tree_string(*e.a) + ")";
    case Expr::Kind::Power: return "Power(" + tree_string(*e.a) + "," + std::to_string(e.k) + ")";
  }
  return {};
}

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + msg), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  ExprPtr run() {
    ExprPtr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }
  static bool atom_start(char c) {
    return ident_start(c) || std::isdigit(static_cast<unsigned char>(c)) != 0 || c == '(';
  }

  // true if the next non-space character after position p starts an atom
  bool atom_follows(std::size_t p) const {
    while (p < s_.size() && std::isspace(static_cast<unsigned char>(s_[p]))) ++p;
    return p < s_.size() && atom_start(s_[p]);
  }

  ExprPtr expr() {
    ExprPtr e;
    if (eat('-')) {
      e = ex::scale("-1", term());
    } else {
      e = term();
    }
    while (true) {
      if (eat('+')) {
        e = ex::add(e, term());
      } else if (eat('-')) {
        e = ex::add(e, ex::scale("-1", term()));
      } else {
        return e;
      }
    }
  }

  ExprPtr term() {
    ExprPtr e = factor();
    while (eat('*')) e = ex::tensor(e, factor());
    return e;
  }

  ExprPtr factor() {
    ExprPtr e = atom();
    while (eat('.')) e = ex::compose(e, atom());
    return e;
  }

  std::string digits() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(s_.substr(start, pos_ - start));
  }

  unsigned natural() {
    const std::size_t at = pos_;
    const std::string d = digits();
    if (d.size() > 6) throw ParseError("number too large", at);
    return static_cast<unsigned>(std::stoul(d));
  }

  bool identity_alias() {
    skip();
    if (s_.compare(pos_, 3, "1_X") == 0 || s_.compare(pos_, 3, "1_1") == 0) {
      return pos_ + 3 == s_.size() || !ident_char(s_[pos_ + 3]);
    }
    return false;
  }

  ExprPtr atom() {
    const char c = peek();
    if (c == '\0') fail("unexpected end of input");
    std::string coeff;
    if (std::isdigit(static_cast<unsigned char>(c)) && !identity_alias()) {
      coeff = digits();
      if (peek() == '/') {
        ++pos_;
        const std::size_t at = pos_;
        const std::string den = digits();
        if (den.find_first_not_of('0') == std::string::npos) throw ParseError("zero denominator", at);
        coeff += "/" + den;
      }
      const std::size_t save = pos_;
      if (eat('*') && atom_follows(pos_)) {
        // coefficient applied to the following primary
      } else if (pos_ = save; !atom_start(peek())) {
        const std::string num = coeff.substr(0, coeff.find('/'));
        if (num.find_first_not_of('0') == std::string::npos) return ex::zero();
        fail("a coefficient must be followed by a morphism");
      }
    }
    ExprPtr e = primary();
    if (peek() == '^' && pos_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
      ++pos_;
      e = ex::power(e, natural());
    }
    return coeff.empty() ? e : ex::scale(coeff, e);
  }

  ExprPtr primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      ExprPtr e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (identity_alias()) {
      const bool unit = s_[pos_ + 2] == '1';
      pos_ += 3;
      return ex::id(unit ? 0 : 1);
    }
    if (!ident_start(c)) fail("expected a generator, id(n) or '('");
    const std::size_t start = pos_;
    while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
    std::string name(s_.substr(start, pos_ - start));
    if (name == "id" && peek() == '(') {
      ++pos_;
      const unsigned k = natural();
      if (!eat(')')) fail("expected ')'");
      return ex::id(k);
    }
    if (s_.compare(pos_, 2, "^*") == 0) {
      pos_ += 2;
      name += "^*";
    } else if (pos_ < s_.size() && s_[pos_] == '*' && !atom_follows(pos_ + 1)) {
      ++pos_;
      name += "^*";
    }
    return ex::gen(std::move(name));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

inline int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add: return 1;
    case Expr::Kind::Tensor: return 2;
    case Expr::Kind::Compose: return 3;
    default: return 4;
  }
}

}  // namespace detail

inline ExprPtr parse(std::string_view text) { return detail::Parser(text).run(); }

/// Text that parses back to an expression with the same value. Only the
/// brackets required by precedence are emitted.
inline std::string print_expr(const Expr& e) {
  auto wrap = [](const Expr& child, int min_prec) {
    std::string s = print_expr(child);
    return detail::precedence(child) < min_prec ? "(" + s + ")" : s;
  };
  switch (e.kind) {
    case Expr::Kind::Gen: return e.text;
    case Expr::Kind::Id: return e.k == 1 ? "1_X" : "id(" + std::to_string(e.k) + ")";
    case Expr::Kind::Zero: return "0";
    case Expr::Kind::Tensor: return wrap(*e.a, 2) + " * " + wrap(*e.b, 3);
    case Expr::Kind::Compose: return wrap(*e.a, 3) + "." + wrap(*e.b, 3);
    case Expr::Kind::Add: return print_expr(*e.a) + " + " + wrap(*e.b, 2);
    case Expr::Kind::Scale: {
      // a leading '-' is only legal at the start of an expression
      if (!e.text.empty() && e.text[0] == '-') return "(-" + e.text.substr(1) + "*" + wrap(*e.a, 4) + ")";
      return e.text + "*" + wrap(*e.a, 4);
    }
    case Expr::Kind::Power: {
      std::string inner = print_expr(*e.a);
      if (e.a->kind != Expr::Kind::Gen && e.a->kind != Expr::Kind::Id) inner = "(" + inner + ")";
      return inner + "^" + std::to_string(e.k);
    }
  }
  return {};
}

}  // namespace arcdiag
