#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "arcdiag/category.hpp"
#include "arcdiag/expr.hpp"

namespace arcdiag {

struct Arity {
  unsigned n = 0;
  unsigned m = 0;
};

namespace detail {

// nullopt stands for a literal 0 whose arities are not yet known
template <Presentation P, FieldScalar S>
std::optional<Morphism<P, S>> eval_rec(const Category<P, S>& cat, const Expr& e) {
  using Mor = Morphism<P, S>;
  switch (e.kind) {
    case Expr::Kind::Gen: return cat.generator(e.text);
    case Expr::Kind::Id: return cat.identity(e.k);
    case Expr::Kind::Zero: return std::nullopt;
    case Expr::Kind::Tensor: {
      auto a = eval_rec(cat, *e.a);
      auto b = eval_rec(cat, *e.b);
      if (!a || !b) return std::nullopt;
      return cat.tensor(*a, *b);
    }
    case Expr::Kind::Compose: {
      auto a = eval_rec(cat, *e.a);
      auto b = eval_rec(cat, *e.b);
      if (!a || !b) return std::nullopt;
      return cat.compose(*a, *b);
    }
    case Expr::Kind::Add: {
      auto a = eval_rec(cat, *e.a);
      auto b = eval_rec(cat, *e.b);
      if (!a) return b;
      if (!b) return a;
      return cat.add(*a, *b);
    }
    case Expr::Kind::Scale: {
      auto a = eval_rec(cat, *e.a);
      if (!a) return std::nullopt;
      return cat.scale(S::from_string(e.text), *a);
    }
    case Expr::Kind::Power: {
      auto a = eval_rec(cat, *e.a);
      if (!a) return std::nullopt;
      if (a->n != a->m) {
        throw ArityError("power: base morphism " + std::to_string(a->n) + "->" + std::to_string(a->m) +
                         " is not an endomorphism");
      }
      Mor r = cat.identity(a->n);
      for (unsigned i = 0; i < e.k; ++i) r = cat.compose(r, *a);
      return r;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Normal form of an expression. `hint` supplies the arities when the whole
/// expression is a bare 0.
template <Presentation P, FieldScalar S>
Morphism<P, S> eval(const Category<P, S>& cat, const Expr& e, std::optional<Arity> hint = std::nullopt) {
  auto r = detail::eval_rec(cat, e);
  if (r) return *r;
  if (!hint) throw ArityError("cannot infer the arities of 0; give them explicitly");
  return cat.zero(hint->n, hint->m);
}

template <Presentation P, FieldScalar S>
Morphism<P, S> eval(const Category<P, S>& cat, std::string_view text, std::optional<Arity> hint = std::nullopt) {
  return eval(cat, *parse(text), hint);
}

}  // namespace arcdiag
