#include <gtest/gtest.h>

#include "arcdiag/arcdiag.hpp"

using namespace arcdiag;

namespace {

std::string tree(const std::string& text) { return tree_string(*parse(text)); }

}  // namespace

TEST(Parser, Precedence) {
  // composition binds tighter than tensor, tensor tighter than sum
  EXPECT_EQ(tree("a . b * c"), "Tensor(Compose(a,b),c)");
  EXPECT_EQ(tree("a * b . c"), "Tensor(a,Compose(b,c))");
  EXPECT_EQ(tree("a + b * c"), "Add(a,Tensor(b,c))");
  EXPECT_EQ(tree("a . b . c"), "Compose(Compose(a,b),c)");
  EXPECT_EQ(tree("a * b * c"), "Tensor(Tensor(a,b),c)");
  EXPECT_EQ(tree("x*id(1) . id(1)*x"), "Tensor(Tensor(x,Compose(id(1),id(1))),x)");
  EXPECT_EQ(tree("(x*id(1)) . (id(1)*x)"), "Compose(Tensor(x,id(1)),Tensor(id(1),x))");
}

TEST(Parser, CoefficientsAndPowers) {
  EXPECT_EQ(tree("1/2 a"), "Scale(1/2,a)");
  EXPECT_EQ(tree("2*a . b"), "Compose(Scale(2,a),b)");
  EXPECT_EQ(tree("-a"), "Scale(-1,a)");
  EXPECT_EQ(tree("a - b"), "Add(a,Scale(-1,b))");
  EXPECT_EQ(tree("x^3"), "Power(x,3)");
  EXPECT_EQ(tree("0"), "0");
}

TEST(Parser, StarSpellings) {
  EXPECT_EQ(tree("z* . z"), "Compose(z^*,z)");
  EXPECT_EQ(tree("z^* . z"), "Compose(z^*,z)");
  EXPECT_EQ(tree("x1* * x2"), "Tensor(x1^*,x2)");
  EXPECT_EQ(tree("x1 * x2"), "Tensor(x1,x2)");
}

TEST(Parser, IdentityAliases) {
  EXPECT_EQ(tree("1_X"), "id(1)");
  EXPECT_EQ(tree("1_1"), "id(0)");
  EXPECT_EQ(tree("id(3)"), "id(3)");
}

TEST(Parser, ErrorsCarryPositions) {
  try {
    parse("x . (y");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
  EXPECT_THROW(parse("x +"), ParseError);
  EXPECT_THROW(parse("1/0 x"), ParseError);
  EXPECT_THROW(parse("x )"), ParseError);
  EXPECT_THROW(parse("3"), ParseError);
}

TEST(Eval, UnknownGeneratorAndArity) {
  Category<Jacobson, Rational> cat{Jacobson()};
  EXPECT_ANY_THROW(eval(cat, "w"));
  EXPECT_THROW(eval(cat, "x . z^*"), ArityError);
  EXPECT_THROW(eval(cat, "x + id(2)"), ArityError);
  EXPECT_THROW(eval(cat, "0"), ArityError);
  EXPECT_TRUE(eval(cat, "0", Arity{2, 1}).is_zero());
}

TEST(Print, Examples) {
  Category<Jacobson, Rational> cat{Jacobson()};
  const auto& p = cat.presentation();
  EXPECT_EQ(print(p, cat.identity(1)), "1_X");
  EXPECT_EQ(print(p, cat.zero(1, 1)), "0");
  EXPECT_EQ(print(p, eval(cat, "y.x")), "1_X");
  EXPECT_EQ(print(p, eval(cat, "x.y + z.z^*")), "1_X");
  EXPECT_EQ(print(p, eval(cat, "2 x")), "2*(x)");
  EXPECT_EQ(print(p, eval(cat, "-1/2 z.z^*")), "-1/2*(z.z^*)");
}

namespace {

template <class P, class S>
void round_trip(const P& p, std::uint64_t seed) {
  Category<P, S> cat(p);
  RandomMorphisms<P, S> rnd(cat, seed, 2);
  for (int i = 0; i < 200; ++i) {
    const auto m = rnd.morphism(rnd.uniform(0, 3), rnd.uniform(0, 3), 3);
    const std::string text = print(p, m);
    const auto back = eval(cat, text, Arity{m.n, m.m});
    ASSERT_TRUE(cat.equal(back, m)) << text;
    // printing is a function of the value
    ASSERT_EQ(print(p, back), text);
  }
}

}  // namespace

TEST(Print, RoundTrip) {
  round_trip<Jacobson, Rational>(Jacobson(), 1);
  round_trip<Jacobson, Gf2>(Jacobson(), 2);
  round_trip<Jacobson, Rational>(Jacobson(-1), 3);
  round_trip<Leavitt, Rational>(Leavitt(3), 4);
  round_trip<Leavitt, Gf2>(Leavitt(5), 5);
  round_trip<Quiver, Rational>(Quiver(), 6);
}

TEST(Print, ReparsedTreeHasSameShape) {
  for (const char* text : {"a . b * c", "(a + b) . c", "a * (b * c)", "1/2 (a + b)", "x^2 . y"}) {
    const auto e = parse(text);
    EXPECT_EQ(tree_string(*parse(print_expr(*e))), tree_string(*e)) << text << " -> " << print_expr(*e);
  }
}
