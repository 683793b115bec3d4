// Label algebras through the category: defining relations and associativity
// of every composable triple of small labels.

#include <gtest/gtest.h>

#include "arcdiag/arcdiag.hpp"

using namespace arcdiag;

namespace {

template <class Cat>
void expect_eq(const Cat& cat, const std::string& lhs, const std::string& rhs) {
  const auto a = eval(cat, lhs);
  const auto b = eval(cat, rhs, Arity{a.n, a.m});
  EXPECT_TRUE(cat.equal(a, b)) << lhs << " = " << rhs << "  got " << print(cat.presentation(), a) << " vs "
                               << print(cat.presentation(), b);
}

// single labels as diagrams: a top (0->1), a bottom (1->0), a long (1->1)
template <class Cat>
std::vector<typename Cat::Mor> small_diagrams(const Cat& cat, unsigned n, unsigned m, unsigned w) {
  std::vector<typename Cat::Mor> out;
  for (const auto& d : cat.enumerate_basis(n, m, w)) {
    if (d.long_count() == std::min(n, m)) out.push_back(cat.from_diagram(d));
  }
  return out;
}

template <class Cat>
void associativity_weight(const Cat& cat, unsigned w) {
  std::size_t checked = 0;
  // arities a <- b <- c <- d, each 0 or 1
  for (unsigned mask = 0; mask < 16; ++mask) {
    const unsigned a = mask & 1, b = (mask >> 1) & 1, c = (mask >> 2) & 1, d = (mask >> 3) & 1;
    const auto fs = small_diagrams(cat, b, a, w);
    const auto gs = small_diagrams(cat, c, b, w);
    const auto hs = small_diagrams(cat, d, c, w);
    for (const auto& f : fs)
      for (const auto& g : gs)
        for (const auto& h : hs) {
          const auto left = cat.compose(cat.compose(f, g), h);
          const auto right = cat.compose(f, cat.compose(g, h));
          ASSERT_TRUE(cat.equal(left, right))
              << print(cat.presentation(), f) << " | " << print(cat.presentation(), g) << " | "
              << print(cat.presentation(), h);
          ++checked;
        }
  }
  EXPECT_GT(checked, 0u);
}

}  // namespace

TEST(Jacobson, DefiningRelations) {
  Category<Jacobson, Rational> cat{Jacobson()};
  expect_eq(cat, "z^* . z", "id(0)");
  expect_eq(cat, "z^* . x", "0");
  expect_eq(cat, "y . z", "0");
  expect_eq(cat, "y . x", "id(1)");
  expect_eq(cat, "x . y + z . z^*", "id(1)");
  EXPECT_EQ(print(cat.presentation(), eval(cat, "y.x")), "1_X");
}

TEST(Jacobson, PowersExpandWithMinimumRule) {
  Category<Jacobson, Rational> cat{Jacobson()};
  // x^2 y^2 = 1 - z z^* - x z z^* y
  expect_eq(cat, "x^2 . y^2", "id(1) - z . z^* - x . z . z^* . y");
  expect_eq(cat, "y^2 . x^3", "x");
}

TEST(Jacobson, DegreeSwappedVariant) {
  Category<Jacobson, Rational> cat{Jacobson(-1)};
  EXPECT_EQ(cat.degree_of(eval(cat, "x")), -1);
  EXPECT_EQ(cat.degree_of(eval(cat, "y")), 1);
  expect_eq(cat, "y . x", "id(1)");
}

TEST(Leavitt, DefiningRelations) {
  for (unsigned L : {3u, 4u, 5u}) {
    Category<Leavitt, Rational> cat{Leavitt(L)};
    expect_eq(cat, "z^* . z", "id(0)");
    std::string sum = "z . z^*";
    for (unsigned i = 1; i <= L; ++i) {
      const std::string xi = "x" + std::to_string(i);
      expect_eq(cat, xi + "^* . z", "0");
      expect_eq(cat, "z^* . " + xi, "0");
      for (unsigned j = 1; j <= L; ++j) {
        const std::string xj = "x" + std::to_string(j);
        expect_eq(cat, xi + "^* . " + xj, i == j ? "id(1)" : "0");
      }
      sum += " + " + xi + " . " + xi + "^*";
    }
    expect_eq(cat, sum, "id(1)");
  }
}

TEST(Leavitt, StarredGeneratorOnTopOfItsPartner) {
  Category<Leavitt, Rational> cat{Leavitt(3)};
  EXPECT_EQ(print(cat.presentation(), eval(cat, "x1^*.x1")), "1_X");
}

TEST(Quiver, BubbleIsOne) {
  Category<Quiver, Rational> cat{Quiver()};
  expect_eq(cat, "c . b", "id(0)");
  EXPECT_EQ(cat.enumerate_basis(1, 1, 5).size(), 2u);  // 1_X and b.c
}

TEST(LabelAlgebra, AssociativityJacobson) {
  associativity_weight(Category<Jacobson, Rational>{Jacobson()}, 3);
  associativity_weight(Category<Jacobson, Gf2>{Jacobson()}, 3);
}

TEST(LabelAlgebra, AssociativityLeavitt) {
  associativity_weight(Category<Leavitt, Rational>{Leavitt(2)}, 3);
  associativity_weight(Category<Leavitt, Rational>{Leavitt(3)}, 3);
}

TEST(LabelAlgebra, AssociativityQuiver) { associativity_weight(Category<Quiver, Rational>{Quiver()}, 3); }
