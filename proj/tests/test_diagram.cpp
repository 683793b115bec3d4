#include <gtest/gtest.h>

#include <set>

#include "arcdiag/arcdiag.hpp"

using namespace arcdiag;

namespace {

// brute force: subsets of sources and targets of equal size pair up in
// exactly one order-preserving way
std::uint64_t brute_partial_bijections(unsigned n, unsigned m) {
  std::uint64_t count = 0;
  for (unsigned s = 0; s < (1u << n); ++s)
    for (unsigned t = 0; t < (1u << m); ++t)
      if (__builtin_popcount(s) == __builtin_popcount(t)) ++count;
  return count;
}

template <class S>
Category<Jacobson, S> jac() {
  return Category<Jacobson, S>{Jacobson()};
}

}  // namespace

TEST(PartialBijection, CountsMatchBruteForce) {
  for (unsigned n = 0; n <= 5; ++n)
    for (unsigned m = 0; m <= 5; ++m) {
      EXPECT_EQ(count_partial_bijections(n, m), brute_partial_bijections(n, m)) << n << "," << m;
      const auto all = partial_bijections(n, m);
      EXPECT_EQ(all.size(), count_partial_bijections(n, m));
      std::set<PartialBijection> distinct(all.begin(), all.end());
      EXPECT_EQ(distinct.size(), all.size());
      for (const auto& pb : all) EXPECT_TRUE(pb.valid());
    }
  EXPECT_EQ(count_partial_bijections(2, 2), 6u);
}

TEST(PartialBijection, FreePoints) {
  PartialBijection pb{3, 2, {{2, 1}}};
  EXPECT_EQ(pb.free_sources(), (std::vector<unsigned>{1, 3}));
  EXPECT_EQ(pb.free_targets(), (std::vector<unsigned>{2}));
  EXPECT_FALSE((PartialBijection{2, 2, {{1, 2}, {2, 1}}}.valid()));
}

TEST(Labels, EnumerationExamples) {
  const Jacobson j;
  const auto longs = j.enumerate_longs(1);
  ASSERT_EQ(longs.size(), 3u);
  EXPECT_EQ(longs[0].m, -1);
  EXPECT_EQ(longs[1].m, 0);
  EXPECT_EQ(longs[2].m, 1);
  EXPECT_EQ(Leavitt(3).enumerate_longs(1).size(), 7u);
  EXPECT_EQ(Quiver().enumerate_tops(5).size(), 1u);
}

TEST(Basis, EnumerationMatchesFormulaAndIsSorted) {
  const auto cat = jac<Rational>();
  for (unsigned n = 0; n <= 3; ++n)
    for (unsigned m = 0; m <= 3; ++m) {
      const auto basis = cat.enumerate_basis(n, m, 2);
      EXPECT_EQ(basis.size(), cat.basis_count_formula(n, m, 2));
      std::set<BasisDiagram<Jacobson>> distinct(basis.begin(), basis.end());
      EXPECT_EQ(distinct.size(), basis.size());
      for (const auto& d : basis) {
        EXPECT_TRUE(valid_diagram(cat.presentation(), d));
        EXPECT_LE(diagram_weight(cat.presentation(), d), 2u);
      }
    }
}

TEST(Basis, DegreeWindowFilters) {
  const auto cat = jac<Rational>();
  const auto all = cat.enumerate_basis(2, 2, 2);
  const auto window = cat.enumerate_basis(2, 2, 2, DegreeWindow{0, 0});
  std::size_t expect = 0;
  for (const auto& d : all) expect += diagram_degree(cat.presentation(), d) == 0;
  EXPECT_EQ(window.size(), expect);
  EXPECT_LT(window.size(), all.size());
}

TEST(Category, IdentityAndZero) {
  const auto cat = jac<Rational>();
  const auto x = cat.generator("x");
  EXPECT_TRUE(cat.equal(cat.compose(cat.identity(1), x), x));
  EXPECT_TRUE(cat.equal(cat.compose(x, cat.identity(1)), x));
  EXPECT_TRUE(cat.compose(x, cat.zero(1, 1)).is_zero());
  EXPECT_TRUE(cat.equal(cat.tensor(cat.identity(0), x), x));
  EXPECT_EQ(cat.degree_of(cat.zero(2, 2)), 0);
  EXPECT_EQ(cat.degree_of(cat.add(x, cat.identity(1))), std::nullopt);
}

TEST(Category, ArityErrors) {
  const auto cat = jac<Rational>();
  EXPECT_THROW(cat.compose(cat.identity(2), cat.identity(1)), ArityError);
  EXPECT_THROW(cat.add(cat.identity(2), cat.identity(1)), ArityError);
}

TEST(Category, TermLimit) {
  auto cat = jac<Rational>();
  cat.set_max_terms(2);
  EXPECT_THROW(eval(cat, "x^3 . y^3"), TermLimitError);
}

TEST(Koszul, TensorOfOddGeneratorsAnticommutesThroughHeights) {
  const auto cat = jac<Rational>();
  const auto x = cat.generator("x");
  const auto id = cat.identity(1);
  const auto xx = cat.tensor(x, x);
  // (1 (x) x) o (x (x) 1) = (-1)^{deg x deg x} (x (x) x)
  EXPECT_TRUE(cat.equal(cat.compose(cat.tensor(id, x), cat.tensor(x, id)), cat.neg(xx)));
  EXPECT_TRUE(cat.equal(cat.compose(cat.tensor(x, id), cat.tensor(id, x)), xx));
  // over GF2 the sign disappears
  const auto g = jac<Gf2>();
  const auto gx = g.generator("x");
  EXPECT_TRUE(g.equal(g.compose(g.tensor(g.identity(1), gx), g.tensor(gx, g.identity(1))), g.tensor(gx, gx)));
}

TEST(Koszul, CapAgainstCupLeavesShortStrands) {
  const auto cat = jac<Rational>();
  // z^* eats the incoming strand while z starts a new one to its left
  EXPECT_TRUE(cat.equal(eval(cat, "(id(1) * z^*) . (z * id(1))"), eval(cat, "z . z^*")));
  // y has to pass the lower x on the left strand: one sign
  EXPECT_TRUE(cat.equal(eval(cat, "(x * y) . (id(1) * x)"), eval(cat, "x * id(1)")));
  EXPECT_TRUE(cat.equal(eval(cat, "(id(1) * y) . (x * x)"), cat.neg(eval(cat, "x * id(1)"))));
}

namespace {

template <class P, class S>
void monoidal_properties(const Category<P, S>& cat, std::uint64_t seed, unsigned rounds) {
  RandomMorphisms<P, S> rnd(cat, seed, 1);
  for (unsigned r = 0; r < rounds; ++r) {
    const unsigned a = rnd.uniform(0, 2), b = rnd.uniform(0, 2), c = rnd.uniform(0, 2), d = rnd.uniform(0, 2);
    const auto f = rnd.morphism(b, a, 2);
    const auto g = rnd.morphism(c, b, 2);
    const auto h = rnd.morphism(d, c, 2);
    const auto fg = cat.compose(f, g);
    ASSERT_TRUE(cat.equal(cat.compose(fg, h), cat.compose(f, cat.compose(g, h))));
    ASSERT_TRUE(cat.equal(fg, cat.compose(f, g, FusionOrder::RightToLeft)));
    ASSERT_TRUE(cat.equal(cat.tensor(cat.tensor(f, g), h), cat.tensor(f, cat.tensor(g, h))));
    // every output term is a valid diagram whose degree adds up
    for (const auto& [du, cu] : f.terms)
      for (const auto& [dl, cl] : g.terms)
        for (const auto& [d, k] : cat.compose_basis(du, dl)) {
          ASSERT_TRUE(valid_diagram(cat.presentation(), d));
          ASSERT_EQ(diagram_degree(cat.presentation(), d),
                    diagram_degree(cat.presentation(), du) + diagram_degree(cat.presentation(), dl));
        }
  }
}

template <class P>
void interchange(const Category<P, Rational>& cat, std::uint64_t seed, unsigned rounds) {
  RandomMorphisms<P, Rational> rnd(cat, seed, 1);
  for (unsigned r = 0; r < rounds; ++r) {
    const unsigned n1 = rnd.uniform(0, 2), k1 = rnd.uniform(0, 2), m1 = rnd.uniform(0, 2);
    const unsigned n2 = rnd.uniform(0, 2), k2 = rnd.uniform(0, 2), m2 = rnd.uniform(0, 2);
    const auto f = rnd.homogeneous(k1, m1, 2), fp = rnd.homogeneous(n1, k1, 2);
    const auto g = rnd.homogeneous(k2, m2, 2), gp = rnd.homogeneous(n2, k2, 2);
    const auto lhs = cat.compose(cat.tensor(f, g), cat.tensor(fp, gp));
    auto rhs = cat.tensor(cat.compose(f, fp), cat.compose(g, gp));
    if ((*cat.degree_of(g) * *cat.degree_of(fp)) % 2 != 0) rhs = cat.neg(rhs);
    ASSERT_TRUE(cat.equal(lhs, rhs));
  }
}

}  // namespace

TEST(Monoidal, RandomLaws) {
  monoidal_properties(jac<Rational>(), 1, 200);
  monoidal_properties(jac<Gf2>(), 2, 200);
  monoidal_properties(Category<Leavitt, Rational>{Leavitt(3)}, 3, 200);
  monoidal_properties(Category<Leavitt, Gf2>{Leavitt(4)}, 4, 200);
  monoidal_properties(Category<Quiver, Rational>{Quiver()}, 5, 200);
}

TEST(Monoidal, InterchangeWithSign) {
  interchange(jac<Rational>(), 11, 300);
  interchange(Category<Jacobson, Rational>{Jacobson(-1)}, 12, 300);
  interchange(Category<Leavitt, Rational>{Leavitt(3)}, 13, 300);
  interchange(Category<Quiver, Rational>{Quiver()}, 14, 300);
}
