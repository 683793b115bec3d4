#include <gtest/gtest.h>

#include "arcdiag/arcdiag.hpp"

using namespace arcdiag;

namespace {

using JCat = Category<Jacobson, Rational>;

JCat jac() { return JCat{Jacobson()}; }

// independent sign: write both words as letter strings a_i^{+-1}, then
// bubble sort by index; every swap of two letters with different indices
// costs -1
int skew_sign_by_sorting(const SkewWord& u, const SkewWord& v) {
  std::vector<int> letters;
  for (const auto* w : {&u, &v})
    for (std::size_t i = 0; i < w->e.size(); ++i)
      for (int c = 0; c < std::abs(w->e[i]); ++c) letters.push_back(static_cast<int>(i));
  int sign = 1;
  for (std::size_t pass = 0; pass < letters.size(); ++pass)
    for (std::size_t j = 0; j + 1 < letters.size(); ++j)
      if (letters[j] > letters[j + 1]) {
        std::swap(letters[j], letters[j + 1]);
        sign = -sign;
      }
  return sign;
}

LkElement<Jacobson, Rational> monomial(const std::vector<int>& e) {
  SkewPoly<Rational> p;
  p.add(SkewWord{e}, Rational(1));
  return skew_to_lk(p, static_cast<unsigned>(e.size()));
}

}  // namespace

TEST(Ideal, LongStrandFiltration) {
  const auto cat = jac();
  const auto id2 = cat.identity(2);
  const auto cut = eval(cat, "z.z^* * 1_X");
  EXPECT_TRUE(in_ideal(id2, 2));
  EXPECT_FALSE(in_ideal(id2, 1));
  EXPECT_TRUE(in_ideal(cut, 1));
  EXPECT_TRUE(in_ideal(cat.compose(cut, id2), 1));
  EXPECT_TRUE(in_ideal(cat.zero(3, 3), 0));
  EXPECT_THROW(in_ideal(cat.zero(1, 2), 1), ArityError);
}

TEST(Ideal, TwoSidedOnRandomProducts) {
  const auto cat = jac();
  RandomMorphisms<Jacobson, Rational> rnd(cat, 7, 2);
  for (int r = 0; r < 300; ++r) {
    const unsigned k = rnd.uniform(1, 3);
    const int bound = static_cast<int>(rnd.uniform(0, k));
    const auto g = rnd.morphism(k, k, 3, bound);
    const auto h = rnd.morphism(k, k, 3);
    ASSERT_TRUE(in_ideal(g, bound));
    ASSERT_TRUE(in_ideal(cat.compose(g, h), bound));
    ASSERT_TRUE(in_ideal(cat.compose(h, g), bound));
  }
}

TEST(Ideal, BasisAndEmbedding) {
  const auto cat = jac();
  for (const auto& d : ideal_basis(cat, 2, 1, 1)) EXPECT_LE(d.long_count(), 1u);
  const auto a = alpha_embed(cat, cat.generator("x"));
  EXPECT_EQ(a.n, 2u);
  // the short idempotent is e_00
  EXPECT_TRUE(cat.equal(short_idempotent(cat), matrix_unit(cat, 0, 0)));
  // alpha is multiplicative
  const auto x = cat.generator("x"), y = cat.generator("y");
  EXPECT_TRUE(cat.equal(cat.compose(alpha_embed(cat, y), alpha_embed(cat, x)), alpha_embed(cat, cat.compose(y, x))));
}

TEST(Lk, ProjectionKillsShortStrands) {
  const auto cat = jac();
  const auto xy = project_Lk(eval(cat, "x.y"));
  EXPECT_EQ(xy, project_Lk(cat.identity(1)));
  EXPECT_TRUE(project_Lk(eval(cat, "z.z^*")).is_zero());
}

TEST(Lk, OddGeneratorsAnticommute) {
  const auto cat = jac();
  const auto a1 = monomial({1, 0}), a2 = monomial({0, 1});
  const auto p = lk_multiply(cat, a1, a2);
  const auto q = lk_multiply(cat, a2, a1);
  LkElement<Jacobson, Rational> neg_q{2, {}};
  neg_q.terms.add(q.terms, Rational(-1));
  EXPECT_EQ(p, neg_q);
  // embeddings of x into positions 1 and 2 give a_1 and a_2
  const auto x = project_Lk(cat.generator("x"));
  EXPECT_EQ(lk_embed(cat, x, 1, 2), a1);
  EXPECT_EQ(lk_embed(cat, x, 2, 2), a2);
}

TEST(Lk, WellDefinedOnRandomLifts) {
  // adding anything from J_{k-1} to a lift must not change the product
  const auto cat = jac();
  RandomMorphisms<Jacobson, Rational> rnd(cat, 8, 2);
  for (int r = 0; r < 200; ++r) {
    const unsigned k = rnd.uniform(1, 3);
    const auto a = rnd.morphism(k, k, 3), b = rnd.morphism(k, k, 3);
    const auto ja = rnd.morphism(k, k, 2, static_cast<int>(k) - 1);
    const auto jb = rnd.morphism(k, k, 2, static_cast<int>(k) - 1);
    const auto direct = project_Lk(cat.compose(cat.add(a, ja), cat.add(b, jb)));
    ASSERT_EQ(direct, lk_multiply(cat, project_Lk(a), project_Lk(b)));
  }
}

TEST(Skew, SignMatchesLetterSorting) {
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c)
        for (int d = -2; d <= 2; ++d) {
          const SkewWord u{{a, b}}, v{{c, d}};
          const auto [sign, w] = skew_multiply(u, v);
          ASSERT_EQ(sign, skew_sign_by_sorting(u, v));
          ASSERT_EQ(w.e, (std::vector<int>{a + c, b + d}));
          ASSERT_EQ(skew_multiply(u, v, false).first, 1);
        }
}

TEST(Skew, LkIsomorphismIsMultiplicative) {
  const auto cat = jac();
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c)
        for (int d = -2; d <= 2; ++d) {
          const auto u = monomial({a, b}), v = monomial({c, d});
          ASSERT_EQ(lk_to_skew(lk_multiply(cat, u, v)), skew_product(lk_to_skew(u), lk_to_skew(v)));
        }
}

TEST(Skew, ShiftIsBijective) {
  const auto cat = jac();
  for (unsigned k = 1; k <= 3; ++k)
    for (unsigned t = 1; t <= k; ++t) EXPECT_TRUE(shift_bijection_check(cat, k, t, 2)) << k << " " << t;
}

TEST(MatrixUnits, Multiply) {
  const auto cat = jac();
  for (unsigned i = 0; i <= 5; ++i)
    for (unsigned j = 0; j <= 5; ++j) {
      EXPECT_EQ(cat.degree_of(matrix_unit(cat, i, j)), static_cast<int>(i) - static_cast<int>(j));
      for (unsigned k = 0; k <= 5; ++k)
        for (unsigned l = 0; l <= 5; ++l) {
          const auto prod = cat.compose(matrix_unit(cat, i, j), matrix_unit(cat, k, l));
          if (j == k)
            ASSERT_TRUE(cat.equal(prod, matrix_unit(cat, i, l)));
          else
            ASSERT_TRUE(prod.is_zero());
        }
    }
  Category<Leavitt, Rational> lea{Leavitt(3)};
  EXPECT_ANY_THROW(matrix_unit(lea, 0, 0));
}

TEST(Complex, Shape) {
  // sum over T of N^|T| generators, and |T| maps out of each
  for (unsigned k = 1; k <= 3; ++k)
    for (unsigned N = 1; N <= 3; ++N) {
      const auto cx = build_PLk(k, N);
      std::size_t gens = 0, maps = 0;
      for (unsigned s = 0; s <= k; ++s) {
        std::size_t pow = 1;
        for (unsigned i = 0; i < s; ++i) pow *= N;
        gens += detail::binomial(k, s) * pow;
        maps += detail::binomial(k, s) * pow * s;
      }
      EXPECT_EQ(cx.terms.size(), gens);
      EXPECT_EQ(cx.maps.size(), maps);
    }
}

TEST(Complex, DSquaredVanishes) {
  const auto cat = jac();
  for (unsigned k = 1; k <= 3; ++k)
    for (unsigned N = 1; N <= 3; ++N) EXPECT_TRUE(check_d_squared(cat, build_PLk(k, N))) << k << " " << N;
  Category<Jacobson, Gf2> g{Jacobson()};
  EXPECT_TRUE(check_d_squared(g, build_PLk(3, 2)));
}

TEST(Complex, HomologyCokernel) {
  const auto cat = jac();
  const std::pair<unsigned, unsigned> cases[] = {{0, 2}, {1, 4}, {2, 8}};
  for (const auto& [W, N] : cases) {
    const auto h = homology_check_k1(cat, N, W);
    EXPECT_TRUE(h.injective);
    EXPECT_EQ(h.cokernel_dim, 2 * W + 1);
    EXPECT_TRUE(h.ok);
  }
}
