#include <gtest/gtest.h>

#include "arcdiag/lincomb.hpp"
#include "arcdiag/scalar.hpp"
#include "arcdiag/word.hpp"

using namespace arcdiag;

TEST(Gf2, FieldAxioms) {
  const Gf2 zero(0), one(1);
  EXPECT_EQ(one + one, zero);
  EXPECT_EQ(-one, one);
  EXPECT_EQ(one * one, one);
  EXPECT_EQ(Gf2(-3), one);
  EXPECT_EQ(one / one, one);
  EXPECT_THROW(one / zero, std::domain_error);
}

TEST(Gf2, FractionsNeedOddDenominator) {
  EXPECT_EQ(Gf2::from_fraction(3, 5), Gf2(1));
  EXPECT_EQ(Gf2::from_fraction(4, 3), Gf2(0));
  EXPECT_THROW(Gf2::from_fraction(1, 2), std::domain_error);
  EXPECT_EQ(Gf2::from_string("-7"), Gf2(1));
}

TEST(Rational, LowestTerms) {
  const Rational a = Rational::from_fraction(6, -4);
  EXPECT_EQ(a.str(), "-3/2");
  EXPECT_EQ((a + Rational(2)).str(), "1/2");
  EXPECT_EQ((a * a).str(), "9/4");
  EXPECT_EQ((Rational(1) / a).str(), "-2/3");
  EXPECT_EQ(Rational::from_string("10/4"), Rational::from_fraction(5, 2));
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, ParseRejectsJunk) {
  EXPECT_ANY_THROW(Rational::from_string("1/"));
  EXPECT_ANY_THROW(Rational::from_string("a"));
  EXPECT_ANY_THROW(Rational::from_string("1/0"));
}

TEST(LinComb, CancellationRemovesKeys) {
  LinComb<int, Rational> a{{1, Rational(2)}, {3, Rational(1)}};
  a.add(1, Rational(-2));
  EXPECT_EQ(a.size(), 1u);
  EXPECT_EQ(a.coeff(1), Rational(0));
  LinComb<int, Rational> b{{3, Rational(1)}};
  EXPECT_EQ(a, b);
  a.add(b, Rational(-1));
  EXPECT_TRUE(a.empty());
}

TEST(LinComb, Gf2DoublesVanish) {
  LinComb<int, Gf2> a;
  a.add(5, Gf2(1));
  a.add(5, Gf2(1));
  EXPECT_TRUE(a.empty());
}

TEST(Word, PackedLetters) {
  Word w{1, 2, 3};
  EXPECT_EQ(w.size(), 3u);
  EXPECT_EQ(w.front(), 1u);
  EXPECT_EQ(w.back(), 3u);
  EXPECT_EQ(w.reversed(), (Word{3, 2, 1}));
  EXPECT_EQ(w + Word{4}, (Word{1, 2, 3, 4}));
  w.pop_front();
  EXPECT_EQ(w, (Word{2, 3}));
  EXPECT_LT(Word{1}, (Word{1, 1}));
}
