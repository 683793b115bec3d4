#include <gtest/gtest.h>

#include "arcdiag/arcdiag.hpp"

using namespace arcdiag;

namespace {

// exact expected classes without the ledger: base^k as a fraction
Rational power_of(std::int64_t num, std::int64_t den, unsigned k) {
  std::int64_t p = 1, q = 1;
  for (unsigned i = 0; i < k; ++i) {
    p *= num;
    q *= den;
  }
  return Rational::from_fraction(p, q);
}

template <class P, class S>
void expect_iso(const P& p, unsigned max_k) {
  Category<P, S> cat(p);
  for (unsigned k = 1; k <= max_k; ++k) {
    const auto r = verify_iso_pair(cat, k);
    EXPECT_TRUE(r.well_formed) << p.name() << " k=" << k;
    EXPECT_TRUE(r.row_col_identity) << p.name() << " k=" << k;
    EXPECT_TRUE(r.col_row_identity) << p.name() << " k=" << k;
  }
}

}  // namespace

TEST(Ledger, Reduce) {
  EXPECT_EQ(ledger_reduce("x = -x + 1"), Rational::from_fraction(1, 2));
  EXPECT_EQ(ledger_reduce("x = 4x + 1"), Rational::from_fraction(-1, 3));
  EXPECT_EQ(ledger_reduce("2x - 1 = 3"), Rational(2));
  EXPECT_EQ(ledger_reduce(LedgerRelation{1, 0, -3, 1}), Rational::from_fraction(1, 4));
}

TEST(Ledger, CollapseAndUndetermined) {
  try {
    ledger_reduce("x = x + 1");
    FAIL();
  } catch (const K0Error& e) {
    EXPECT_EQ(e.kind(), K0Error::Kind::Collapse);
  }
  try {
    ledger_reduce("x + 1 = x + 1");
    FAIL();
  } catch (const K0Error& e) {
    EXPECT_EQ(e.kind(), K0Error::Kind::Undetermined);
  }
  try {
    ledger_reduce("x == 1");
    FAIL();
  } catch (const K0Error& e) {
    EXPECT_EQ(e.kind(), K0Error::Kind::Syntax);
  }
}

TEST(IsoPair, AllPresetsBothFields) {
  expect_iso<Jacobson, Rational>(Jacobson(), 3);
  expect_iso<Jacobson, Gf2>(Jacobson(), 3);
  expect_iso<Jacobson, Rational>(Jacobson(-1), 2);
  for (unsigned L : {3u, 4u, 5u}) {
    expect_iso<Leavitt, Rational>(Leavitt(L), 3);
    expect_iso<Leavitt, Gf2>(Leavitt(L), 3);
  }
  expect_iso<Quiver, Rational>(Quiver(), 3);
  expect_iso<Quiver, Gf2>(Quiver(), 3);
}

TEST(IsoPair, BrokenEntryIsCaught) {
  Category<Jacobson, Rational> cat{Jacobson()};
  auto pair = iso_pair(cat);
  pair.row.entries[0][1] = cat.scale(Rational(2), pair.row.entries[0][1]);
  EXPECT_TRUE(well_formed(cat, pair.row));
  EXPECT_FALSE(is_identity(cat, compose(cat, pair.row, pair.col)));
  // degree mismatch: z in the shifted slot
  pair.row.entries[0][1] = cat.generator("z") ;
  EXPECT_FALSE(well_formed(cat, pair.row));
}

TEST(K0, Classes) {
  Category<Jacobson, Gf2> j{Jacobson()};
  Category<Leavitt, Rational> l3{Leavitt(3)}, l4{Leavitt(4)}, l5{Leavitt(5)};
  for (unsigned k = 0; k <= 10; ++k) {
    EXPECT_EQ(k0_class_of_power(j, k), power_of(1, 2, k));
    EXPECT_EQ(k0_class_of_power(l3, k), power_of(-1, 2, k));
    EXPECT_EQ(k0_class_of_power(l4, k), power_of(-1, 3, k));
    EXPECT_EQ(k0_class_of_power(l5, k), power_of(-1, 4, k));
  }
}

TEST(K0, EvenDegreeCollapses) {
  Category<Jacobson, Rational> cat{Jacobson(2)};
  EXPECT_TRUE(verify_iso_pair(cat, 1).ok());
  try {
    k0_class_of_power(cat, 1);
    FAIL();
  } catch (const K0Error& e) {
    EXPECT_EQ(e.kind(), K0Error::Kind::Collapse);
  }
}

TEST(K0, QuiverIdempotentSlotIsUndetermined) {
  Category<Quiver, Rational> cat{Quiver()};
  EXPECT_TRUE(verify_iso_pair(cat, 1).ok());
  try {
    k0_class_of_power(cat, 1);
    FAIL();
  } catch (const K0Error& e) {
    EXPECT_EQ(e.kind(), K0Error::Kind::Undetermined);
  }
}
