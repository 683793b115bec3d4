#include <gtest/gtest.h>

#include "arcdiag/arcdiag.hpp"

using namespace arcdiag;

namespace {

template <class P, class S>
struct Fixture {
  Category<P, S> cat;
  Oracle<P, S> oracle;
  explicit Fixture(const P& p, unsigned N = 8) : cat(p), oracle(p, N) {}

  typename Oracle<P, S>::Op rep(const std::string& text, std::optional<std::pair<unsigned, unsigned>> hint = {}) {
    return oracle.rep_expr(*parse(text), hint);
  }
};

}  // namespace

TEST(Oracle, JacobsonRelationsHold) {
  Fixture<Jacobson, Rational> f{Jacobson()};
  EXPECT_TRUE(f.oracle.equal_on_window(f.rep("y.x"), f.rep("id(1)"), 2).equal);
  EXPECT_TRUE(f.oracle.equal_on_window(f.rep("x.y + z.z^*"), f.rep("id(1)"), 2).equal);
  EXPECT_TRUE(f.oracle.equal_on_window(f.rep("z^*.x"), f.rep("0", std::pair{1u, 0u}), 2).equal);
}

TEST(Oracle, FalseRelationHasWitness) {
  Fixture<Jacobson, Rational> f{Jacobson()};
  const auto r = f.oracle.equal_on_window(f.rep("x.y"), f.rep("id(1)"), 2);
  EXPECT_FALSE(r.equal);
  EXPECT_FALSE(r.witness.empty());
  Fixture<Leavitt, Rational> l{Leavitt(3)};
  EXPECT_FALSE(l.oracle.equal_on_window(l.rep("x1.x1^*"), l.rep("id(1)"), 2).equal);
  EXPECT_FALSE(l.oracle.equal_on_window(l.rep("x1^*.x2"), l.rep("id(1)"), 2).equal);
}

TEST(Oracle, BatchedAndSinglePairAgree) {
  Fixture<Leavitt, Rational> f{Leavitt(3), 5};
  using Op = Oracle<Leavitt, Rational>::Op;
  const std::vector<std::pair<std::string, std::string>> rels = {
      {"x1^*.x1", "id(1)"}, {"x1^*.x2", "0"}, {"x1.x1^*", "id(1)"}, {"z^*.z", "id(0)"},
      {"x1.x1^* + x2.x2^* + x3.x3^* + z.z^*", "id(1)"}, {"(x1 * x2) . (x1^* * x2^*)", "x1.x1^* * x2.x2^*"}};
  std::vector<std::pair<Op, Op>> pairs;
  for (const auto& [a, b] : rels) {
    const Op lhs = f.rep(a);
    pairs.emplace_back(lhs, f.rep(b, std::pair{lhs.n(), lhs.m()}));
  }
  const auto batch = f.oracle.equal_on_window(pairs, 2);
  ASSERT_EQ(batch.size(), pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto single = f.oracle.equal_on_window(pairs[i].first, pairs[i].second, 2);
    EXPECT_EQ(batch[i].equal, single.equal) << rels[i].first;
    EXPECT_EQ(batch[i].inputs_checked, single.inputs_checked) << rels[i].first;
  }
  EXPECT_FALSE(batch[2].equal);
  EXPECT_TRUE(batch[4].equal);
}

namespace {

// the normal form and the raw expression act the same way on the window
template <class P, class S>
void normal_forms_are_sound(const P& p, std::uint64_t seed, unsigned N) {
  Fixture<P, S> f{p, N};
  RandomMorphisms<P, S> rnd(f.cat, seed, 1);
  for (int i = 0; i < 40; ++i) {
    const unsigned a = rnd.uniform(0, 2), b = rnd.uniform(0, 2), c = rnd.uniform(0, 2);
    const auto g = rnd.morphism(b, a, 2), h = rnd.morphism(c, b, 2);
    const auto gh = f.cat.compose(g, h);
    const auto raw = f.oracle.compose(f.oracle.rep_morphism(g), f.oracle.rep_morphism(h));
    ASSERT_TRUE(f.oracle.equal_on_window(f.oracle.rep_morphism(gh), raw, 2).equal);
    const auto t = f.cat.tensor(g, h);
    const auto raw_t = f.oracle.tensor(f.oracle.rep_morphism(g), f.oracle.rep_morphism(h));
    ASSERT_TRUE(f.oracle.equal_on_window(f.oracle.rep_morphism(t), raw_t, 2).equal);
  }
}

}  // namespace

TEST(Oracle, NormalFormsAreSound) {
  normal_forms_are_sound<Jacobson, Rational>(Jacobson(), 1, 8);
  normal_forms_are_sound<Jacobson, Gf2>(Jacobson(), 2, 8);
  normal_forms_are_sound<Leavitt, Rational>(Leavitt(3), 3, 5);
  normal_forms_are_sound<Quiver, Rational>(Quiver(), 4, 8);
}

TEST(Oracle, IndependenceOfBasis) {
  Fixture<Jacobson, Rational> f{Jacobson(), 12};
  const auto basis = f.cat.enumerate_basis(2, 2, 1);
  const auto r = f.oracle.independence_rank(basis, 2);
  EXPECT_EQ(r.count, basis.size());
  EXPECT_EQ(r.rank, basis.size());
  // the certificate and plain elimination give the same rank
  EXPECT_EQ(f.oracle.elimination_rank(basis, 2), basis.size());
}

TEST(Oracle, DependentFamilyIsDetected) {
  Fixture<Jacobson, Rational> f{Jacobson(), 12};
  auto family = f.cat.enumerate_basis(1, 1, 1);
  family.push_back(family.front());
  const auto r = f.oracle.independence_rank(family, 2);
  EXPECT_FALSE(r.certified_by_leading_terms);
  EXPECT_EQ(r.rank, family.size() - 1);
}

TEST(Oracle, QuiverAndLeavittBases) {
  Fixture<Quiver, Rational> q{Quiver(), 12};
  const auto qb = q.cat.enumerate_basis(3, 3, 0);
  EXPECT_EQ(q.oracle.independence_rank(qb, 2).rank, qb.size());
  Fixture<Leavitt, Rational> l{Leavitt(3), 12};
  const auto lb = l.cat.enumerate_basis(2, 2, 1);
  EXPECT_EQ(l.oracle.independence_rank(lb, 2).rank, lb.size());
}
