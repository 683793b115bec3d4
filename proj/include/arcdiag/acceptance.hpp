#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "arcdiag/algebra_views.hpp"
#include "arcdiag/category.hpp"
#include "arcdiag/eval.hpp"
#include "arcdiag/factorize.hpp"
#include "arcdiag/k0.hpp"
#include "arcdiag/oracle.hpp"
#include "arcdiag/random.hpp"

namespace arcdiag {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  std::string witness;  // first counterexample, if any
  double seconds = 0;
};

struct AcceptanceOptions {
  std::uint64_t seed = 20240517;
  unsigned truncation = 12;
};

namespace accept {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Records the first failure and counts checks.
struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string witness;

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) witness = describe();
  }
};

inline std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << s << "s";
  return os.str();
}

// ---- 1: defining relations --------------------------------------------------

struct Relation {
  std::string lhs;
  std::string rhs;
};

inline std::vector<Relation> jacobson_relations() {
  return {{"z^*.z", "id(0)"}, {"z^*.x", "0"}, {"y.z", "0"}, {"y.x", "1_X"}, {"x.y + z.z^*", "1_X"}};
}

inline std::vector<Relation> leavitt_relations(unsigned L) {
  std::vector<Relation> out{{"z^*.z", "id(0)"}};
  auto x = [](unsigned i) { return "x" + std::to_string(i); };
  for (unsigned i = 1; i <= L; ++i) out.push_back({x(i) + "^*.z", "0"});
  for (unsigned i = 1; i <= L; ++i) out.push_back({"z^*." + x(i), "0"});
  for (unsigned i = 1; i <= L; ++i) {
    for (unsigned j = 1; j <= L; ++j) out.push_back({x(i) + "^*." + x(j), i == j ? "1_X" : "0"});
  }
  std::string sum;
  for (unsigned i = 1; i <= L; ++i) sum += x(i) + "." + x(i) + "^* + ";
  out.push_back({sum + "z.z^*", "1_X"});
  return out;
}

inline std::vector<Relation> quiver_relations() { return {{"c.b", "id(0)"}}; }

// Symbolic composition of generator morphisms, then the oracle on the safe
// window; both routes must agree with the right-hand side.
template <Presentation P, FieldScalar S>
void check_relations(const P& p, const std::vector<Relation>& rels, unsigned N, Tally& t) {
  Category<P, S> cat(p);
  Oracle<P, S> oracle(p, N);
  using Op = typename Oracle<P, S>::Op;
  std::vector<std::pair<Op, Op>> pairs;
  for (const auto& r : rels) {
    const auto lhs = eval(cat, r.lhs);
    const auto rhs = eval(cat, r.rhs, Arity{lhs.n, lhs.m});
    t.expect(cat.equal(lhs, rhs), [&] { return p.name() + " symbolic: " + r.lhs + " = " + print(p, lhs); });
    pairs.emplace_back(oracle.rep_expr(*parse(r.lhs)), oracle.rep_expr(*parse(r.rhs), std::pair{lhs.n, lhs.m}));
  }
  const auto results = oracle.equal_on_window(pairs, 2);
  for (std::size_t i = 0; i < rels.size(); ++i) {
    t.expect(results[i].equal && results[i].inputs_checked > 0, [&] {
      return p.name() + " oracle: " + rels[i].lhs + " != " + rels[i].rhs + " at " + results[i].witness;
    });
  }
}

inline CriterionResult relations(const AcceptanceOptions& opt) {
  Stopwatch sw;
  Tally t;
  check_relations<Jacobson, Rational>(Jacobson(), jacobson_relations(), opt.truncation, t);
  for (unsigned L : {3u, 4u, 5u}) check_relations<Leavitt, Rational>(Leavitt(L), leavitt_relations(L), opt.truncation, t);
  check_relations<Quiver, Rational>(Quiver(), quiver_relations(), opt.truncation, t);
  CriterionResult r{1, "defining relations, symbolic and oracle (N=" + std::to_string(opt.truncation) + ")"};
  r.seconds = sw.seconds();
  r.pass = t.failures == 0 && r.seconds < 5.0;
  r.detail = std::to_string(t.checks) + " checks, " + std::to_string(t.failures) + " failures, " +
             fmt_seconds(r.seconds) + " (limit 5s)";
  r.witness = t.witness;
  return r;
}

// ---- 2: basis faithfulness --------------------------------------------------

template <Presentation P>
void check_basis(const P& p, unsigned N, Tally& t, std::string& notes) {
  Category<P, Rational> cat(p);
  Oracle<P, Rational> oracle(p, N);
  for (unsigned n = 0; n <= 3; ++n) {
    for (unsigned m = 0; m <= 3; ++m) {
      std::uint64_t enumerated = 0;
      auto each = [&](auto&& visit) { cat.for_each_basis_diagram(n, m, 2, std::nullopt, visit); };
      each([&](const BasisDiagram<P>&) { ++enumerated; });
      const auto report = oracle.independence_rank_of(each, 2);
      const auto formula = cat.basis_count_formula(n, m, 2);
      t.expect(report.rank == enumerated && enumerated == formula, [&] {
        return p.name() + " (" + std::to_string(n) + "," + std::to_string(m) + "): rank " +
               std::to_string(report.rank) + ", enumerated " + std::to_string(enumerated) + ", formula " +
               std::to_string(formula);
      });
      if (n == 3 && m == 3) notes += " " + p.name() + "(3,3)=" + std::to_string(enumerated);
    }
  }
}

inline CriterionResult basis_faithfulness(const AcceptanceOptions& opt) {
  Stopwatch sw;
  Tally t;
  std::string notes;
  check_basis(Jacobson(), opt.truncation, t, notes);
  check_basis(Leavitt(3), opt.truncation, t, notes);
  check_basis(Quiver(), opt.truncation, t, notes);
  CriterionResult r{2, "basis faithfulness, n,m <= 3, weight <= 2"};
  r.seconds = sw.seconds();
  r.pass = t.failures == 0 && r.seconds < 120.0;
  r.detail = std::to_string(t.checks) + " hom spaces;" + notes + "; " + fmt_seconds(r.seconds) + " (limit 120s)";
  r.witness = t.witness;
  return r;
}

// ---- 3: associativity and interchange ---------------------------------------

template <Presentation P, FieldScalar S>
void check_monoidal_laws(const P& p, std::uint64_t seed, unsigned rounds, Tally& t) {
  Category<P, S> cat(p);
  RandomMorphisms<P, S> rnd(cat, seed, 2);
  auto show = [&](const Morphism<P, S>& m) { return print(p, m); };
  const std::string tag = p.name() + "/" + std::string(S::field_name) + ": ";
  for (unsigned i = 0; i < rounds; ++i) {
    const unsigned a = rnd.uniform(0, 2), b = rnd.uniform(0, 2), c = rnd.uniform(0, 2), d = rnd.uniform(0, 2);
    const auto f = rnd.morphism(c, d, 2);
    const auto g = rnd.morphism(b, c, 2);
    const auto h = rnd.morphism(a, b, 2);
    const auto left = cat.compose(cat.compose(f, g), h);
    const auto right = cat.compose(f, cat.compose(g, h));
    t.expect(cat.equal(left, right), [&] {
      return tag + "associativity fails for f=" + show(f) + ", g=" + show(g) + ", h=" + show(h);
    });
    const auto rl = cat.compose(cat.compose(f, g, FusionOrder::RightToLeft), h, FusionOrder::RightToLeft);
    t.expect(cat.equal(left, rl), [&] {
      return tag + "fusion order changes (f.g).h for f=" + show(f) + ", g=" + show(g) + ", h=" + show(h);
    });
  }
  for (unsigned i = 0; i < rounds; ++i) {
    const unsigned a1 = rnd.uniform(0, 2), b1 = rnd.uniform(0, 2), c1 = rnd.uniform(0, 2);
    const unsigned a2 = rnd.uniform(0, 2), b2 = rnd.uniform(0, 2), c2 = rnd.uniform(0, 2);
    const auto f = rnd.morphism(a1, b1, 2);
    const auto fp = rnd.homogeneous(c1, a1, 2);
    const auto g = rnd.homogeneous(a2, b2, 2);
    const auto gp = rnd.morphism(c2, a2, 2);
    const int sign_exp = *cat.degree_of(g) * *cat.degree_of(fp);
    const auto lhs = cat.compose(cat.tensor(f, g), cat.tensor(fp, gp));
    auto rhs = cat.tensor(cat.compose(f, fp), cat.compose(g, gp));
    if (odd(sign_exp)) rhs = cat.neg(rhs);
    t.expect(cat.equal(lhs, rhs), [&] {
      return tag + "interchange fails for f=" + show(f) + ", g=" + show(g) + ", f'=" + show(fp) + ", g'=" + show(gp);
    });
    // associativity of the tensor product
    const auto t1 = cat.tensor(cat.tensor(f, g), gp);
    const auto t2 = cat.tensor(f, cat.tensor(g, gp));
    t.expect(cat.equal(t1, t2), [&] { return tag + "tensor associativity fails"; });
  }
}

inline CriterionResult monoidal_laws(const AcceptanceOptions& opt) {
  Stopwatch sw;
  Tally t;
  const unsigned rounds = 1000;
  check_monoidal_laws<Jacobson, Rational>(Jacobson(), opt.seed, rounds, t);
  check_monoidal_laws<Jacobson, Gf2>(Jacobson(), opt.seed + 1, rounds, t);
  for (unsigned L : {3u, 4u, 5u}) {
    check_monoidal_laws<Leavitt, Rational>(Leavitt(L), opt.seed + 2 * L, rounds, t);
    check_monoidal_laws<Leavitt, Gf2>(Leavitt(L), opt.seed + 2 * L + 1, rounds, t);
  }
  check_monoidal_laws<Quiver, Rational>(Quiver(), opt.seed + 20, rounds, t);
  check_monoidal_laws<Quiver, Gf2>(Quiver(), opt.seed + 21, rounds, t);
  CriterionResult r{3, "associativity and interchange, 1000 triples and quadruples per preset and field"};
  r.seconds = sw.seconds();
  r.pass = t.failures == 0 && r.seconds < 60.0;
  r.detail = std::to_string(t.checks) + " checks, " + std::to_string(t.failures) + " failures, seed " +
             std::to_string(opt.seed) + ", " + fmt_seconds(r.seconds) + " (limit 60s)";
  r.witness = t.witness;
  return r;
}

// ---- 4: ideal filtration ----------------------------------------------------

template <Presentation P>
void check_ideals(const P& p, std::uint64_t seed, unsigned rounds, Tally& t) {
  using S = Rational;
  Category<P, S> cat(p);
  RandomMorphisms<P, S> rnd(cat, seed, 2);
  const std::string tag = p.name() + ": ";
  for (unsigned i = 0; i < rounds; ++i) {
    const unsigned k = rnd.uniform(1, 3);
    const int l1 = static_cast<int>(rnd.uniform(0, k));
    const int l2 = static_cast<int>(rnd.uniform(0, k));
    const auto g1 = rnd.morphism(k, k, 3, l1);
    const auto g2 = rnd.morphism(k, k, 3, l2);
    const auto h = rnd.morphism(k, k, 3);
    t.expect(in_ideal(g1, l1) && in_ideal(g2, l2), [&] { return tag + "generator escapes its ideal"; });
    const auto prod = cat.compose(g1, g2);
    t.expect(in_ideal(prod, std::min(l1, l2)), [&] {
      return tag + "long strands increase: " + print(p, g1) + " . " + print(p, g2) + " = " + print(p, prod);
    });
    const auto hg = cat.compose(h, g1);
    const auto gh = cat.compose(g1, h);
    t.expect(in_ideal(hg, l1) && in_ideal(gh, l1), [&] {
      return tag + "J_{" + std::to_string(l1) + "," + std::to_string(k) + "} not two-sided for h=" + print(p, h) +
             ", g=" + print(p, g1);
    });
  }
}

inline CriterionResult ideal_filtration(const AcceptanceOptions& opt) {
  Stopwatch sw;
  Tally t;
  check_ideals(Jacobson(), opt.seed + 100, 500, t);
  check_ideals(Leavitt(3), opt.seed + 101, 500, t);
  check_ideals(Quiver(), opt.seed + 102, 500, t);
  CriterionResult r{4, "ideal filtration J_{n,k}, k <= 3"};
  r.seconds = sw.seconds();
  r.pass = t.failures == 0;
  r.detail = std::to_string(t.checks) + " checks over 1500 random rounds (3 products each), " +
             std::to_string(t.failures) + " failures";
  r.witness = t.witness;
  return r;
}

// ---- 5: matrix units --------------------------------------------------------

inline CriterionResult matrix_units(const AcceptanceOptions&) {
  Stopwatch sw;
  Tally t;
  Category<Jacobson, Rational> cat{Jacobson()};
  for (unsigned i = 0; i <= 5; ++i) {
    for (unsigned j = 0; j <= 5; ++j) {
      const auto eij = matrix_unit(cat, i, j);
      const auto deg = cat.degree_of(eij);
      t.expect(deg && *deg == static_cast<int>(i) - static_cast<int>(j),
               [&] { return "deg e_" + std::to_string(i) + std::to_string(j) + " wrong"; });
      for (unsigned k = 0; k <= 5; ++k) {
        for (unsigned l = 0; l <= 5; ++l) {
          const auto prod = cat.compose(eij, matrix_unit(cat, k, l));
          const auto expected = j == k ? matrix_unit(cat, i, l) : cat.zero(1, 1);
          t.expect(cat.equal(prod, expected), [&] {
            return "e_" + std::to_string(i) + std::to_string(j) + " e_" + std::to_string(k) + std::to_string(l) +
                   " = " + print(cat.presentation(), prod);
          });
        }
      }
    }
  }
  CriterionResult r{5, "matrix units e_ij e_kl = delta_jk e_il, deg e_ij = i - j, indices <= 5"};
  r.seconds = sw.seconds();
  r.pass = t.failures == 0 && r.seconds < 1.0;
  r.detail = std::to_string(t.checks) + " checks, " + fmt_seconds(r.seconds) + " (limit 1s)";
  r.witness = t.witness;
  return r;
}

// ---- 6: L_k ------------------------------------------------------------------

inline CriterionResult lk_structure(const AcceptanceOptions& opt) {
  Stopwatch sw;
  Tally t;
  using S = Rational;
  Category<Jacobson, S> cat{Jacobson()};
  RandomMorphisms<Jacobson, S> rnd(cat, opt.seed + 200, 2);
  for (unsigned i = 0; i < 600; ++i) {
    const unsigned k = rnd.uniform(1, 3);
    const auto f = rnd.morphism(k, k, 3);
    const auto g = rnd.morphism(k, k, 3);
    t.expect(project_Lk(cat.compose(f, g)) == lk_multiply(cat, project_Lk(f), project_Lk(g)),
             [&] { return "projection not multiplicative for f=" + print(cat.presentation(), f) +
                          ", g=" + print(cat.presentation(), g); });
  }
  const std::size_t random_checks = t.checks;
  for (unsigned k = 1; k <= 3; ++k) {
    std::vector<SkewWord> words;
    SkewWord w{std::vector<int>(k, -2)};
    while (true) {
      words.push_back(w);
      std::size_t s = k;
      bool advanced = false;
      while (s-- > 0) {
        if (++w.e[s] <= 2) {
          advanced = true;
          break;
        }
        w.e[s] = -2;
      }
      if (!advanced) break;
    }
    for (const auto& u : words) {
      const auto ul = skew_to_lk(SkewPoly<S>{{u, S(1)}}, k);
      for (const auto& v : words) {
        const auto vl = skew_to_lk(SkewPoly<S>{{v, S(1)}}, k);
        const auto via_lk = lk_to_skew(lk_multiply(cat, ul, vl));
        const auto via_ring = skew_product(SkewPoly<S>{{u, S(1)}}, SkewPoly<S>{{v, S(1)}});
        t.expect(via_lk == via_ring, [&] { return "skew Laurent map not multiplicative, k=" + std::to_string(k); });
      }
    }
  }
  const std::size_t skew_checks = t.checks - random_checks;
  for (unsigned k = 1; k <= 3; ++k) {
    for (unsigned pos : {1u, k}) {
      t.expect(shift_bijection_check(cat, k, pos, 2), [&] {
        return "left multiplication by a_" + std::to_string(pos) + " not a shift bijection, k=" + std::to_string(k);
      });
    }
  }
  CriterionResult r{6, "L_k: well-defined product, skew Laurent isomorphism, shift bijection"};
  r.seconds = sw.seconds();
  r.pass = t.failures == 0;
  r.detail = std::to_string(random_checks) + " random pairs, " + std::to_string(skew_checks) +
             " monomial products, shift checks for a_1 and a_k";
  r.witness = t.witness;
  return r;
}

// ---- 7: P(L_k) ---------------------------------------------------------------

inline CriterionResult plk_complex(const AcceptanceOptions&) {
  Stopwatch sw;
  Tally t;
  Category<Jacobson, Rational> cat{Jacobson()};
  for (unsigned k = 1; k <= 3; ++k) {
    for (unsigned N = 1; N <= 3; ++N) {
      t.expect(check_d_squared(cat, build_PLk(k, N)),
               [&] { return "d^2 != 0 for k=" + std::to_string(k) + ", N=" + std::to_string(N); });
    }
  }
  std::string dims;
  for (auto [W, N] : {std::pair{0u, 2u}, {1u, 4u}, {2u, 8u}}) {
    const auto h = homology_check_k1(cat, N, W);
    const std::size_t expected = 2 * W + 1;
    dims += " " + std::to_string(h.cokernel_dim);
    t.expect(h.ok && h.cokernel_dim == expected, [&] {
      return "homology at W=" + std::to_string(W) + ", N=" + std::to_string(N) + ": injective=" +
             std::to_string(h.injective) + ", cokernel " + std::to_string(h.cokernel_dim);
    });
  }
  CriterionResult r{7, "P(L_k): d^2 = 0 for k,N <= 3; k=1 homology"};
  r.seconds = sw.seconds();
  r.pass = t.failures == 0;
  r.detail = "cokernel dimensions" + dims;
  r.witness = t.witness;
  return r;
}

// ---- 8: isomorphism pairs ----------------------------------------------------

template <Presentation P, FieldScalar S>
void check_iso(const P& p, Tally& t) {
  Category<P, S> cat(p);
  for (unsigned k = 1; k <= 3; ++k) {
    const auto rep = verify_iso_pair(cat, k);
    t.expect(rep.ok(), [&] {
      return p.name() + "/" + std::string(S::field_name) + " k=" + std::to_string(k) +
             ": well_formed=" + std::to_string(rep.well_formed) + " row.col=" + std::to_string(rep.row_col_identity) +
             " col.row=" + std::to_string(rep.col_row_identity);
    });
  }
}

inline CriterionResult iso_pairs(const AcceptanceOptions&) {
  Stopwatch sw;
  Tally t;
  check_iso<Jacobson, Rational>(Jacobson(), t);
  check_iso<Jacobson, Gf2>(Jacobson(), t);
  for (unsigned L : {3u, 4u, 5u}) {
    check_iso<Leavitt, Rational>(Leavitt(L), t);
    check_iso<Leavitt, Gf2>(Leavitt(L), t);
  }
  check_iso<Quiver, Rational>(Quiver(), t);
  check_iso<Quiver, Gf2>(Quiver(), t);
  CriterionResult r{8, "isomorphism pairs, k <= 3, both fields"};
  r.seconds = sw.seconds();
  r.pass = t.failures == 0;
  r.detail = std::to_string(t.checks) + " pairs verified in both composition orders";
  r.witness = t.witness;
  return r;
}

// ---- 9: K0 ledger ------------------------------------------------------------

inline CriterionResult k0_ledger(const AcceptanceOptions&) {
  Stopwatch sw;
  Tally t;
  auto expect_powers = [&](const auto& cat, Rational base) {
    Rational expected(1);
    for (unsigned k = 0; k <= 10; ++k) {
      const auto got = k0_class_of_power(cat, k);
      t.expect(got == expected, [&] {
        return cat.presentation().name() + " k=" + std::to_string(k) + ": " + got.str() + " != " + expected.str();
      });
      expected = expected * base;
    }
  };
  expect_powers(Category<Jacobson, Rational>{Jacobson()}, Rational::from_fraction(1, 2));
  expect_powers(Category<Leavitt, Rational>{Leavitt(3)}, Rational::from_fraction(-1, 2));
  expect_powers(Category<Leavitt, Rational>{Leavitt(4)}, Rational::from_fraction(-1, 3));
  expect_powers(Category<Leavitt, Rational>{Leavitt(5)}, Rational::from_fraction(-1, 4));
  bool collapsed = false;
  try {
    ledger_reduce("x = x + 1");
  } catch (const K0Error& e) {
    collapsed = e.kind() == K0Error::Kind::Collapse;
  }
  t.expect(collapsed, [] { return std::string("x = x + 1 did not report a collapse"); });
  CriterionResult r{9, "K0 ledger"};
  r.seconds = sw.seconds();
  r.pass = t.failures == 0 && r.seconds < 1.0;
  r.detail = "[X]^k for k <= 10: 2^-k, (-1/2)^k, (-1/3)^k, (-1/4)^k; x = x + 1 collapses";
  r.witness = t.witness;
  return r;
}

// ---- 10: parser --------------------------------------------------------------

/// Random morphisms, small weight-1 bases, zeros and identities.
template <Presentation P, FieldScalar S>
std::vector<Morphism<P, S>> test_corpus(const Category<P, S>& cat, std::uint64_t seed, unsigned random_count = 300) {
  std::vector<Morphism<P, S>> out;
  RandomMorphisms<P, S> rnd(cat, seed, 2);
  for (unsigned i = 0; i < random_count; ++i) out.push_back(rnd.morphism(rnd.uniform(0, 3), rnd.uniform(0, 3), 4));
  for (unsigned n = 0; n <= 2; ++n) {
    for (unsigned m = 0; m <= 2; ++m) {
      for (const auto& d : cat.enumerate_basis(n, m, 1)) out.push_back(cat.from_diagram(d));
      out.push_back(cat.zero(n, m));
    }
  }
  for (unsigned k = 0; k <= 3; ++k) out.push_back(cat.identity(k));
  return out;
}

struct PrecedenceFixture {
  const char* text;
  const char* tree;
};

inline const std::vector<PrecedenceFixture>& precedence_fixtures() {
  static const std::vector<PrecedenceFixture> f = {
      {"a . b * c", "Tensor(Compose(a,b),c)"},
      {"a * b . c", "Tensor(a,Compose(b,c))"},
      {"a + b * c", "Add(a,Tensor(b,c))"},
      {"a . b + c . d", "Add(Compose(a,b),Compose(c,d))"},
      {"y . x", "Compose(y,x)"},
      {"(x*id(1)) . (id(1)*x)", "Compose(Tensor(x,id(1)),Tensor(id(1),x))"},
      {"x*id(1) . id(1)*x", "Tensor(Tensor(x,Compose(id(1),id(1))),x)"},
      {"a - b", "Add(a,Scale(-1,b))"},
      {"2*a . b", "Compose(Scale(2,a),b)"},
      {"1/2 a", "Scale(1/2,a)"},
      {"z* . z", "Compose(z^*,z)"},
      {"x^3", "Power(x,3)"},
  };
  return f;
}

template <Presentation P, FieldScalar S>
void check_round_trip(const P& p, std::uint64_t seed, Tally& t) {
  Category<P, S> cat(p);
  for (const auto& m : test_corpus(cat, seed)) {
    const std::string text = print(p, m);
    bool ok = false;
    try {
      ok = cat.equal(eval(cat, text, Arity{m.n, m.m}), m);
    } catch (const std::exception&) {
      ok = false;
    }
    t.expect(ok, [&] { return p.name() + "/" + std::string(S::field_name) + ": round trip fails for " + text; });
  }
}

inline CriterionResult parser(const AcceptanceOptions& opt) {
  Stopwatch sw;
  Tally t;
  check_round_trip<Jacobson, Rational>(Jacobson(), opt.seed + 300, t);
  check_round_trip<Jacobson, Gf2>(Jacobson(), opt.seed + 301, t);
  check_round_trip<Jacobson, Rational>(Jacobson(-1), opt.seed + 302, t);
  for (unsigned L : {3u, 4u, 5u}) {
    check_round_trip<Leavitt, Rational>(Leavitt(L), opt.seed + 310 + L, t);
    check_round_trip<Leavitt, Gf2>(Leavitt(L), opt.seed + 320 + L, t);
  }
  check_round_trip<Quiver, Rational>(Quiver(), opt.seed + 330, t);
  check_round_trip<Quiver, Gf2>(Quiver(), opt.seed + 331, t);
  const std::size_t round_trips = t.checks;
  for (const auto& f : precedence_fixtures()) {
    std::string got;
    try {
      got = tree_string(*parse(f.text));
    } catch (const ParseError& e) {
      got = std::string("error: ") + e.what();
    }
    t.expect(got == f.tree, [&] { return std::string(f.text) + " parsed as " + got + ", expected " + f.tree; });
  }
  CriterionResult r{10, "parser round trip and precedence"};
  r.seconds = sw.seconds();
  r.pass = t.failures == 0;
  r.detail = std::to_string(round_trips) + " round trips, " + std::to_string(t.checks - round_trips) +
             " precedence fixtures";
  r.witness = t.witness;
  return r;
}

// ---- 11: quiver counts ---------------------------------------------------------

inline CriterionResult quiver_counts(const AcceptanceOptions&) {
  Stopwatch sw;
  Tally t;
  Category<Quiver, Rational> cat{Quiver()};
  for (unsigned n = 0; n <= 4; ++n) {
    for (unsigned m = 0; m <= 4; ++m) {
      // C(n+m, n) by Pascal's rule, independent of the enumeration code
      std::vector<std::vector<std::uint64_t>> pascal(9, std::vector<std::uint64_t>(9, 0));
      for (unsigned a = 0; a <= 8; ++a) {
        pascal[a][0] = 1;
        for (unsigned b = 1; b <= a; ++b) pascal[a][b] = pascal[a - 1][b - 1] + (b < a ? pascal[a - 1][b] : 0);
      }
      const std::uint64_t expected = pascal[n + m][n];
      const std::uint64_t enumerated = cat.enumerate_basis(n, m, 0).size();
      const std::uint64_t counted = count_partial_bijections(n, m);
      t.expect(enumerated == expected && counted == expected, [&] {
        return "(" + std::to_string(n) + "," + std::to_string(m) + "): enumerated " + std::to_string(enumerated) +
               ", counted " + std::to_string(counted) + ", C(n+m,n) " + std::to_string(expected);
      });
    }
  }
  CriterionResult r{11, "quiver-example1: dim Hom(X^n, X^m) = C(n+m, n), n,m <= 4"};
  r.seconds = sw.seconds();
  r.pass = t.failures == 0;
  r.detail = std::to_string(t.checks) + " hom spaces";
  r.witness = t.witness;
  return r;
}

}  // namespace accept

using CriterionFn = CriterionResult (*)(const AcceptanceOptions&);

inline const std::vector<CriterionFn>& acceptance_criteria() {
  static const std::vector<CriterionFn> all = {
      accept::relations,    accept::basis_faithfulness, accept::monoidal_laws, accept::ideal_filtration,
      accept::matrix_units, accept::lk_structure,       accept::plk_complex,   accept::iso_pairs,
      accept::k0_ledger,    accept::parser,             accept::quiver_counts,
  };
  return all;
}

/// Runs the criteria in order (all when `only` is empty); `on_result` sees
/// each result as soon as it is known.
inline std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt, const std::vector<int>& only = {},
                                                   const std::function<void(const CriterionResult&)>& on_result = {}) {
  std::vector<CriterionResult> out;
  const auto& all = acceptance_criteria();
  for (std::size_t i = 0; i < all.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    CriterionResult r;
    try {
      r = all[i](opt);
    } catch (const std::exception& e) {
      r.id = id;
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace arcdiag
