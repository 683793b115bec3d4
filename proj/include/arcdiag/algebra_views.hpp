#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "arcdiag/category.hpp"
#include "arcdiag/linalg.hpp"
#include "arcdiag/presets/jacobson.hpp"

namespace arcdiag {

template <Presentation P>
unsigned long_strand_count(const BasisDiagram<P>& d) {
  return d.long_count();
}

namespace detail {

template <Presentation P, FieldScalar S>
void require_endo(const Morphism<P, S>& m, const char* op) {
  if (m.n != m.m) {
    throw ArityError(std::string(op) + ": expected an endomorphism, got " + std::to_string(m.n) + "->" +
                     std::to_string(m.m));
  }
}

template <Presentation P>
void require_jacobson(const char* op) {
  if constexpr (!std::is_same_v<P, Jacobson>) throw std::invalid_argument(std::string(op) + ": needs jacobson-dg");
}

}  // namespace detail

/// Membership in J_{bound,k}: every term has at most `bound` long strands.
/// The zero morphism lies in every J_{n,k}, n >= -1.
template <Presentation P, FieldScalar S>
bool in_ideal(const Morphism<P, S>& m, int bound) {
  detail::require_endo(m, "in_ideal");
  for (const auto& [d, c] : m.terms) {
    if (static_cast<int>(d.long_count()) > bound) return false;
  }
  return true;
}

/// Diagrams of End(X^k) with weight <= w lying in J_{bound,k}.
template <Presentation P, FieldScalar S>
std::vector<BasisDiagram<P>> ideal_basis(const Category<P, S>& cat, unsigned k, int bound, unsigned w) {
  std::vector<BasisDiagram<P>> out;
  cat.for_each_basis_diagram(k, k, w, std::nullopt, [&](const BasisDiagram<P>& d) {
    if (static_cast<int>(d.long_count()) <= bound) out.push_back(d);
  });
  return out;
}

/// The short pair with weight-zero labels: z z^* (b c for the quiver).
template <Presentation P, FieldScalar S>
Morphism<P, S> short_idempotent(const Category<P, S>& cat) {
  const P& p = cat.presentation();
  BasisDiagram<P> d;
  d.pb = PartialBijection{1, 1, {}};
  d.tops = {p.enumerate_tops(0).front()};
  d.bottoms = {p.enumerate_bottoms(0).front()};
  return cat.from_diagram(d);
}

/// f |-> (z z^*) (x) f, a nonunital embedding A_{k-1} -> A_k.
template <Presentation P, FieldScalar S>
Morphism<P, S> alpha_embed(const Category<P, S>& cat, const Morphism<P, S>& m) {
  detail::require_endo(m, "alpha_embed");
  return cat.tensor(short_idempotent(cat), m);
}

/// Element of L_k = A_k / J_{k-1,k}, kept as its full-bijection part.
template <Presentation P, FieldScalar S>
struct LkElement {
  unsigned k = 0;
  LinComb<std::vector<typename P::Long>, S> terms;

  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const LkElement& a, const LkElement& b) { return a.k == b.k && a.terms == b.terms; }
};

template <Presentation P, FieldScalar S>
LkElement<P, S> project_Lk(const Morphism<P, S>& m) {
  detail::require_endo(m, "project_Lk");
  LkElement<P, S> out{m.n, {}};
  for (const auto& [d, c] : m.terms) {
    if (d.long_count() == m.n) out.terms.add(d.longs, c);
  }
  return out;
}

/// Canonical representative in A_k.
template <Presentation P, FieldScalar S>
Morphism<P, S> lift_Lk(const Category<P, S>& cat, const LkElement<P, S>& a) {
  Morphism<P, S> out = cat.zero(a.k, a.k);
  for (const auto& [longs, c] : a.terms) {
    BasisDiagram<P> d;
    d.pb = PartialBijection::full(a.k);
    d.longs = longs;
    out.terms.add(d, c);
  }
  return out;
}

template <Presentation P, FieldScalar S>
LkElement<P, S> lk_multiply(const Category<P, S>& cat, const LkElement<P, S>& a, const LkElement<P, S>& b) {
  if (a.k != b.k) throw ArityError("lk_multiply: k mismatch");
  return project_Lk(cat.compose(lift_Lk(cat, a), lift_Lk(cat, b)));
}

/// The image of the one-strand element `a` in position t (1-based) of L_k.
template <Presentation P, FieldScalar S>
LkElement<P, S> lk_embed(const Category<P, S>& cat, const LkElement<P, S>& a, unsigned t, unsigned k) {
  if (a.k != 1 || t < 1 || t > k) throw std::invalid_argument("lk_embed: bad position");
  const Morphism<P, S> m =
      cat.tensor(cat.tensor(cat.identity(t - 1), lift_Lk(cat, a)), cat.identity(k - t));
  return project_Lk(m);
}

/// Monomial a_1^{e_1} ... a_k^{e_k} of the skew Laurent ring.
struct SkewWord {
  std::vector<int> e;
  friend auto operator<=>(const SkewWord&, const SkewWord&) = default;

  int degree() const {
    int d = 0;
    for (int x : e) d += x;
    return d;
  }
};

/// u * v brought to canonical order. Moving a_i^{v_i} left past a_j^{u_j}
/// (j > i) costs (-1)^{u_j v_i} when the generators are odd.
inline std::pair<int, SkewWord> skew_multiply(const SkewWord& u, const SkewWord& v, bool odd_generators = true) {
  if (u.e.size() != v.e.size()) throw std::invalid_argument("skew_multiply: length mismatch");
  SkewWord out{u.e};
  long swaps = 0;
  for (std::size_t i = 0; i < v.e.size(); ++i) {
    out.e[i] += v.e[i];
    for (std::size_t j = i + 1; j < u.e.size(); ++j) swaps += static_cast<long>(u.e[j]) * v.e[i];
  }
  const int sign = (odd_generators && (swaps % 2 != 0)) ? -1 : 1;
  return {sign, out};
}

template <FieldScalar S>
using SkewPoly = LinComb<SkewWord, S>;

template <FieldScalar S>
SkewPoly<S> skew_product(const SkewPoly<S>& a, const SkewPoly<S>& b, bool odd_generators = true) {
  SkewPoly<S> out;
  for (const auto& [u, cu] : a) {
    for (const auto& [v, cv] : b) {
      auto [sign, w] = skew_multiply(u, v, odd_generators);
      out.add(w, S(sign) * cu * cv);
    }
  }
  return out;
}

/// x-bar_i |-> a_i, y-bar_i |-> a_i^{-1}; the long labels x^m of a full
/// bijection diagram give a_1^{m_1} ... a_k^{m_k} with sign +1, because the
/// composite of the one-strand factors stacked left-high is the canonical
/// diagram.
template <FieldScalar S>
SkewPoly<S> lk_to_skew(const LkElement<Jacobson, S>& a) {
  SkewPoly<S> out;
  for (const auto& [longs, c] : a.terms) {
    SkewWord w;
    for (const auto& l : longs) w.e.push_back(l.m);
    out.add(w, c);
  }
  return out;
}

template <FieldScalar S>
LkElement<Jacobson, S> skew_to_lk(const SkewPoly<S>& a, unsigned k) {
  LkElement<Jacobson, S> out{k, {}};
  for (const auto& [w, c] : a) {
    if (w.e.size() != k) throw std::invalid_argument("skew_to_lk: length mismatch");
    std::vector<Jacobson::Long> longs;
    for (int x : w.e) longs.push_back(Jacobson::Long{x});
    out.terms.add(longs, c);
  }
  return out;
}

/// Left multiplication by a_t maps the box of exponents [-E, E]^k with
/// e_t < E bijectively onto the box with e_t > -E, raises the degree by one
/// and is +-1 on basis words. Checked in the skew ring and through A_k.
template <FieldScalar S>
bool shift_bijection_check(const Category<Jacobson, S>& cat, unsigned k, unsigned t, int E) {
  const bool odd_gen = odd(cat.presentation().x_degree());
  SkewWord a{std::vector<int>(k, 0)};
  a.e[t - 1] = 1;
  const auto a_lk = skew_to_lk(SkewPoly<S>{{a, S(1)}}, k);
  std::vector<SkewWord> images;
  SkewWord w{std::vector<int>(k, -E)};
  while (true) {
    if (w.e[t - 1] < E) {
      auto [sign, img] = skew_multiply(a, w, odd_gen);
      if (img.degree() != w.degree() + 1) return false;
      if (img.e[t - 1] <= -E) return false;
      // the same product computed in A_k
      const SkewPoly<S> via =
          lk_to_skew(lk_multiply(cat, a_lk, skew_to_lk(SkewPoly<S>{{w, S(1)}}, k)));
      if (!(via == SkewPoly<S>{{img, S(sign)}})) return false;
      images.push_back(img);
    }
    std::size_t s = k;
    bool advanced = false;
    while (s-- > 0) {
      if (++w.e[s] <= E) {
        advanced = true;
        break;
      }
      w.e[s] = -E;
    }
    if (!advanced) break;
  }
  std::sort(images.begin(), images.end());
  if (std::adjacent_find(images.begin(), images.end()) != images.end()) return false;
  std::size_t expected = 1;
  for (unsigned i = 0; i < k; ++i) expected *= static_cast<std::size_t>(i + 1 == t ? 2 * E : 2 * E + 1);
  return images.size() == expected;
}

/// e_{ij} = x^i z z^* y^j.
template <Presentation P, FieldScalar S>
Morphism<P, S> matrix_unit(const Category<P, S>& cat, unsigned i, unsigned j) {
  detail::require_jacobson<P>("matrix_unit");
  if constexpr (std::is_same_v<P, Jacobson>) {
    BasisDiagram<P> d;
    d.pb = PartialBijection{1, 1, {}};
    d.tops = {Jacobson::Top{i}};
    d.bottoms = {Jacobson::Bottom{j}};
    return cat.from_diagram(d);
  } else {
    return cat.zero(1, 1);
  }
}

/// u(T,i): e_{i_t i_t} on strand t for t in T (1-based, increasing), the
/// identity elsewhere.
template <FieldScalar S>
Morphism<Jacobson, S> idempotent_u(const Category<Jacobson, S>& cat, const std::vector<unsigned>& T,
                                   const std::vector<unsigned>& i, unsigned k) {
  if (T.size() != i.size() || !std::is_sorted(T.begin(), T.end()) ||
      std::adjacent_find(T.begin(), T.end()) != T.end() || (!T.empty() && (T.front() < 1 || T.back() > k))) {
    throw std::invalid_argument("idempotent_u: invalid T");
  }
  Morphism<Jacobson, S> out = cat.identity(0);
  std::size_t next = 0;
  for (unsigned t = 1; t <= k; ++t) {
    if (next < T.size() && T[next] == t) {
      out = cat.tensor(out, matrix_unit(cat, i[next], i[next]));
      ++next;
    } else {
      out = cat.tensor(out, cat.identity(1));
    }
  }
  return out;
}

/// Number of t in T below r.
inline unsigned c_count(const std::vector<unsigned>& T, unsigned r) {
  return static_cast<unsigned>(std::count_if(T.begin(), T.end(), [&](unsigned t) { return t < r; }));
}

/// Generator (T, i) of P(L_k), sitting in homological position -|T|.
struct PLkTerm {
  std::vector<unsigned> T;
  std::vector<unsigned> i;
  int position() const { return -static_cast<int>(T.size()); }
  friend auto operator<=>(const PLkTerm&, const PLkTerm&) = default;
};

struct PLkMap {
  std::size_t source = 0;
  std::size_t target = 0;
  int sign = 1;
  unsigned removed = 0;  // the strand r dropped from T
};

struct PLkComplex {
  unsigned k = 0;
  unsigned max_index = 0;
  std::vector<PLkTerm> terms;
  std::vector<PLkMap> maps;
};

/// All (T, i) with components of i below N, and the inclusions
/// iota(T,i,r): P(T,i) -> P(T\r, i\r) with sign (-1)^{c(T,r)}.
inline PLkComplex build_PLk(unsigned k, unsigned N) {
  if (k < 1 || N < 1) throw std::invalid_argument("build_PLk: need k >= 1 and N >= 1");
  PLkComplex cx{k, N, {}, {}};
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    std::vector<unsigned> T;
    for (unsigned t = 1; t <= k; ++t) {
      if (mask & (1u << (t - 1))) T.push_back(t);
    }
    std::vector<unsigned> i(T.size(), 0);
    while (true) {
      cx.terms.push_back({T, i});
      std::size_t s = i.size();
      bool advanced = false;
      while (s-- > 0) {
        if (++i[s] < N) {
          advanced = true;
          break;
        }
        i[s] = 0;
      }
      if (!advanced) break;
    }
  }
  std::sort(cx.terms.begin(), cx.terms.end());
  for (std::size_t a = 0; a < cx.terms.size(); ++a) {
    const PLkTerm& src = cx.terms[a];
    for (std::size_t pos = 0; pos < src.T.size(); ++pos) {
      PLkTerm dst = src;
      dst.T.erase(dst.T.begin() + static_cast<long>(pos));
      dst.i.erase(dst.i.begin() + static_cast<long>(pos));
      const auto it = std::lower_bound(cx.terms.begin(), cx.terms.end(), dst);
      const unsigned r = src.T[pos];
      cx.maps.push_back({a, static_cast<std::size_t>(it - cx.terms.begin()), c_count(src.T, r) % 2 ? -1 : 1, r});
    }
  }
  return cx;
}

/// Every length-two path of inclusions P(T,i) -> P(T\r) -> P(T\{r,r'}) is
/// paired with the path removing r' first. The two routes must carry
/// opposite signs and, as products u(S,j) u(r',i_r') u(r,i_r), the same
/// generator u(T,i).
template <FieldScalar S>
bool check_d_squared(const Category<Jacobson, S>& cat, const PLkComplex& cx) {
  std::map<std::pair<std::size_t, std::size_t>, Morphism<Jacobson, S>> total;
  auto u_of = [&](const PLkTerm& t) { return idempotent_u(cat, t.T, t.i, cx.k); };
  auto single = [&](const PLkTerm& t, unsigned r) {
    const auto pos = static_cast<std::size_t>(std::find(t.T.begin(), t.T.end(), r) - t.T.begin());
    return idempotent_u(cat, {r}, {t.i[pos]}, cx.k);
  };
  for (const auto& first : cx.maps) {
    for (const auto& second : cx.maps) {
      if (second.source != first.target) continue;
      const PLkTerm& src = cx.terms[first.source];
      const PLkTerm& mid = cx.terms[first.target];
      const PLkTerm& dst = cx.terms[second.target];
      // the generator of the source, written through this route
      const auto route = cat.compose(cat.compose(u_of(dst), single(mid, second.removed)), single(src, first.removed));
      if (!cat.equal(route, u_of(src))) return false;
      const auto key = std::pair{first.source, second.target};
      auto [it, fresh] = total.try_emplace(key, cat.zero(cx.k, cx.k));
      it->second = cat.add(it->second, cat.scale(S(first.sign * second.sign), route));
    }
  }
  for (const auto& [key, sum] : total) {
    if (!sum.is_zero()) return false;
  }
  return true;
}

struct HomologyReport {
  bool injective = false;
  std::size_t rank = 0;
  std::size_t summand_rank_sum = 0;
  std::size_t codomain_dim = 0;
  std::size_t cokernel_dim = 0;
  std::size_t expected_cokernel = 0;
  bool ok = false;
};

/// The map (+)_{j<N} e_{jj} A_1 -> A_1 restricted to labels of weight <= W.
/// Each summand is spanned by e_{jj} b for basis diagrams b of A_1; the map
/// is injective on the truncation iff the ranks add up.
template <FieldScalar S>
HomologyReport homology_check_k1(const Category<Jacobson, S>& cat, unsigned N, unsigned W) {
  HomologyReport r;
  const auto basis = cat.enumerate_basis(1, 1, W);
  r.codomain_dim = basis.size();
  for (const auto& l : cat.presentation().enumerate_longs(W)) {
    if (cat.presentation().weight(l) <= W) ++r.expected_cokernel;
  }
  using Vec = std::map<BasisDiagram<Jacobson>, S>;
  SparseEliminator<BasisDiagram<Jacobson>, S> total;
  for (unsigned j = 0; j < N; ++j) {
    SparseEliminator<BasisDiagram<Jacobson>, S> summand;
    const auto e = matrix_unit(cat, j, j);
    for (const auto& b : basis) {
      const auto img = cat.compose(e, cat.from_diagram(b));
      Vec v;
      bool inside = true;
      for (const auto& [d, c] : img.terms) {
        inside = inside && diagram_weight(cat.presentation(), d) <= W;
        v.emplace(d, c);
      }
      if (!inside || v.empty()) continue;
      summand.insert(v);
      total.insert(v);
    }
    r.summand_rank_sum += summand.rank();
  }
  r.rank = total.rank();
  r.injective = r.rank == r.summand_rank_sum;
  r.cokernel_dim = r.codomain_dim - r.rank;
  r.ok = r.injective && r.cokernel_dim == r.expected_cokernel;
  return r;
}

}  // namespace arcdiag
