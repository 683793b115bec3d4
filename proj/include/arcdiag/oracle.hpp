#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <map>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arcdiag/diagram.hpp"
#include "arcdiag/expr.hpp"
#include "arcdiag/factorize.hpp"
#include "arcdiag/linalg.hpp"
#include "arcdiag/oracle_models.hpp"

namespace arcdiag {

/// Pure tensor of model basis vectors, at most 8 factors.
struct BasisTensor {
  static constexpr unsigned kMaxFactors = 8;
  std::array<Code, kMaxFactors> c{};
  std::uint8_t len = 0;

  Code operator[](unsigned i) const { return c[i]; }
  void push(Code v) {
    if (len == kMaxFactors) throw std::length_error("oracle: more than 8 tensor factors");
    c[len++] = v;
  }
  BasisTensor slice(unsigned from, unsigned count) const {
    BasisTensor t;
    for (unsigned i = 0; i < count; ++i) t.c[i] = c[from + i];
    t.len = static_cast<std::uint8_t>(count);
    return t;
  }
  friend BasisTensor operator+(const BasisTensor& a, const BasisTensor& b) {
    BasisTensor t = a;
    for (unsigned i = 0; i < b.len; ++i) t.push(b.c[i]);
    return t;
  }
  friend bool operator==(const BasisTensor& a, const BasisTensor& b) {
    return a.len == b.len && std::equal(a.c.begin(), a.c.begin() + a.len, b.c.begin());
  }
  friend std::strong_ordering operator<=>(const BasisTensor& a, const BasisTensor& b) {
    if (auto k = a.len <=> b.len; k != 0) return k;
    for (unsigned i = 0; i < a.len; ++i) {
      if (auto k = a.c[i] <=> b.c[i]; k != 0) return k;
    }
    return std::strong_ordering::equal;
  }
};

template <FieldScalar S>
using SparseVec = std::vector<std::pair<BasisTensor, S>>;

namespace detail {

template <FieldScalar S>
void normalize(SparseVec<S>& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size();) {
    S sum = v[i].second;
    std::size_t j = i + 1;
    for (; j < v.size() && v[j].first == v[i].first; ++j) sum = sum + v[j].second;
    if (!sum.is_zero()) v[out++] = {v[i].first, sum};
    i = j;
  }
  v.resize(out);
}

}  // namespace detail

/// Lazily evaluated linear map between tensor powers of a model space,
/// built from generator actions. Evaluation never touches the diagram
/// calculus; only the model's generator actions and the Koszul rule
///   (F (x) G)(u (x) w) = (-1)^{deg G . deg u} F(u) (x) G(w).
template <FieldScalar S>
struct OpNode {
  enum class Kind { Gen, Id, Compose, Tensor, Sum, Power };
  Kind kind = Kind::Id;
  GenOp gen{};
  unsigned k = 0;  // Id arity, Power exponent
  unsigned n = 0;  // source arity
  unsigned m = 0;  // target arity
  std::string name;
  std::shared_ptr<const OpNode> a;
  std::shared_ptr<const OpNode> b;
  std::vector<std::pair<S, std::shared_ptr<const OpNode>>> terms;  // Sum
};

template <FieldScalar S>
struct OracleOperator {
  std::shared_ptr<const OpNode<S>> node;
  unsigned n() const { return node->n; }
  unsigned m() const { return node->m; }
};

/// Outcome of comparing two operators on the safe window.
struct WindowCheck {
  bool equal = true;
  std::size_t inputs_checked = 0;
  std::string witness;  // first differing input, if any
};

/// Outcome of a rank computation over the safe window.
struct RankReport {
  std::size_t rank = 0;
  std::size_t count = 0;
  bool certified_by_leading_terms = false;
  std::string note;
};

template <Presentation P, FieldScalar S>
class Oracle {
 public:
  using Model = OracleModel<P>;
  using Op = OracleOperator<S>;
  using Node = OpNode<S>;

  Oracle(const P& p, unsigned trunc) : p_(p), model_(p, trunc) {}

  const Model& model() const { return model_; }
  unsigned truncation() const { return model_.truncation(); }

  // ---- construction -------------------------------------------------------

  Op rep_generator(std::string_view name) const {
    auto g = model_.resolve(name);
    if (!g) throw std::invalid_argument("oracle: unknown generator '" + std::string(name) + "'");
    Node node;
    node.kind = Node::Kind::Gen;
    node.gen = *g;
    node.name = canonical_generator_name(name);
    node.n = g->kind == OpKind::Create ? 0 : 1;
    node.m = g->kind == OpKind::Annihilate ? 0 : 1;
    return wrap(std::move(node));
  }

  Op identity(unsigned k) const {
    Node node;
    node.kind = Node::Kind::Id;
    node.k = k;
    node.n = node.m = k;
    return wrap(std::move(node));
  }

  Op zero(unsigned n, unsigned m) const {
    Node node;
    node.kind = Node::Kind::Sum;
    node.n = n;
    node.m = m;
    return wrap(std::move(node));
  }

  Op compose(const Op& upper, const Op& lower) const {
    if (upper.n() != lower.m()) throw std::invalid_argument("oracle compose: arity mismatch");
    Node node;
    node.kind = Node::Kind::Compose;
    node.a = upper.node;
    node.b = lower.node;
    node.n = lower.n();
    node.m = upper.m();
    return wrap(std::move(node));
  }

  Op tensor(const Op& left, const Op& right) const {
    Node node;
    node.kind = Node::Kind::Tensor;
    node.a = left.node;
    node.b = right.node;
    node.n = left.n() + right.n();
    node.m = left.m() + right.m();
    return wrap(std::move(node));
  }

  Op linear(const std::vector<std::pair<S, Op>>& parts, unsigned n, unsigned m) const {
    Node node;
    node.kind = Node::Kind::Sum;
    node.n = n;
    node.m = m;
    for (const auto& [c, op] : parts) {
      if (op.n() != n || op.m() != m) throw std::invalid_argument("oracle sum: arity mismatch");
      node.terms.emplace_back(c, op.node);
    }
    return wrap(std::move(node));
  }

  Op add(const Op& a, const Op& b) const { return linear({{S(1), a}, {S(1), b}}, a.n(), a.m()); }
  Op sub(const Op& a, const Op& b) const { return linear({{S(1), a}, {S(-1), b}}, a.n(), a.m()); }
  Op scale(const S& c, const Op& a) const { return linear({{c, a}}, a.n(), a.m()); }

  /// Operator of a generator expression, evaluated in the model directly
  /// (no normal forms involved). A bare 0 needs `hint`.
  Op rep_expr(const Expr& e, std::optional<std::pair<unsigned, unsigned>> hint = std::nullopt) const {
    auto r = rep_rec(e);
    if (r) return *r;
    if (!hint) throw std::invalid_argument("oracle: cannot infer the arities of 0");
    return zero(hint->first, hint->second);
  }

  /// Sum over terms of coefficient times the operator of the term's
  /// factorization.
  Op rep_morphism(const Morphism<P, S>& mor) const {
    std::vector<std::pair<S, Op>> parts;
    for (const auto& [d, c] : mor.terms) parts.emplace_back(c, rep_expr(*factorize(p_, d)));
    return linear(parts, mor.n, mor.m);
  }

  Op rep_diagram(const BasisDiagram<P>& d) const { return rep_expr(*factorize(p_, d)); }

  // ---- evaluation ---------------------------------------------------------

  SparseVec<S> apply(const Op& op, const BasisTensor& in) const {
    if (in.len != op.n()) throw std::invalid_argument("oracle apply: wrong number of input factors");
    return apply_node(*op.node, in);
  }

  int tensor_degree(const BasisTensor& t) const {
    int d = 0;
    for (unsigned i = 0; i < t.len; ++i) d += model_.degree(t.c[i]);
    return d;
  }

  /// Per-factor window: basis vectors whose size (index or word length) is
  /// at most N - w.
  std::vector<Code> window_codes(unsigned w) const {
    std::vector<Code> out;
    if (auto bound = window_bound(w)) model_.for_each_code(*bound, [&](Code c) { out.push_back(c); });
    return out;
  }

  template <class F>
  void for_each_window_input(unsigned arity, unsigned w, F&& f) const {
    const auto codes = window_codes(w);
    if (codes.empty() && arity > 0) return;
    std::vector<std::size_t> idx(arity, 0);
    BasisTensor t;
    t.len = static_cast<std::uint8_t>(arity);
    for (unsigned i = 0; i < arity; ++i) t.c[i] = codes[0];
    while (true) {
      f(static_cast<const BasisTensor&>(t));
      std::size_t s = arity;
      bool advanced = false;
      while (s-- > 0) {
        if (++idx[s] < codes.size()) {
          t.c[s] = codes[idx[s]];
          advanced = true;
          break;
        }
        idx[s] = 0;
        t.c[s] = codes[0];
      }
      if (!advanced) return;
    }
  }

  std::string tensor_str(const BasisTensor& t) const {
    if (t.len == 0) return "1";
    std::string s;
    for (unsigned i = 0; i < t.len; ++i) {
      if (i) s += " (x) ";
      s += model_.code_str(t.c[i]);
    }
    return s;
  }

  /// Compares F and G on every input whose factors all lie in the window of
  /// weight w. Single-strand operators go through a compiled monomial path.
  WindowCheck equal_on_window(const Op& f, const Op& g, unsigned w) const {
    if (f.n() != g.n() || f.m() != g.m()) throw std::invalid_argument("equal_on_window: arity mismatch");
    if (auto fast = compiled_check(f, g, w)) return *fast;
    WindowCheck r;
    for_each_window_input(f.n(), w, [&](const BasisTensor& in) {
      if (!r.equal) return;
      ++r.inputs_checked;
      if (apply(f, in) != apply(g, in)) {
        r.equal = false;
        r.witness = tensor_str(in);
      }
    });
    return r;
  }

  /// equal_on_window for many pairs; single-strand pairs of equal source
  /// arity share one pass over the window.
  std::vector<WindowCheck> equal_on_window(const std::vector<std::pair<Op, Op>>& pairs, unsigned w) const {
    std::vector<WindowCheck> out(pairs.size());
    CompiledBatch batch[2] = {CompiledBatch(*this), CompiledBatch(*this)};
    std::vector<std::pair<int, std::size_t>> slot(pairs.size(), {-1, 0});
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto& [f, g] = pairs[i];
      if (f.n() != g.n() || f.m() != g.m()) throw std::invalid_argument("equal_on_window: arity mismatch");
      if (f.n() <= 1 && batch[f.n()].add(f, g)) {
        slot[i] = {static_cast<int>(f.n()), batch[f.n()].size() - 1};
      } else {
        out[i] = equal_on_window(f, g, w);
      }
    }
    batch[0].run(0, w);
    batch[1].run(1, w);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (slot[i].first >= 0) out[i] = batch[slot[i].first].result(slot[i].second);
    }
    return out;
  }

  /// Rank of the window restrictions of the diagrams' operators. Leading
  /// coordinates are tried first; if they are not pairwise distinct the rank
  /// is computed by exact elimination.
  RankReport independence_rank(const std::vector<BasisDiagram<P>>& diagrams, unsigned w) const {
    return independence_rank_of(
        [&](auto&& visit) {
          for (const auto& d : diagrams) visit(d);
        },
        w);
  }

  /// Same, for a diagram stream: `each(visit)` must call visit(d) for every
  /// diagram, and may be called twice. Only the 128-bit keys are stored.
  template <class Each>
  RankReport independence_rank_of(Each&& each, unsigned w) const {
    RankReport r;
    LeadingTerms lead(*this, w);
    std::vector<Key128> keys;
    bool ok = true;
    each([&](const BasisDiagram<P>& d) {
      ++r.count;
      if (!ok) return;
      auto k = lead.key(d);
      if (!k) {
        ok = false;
        return;
      }
      keys.push_back(*k);
    });
    if (ok && all_distinct(keys)) {
      r.rank = r.count;
      r.certified_by_leading_terms = true;
      return r;
    }
    keys = {};
    std::vector<BasisDiagram<P>> diagrams;
    each([&](const BasisDiagram<P>& d) { diagrams.push_back(d); });
    r.rank = elimination_rank(diagrams, w);
    if (r.rank < r.count) {
      r.note = "rank deficient on the window; enlarge the truncation N if the diagrams are expected independent";
    }
    return r;
  }

  /// Exact rank by Gaussian elimination of the full window columns.
  std::size_t elimination_rank(const std::vector<BasisDiagram<P>>& diagrams, unsigned w) const {
    SparseEliminator<std::pair<BasisTensor, BasisTensor>, S> elim;
    for (const auto& d : diagrams) {
      const Op op = rep_diagram(d);
      typename SparseEliminator<std::pair<BasisTensor, BasisTensor>, S>::Vector col;
      for_each_window_input(op.n(), w, [&](const BasisTensor& in) {
        for (auto& [out, c] : apply(op, in)) col.emplace(std::pair{in, out}, c);
      });
      elim.insert(std::move(col));
    }
    return elim.rank();
  }

  // ---- leading coordinates --------------------------------------------------

  using Key128 = unsigned __int128;

  static bool all_distinct(std::vector<Key128>& keys) {
    std::sort(keys.begin(), keys.end());
    return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
  }

  /// Leading coordinate of a diagram's window column under the order:
  /// inputs lexicographically (per factor by code), then outputs. The
  /// operator of a basis diagram is, up to sign, the tensor product of its
  /// strands' operators, so the support over inputs is a product set and the
  /// leading coordinate is assembled strand by strand. Each strand's data is
  /// computed from its factorization in the model.
  class LeadingTerms {
   public:
    LeadingTerms(const Oracle& o, unsigned w) : o_(o), bound_(o.window_bound(w)) {}

    /// Exact 128-bit key, 16 bits per boundary point holding a dictionary
    /// index of the point's leading code; nullopt if the column vanishes on
    /// the window or the key does not fit.
    std::optional<Key128> key(const BasisDiagram<P>& d) {
      if (d.pb.n + d.pb.m > 8) return std::nullopt;
      Key128 k = 0;
      std::size_t next_long = 0;
      std::size_t next_b = 0;
      for (unsigned i = 1; i <= d.pb.n; ++i) {
        std::uint16_t in = 0;
        if (next_long < d.pb.size() && d.pb.pairs[next_long].first == i) {
          in = long_data(d.longs[next_long++]).first;
        } else {
          in = bottom_data(d.bottoms[next_b++]);
        }
        if (in == 0) return std::nullopt;
        k = (k << 16) | in;
      }
      next_long = 0;
      std::size_t next_t = 0;
      for (unsigned j = 1; j <= d.pb.m; ++j) {
        std::uint16_t out = 0;
        if (next_long < d.pb.size() && d.pb.pairs[next_long].second == j) {
          out = long_data(d.longs[next_long++]).second;
        } else {
          out = top_data(d.tops[next_t++]);
        }
        if (out == 0) return std::nullopt;
        k = (k << 16) | out;
      }
      if (overflow_) return std::nullopt;
      return k;
    }

    /// Dictionary indices of (max window input with nonzero image, max
    /// output at that input); 0 when the operator vanishes on the window.
    std::pair<std::uint16_t, std::uint16_t> long_data(const typename P::Long& l) {
      if (auto it = longs_.find(l); it != longs_.end()) return it->second;
      std::pair<std::uint16_t, std::uint16_t> data{0, 0};
      if (bound_) {
        const Op op = o_.rep_expr(*detail::chain_expr(o_.p_.long_chain(l)));
        std::optional<Code> best_in;
        Code best_out = 0;
        o_.model_.for_each_code(*bound_, [&](Code c) {
          BasisTensor t;
          t.push(c);
          const auto v = o_.apply(op, t);
          if (v.empty() || (best_in && c <= *best_in)) return;
          best_in = c;
          best_out = v.back().first.c[0];  // v is sorted
        });
        if (best_in) data = {index(*best_in), index(best_out)};
      }
      longs_.emplace(l, data);
      return data;
    }

    std::uint16_t bottom_data(const typename P::Bottom& b) {
      if (auto it = bottoms_.find(b); it != bottoms_.end()) return it->second;
      std::uint16_t data = 0;
      if (bound_) {
        const Op op = o_.rep_expr(*detail::chain_expr(o_.p_.bottom_chain(b)));
        std::optional<Code> best;
        o_.model_.for_each_code(*bound_, [&](Code c) {
          BasisTensor t;
          t.push(c);
          if ((!best || c > *best) && !o_.apply(op, t).empty()) best = c;
        });
        if (best) data = index(*best);
      }
      bottoms_.emplace(b, data);
      return data;
    }

    std::uint16_t top_data(const typename P::Top& t) {
      if (auto it = tops_.find(t); it != tops_.end()) return it->second;
      const Op op = o_.rep_expr(*detail::chain_expr(o_.p_.top_chain(t)));
      const auto v = o_.apply(op, BasisTensor{});
      const std::uint16_t data = v.empty() ? 0 : index(v.back().first.c[0]);
      tops_.emplace(t, data);
      return data;
    }

   private:
    std::uint16_t index(Code c) {
      auto [it, inserted] = dict_.try_emplace(c, static_cast<std::uint16_t>(dict_.size() + 1));
      if (dict_.size() >= 0xFFFF) overflow_ = true;
      return it->second;
    }

    const Oracle& o_;
    std::optional<unsigned> bound_;
    std::map<Code, std::uint16_t> dict_;
    bool overflow_ = false;
    std::map<typename P::Long, std::pair<std::uint16_t, std::uint16_t>> longs_;
    std::map<typename P::Bottom, std::uint16_t> bottoms_;
    std::map<typename P::Top, std::uint16_t> tops_;
  };

  /// Largest window size for weight w, or nullopt if the window is empty.
  std::optional<unsigned> window_bound(unsigned w) const {
    if (w > model_.truncation()) return std::nullopt;
    return model_.truncation() - w;
  }

 private:
  Op wrap(Node node) const { return Op{std::make_shared<const Node>(std::move(node))}; }

  std::optional<Op> rep_rec(const Expr& e) const {
    switch (e.kind) {
      case Expr::Kind::Gen: return rep_generator(e.text);
      case Expr::Kind::Id: return identity(e.k);
      case Expr::Kind::Zero: return std::nullopt;
      case Expr::Kind::Tensor: {
        auto a = rep_rec(*e.a);
        auto b = rep_rec(*e.b);
        if (!a || !b) return std::nullopt;
        return tensor(*a, *b);
      }
      case Expr::Kind::Compose: {
        auto a = rep_rec(*e.a);
        auto b = rep_rec(*e.b);
        if (!a || !b) return std::nullopt;
        return compose(*a, *b);
      }
      case Expr::Kind::Add: {
        auto a = rep_rec(*e.a);
        auto b = rep_rec(*e.b);
        if (!a) return b;
        if (!b) return a;
        return add(*a, *b);
      }
      case Expr::Kind::Scale: {
        auto a = rep_rec(*e.a);
        if (!a) return std::nullopt;
        return scale(S::from_string(e.text), *a);
      }
      case Expr::Kind::Power: {
        auto a = rep_rec(*e.a);
        if (!a) return std::nullopt;
        if (a->n() != a->m()) throw std::invalid_argument("oracle power: not an endomorphism");
        Node node;
        node.kind = Node::Kind::Power;
        node.k = e.k;
        node.a = a->node;
        node.n = node.m = a->n();
        return wrap(std::move(node));
      }
    }
    return std::nullopt;
  }

  SparseVec<S> apply_node(const Node& node, const BasisTensor& in) const {
    switch (node.kind) {
      case Node::Kind::Id: return {{in, S(1)}};
      case Node::Kind::Gen: {
        if (node.gen.kind == OpKind::Create) {
          BasisTensor t;
          t.push(model_.create(node.gen.id));
          return {{t, S(1)}};
        }
        if (node.gen.kind == OpKind::Annihilate) {
          if (model_.annihilate(node.gen.id, in.c[0])) return {{BasisTensor{}, S(1)}};
          return {};
        }
        Code c = in.c[0];
        if (!model_.act(node.gen.id, c)) return {};
        BasisTensor t;
        t.push(c);
        return {{t, S(1)}};
      }
      case Node::Kind::Compose: {
        SparseVec<S> out;
        for (const auto& [mid, c] : apply_node(*node.b, in)) {
          for (const auto& [o, d] : apply_node(*node.a, mid)) out.emplace_back(o, c * d);
        }
        detail::normalize(out);
        return out;
      }
      case Node::Kind::Power: {
        SparseVec<S> cur{{in, S(1)}};
        for (unsigned i = 0; i < node.k && !cur.empty(); ++i) {
          SparseVec<S> next;
          for (const auto& [v, c] : cur) {
            for (const auto& [o, d] : apply_node(*node.a, v)) next.emplace_back(o, c * d);
          }
          detail::normalize(next);
          cur.swap(next);
        }
        return cur;
      }
      case Node::Kind::Tensor: {
        const unsigned na = node.a->n;
        const BasisTensor u = in.slice(0, na);
        const BasisTensor w = in.slice(na, in.len - na);
        const auto fu = apply_node(*node.a, u);
        if (fu.empty()) return {};
        const auto gw = apply_node(*node.b, w);
        const bool u_odd = odd(tensor_degree(u));
        const int deg_w = tensor_degree(w);
        SparseVec<S> out;
        for (const auto& [w2, d] : gw) {
          const bool flip = u_odd && odd(tensor_degree(w2) - deg_w);
          for (const auto& [u2, c] : fu) out.emplace_back(u2 + w2, flip ? -(c * d) : c * d);
        }
        detail::normalize(out);
        return out;
      }
      case Node::Kind::Sum: {
        SparseVec<S> out;
        for (const auto& [c, child] : node.terms) {
          for (const auto& [o, d] : apply_node(*child, in)) out.emplace_back(o, c * d);
        }
        detail::normalize(out);
        return out;
      }
    }
    return {};
  }

  // ---- compiled single-strand path ------------------------------------------

  // A word in generators applied right to left, with an integer coefficient.
  struct Monomial {
    std::int64_t coeff = 1;
    std::vector<GenOp> ops;  // ops[0] is applied first
  };

  static constexpr std::size_t kMaxMonomials = 4096;

  // Expands a tree whose every node has arities in {0,1} into monomials with
  // integer coefficients. nullopt if the tree is not of that shape.
  std::optional<std::vector<Monomial>> monomials(const Node& node) const {
    if (node.n > 1 || node.m > 1) return std::nullopt;
    switch (node.kind) {
      case Node::Kind::Id: return std::vector<Monomial>{Monomial{}};
      case Node::Kind::Gen: return std::vector<Monomial>{Monomial{1, {node.gen}}};
      case Node::Kind::Compose: {
        auto upper = monomials(*node.a);
        auto lower = monomials(*node.b);
        if (!upper || !lower || upper->size() * lower->size() > kMaxMonomials) return std::nullopt;
        std::vector<Monomial> out;
        for (const auto& l : *lower) {
          for (const auto& u : *upper) {
            Monomial mono{l.coeff * u.coeff, l.ops};
            mono.ops.insert(mono.ops.end(), u.ops.begin(), u.ops.end());
            out.push_back(std::move(mono));
          }
        }
        return out;
      }
      case Node::Kind::Power: {
        std::vector<Monomial> cur{Monomial{}};
        auto base = monomials(*node.a);
        if (!base) return std::nullopt;
        for (unsigned i = 0; i < node.k; ++i) {
          if (cur.size() * base->size() > kMaxMonomials) return std::nullopt;
          std::vector<Monomial> next;
          for (const auto& l : cur) {
            for (const auto& u : *base) {
              Monomial mono{l.coeff * u.coeff, l.ops};
              mono.ops.insert(mono.ops.end(), u.ops.begin(), u.ops.end());
              next.push_back(std::move(mono));
            }
          }
          cur.swap(next);
        }
        return cur;
      }
      case Node::Kind::Sum: {
        std::vector<Monomial> out;
        for (const auto& [c, child] : node.terms) {
          auto ci = integer_value(c);
          auto sub = monomials(*child);
          if (!ci || !sub || out.size() + sub->size() > kMaxMonomials) return std::nullopt;
          for (auto mono : *sub) {
            mono.coeff *= *ci;
            out.push_back(std::move(mono));
          }
        }
        return out;
      }
      case Node::Kind::Tensor: {
        // only tensoring with id(0) keeps a single strand
        if (node.a->kind == Node::Kind::Id && node.a->k == 0) return monomials(*node.b);
        if (node.b->kind == Node::Kind::Id && node.b->k == 0) return monomials(*node.a);
        return std::nullopt;
      }
    }
    return std::nullopt;
  }

  static std::optional<std::int64_t> integer_value(const S& c) {
    const std::string s = c.str();
    if (s.find('/') != std::string::npos || s.size() > 15) return std::nullopt;
    return std::stoll(s);
  }

  // Runs a monomial on a single-strand state; `unit` marks the unit object.
  static constexpr Code kUnit = ~Code{0};

  // The monomials of F - G for several pairs, merged into one prefix trie so
  // that shared leading operators are applied once per input.
  class CompiledBatch {
   public:
    explicit CompiledBatch(const Oracle& o) : o_(o) { nodes_.push_back({}); }

    bool add(const Op& f, const Op& g) {
      if (f.n() > 1 || f.m() > 1) return false;
      auto mf = o_.monomials(*f.node);
      auto mg = o_.monomials(*g.node);
      if (!mf || !mg) return false;
      const auto id = static_cast<std::uint32_t>(results_.size());
      results_.emplace_back();
      for (const auto& mono : *mf) insert(mono, id, 1);
      for (const auto& mono : *mg) insert(mono, id, -1);
      return true;
    }

    std::size_t size() const { return results_.size(); }

    void run(unsigned arity, unsigned w) {
      if (results_.empty()) return;
      if (arity == 0) {
        check(kUnit);
      } else if (auto bound = o_.window_bound(w)) {
        o_.model_.for_each_code(*bound, [&](Code input) { check(input); });
      }
      for (auto& r : results_) {
        if (r.equal) r.inputs_checked = inputs_;
      }
    }

    const WindowCheck& result(std::size_t i) const { return results_[i]; }

   private:
    struct Leaf {
      std::uint32_t pair;
      std::int64_t coeff;
    };
    struct TrieNode {
      GenOp op;
      std::vector<std::uint32_t> children;
      std::vector<Leaf> leaves;
    };
    struct Hit {
      std::uint32_t pair;
      Code state;
      std::int64_t coeff;
      auto operator<=>(const Hit&) const = default;
    };

    void insert(const Monomial& mono, std::uint32_t pair, std::int64_t sign) {
      std::uint32_t at = 0;
      for (const auto& g : mono.ops) {
        std::uint32_t next = 0;
        for (auto child : nodes_[at].children) {
          if (nodes_[child].op.kind == g.kind && nodes_[child].op.id == g.id) next = child;
        }
        if (!next) {
          next = static_cast<std::uint32_t>(nodes_.size());
          nodes_.push_back({g, {}, {}});
          nodes_[at].children.push_back(next);
        }
        at = next;
      }
      nodes_[at].leaves.push_back({pair, sign * mono.coeff});
    }

    void visit(std::uint32_t at, Code state) {
      const TrieNode& node = nodes_[at];
      for (const auto& leaf : node.leaves) hits_.push_back({leaf.pair, state, leaf.coeff});
      for (auto child : node.children) {
        Code next = state;
        if (o_.step(nodes_[child].op, next)) visit(child, next);
      }
    }

    void check(Code input) {
      ++inputs_;
      hits_.clear();
      visit(0, input);
      std::sort(hits_.begin(), hits_.end());
      for (std::size_t i = 0; i < hits_.size();) {
        std::int64_t sum = 0;
        std::size_t j = i;
        for (; j < hits_.size() && hits_[j].pair == hits_[i].pair && hits_[j].state == hits_[i].state; ++j) {
          sum += hits_[j].coeff;
        }
        WindowCheck& r = results_[hits_[i].pair];
        if (r.equal && sum != 0 && !S(sum).is_zero()) {
          r.equal = false;
          r.inputs_checked = inputs_;
          r.witness = input == kUnit ? "1" : o_.model_.code_str(input);
        }
        i = j;
      }
    }

    const Oracle& o_;
    std::vector<TrieNode> nodes_;
    std::vector<WindowCheck> results_;
    std::vector<Hit> hits_;
    std::size_t inputs_ = 0;
  };

  bool step(const GenOp& g, Code& state) const {
    switch (g.kind) {
      case OpKind::Create:
        if (state != kUnit) return false;
        state = model_.create(g.id);
        return true;
      case OpKind::Annihilate:
        if (state == kUnit || !model_.annihilate(g.id, state)) return false;
        state = kUnit;
        return true;
      case OpKind::Endo: return state != kUnit && model_.act(g.id, state);
    }
    return false;
  }

  std::optional<WindowCheck> compiled_check(const Op& f, const Op& g, unsigned w) const {
    CompiledBatch batch(*this);
    if (!batch.add(f, g)) return std::nullopt;
    batch.run(f.n(), w);
    return batch.result(0);
  }

  P p_;
  Model model_;
};

}  // namespace arcdiag
