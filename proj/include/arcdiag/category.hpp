#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "arcdiag/diagram.hpp"

namespace arcdiag {

/// Order in which interface points are resolved during composition. The
/// result must not depend on it; RightToLeft exists to test that.
enum class FusionOrder { LeftToRight, RightToLeft };

class ArityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class TermLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

// One label of a composition in progress. `up`/`down` are boundary points
// (0 = floating end). For labels of the upper diagram `down` is an interface
// point; for labels of the lower diagram `up` is one.
template <Presentation P>
struct Entry {
  std::variant<typename P::Top, typename P::Long, typename P::Bottom> label;
  unsigned up = 0;
  unsigned down = 0;
  std::uint8_t origin = 0;  // 0 upper, 1 lower, 2 fused
  bool odd = false;
};

template <Presentation P>
using EntryList = std::vector<Entry<P>>;

inline std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Parity of odd-odd inversions of `keys` (odd entries only are passed).
inline bool odd_inversions(const std::vector<std::pair<int, unsigned>>& keys) {
  bool sign = false;
  for (std::size_t a = 0; a < keys.size(); ++a) {
    for (std::size_t b = a + 1; b < keys.size(); ++b) {
      if (keys[b] < keys[a]) sign = !sign;
    }
  }
  return sign;
}

}  // namespace detail

/// All order-preserving partial bijections [1,n] -> [1,m], sorted.
inline std::vector<PartialBijection> partial_bijections(unsigned n, unsigned m) {
  std::vector<PartialBijection> out;
  const unsigned top = std::min(n, m);
  for (unsigned len = 0; len <= top; ++len) {
    std::vector<unsigned> dom(len), img(len);
    // iterate over len-subsets of [1,n] and [1,m] in lexicographic order
    std::function<void(unsigned, unsigned)> pick_dom;
    std::function<void(unsigned, unsigned)> pick_img;
    pick_img = [&](unsigned k, unsigned start) {
      if (k == len) {
        PartialBijection pb{n, m, {}};
        for (unsigned t = 0; t < len; ++t) pb.pairs.emplace_back(dom[t], img[t]);
        out.push_back(std::move(pb));
        return;
      }
      for (unsigned j = start; j <= m; ++j) {
        img[k] = j;
        pick_img(k + 1, j + 1);
      }
    };
    pick_dom = [&](unsigned k, unsigned start) {
      if (k == len) {
        pick_img(0, 1);
        return;
      }
      for (unsigned i = start; i <= n; ++i) {
        dom[k] = i;
        pick_dom(k + 1, i + 1);
      }
    };
    pick_dom(0, 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Closed form sum_l C(n,l) C(m,l).
inline std::uint64_t count_partial_bijections(unsigned n, unsigned m) {
  std::uint64_t total = 0;
  for (unsigned l = 0; l <= std::min(n, m); ++l) total += detail::binomial(n, l) * detail::binomial(m, l);
  return total;
}

struct DegreeWindow {
  int min = 0;
  int max = 0;
};

/// The monoidal category attached to a presentation, with coefficients in S.
/// Stateless apart from the presentation and an optional term cap.
template <Presentation P, FieldScalar S>
class Category {
 public:
  using Pres = P;
  using Scalar = S;
  using Diagram = BasisDiagram<P>;
  using Mor = Morphism<P, S>;
  using Top = typename P::Top;
  using Long = typename P::Long;
  using Bottom = typename P::Bottom;

  explicit Category(P p = P{}) : p_(std::move(p)) {}

  const P& presentation() const { return p_; }

  /// 0 disables the cap.
  void set_max_terms(std::size_t cap) { max_terms_ = cap; }
  std::size_t max_terms() const { return max_terms_; }

  // ---- constructors -------------------------------------------------------

  Mor zero(unsigned n, unsigned m) const { return Mor{n, m, {}}; }

  Mor identity(unsigned k) const {
    Diagram d;
    d.pb = PartialBijection::full(k);
    d.longs.assign(k, p_.identity_long());
    return from_diagram(d);
  }

  Mor from_diagram(const Diagram& d, const S& coeff = S(1)) const {
    Mor out{d.pb.n, d.pb.m, {}};
    out.terms.add(d, coeff);
    return out;
  }

  Diagram generator_diagram(std::string_view name) const {
    auto g = p_.generator(name);
    if (!g) throw std::invalid_argument("unknown generator '" + std::string(name) + "' for preset " + p_.name());
    Diagram d;
    if (auto* t = std::get_if<Top>(&*g)) {
      d.pb = PartialBijection{0, 1, {}};
      d.tops.push_back(*t);
    } else if (auto* l = std::get_if<Long>(&*g)) {
      d.pb = PartialBijection::full(1);
      d.longs.push_back(*l);
    } else {
      d.pb = PartialBijection{1, 0, {}};
      d.bottoms.push_back(std::get<Bottom>(*g));
    }
    return d;
  }

  Mor generator(std::string_view name) const { return from_diagram(generator_diagram(name)); }

  // ---- linear structure ---------------------------------------------------

  Mor add(const Mor& a, const Mor& b) const {
    require_same_arity(a, b, "add");
    Mor out = a;
    out.terms.add(b.terms);
    return out;
  }
  Mor sub(const Mor& a, const Mor& b) const {
    require_same_arity(a, b, "sub");
    Mor out = a;
    out.terms.add(b.terms, S(-1));
    return out;
  }
  Mor scale(const S& c, const Mor& a) const {
    Mor out{a.n, a.m, {}};
    out.terms.add(a.terms, c);
    return out;
  }
  Mor neg(const Mor& a) const { return scale(S(-1), a); }
  bool equal(const Mor& a, const Mor& b) const {
    require_same_arity(a, b, "equal");
    return a.terms == b.terms;
  }

  /// Common degree of all terms; nullopt when terms of different degree
  /// are present ("mixed"). The zero morphism reports 0.
  std::optional<int> degree_of(const Mor& a) const {
    std::optional<int> deg;
    for (const auto& [d, c] : a.terms) {
      const int k = diagram_degree(p_, d);
      if (deg && *deg != k) return std::nullopt;
      deg = k;
    }
    return deg.value_or(0);
  }

  // ---- composition --------------------------------------------------------

  /// upper o lower on basis diagrams, as an integer expansion.
  Expansion<Diagram> compose_basis(const Diagram& upper, const Diagram& lower,
                                   FusionOrder order = FusionOrder::LeftToRight) const {
    if (upper.pb.n != lower.pb.m) {
      throw ArityError("compose: upper has source " + std::to_string(upper.pb.n) + " but lower has target " +
                       std::to_string(lower.pb.m));
    }
    using State = std::pair<detail::EntryList<P>, std::int64_t>;
    std::vector<State> states;
    states.emplace_back(initial_entries(upper, lower), 1);

    const unsigned k = upper.pb.n;
    for (unsigned step = 0; step < k; ++step) {
      const unsigned j = order == FusionOrder::LeftToRight ? step + 1 : k - step;
      std::vector<State> next;
      for (auto& [entries, coeff] : states) fuse_at(entries, coeff, j, next);
      states = std::move(next);
      if (states.empty()) break;
    }

    Expansion<Diagram> out;
    for (auto& [entries, coeff] : states) {
      auto [d, negate] = finalize(entries, lower.pb.n, upper.pb.m);
      out.add(d, negate ? -coeff : coeff);
    }
    return out;
  }

  Mor compose(const Mor& upper, const Mor& lower, FusionOrder order = FusionOrder::LeftToRight) const {
    if (upper.n != lower.m) {
      throw ArityError("compose: upper morphism is " + arity_str(upper) + " but lower morphism is " + arity_str(lower));
    }
    Mor out{lower.n, upper.m, {}};
    for (const auto& [du, cu] : upper.terms) {
      for (const auto& [dl, cl] : lower.terms) {
        const S c = cu * cl;
        for (const auto& [d, k] : compose_basis(du, dl, order)) out.terms.add(d, c * S(k));
        check_cap(out);
      }
    }
    return out;
  }

  /// left (x) right: left's labels start above right's, then the heights are
  /// brought to canonical order with the Koszul sign.
  std::pair<Diagram, bool> tensor_basis(const Diagram& a, const Diagram& b) const {
    Diagram d;
    d.pb = PartialBijection{a.pb.n + b.pb.n, a.pb.m + b.pb.m, a.pb.pairs};
    for (const auto& [i, j] : b.pb.pairs) d.pb.pairs.emplace_back(i + a.pb.n, j + a.pb.m);
    d.tops = a.tops;
    d.tops.insert(d.tops.end(), b.tops.begin(), b.tops.end());
    d.longs = a.longs;
    d.longs.insert(d.longs.end(), b.longs.begin(), b.longs.end());
    d.bottoms = a.bottoms;
    d.bottoms.insert(d.bottoms.end(), b.bottoms.begin(), b.bottoms.end());
    // b's tops pass a's longs and bottoms; b's longs pass a's bottoms
    const bool bt = odd_count(b.tops);
    const bool bl = odd_count(b.longs);
    const bool al = odd_count(a.longs);
    const bool ab = odd_count(a.bottoms);
    const bool negate = (bt && (al != ab)) != (bl && ab);
    return {std::move(d), negate};
  }

  Mor tensor(const Mor& left, const Mor& right) const {
    Mor out{left.n + right.n, left.m + right.m, {}};
    for (const auto& [da, ca] : left.terms) {
      for (const auto& [db, cb] : right.terms) {
        auto [d, negate] = tensor_basis(da, db);
        const S c = ca * cb;
        out.terms.add(d, negate ? -c : c);
      }
      check_cap(out);
    }
    return out;
  }

  // ---- enumeration --------------------------------------------------------

  /// Visits every basis diagram n -> m with all label weights <= max_weight
  /// (and total degree inside the window, if given). The diagram passed to
  /// `visit` is reused between calls.
  template <class Visit>
  void for_each_basis_diagram(unsigned n, unsigned m, unsigned max_weight, std::optional<DegreeWindow> window,
                              Visit&& visit) const {
    const auto tops = p_.enumerate_tops(max_weight);
    const auto longs = p_.enumerate_longs(max_weight);
    const auto bottoms = p_.enumerate_bottoms(max_weight);
    Diagram d;
    for (const auto& pb : partial_bijections(n, m)) {
      const std::size_t nl = pb.size();
      const std::size_t nt = m - nl;
      const std::size_t nb = n - nl;
      d.pb = pb;
      d.tops.assign(nt, Top{});
      d.longs.assign(nl, Long{});
      d.bottoms.assign(nb, Bottom{});
      if ((nt && tops.empty()) || (nl && longs.empty()) || (nb && bottoms.empty())) continue;
      // odometer over (tops..., longs..., bottoms...), last slot fastest
      std::vector<std::size_t> idx(nt + nl + nb, 0);
      auto load = [&](std::size_t s) {
        if (s < nt) {
          d.tops[s] = tops[idx[s]];
        } else if (s < nt + nl) {
          d.longs[s - nt] = longs[idx[s]];
        } else {
          d.bottoms[s - nt - nl] = bottoms[idx[s]];
        }
      };
      auto limit = [&](std::size_t s) { return s < nt ? tops.size() : s < nt + nl ? longs.size() : bottoms.size(); };
      for (std::size_t s = 0; s < idx.size(); ++s) load(s);
      while (true) {
        if (!window || in_window(d, *window)) visit(static_cast<const Diagram&>(d));
        bool advanced = false;
        for (std::size_t s = idx.size(); s-- > 0;) {
          if (++idx[s] < limit(s)) {
            load(s);
            advanced = true;
            break;
          }
          idx[s] = 0;
          load(s);
        }
        if (!advanced) break;
      }
    }
  }

  std::vector<Diagram> enumerate_basis(unsigned n, unsigned m, unsigned max_weight,
                                       std::optional<DegreeWindow> window = std::nullopt) const {
    std::vector<Diagram> out;
    for_each_basis_diagram(n, m, max_weight, window, [&](const Diagram& d) { out.push_back(d); });
    return out;
  }

  /// Size of the weight-truncated basis from the label counts alone:
  /// sum over partial bijections f of |tops|^{m-|f|} |longs|^{|f|} |bottoms|^{n-|f|}.
  std::uint64_t basis_count_formula(unsigned n, unsigned m, unsigned max_weight) const {
    const std::uint64_t t = p_.enumerate_tops(max_weight).size();
    const std::uint64_t l = p_.enumerate_longs(max_weight).size();
    const std::uint64_t b = p_.enumerate_bottoms(max_weight).size();
    auto pow = [](std::uint64_t base, unsigned e) {
      std::uint64_t r = 1;
      while (e--) r *= base;
      return r;
    };
    std::uint64_t total = 0;
    for (unsigned len = 0; len <= std::min(n, m); ++len) {
      total += detail::binomial(n, len) * detail::binomial(m, len) * pow(t, m - len) * pow(l, len) * pow(b, n - len);
    }
    return total;
  }

 private:
  static std::string arity_str(const Mor& a) { return std::to_string(a.n) + "->" + std::to_string(a.m); }

  static void require_same_arity(const Mor& a, const Mor& b, const char* op) {
    if (a.n != b.n || a.m != b.m) {
      throw ArityError(std::string(op) + ": arity mismatch " + arity_str(a) + " vs " + arity_str(b));
    }
  }

  void check_cap(const Mor& m) const {
    if (max_terms_ != 0 && m.terms.size() > max_terms_) {
      throw TermLimitError("term count exceeds cap of " + std::to_string(max_terms_));
    }
  }

  bool in_window(const Diagram& d, const DegreeWindow& w) const {
    const int deg = diagram_degree(p_, d);
    return deg >= w.min && deg <= w.max;
  }

  template <class L>
  bool is_odd(const L& label) const {
    return p_.parity_mode() == ParityMode::Super && odd(p_.degree(label));
  }

  template <class L>
  bool odd_count(const std::vector<L>& labels) const {
    bool r = false;
    for (const auto& l : labels) r ^= is_odd(l);
    return r;
  }

  template <class L>
  detail::Entry<P> entry(const L& label, unsigned up, unsigned down, std::uint8_t origin) const {
    return detail::Entry<P>{label, up, down, origin, is_odd(label)};
  }

  detail::EntryList<P> initial_entries(const Diagram& upper, const Diagram& lower) const {
    detail::EntryList<P> e;
    e.reserve(upper.tops.size() + upper.longs.size() + upper.bottoms.size() + lower.tops.size() +
              lower.longs.size() + lower.bottoms.size());
    auto push = [&](const Diagram& d, std::uint8_t origin) {
      const auto ft = d.pb.free_targets();
      const auto fs = d.pb.free_sources();
      for (std::size_t k = 0; k < d.tops.size(); ++k) e.push_back(entry(d.tops[k], ft[k], 0, origin));
      for (std::size_t k = 0; k < d.longs.size(); ++k) {
        e.push_back(entry(d.longs[k], d.pb.pairs[k].second, d.pb.pairs[k].first, origin));
      }
      for (std::size_t k = 0; k < d.bottoms.size(); ++k) e.push_back(entry(d.bottoms[k], 0, fs[k], origin));
    };
    push(upper, 0);
    push(lower, 1);
    return e;
  }

  // Resolves interface point j: the lower label meeting j is moved up to sit
  // just below the upper one (Koszul sign), then the two are multiplied.
  void fuse_at(const detail::EntryList<P>& entries, std::int64_t coeff, unsigned j,
               std::vector<std::pair<detail::EntryList<P>, std::int64_t>>& out) const {
    std::size_t iu = entries.size();
    std::size_t id = entries.size();
    for (std::size_t k = 0; k < entries.size(); ++k) {
      if (entries[k].origin == 0 && entries[k].down == j) iu = k;
      if (entries[k].origin == 1 && entries[k].up == j) id = k;
    }
    if (iu >= id || id == entries.size()) throw std::logic_error("compose: interface bookkeeping broken");
    const auto& u = entries[iu];
    const auto& d = entries[id];
    if (d.odd) {
      bool between = false;
      for (std::size_t k = iu + 1; k < id; ++k) between ^= entries[k].odd;
      if (between) coeff = -coeff;
    }

    auto emit = [&](const std::vector<detail::Entry<P>>& replacement, std::int64_t c) {
      detail::EntryList<P> next;
      next.reserve(entries.size());
      next.insert(next.end(), entries.begin(), entries.begin() + static_cast<std::ptrdiff_t>(iu));
      next.insert(next.end(), replacement.begin(), replacement.end());
      next.insert(next.end(), entries.begin() + static_cast<std::ptrdiff_t>(iu) + 1,
                  entries.begin() + static_cast<std::ptrdiff_t>(id));
      next.insert(next.end(), entries.begin() + static_cast<std::ptrdiff_t>(id) + 1, entries.end());
      out.emplace_back(std::move(next), coeff * c);
    };

    const auto* ul = std::get_if<Long>(&u.label);
    const auto* ub = std::get_if<Bottom>(&u.label);
    const auto* dl = std::get_if<Long>(&d.label);
    const auto* dt = std::get_if<Top>(&d.label);
    if (ul && dl) {
      for (const auto& [key, c] : p_.mul_long_long(*ul, *dl)) {
        if (const auto* l = std::get_if<Long>(&key)) {
          emit({entry(*l, u.up, d.down, 2)}, c);
        } else {
          const auto& [t, b] = std::get<std::pair<Top, Bottom>>(key);
          emit({entry(t, u.up, 0, 2), entry(b, 0, d.down, 2)}, c);
        }
      }
    } else if (ul && dt) {
      for (const auto& [t, c] : p_.mul_long_top(*ul, *dt)) emit({entry(t, u.up, 0, 2)}, c);
    } else if (ub && dl) {
      for (const auto& [b, c] : p_.mul_bottom_long(*ub, *dl)) emit({entry(b, 0, d.down, 2)}, c);
    } else if (ub && dt) {
      const std::int64_t c = p_.eval_float(*ub, *dt);
      if (c != 0) emit({}, c);
    } else {
      throw std::logic_error("compose: unexpected label kinds at an interface");
    }
  }

  // Reads off the composite diagram and the sign of sorting the surviving
  // labels into canonical height order.
  std::pair<Diagram, bool> finalize(const detail::EntryList<P>& entries, unsigned n, unsigned m) const {
    std::vector<std::pair<int, unsigned>> odd_keys;
    std::vector<std::pair<std::pair<int, unsigned>, std::size_t>> order;
    order.reserve(entries.size());
    for (std::size_t k = 0; k < entries.size(); ++k) {
      const auto& e = entries[k];
      const int kind = static_cast<int>(e.label.index());  // Top 0, Long 1, Bottom 2
      const unsigned pos = kind == 2 ? e.down : e.up;
      order.push_back({{kind, pos}, k});
      if (e.odd) odd_keys.emplace_back(kind, pos);
    }
    std::sort(order.begin(), order.end());
    Diagram d;
    d.pb.n = n;
    d.pb.m = m;
    for (const auto& [key, k] : order) {
      const auto& e = entries[k];
      if (const auto* t = std::get_if<Top>(&e.label)) {
        d.tops.push_back(*t);
      } else if (const auto* l = std::get_if<Long>(&e.label)) {
        d.longs.push_back(*l);
        d.pb.pairs.emplace_back(e.down, e.up);
      } else {
        d.bottoms.push_back(std::get<Bottom>(e.label));
      }
    }
    return {std::move(d), detail::odd_inversions(odd_keys)};
  }

  P p_;
  std::size_t max_terms_ = 0;
};

}  // namespace arcdiag
