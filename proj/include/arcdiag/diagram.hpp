#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arcdiag/lincomb.hpp"
#include "arcdiag/presentation.hpp"
#include "arcdiag/scalar.hpp"

namespace arcdiag {

/// Order-preserving bijection between a subset of [1,n] (source, bottom
/// boundary) and a subset of [1,m] (target, top boundary). Pairs are
/// 1-based (source, target), increasing in both coordinates.
struct PartialBijection {
  unsigned n = 0;
  unsigned m = 0;
  std::vector<std::pair<unsigned, unsigned>> pairs;

  std::size_t size() const { return pairs.size(); }

  bool valid() const {
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const auto [i, j] = pairs[k];
      if (i < 1 || i > n || j < 1 || j > m) return false;
      if (k > 0 && (i <= pairs[k - 1].first || j <= pairs[k - 1].second)) return false;
    }
    return true;
  }

  /// [1,n] minus the domain, ascending.
  std::vector<unsigned> free_sources() const {
    std::vector<unsigned> out;
    std::size_t k = 0;
    for (unsigned i = 1; i <= n; ++i) {
      if (k < pairs.size() && pairs[k].first == i) {
        ++k;
      } else {
        out.push_back(i);
      }
    }
    return out;
  }

  /// [1,m] minus the image, ascending.
  std::vector<unsigned> free_targets() const {
    std::vector<unsigned> out;
    std::size_t k = 0;
    for (unsigned j = 1; j <= m; ++j) {
      if (k < pairs.size() && pairs[k].second == j) {
        ++k;
      } else {
        out.push_back(j);
      }
    }
    return out;
  }

  static PartialBijection full(unsigned k) {
    PartialBijection pb{k, k, {}};
    for (unsigned i = 1; i <= k; ++i) pb.pairs.emplace_back(i, i);
    return pb;
  }

  friend auto operator<=>(const PartialBijection&, const PartialBijection&) = default;
};

/// One element of the labelled-diagram basis of Hom(X^n, X^m): a partial
/// bijection f together with
///   tops    - one label per free target point, left to right,
///   longs   - one label per pair of f, left to right,
///   bottoms - one label per free source point, left to right.
/// The implicit heights are: tops (leftmost highest), then longs, then
/// bottoms. All signs are measured against this order.
template <Presentation P>
struct BasisDiagram {
  PartialBijection pb;
  std::vector<typename P::Top> tops;
  std::vector<typename P::Long> longs;
  std::vector<typename P::Bottom> bottoms;

  unsigned n() const { return pb.n; }
  unsigned m() const { return pb.m; }
  unsigned long_count() const { return static_cast<unsigned>(pb.size()); }

  friend auto operator<=>(const BasisDiagram&, const BasisDiagram&) = default;
};

template <Presentation P>
bool valid_diagram(const P& p, const BasisDiagram<P>& d) {
  if (!d.pb.valid()) return false;
  if (d.longs.size() != d.pb.size()) return false;
  if (d.tops.size() != d.pb.m - d.pb.size() || d.bottoms.size() != d.pb.n - d.pb.size()) return false;
  for (const auto& t : d.tops) {
    if (!p.valid(t)) return false;
  }
  for (const auto& l : d.longs) {
    if (!p.valid(l)) return false;
  }
  for (const auto& b : d.bottoms) {
    if (!p.valid(b)) return false;
  }
  return true;
}

template <Presentation P>
int diagram_degree(const P& p, const BasisDiagram<P>& d) {
  int deg = 0;
  for (const auto& t : d.tops) deg += p.degree(t);
  for (const auto& l : d.longs) deg += p.degree(l);
  for (const auto& b : d.bottoms) deg += p.degree(b);
  return deg;
}

template <Presentation P>
unsigned diagram_weight(const P& p, const BasisDiagram<P>& d) {
  unsigned w = 0;
  for (const auto& t : d.tops) w = std::max(w, p.weight(t));
  for (const auto& l : d.longs) w = std::max(w, p.weight(l));
  for (const auto& b : d.bottoms) w = std::max(w, p.weight(b));
  return w;
}

/// Finite linear combination of basis diagrams X^n -> X^m. The zero
/// morphism is an empty term map with its arities recorded.
template <Presentation P, FieldScalar S>
struct Morphism {
  unsigned n = 0;
  unsigned m = 0;
  LinComb<BasisDiagram<P>, S> terms;

  bool is_zero() const { return terms.empty(); }
  std::size_t size() const { return terms.size(); }

  friend bool operator==(const Morphism&, const Morphism&) = default;
};

}  // namespace arcdiag
