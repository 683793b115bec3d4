#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <type_traits>
#include <utility>
#include <vector>

#include "arcdiag/category.hpp"

namespace arcdiag {

/// Seeded generator of basis diagrams and morphisms with labels of weight at
/// most `max_weight`. Identical seeds give identical sequences.
template <Presentation P, FieldScalar S>
class RandomMorphisms {
 public:
  using Diagram = BasisDiagram<P>;
  using Mor = Morphism<P, S>;

  RandomMorphisms(const Category<P, S>& cat, std::uint64_t seed, unsigned max_weight = 2)
      : cat_(cat),
        rng_(seed),
        tops_(cat.presentation().enumerate_tops(max_weight)),
        longs_(cat.presentation().enumerate_longs(max_weight)),
        bottoms_(cat.presentation().enumerate_bottoms(max_weight)) {}

  std::mt19937_64& engine() { return rng_; }

  unsigned uniform(unsigned lo, unsigned hi) { return std::uniform_int_distribution<unsigned>(lo, hi)(rng_); }

  /// Uniform over partial bijections with at most `max_longs` pairs, then
  /// uniform labels.
  Diagram diagram(unsigned n, unsigned m, int max_longs = -1) {
    const auto& pbs = bijections(n, m);
    std::vector<const PartialBijection*> ok;
    for (const auto& pb : pbs) {
      if (max_longs < 0 || static_cast<int>(pb.size()) <= max_longs) ok.push_back(&pb);
    }
    Diagram d;
    d.pb = *ok[pick(ok.size())];
    for (std::size_t i = d.pb.size(); i < m; ++i) d.tops.push_back(tops_[pick(tops_.size())]);
    for (std::size_t i = 0; i < d.pb.size(); ++i) d.longs.push_back(longs_[pick(longs_.size())]);
    for (std::size_t i = d.pb.size(); i < n; ++i) d.bottoms.push_back(bottoms_[pick(bottoms_.size())]);
    return d;
  }

  /// Small nonzero coefficient: +-1, +-2, +-1/2 or 3 over Q, 1 over GF2.
  S coefficient() {
    static const std::pair<int, int> choices[] = {{1, 1}, {-1, 1}, {2, 1}, {-2, 1}, {1, 2}, {-1, 2}, {3, 1}};
    if constexpr (std::is_same_v<S, Gf2>) {
      return S(1);
    } else {
      const auto [p, q] = choices[pick(std::size(choices))];
      return S::from_fraction(p, q);
    }
  }

  Mor morphism(unsigned n, unsigned m, unsigned max_terms = 3, int max_longs = -1) {
    Mor out = cat_.zero(n, m);
    const unsigned terms = uniform(1, max_terms);
    for (unsigned i = 0; i < terms; ++i) out.terms.add(diagram(n, m, max_longs), coefficient());
    return out;
  }

  /// All terms share one degree, so the morphism is homogeneous.
  Mor homogeneous(unsigned n, unsigned m, unsigned max_terms = 3) {
    const Diagram first = diagram(n, m);
    const int deg = diagram_degree(cat_.presentation(), first);
    Mor out = cat_.from_diagram(first, coefficient());
    const unsigned terms = uniform(1, max_terms);
    for (unsigned tries = 0; out.terms.size() < terms && tries < 64; ++tries) {
      const Diagram d = diagram(n, m);
      if (diagram_degree(cat_.presentation(), d) == deg) out.terms.add(d, coefficient());
    }
    if (out.is_zero()) return cat_.from_diagram(first);
    return out;
  }

 private:
  std::size_t pick(std::size_t size) { return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng_); }

  const std::vector<PartialBijection>& bijections(unsigned n, unsigned m) {
    auto it = pb_cache_.find({n, m});
    if (it == pb_cache_.end()) it = pb_cache_.emplace(std::pair{n, m}, partial_bijections(n, m)).first;
    return it->second;
  }

  const Category<P, S>& cat_;
  std::mt19937_64 rng_;
  std::vector<typename P::Top> tops_;
  std::vector<typename P::Long> longs_;
  std::vector<typename P::Bottom> bottoms_;
  std::map<std::pair<unsigned, unsigned>, std::vector<PartialBijection>> pb_cache_;
};

}  // namespace arcdiag
