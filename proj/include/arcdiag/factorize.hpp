#pragma once

#include <string>
#include <vector>

#include "arcdiag/diagram.hpp"
#include "arcdiag/expr.hpp"

namespace arcdiag {

namespace detail {

// Vertical composite of named generators, top first; runs become powers.
inline ExprPtr chain_expr(const std::vector<std::string>& names) {
  if (names.empty()) return ex::id(1);
  ExprPtr out;
  for (std::size_t i = 0; i < names.size();) {
    std::size_t j = i;
    while (j < names.size() && names[j] == names[i]) ++j;
    ExprPtr piece = j - i == 1 ? ex::gen(names[i]) : ex::power(ex::gen(names[i]), static_cast<unsigned>(j - i));
    out = out ? ex::compose(out, piece) : piece;
    i = j;
  }
  return out;
}

// Tensor product of per-position factors; nullptr marks an identity strand.
inline ExprPtr layer_expr(const std::vector<ExprPtr>& factors) {
  ExprPtr out;
  unsigned ids = 0;
  auto push = [&](ExprPtr f) { out = out ? ex::tensor(out, f) : f; };
  for (const auto& f : factors) {
    if (!f) {
      ++ids;
      continue;
    }
    if (ids) push(ex::id(ids));
    ids = 0;
    push(f);
  }
  if (ids) push(ex::id(ids));
  return out ? out : ex::id(0);
}

}  // namespace detail

/// Generator expression evaluating to exactly {d -> +1}: a layer of tops over
/// a layer of long labels over a layer of bottoms, each layer a tensor
/// product of per-strand chains. Tensor factors stack left above right, so
/// the expression realizes the canonical heights and no sign arises.
template <Presentation P>
ExprPtr factorize(const P& p, const BasisDiagram<P>& d) {
  const auto& pb = d.pb;
  std::vector<ExprPtr> layers;

  if (!d.tops.empty()) {
    std::vector<ExprPtr> f;
    std::size_t next_top = 0;
    std::size_t next_long = 0;
    for (unsigned j = 1; j <= pb.m; ++j) {
      if (next_long < pb.size() && pb.pairs[next_long].second == j) {
        f.push_back(nullptr);
        ++next_long;
      } else {
        f.push_back(detail::chain_expr(p.top_chain(d.tops[next_top++])));
      }
    }
    layers.push_back(detail::layer_expr(f));
  }

  bool plain_longs = true;
  for (const auto& l : d.longs) plain_longs = plain_longs && l == p.identity_long();
  if (!plain_longs) {
    std::vector<ExprPtr> f;
    for (const auto& l : d.longs) f.push_back(l == p.identity_long() ? nullptr : detail::chain_expr(p.long_chain(l)));
    layers.push_back(detail::layer_expr(f));
  }

  if (!d.bottoms.empty()) {
    std::vector<ExprPtr> f;
    std::size_t next_bottom = 0;
    std::size_t next_long = 0;
    for (unsigned i = 1; i <= pb.n; ++i) {
      if (next_long < pb.size() && pb.pairs[next_long].first == i) {
        f.push_back(nullptr);
        ++next_long;
      } else {
        f.push_back(detail::chain_expr(p.bottom_chain(d.bottoms[next_bottom++])));
      }
    }
    layers.push_back(detail::layer_expr(f));
  }

  if (layers.empty()) return ex::id(pb.n);
  ExprPtr out = layers.front();
  for (std::size_t i = 1; i < layers.size(); ++i) out = ex::compose(out, layers[i]);
  return out;
}

/// Deterministic text of a morphism: terms in canonical key order, each the
/// factorization of its diagram. "0" for the zero morphism.
template <Presentation P, FieldScalar S>
std::string print(const P& p, const Morphism<P, S>& mor) {
  if (mor.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [d, c] : mor.terms) {
    std::string body = print_expr(*factorize(p, d));
    std::string mag = c.str();
    const bool negative = !mag.empty() && mag[0] == '-';
    if (negative) mag.erase(0, 1);
    std::string term = mag == "1" ? body : mag + "*(" + body + ")";
    if (first) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
    first = false;
  }
  return out;
}

}  // namespace arcdiag
