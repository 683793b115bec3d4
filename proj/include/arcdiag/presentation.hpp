#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "arcdiag/lincomb.hpp"

namespace arcdiag {

enum class LabelKind : std::uint8_t { Top, Long, Bottom };

enum class ParityMode : std::uint8_t { Plain, Super };

/// Result key of multiplying two long-strand labels: either a long label or a
/// (top, bottom) pair, the top sitting immediately above the bottom.
template <class Top, class Bottom, class Long>
using LongProduct = std::variant<Long, std::pair<Top, Bottom>>;

/// A generating morphism: a single labelled strand on 0->1, 1->1 or 1->0.
template <class Top, class Bottom, class Long>
using GeneratorLabel = std::variant<Top, Long, Bottom>;

/// A pair (A,e): label sets for (1-e)Ae, eA(1-e) and a complement A'' of
/// (1-e)AeA(1-e), together with the local multiplication rules.
///
/// `*_chain` functions give, for each basis label, the generator names whose
/// vertical composite (first name on top) equals that label. They drive
/// factorization and pretty printing.
template <class P>
concept Presentation = requires(const P& p, const typename P::Top& t, const typename P::Bottom& b,
                                const typename P::Long& l, unsigned w, std::string_view name) {
  typename P::Top;
  typename P::Bottom;
  typename P::Long;
  { p.name() } -> std::convertible_to<std::string>;
  { p.parity_mode() } -> std::same_as<ParityMode>;
  { p.degree(t) } -> std::same_as<int>;
  { p.degree(b) } -> std::same_as<int>;
  { p.degree(l) } -> std::same_as<int>;
  { p.weight(t) } -> std::same_as<unsigned>;
  { p.weight(b) } -> std::same_as<unsigned>;
  { p.weight(l) } -> std::same_as<unsigned>;
  { p.valid(t) } -> std::same_as<bool>;
  { p.valid(b) } -> std::same_as<bool>;
  { p.valid(l) } -> std::same_as<bool>;
  { p.identity_long() } -> std::same_as<typename P::Long>;
  { p.mul_long_long(l, l) } -> std::same_as<Expansion<LongProduct<typename P::Top, typename P::Bottom, typename P::Long>>>;
  { p.mul_long_top(l, t) } -> std::same_as<Expansion<typename P::Top>>;
  { p.mul_bottom_long(b, l) } -> std::same_as<Expansion<typename P::Bottom>>;
  { p.eval_float(b, t) } -> std::same_as<std::int64_t>;
  { p.enumerate_tops(w) } -> std::same_as<std::vector<typename P::Top>>;
  { p.enumerate_bottoms(w) } -> std::same_as<std::vector<typename P::Bottom>>;
  { p.enumerate_longs(w) } -> std::same_as<std::vector<typename P::Long>>;
  { p.generator(name) } -> std::same_as<std::optional<GeneratorLabel<typename P::Top, typename P::Bottom, typename P::Long>>>;
  { p.generator_names() } -> std::same_as<std::vector<std::string>>;
  { p.top_chain(t) } -> std::same_as<std::vector<std::string>>;
  { p.bottom_chain(b) } -> std::same_as<std::vector<std::string>>;
  { p.long_chain(l) } -> std::same_as<std::vector<std::string>>;
};

template <Presentation P>
using LongProductOf = LongProduct<typename P::Top, typename P::Bottom, typename P::Long>;

template <Presentation P>
using GeneratorOf = GeneratorLabel<typename P::Top, typename P::Bottom, typename P::Long>;

inline bool odd(int degree) { return (degree % 2) != 0; }

/// Accepts "z^*" and the ASCII alias "z*" for adjoint generators.
inline std::string canonical_generator_name(std::string_view name) {
  std::string s(name);
  if (s.size() >= 2 && s.back() == '*' && s[s.size() - 2] != '^') s.insert(s.size() - 1, "^");
  return s;
}

}  // namespace arcdiag
