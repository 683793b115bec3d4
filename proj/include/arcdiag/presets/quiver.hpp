#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arcdiag/presentation.hpp"

namespace arcdiag {

/// Two-vertex quiver algebra with arrows b, c and cb = (0). Every label set
/// has a single element, so Hom(X^n, X^m) is spanned by bare partial
/// bijections.
class Quiver {
 public:
  struct Top {
    friend auto operator<=>(const Top&, const Top&) = default;
  };
  struct Bottom {
    friend auto operator<=>(const Bottom&, const Bottom&) = default;
  };
  struct Long {
    friend auto operator<=>(const Long&, const Long&) = default;
  };
  using Product = LongProduct<Top, Bottom, Long>;

  std::string name() const { return "quiver-example1"; }
  ParityMode parity_mode() const { return ParityMode::Plain; }

  int degree(const Top&) const { return 0; }
  int degree(const Bottom&) const { return 0; }
  int degree(const Long&) const { return 0; }
  unsigned weight(const Top&) const { return 0; }
  unsigned weight(const Bottom&) const { return 0; }
  unsigned weight(const Long&) const { return 0; }
  bool valid(const Top&) const { return true; }
  bool valid(const Bottom&) const { return true; }
  bool valid(const Long&) const { return true; }

  Long identity_long() const { return Long{}; }

  Expansion<Product> mul_long_long(const Long&, const Long&) const { return {{Long{}, 1}}; }
  Expansion<Top> mul_long_top(const Long&, const Top&) const { return {{Top{}, 1}}; }
  Expansion<Bottom> mul_bottom_long(const Bottom&, const Long&) const { return {{Bottom{}, 1}}; }
  std::int64_t eval_float(const Bottom&, const Top&) const { return 1; }

  std::vector<Top> enumerate_tops(unsigned) const { return {Top{}}; }
  std::vector<Bottom> enumerate_bottoms(unsigned) const { return {Bottom{}}; }
  std::vector<Long> enumerate_longs(unsigned) const { return {Long{}}; }

  std::optional<GeneratorLabel<Top, Bottom, Long>> generator(std::string_view name) const {
    if (name == "b") return Top{};
    if (name == "c") return Bottom{};
    return std::nullopt;
  }
  std::vector<std::string> generator_names() const { return {"b", "c"}; }

  std::vector<std::string> top_chain(const Top&) const { return {"b"}; }
  std::vector<std::string> bottom_chain(const Bottom&) const { return {"c"}; }
  std::vector<std::string> long_chain(const Long&) const { return {}; }
};

static_assert(Presentation<Quiver>);

}  // namespace arcdiag
