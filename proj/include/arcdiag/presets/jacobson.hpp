#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "arcdiag/presentation.hpp"

namespace arcdiag {

/// The Jacobson algebra pair: generators x, y (long strands), z (top short
/// strand), z^* (bottom short strand) with
///   z^* z = 1, z^* x = 0, y z = 0, y x = 1, x y + z z^* = 1.
/// Graded with deg x = d, deg y = -d, deg z = deg z^* = 0 (d = 1 by default;
/// d = -1 is the degree-swapped variant).
class Jacobson {
 public:
  /// x^p z
  struct Top {
    std::uint32_t p = 0;
    friend auto operator<=>(const Top&, const Top&) = default;
  };
  /// z^* y^q
  struct Bottom {
    std::uint32_t q = 0;
    friend auto operator<=>(const Bottom&, const Bottom&) = default;
  };
  /// x^m for m > 0, y^{-m} for m < 0, the identity for m = 0
  struct Long {
    std::int32_t m = 0;
    friend auto operator<=>(const Long&, const Long&) = default;
  };
  using Product = LongProduct<Top, Bottom, Long>;

  explicit Jacobson(int x_degree = 1) : d_(x_degree) {
    if (x_degree == 0) throw std::invalid_argument("jacobson-dg: deg x must be nonzero");
  }

  std::string name() const { return d_ == 1 ? "jacobson-dg" : "jacobson-dg:" + std::to_string(d_); }
  ParityMode parity_mode() const { return ParityMode::Super; }
  int x_degree() const { return d_; }

  int degree(const Top& t) const { return static_cast<int>(t.p) * d_; }
  int degree(const Bottom& b) const { return -static_cast<int>(b.q) * d_; }
  int degree(const Long& l) const { return l.m * d_; }

  unsigned weight(const Top& t) const { return t.p; }
  unsigned weight(const Bottom& b) const { return b.q; }
  unsigned weight(const Long& l) const { return static_cast<unsigned>(std::abs(l.m)); }

  bool valid(const Top&) const { return true; }
  bool valid(const Bottom&) const { return true; }
  bool valid(const Long&) const { return true; }

  Long identity_long() const { return Long{0}; }

  // x^p y^q = x^{p-s} y^{q-s} - sum_{t=1..s} (x^{p-t} z)(z^* y^{q-t}), s = min(p,q);
  // every other ordered product of powers collapses to a single power.
  Expansion<Product> mul_long_long(const Long& upper, const Long& lower) const {
    Expansion<Product> out;
    if (upper.m > 0 && lower.m < 0) {
      const std::int32_t p = upper.m;
      const std::int32_t q = -lower.m;
      const std::int32_t s = std::min(p, q);
      out.add(Long{p - q}, 1);
      for (std::int32_t t = 1; t <= s; ++t) {
        out.add(std::pair{Top{static_cast<std::uint32_t>(p - t)}, Bottom{static_cast<std::uint32_t>(q - t)}}, -1);
      }
      return out;
    }
    out.add(Long{upper.m + lower.m}, 1);
    return out;
  }

  Expansion<Top> mul_long_top(const Long& upper, const Top& lower) const {
    Expansion<Top> out;
    const std::int64_t p = static_cast<std::int64_t>(lower.p) + upper.m;
    if (p >= 0) out.add(Top{static_cast<std::uint32_t>(p)}, 1);  // y z = 0 otherwise
    return out;
  }

  Expansion<Bottom> mul_bottom_long(const Bottom& upper, const Long& lower) const {
    Expansion<Bottom> out;
    const std::int64_t q = static_cast<std::int64_t>(upper.q) - lower.m;
    if (q >= 0) out.add(Bottom{static_cast<std::uint32_t>(q)}, 1);  // z^* x = 0 otherwise
    return out;
  }

  std::int64_t eval_float(const Bottom& upper, const Top& lower) const { return upper.q == lower.p ? 1 : 0; }

  std::vector<Top> enumerate_tops(unsigned max_weight) const {
    std::vector<Top> out;
    for (std::uint32_t p = 0; p <= max_weight; ++p) out.push_back(Top{p});
    return out;
  }
  std::vector<Bottom> enumerate_bottoms(unsigned max_weight) const {
    std::vector<Bottom> out;
    for (std::uint32_t q = 0; q <= max_weight; ++q) out.push_back(Bottom{q});
    return out;
  }
  std::vector<Long> enumerate_longs(unsigned max_weight) const {
    std::vector<Long> out;
    const auto w = static_cast<std::int32_t>(max_weight);
    for (std::int32_t m = -w; m <= w; ++m) out.push_back(Long{m});
    return out;
  }

  std::optional<GeneratorLabel<Top, Bottom, Long>> generator(std::string_view name) const {
    const std::string n = canonical_generator_name(name);
    if (n == "x") return Long{1};
    if (n == "y") return Long{-1};
    if (n == "z") return Top{0};
    if (n == "z^*") return Bottom{0};
    return std::nullopt;
  }
  std::vector<std::string> generator_names() const { return {"x", "y", "z", "z^*"}; }

  std::vector<std::string> top_chain(const Top& t) const {
    std::vector<std::string> c(t.p, "x");
    c.emplace_back("z");
    return c;
  }
  std::vector<std::string> bottom_chain(const Bottom& b) const {
    std::vector<std::string> c{"z^*"};
    c.insert(c.end(), b.q, "y");
    return c;
  }
  std::vector<std::string> long_chain(const Long& l) const {
    return std::vector<std::string>(static_cast<std::size_t>(std::abs(l.m)), l.m > 0 ? "x" : "y");
  }

 private:
  int d_;
};

static_assert(Presentation<Jacobson>);

}  // namespace arcdiag
