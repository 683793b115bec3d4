#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "arcdiag/presentation.hpp"
#include "arcdiag/word.hpp"

namespace arcdiag {

/// Leavitt-type pair with L loop generators x_1..x_L:
///   z^* z = 1, x_i^* z = 0, z^* x_i = 0, x_i^* x_j = delta_ij,
///   sum_i x_i x_i^* + z z^* = 1.
/// Ungraded. Labels are words: z_I = x_I z, z^*_I = z^* x_I^*, and long
/// labels x_I x_J^* with (last(I), first(J)) != (L, L).
class Leavitt {
 public:
  struct Top {
    Word word;
    friend auto operator<=>(const Top&, const Top&) = default;
  };
  struct Bottom {
    Word word;
    friend auto operator<=>(const Bottom&, const Bottom&) = default;
  };
  struct Long {
    Word in;    // I of x_I
    Word out;   // J of x_J^*
    friend auto operator<=>(const Long&, const Long&) = default;
  };
  using Product = LongProduct<Top, Bottom, Long>;

  explicit Leavitt(unsigned loops) : loops_(loops) {
    if (loops < 2 || loops > 15) throw std::invalid_argument("leavitt: loop count must be in 2..15");
  }

  std::string name() const { return "leavitt:" + std::to_string(loops_); }
  ParityMode parity_mode() const { return ParityMode::Plain; }
  unsigned loops() const { return loops_; }

  int degree(const Top&) const { return 0; }
  int degree(const Bottom&) const { return 0; }
  int degree(const Long&) const { return 0; }

  unsigned weight(const Top& t) const { return t.word.size(); }
  unsigned weight(const Bottom& b) const { return b.word.size(); }
  unsigned weight(const Long& l) const { return l.in.size() + l.out.size(); }

  bool valid(const Top& t) const { return letters_ok(t.word); }
  bool valid(const Bottom& b) const { return letters_ok(b.word); }
  bool valid(const Long& l) const {
    return letters_ok(l.in) && letters_ok(l.out) && !forbidden(l.in, l.out);
  }

  Long identity_long() const { return Long{}; }

  Expansion<Product> mul_long_long(const Long& upper, const Long& lower) const {
    // x_I x_J^* x_K x_M^*: cancel the inner x_J^* x_K block letter by letter.
    Word j = upper.out;
    Word k = lower.in;
    while (!j.empty() && !k.empty()) {
      if (j.back() != k.front()) return {};
      j.pop_back();
      k.pop_front();
    }
    Expansion<Product> out;
    if (j.empty()) {
      normalize_into(upper.in + k, lower.out, 1, out);
    } else {
      normalize_into(upper.in, j + lower.out, 1, out);
    }
    return out;
  }

  Expansion<Top> mul_long_top(const Long& upper, const Top& lower) const {
    Word j = upper.out;
    Word k = lower.word;
    while (!j.empty() && !k.empty()) {
      if (j.back() != k.front()) return {};
      j.pop_back();
      k.pop_front();
    }
    Expansion<Top> out;
    if (j.empty()) out.add(Top{upper.in + k}, 1);  // x_j^* z = 0 otherwise
    return out;
  }

  Expansion<Bottom> mul_bottom_long(const Bottom& upper, const Long& lower) const {
    Word k = upper.word;
    Word i = lower.in;
    while (!k.empty() && !i.empty()) {
      if (k.back() != i.front()) return {};
      k.pop_back();
      i.pop_front();
    }
    Expansion<Bottom> out;
    if (i.empty()) out.add(Bottom{k + lower.out}, 1);  // z^* x_i = 0 otherwise
    return out;
  }

  std::int64_t eval_float(const Bottom& upper, const Top& lower) const {
    return upper.word == lower.word.reversed() ? 1 : 0;
  }

  std::vector<Top> enumerate_tops(unsigned max_weight) const {
    std::vector<Top> out;
    for (const Word& w : words_up_to(max_weight)) out.push_back(Top{w});
    return out;
  }
  std::vector<Bottom> enumerate_bottoms(unsigned max_weight) const {
    std::vector<Bottom> out;
    for (const Word& w : words_up_to(max_weight)) out.push_back(Bottom{w});
    return out;
  }
  std::vector<Long> enumerate_longs(unsigned max_weight) const {
    std::vector<Long> out;
    const auto words = words_up_to(max_weight);
    for (const Word& i : words) {
      for (const Word& j : words) {
        if (i.size() + j.size() > max_weight || forbidden(i, j)) continue;
        out.push_back(Long{i, j});
      }
    }
    return out;
  }

  std::optional<GeneratorLabel<Top, Bottom, Long>> generator(std::string_view name) const {
    std::string n = canonical_generator_name(name);
    if (n == "z") return Top{};
    if (n == "z^*") return Bottom{};
    if (n.size() < 2 || n[0] != 'x') return std::nullopt;
    std::size_t pos = 1;
    if (n[pos] == '_') ++pos;
    bool adjoint = false;
    std::string digits;
    for (; pos < n.size(); ++pos) {
      if (n[pos] >= '0' && n[pos] <= '9') {
        digits += n[pos];
      } else if (n.compare(pos, std::string::npos, "^*") == 0) {
        adjoint = true;
        break;
      } else {
        return std::nullopt;
      }
    }
    if (digits.empty() || digits.size() > 2 || digits[0] == '0') return std::nullopt;
    const unsigned i = static_cast<unsigned>(std::stoul(digits));
    if (i < 1 || i > loops_) return std::nullopt;
    return adjoint ? Long{Word{}, Word{i}} : Long{Word{i}, Word{}};
  }
  std::vector<std::string> generator_names() const {
    std::vector<std::string> names{"z", "z^*"};
    for (unsigned i = 1; i <= loops_; ++i) {
      names.push_back("x" + std::to_string(i));
      names.push_back("x" + std::to_string(i) + "^*");
    }
    return names;
  }

  std::vector<std::string> top_chain(const Top& t) const {
    std::vector<std::string> c;
    for (unsigned i = 0; i < t.word.size(); ++i) c.push_back("x" + std::to_string(t.word[i]));
    c.emplace_back("z");
    return c;
  }
  std::vector<std::string> bottom_chain(const Bottom& b) const {
    std::vector<std::string> c{"z^*"};
    for (unsigned i = 0; i < b.word.size(); ++i) c.push_back("x" + std::to_string(b.word[i]) + "^*");
    return c;
  }
  std::vector<std::string> long_chain(const Long& l) const {
    std::vector<std::string> c;
    for (unsigned i = 0; i < l.in.size(); ++i) c.push_back("x" + std::to_string(l.in[i]));
    for (unsigned i = 0; i < l.out.size(); ++i) c.push_back("x" + std::to_string(l.out[i]) + "^*");
    return c;
  }

  /// All words over {1..L} of length <= max_len, ordered by length then lex.
  std::vector<Word> words_up_to(unsigned max_len) const {
    std::vector<Word> out{Word{}};
    std::size_t level_begin = 0;
    for (unsigned len = 1; len <= max_len; ++len) {
      const std::size_t level_end = out.size();
      for (std::size_t idx = level_begin; idx < level_end; ++idx) {
        for (unsigned a = 1; a <= loops_; ++a) {
          Word w = out[idx];
          w.push_back(a);
          out.push_back(w);
        }
      }
      level_begin = level_end;
    }
    return out;
  }

 private:
  bool forbidden(const Word& i, const Word& j) const {
    return !i.empty() && !j.empty() && i.back() == loops_ && j.front() == loops_;
  }

  bool letters_ok(const Word& w) const {
    for (unsigned i = 0; i < w.size(); ++i) {
      if (w[i] < 1 || w[i] > loops_) return false;
    }
    return true;
  }

  // Rewrites x_I x_L x_L^* x_J^* via x_L x_L^* = 1 - sum_{i<L} x_i x_i^* - z z^*.
  void normalize_into(const Word& in, const Word& out_word, std::int64_t coeff, Expansion<Product>& out) const {
    if (!forbidden(in, out_word)) {
      out.add(Long{in, out_word}, coeff);
      return;
    }
    Word i = in;
    Word j = out_word;
    i.pop_back();
    j.pop_front();
    normalize_into(i, j, coeff, out);
    for (unsigned a = 1; a < loops_; ++a) {
      Word ia = i;
      ia.push_back(a);
      Word aj = j;
      aj.push_front(a);
      out.add(Long{ia, aj}, -coeff);
    }
    out.add(std::pair{Top{i}, Bottom{j}}, -coeff);
  }

  unsigned loops_;
};

static_assert(Presentation<Leavitt>);

}  // namespace arcdiag
