#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "arcdiag/presets/jacobson.hpp"
#include "arcdiag/presets/leavitt.hpp"
#include "arcdiag/presets/quiver.hpp"

namespace arcdiag {

/// Basis vector of one tensor factor of a truncated model space.
using Code = std::uint64_t;

enum class OpKind : std::uint8_t { Create, Annihilate, Endo };

/// A generator acting in a model: Create maps the unit to a basis vector,
/// Annihilate maps a basis vector to 0 or 1, Endo maps a basis vector to a
/// basis vector or 0. All shipped models are monomial in this sense.
struct GenOp {
  OpKind kind = OpKind::Endo;
  std::uint32_t id = 0;
};

template <Presentation P>
class OracleModel;

/// Shift operators on v_0..v_N: x v_i = v_{i+1} (v_N -> 0), y v_i = v_{i-1}
/// (v_0 -> 0), z 1 = v_0, z^* v_i = delta_{i0}. deg v_i = i deg x.
template <>
class OracleModel<Jacobson> {
 public:
  OracleModel(const Jacobson& p, unsigned trunc) : d_(p.x_degree()), trunc_(trunc) {}

  unsigned truncation() const { return trunc_; }
  int degree(Code c) const { return static_cast<int>(c) * d_; }
  unsigned size(Code c) const { return static_cast<unsigned>(c); }
  bool graded() const { return true; }

  std::optional<GenOp> resolve(std::string_view raw) const {
    const std::string name = canonical_generator_name(raw);
    if (name == "x") return GenOp{OpKind::Endo, 0};
    if (name == "y") return GenOp{OpKind::Endo, 1};
    if (name == "z") return GenOp{OpKind::Create, 0};
    if (name == "z^*") return GenOp{OpKind::Annihilate, 0};
    return std::nullopt;
  }

  Code create(std::uint32_t) const { return 0; }
  bool annihilate(std::uint32_t, Code c) const { return c == 0; }
  bool act(std::uint32_t id, Code& c) const {
    if (id == 0) {
      if (c >= trunc_) return false;
      ++c;
      return true;
    }
    if (c == 0) return false;
    --c;
    return true;
  }

  template <class F>
  void for_each_code(unsigned max_size, F&& f) const {
    const unsigned top = std::min(max_size, trunc_);
    for (Code i = 0; i <= top; ++i) f(i);
  }

  std::string code_str(Code c) const { return "v" + std::to_string(c); }

 private:
  int d_;
  unsigned trunc_;
};

/// Words over {1..L} of length <= N: x_i w = i.w (0 past length N),
/// x_i^* (j.w) = delta_ij w, x_i^* (empty) = 0, z 1 = empty,
/// z^* w = delta_{w,empty}. Ungraded.
template <>
class OracleModel<Leavitt> {
 public:
  static constexpr unsigned kMaxTrunc = 14;

  OracleModel(const Leavitt& p, unsigned trunc) : loops_(p.loops()), trunc_(trunc) {
    if (trunc > kMaxTrunc) throw std::invalid_argument("leavitt oracle: truncation above 14");
  }

  unsigned truncation() const { return trunc_; }
  int degree(Code) const { return 0; }
  unsigned size(Code c) const { return static_cast<unsigned>(c >> 56); }
  bool graded() const { return false; }

  std::optional<GenOp> resolve(std::string_view raw) const {
    const std::string name = canonical_generator_name(raw);
    if (name == "z") return GenOp{OpKind::Create, 0};
    if (name == "z^*") return GenOp{OpKind::Annihilate, 0};
    std::string_view s = name;
    if (s.empty() || s[0] != 'x') return std::nullopt;
    s.remove_prefix(1);
    if (!s.empty() && s[0] == '_') s.remove_prefix(1);
    bool star = false;
    if (s.size() >= 2 && s.substr(s.size() - 2) == "^*") {
      star = true;
      s.remove_suffix(2);
    }
    if (s.empty() || s.size() > 2 || s[0] == '0') return std::nullopt;
    unsigned i = 0;
    for (char ch : s) {
      if (ch < '0' || ch > '9') return std::nullopt;
      i = i * 10 + static_cast<unsigned>(ch - '0');
    }
    if (i < 1 || i > loops_) return std::nullopt;
    return GenOp{OpKind::Endo, star ? 16 + i : i};
  }

  Code create(std::uint32_t) const { return 0; }
  bool annihilate(std::uint32_t, Code c) const { return c == 0; }
  bool act(std::uint32_t id, Code& c) const {
    const Code len = c >> 56;
    const Code bits = c & kBitsMask;
    if (id < 16) {
      if (len >= trunc_) return false;
      c = ((len + 1) << 56) | (bits << 4) | id;
      return true;
    }
    if (len == 0 || (bits & 0xF) != id - 16) return false;
    c = ((len - 1) << 56) | (bits >> 4);
    return true;
  }

  template <class F>
  void for_each_code(unsigned max_size, F&& f) const {
    const unsigned top = std::min(max_size, trunc_);
    std::vector<Code> level{0};
    f(Code{0});
    for (unsigned len = 1; len <= top; ++len) {
      std::vector<Code> next;
      next.reserve(level.size() * loops_);
      for (Code c : level) {
        for (unsigned a = 1; a <= loops_; ++a) {
          Code w = c;
          act(a, w);
          next.push_back(w);
          f(w);
        }
      }
      level.swap(next);
    }
  }

  /// Letters of a code, first letter first.
  static std::vector<unsigned> letters(Code c) {
    std::vector<unsigned> out;
    Code bits = c & kBitsMask;
    for (Code k = 0; k < (c >> 56); ++k) {
      out.push_back(static_cast<unsigned>(bits & 0xF));
      bits >>= 4;
    }
    return out;
  }

  std::string code_str(Code c) const {
    std::string s = "w(";
    bool first = true;
    for (unsigned l : letters(c)) {
      if (!first) s += ',';
      s += std::to_string(l);
      first = false;
    }
    return s + ")";
  }

 private:
  static constexpr Code kBitsMask = (Code{1} << 56) - 1;
  unsigned loops_;
  unsigned trunc_;
};

/// X acts on span{v0, v1}: b 1 = v0, c v0 = 1, c v1 = 0. Here b c is the
/// projection onto v0 and 1 - b c the projection onto v1.
template <>
class OracleModel<Quiver> {
 public:
  OracleModel(const Quiver&, unsigned trunc) : trunc_(trunc) {}

  unsigned truncation() const { return trunc_; }
  int degree(Code) const { return 0; }
  unsigned size(Code) const { return 0; }
  bool graded() const { return false; }

  std::optional<GenOp> resolve(std::string_view name) const {
    if (name == "b") return GenOp{OpKind::Create, 0};
    if (name == "c") return GenOp{OpKind::Annihilate, 0};
    return std::nullopt;
  }

  Code create(std::uint32_t) const { return 0; }
  bool annihilate(std::uint32_t, Code c) const { return c == 0; }
  bool act(std::uint32_t, Code&) const { return false; }

  template <class F>
  void for_each_code(unsigned, F&& f) const {
    f(Code{0});
    f(Code{1});
  }

  std::string code_str(Code c) const { return "v" + std::to_string(c); }

 private:
  unsigned trunc_;
};

}  // namespace arcdiag
