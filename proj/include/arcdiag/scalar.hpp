#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace arcdiag {

/// Element of the two-element field. All signs collapse to 1.
class Gf2 {
 public:
  static constexpr std::string_view field_name = "gf2";

  constexpr Gf2() = default;
  constexpr Gf2(std::int64_t v) : bit_((v % 2) != 0) {}  // NOLINT(implicit)

  /// num/den reduced mod 2; den must be odd.
  static Gf2 from_fraction(std::int64_t num, std::int64_t den) {
    if (den % 2 == 0) throw std::domain_error("denominator is not invertible in GF(2)");
    return Gf2(num);
  }
  static Gf2 from_string(std::string_view text);

  constexpr bool is_zero() const { return !bit_; }
  constexpr bool is_one() const { return bit_; }

  friend constexpr Gf2 operator+(Gf2 a, Gf2 b) { return from_bit(a.bit_ != b.bit_); }
  friend constexpr Gf2 operator-(Gf2 a, Gf2 b) { return from_bit(a.bit_ != b.bit_); }
  friend constexpr Gf2 operator*(Gf2 a, Gf2 b) { return from_bit(a.bit_ && b.bit_); }
  friend Gf2 operator/(Gf2 a, Gf2 b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    return a;
  }
  constexpr Gf2 operator-() const { return *this; }
  Gf2& operator+=(Gf2 o) { return *this = *this + o; }
  Gf2& operator-=(Gf2 o) { return *this = *this - o; }
  Gf2& operator*=(Gf2 o) { return *this = *this * o; }

  friend constexpr bool operator==(Gf2, Gf2) = default;

  std::string str() const { return bit_ ? "1" : "0"; }
  friend std::ostream& operator<<(std::ostream& os, Gf2 v) { return os << v.str(); }

 private:
  static constexpr Gf2 from_bit(bool b) {
    Gf2 r;
    r.bit_ = b;
    return r;
  }
  bool bit_ = false;
};

/// Exact rational number, always stored in lowest terms.
class Rational {
 public:
  static constexpr std::string_view field_name = "q";

  Rational() = default;
  Rational(std::int64_t v) : v_(static_cast<long>(v)) {}  // NOLINT(implicit)
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  static Rational from_fraction(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("zero denominator");
    mpq_class q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return Rational(std::move(q));
  }
  static Rational from_string(std::string_view text);

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  const mpq_class& value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  /// "p" or "p/q".
  std::string str() const { return v_.get_str(); }
  friend std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.str(); }

 private:
  mpq_class v_{0};
};

namespace detail {
inline std::pair<std::int64_t, std::int64_t> parse_fraction(std::string_view text) {
  auto to_int = [](std::string_view s) -> std::int64_t {
    if (s.empty()) throw std::invalid_argument("empty integer");
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
      neg = s[0] == '-';
      i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("bad integer");
    std::int64_t v = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer: " + std::string(s));
      if (v > (INT64_MAX - 9) / 10) throw std::out_of_range("integer literal too large");
      v = v * 10 + (s[i] - '0');
    }
    return neg ? -v : v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return {to_int(text), 1};
  return {to_int(text.substr(0, slash)), to_int(text.substr(slash + 1))};
}
}  // namespace detail

inline Gf2 Gf2::from_string(std::string_view text) {
  auto [n, d] = detail::parse_fraction(text);
  return from_fraction(n, d);
}

inline Rational Rational::from_string(std::string_view text) {
  // arbitrary precision, so serialized coefficients round-trip exactly
  const std::string s(text);
  if (s.empty() || s.find_first_not_of("+-0123456789/") != std::string::npos) {
    throw std::invalid_argument("bad rational: " + s);
  }
  mpq_class q;
  if (q.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (q.get_den() == 0) throw std::domain_error("zero denominator");
  q.canonicalize();
  return Rational(std::move(q));
}

template <class S>
concept FieldScalar = requires(S a, S b, std::int64_t n, std::string_view t) {
  { S(n) };
  { S::from_fraction(n, n) } -> std::same_as<S>;
  { S::from_string(t) } -> std::same_as<S>;
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { a / b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.str() } -> std::convertible_to<std::string>;
  { S::field_name } -> std::convertible_to<std::string_view>;
};

static_assert(FieldScalar<Gf2>);
static_assert(FieldScalar<Rational>);

}  // namespace arcdiag
