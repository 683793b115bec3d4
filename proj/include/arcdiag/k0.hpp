#pragma once

#include <cctype>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "arcdiag/algebra_views.hpp"
#include "arcdiag/category.hpp"
#include "arcdiag/presets/jacobson.hpp"
#include "arcdiag/presets/leavitt.hpp"
#include "arcdiag/presets/quiver.hpp"
#include "arcdiag/scalar.hpp"

namespace arcdiag {

/// Exact class in a Grothendieck ring, as a rational number.
using K0Elem = Rational;

class K0Error : public std::runtime_error {
 public:
  enum class Kind { Collapse, Undetermined, Syntax };
  K0Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// a x + b = c x + d in one unknown.
struct LedgerRelation {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t d = 0;
};

inline K0Elem ledger_reduce(const LedgerRelation& r) {
  const std::int64_t coeff = r.a - r.c;
  const std::int64_t rhs = r.d - r.b;
  if (coeff == 0) {
    if (rhs != 0) throw K0Error(K0Error::Kind::Collapse, "Grothendieck ring collapses: 1 = 0");
    throw K0Error(K0Error::Kind::Undetermined, "relation does not determine the unknown");
  }
  return K0Elem::from_fraction(rhs, coeff);
}

namespace detail {

// "3x - 1 + x" -> {x coefficient, constant}
inline std::pair<std::int64_t, std::int64_t> parse_side(std::string_view s, std::string_view unknown) {
  std::int64_t xs = 0;
  std::int64_t cs = 0;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  bool first = true;
  skip();
  if (i == s.size()) throw K0Error(K0Error::Kind::Syntax, "empty side in relation");
  while (i < s.size()) {
    std::int64_t sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
      skip();
    } else if (!first) {
      throw K0Error(K0Error::Kind::Syntax, "expected + or - at position " + std::to_string(i));
    }
    first = false;
    std::int64_t n = 0;
    bool has_digits = false;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      n = n * 10 + (s[i++] - '0');
      has_digits = true;
    }
    skip();
    if (i < s.size() && s[i] == '*') {
      ++i;
      skip();
    }
    if (s.substr(i, unknown.size()) == unknown) {
      i += unknown.size();
      xs += sign * (has_digits ? n : 1);
    } else if (has_digits) {
      cs += sign * n;
    } else {
      throw K0Error(K0Error::Kind::Syntax, "unexpected symbol at position " + std::to_string(i));
    }
    skip();
  }
  return {xs, cs};
}

}  // namespace detail

/// Parses "x = -x + 1" style relations, integers and one unknown only.
inline LedgerRelation parse_relation(std::string_view text, std::string_view unknown = "x") {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos || text.find('=', eq + 1) != std::string_view::npos) {
    throw K0Error(K0Error::Kind::Syntax, "relation needs exactly one '='");
  }
  const auto [a, b] = detail::parse_side(text.substr(0, eq), unknown);
  const auto [c, d] = detail::parse_side(text.substr(eq + 1), unknown);
  return {a, b, c, d};
}

inline K0Elem ledger_reduce(std::string_view text, std::string_view unknown = "x") {
  return ledger_reduce(parse_relation(text, unknown));
}

/// Object slot: X^{power}[shift], optionally cut down by an idempotent of
/// End(X^{power}) (the identity when absent).
template <Presentation P, FieldScalar S>
struct Slot {
  unsigned power = 0;
  int shift = 0;
  std::optional<Morphism<P, S>> idempotent;
};

/// Matrix of morphisms between direct sums of slots. Entry (r, c) maps
/// cols[c] to rows[r] and has degree shift(rows[r]) - shift(cols[c]).
template <Presentation P, FieldScalar S>
struct MorphismMatrix {
  std::vector<Slot<P, S>> rows;
  std::vector<Slot<P, S>> cols;
  std::vector<std::vector<Morphism<P, S>>> entries;  // entries[r][c]
};

template <Presentation P, FieldScalar S>
Morphism<P, S> slot_identity(const Category<P, S>& cat, const Slot<P, S>& s) {
  return s.idempotent ? *s.idempotent : cat.identity(s.power);
}

/// Arities and degrees of every entry agree with the slots.
template <Presentation P, FieldScalar S>
bool well_formed(const Category<P, S>& cat, const MorphismMatrix<P, S>& a) {
  if (a.entries.size() != a.rows.size()) return false;
  for (std::size_t r = 0; r < a.rows.size(); ++r) {
    if (a.entries[r].size() != a.cols.size()) return false;
    for (std::size_t c = 0; c < a.cols.size(); ++c) {
      const auto& e = a.entries[r][c];
      if (e.n != a.cols[c].power || e.m != a.rows[r].power) return false;
      if (e.is_zero()) continue;
      const auto deg = cat.degree_of(e);
      if (!deg || *deg != a.rows[r].shift - a.cols[c].shift) return false;
    }
  }
  return true;
}

/// upper o lower; lower's rows must match upper's cols.
template <Presentation P, FieldScalar S>
MorphismMatrix<P, S> compose(const Category<P, S>& cat, const MorphismMatrix<P, S>& upper,
                             const MorphismMatrix<P, S>& lower) {
  if (upper.cols.size() != lower.rows.size()) throw ArityError("matrix compose: size mismatch");
  MorphismMatrix<P, S> out{upper.rows, lower.cols, {}};
  for (std::size_t r = 0; r < upper.rows.size(); ++r) {
    std::vector<Morphism<P, S>> row;
    for (std::size_t c = 0; c < lower.cols.size(); ++c) {
      Morphism<P, S> acc = cat.zero(lower.cols[c].power, upper.rows[r].power);
      for (std::size_t j = 0; j < upper.cols.size(); ++j) {
        acc = cat.add(acc, cat.compose(upper.entries[r][j], lower.entries[j][c]));
      }
      row.push_back(std::move(acc));
    }
    out.entries.push_back(std::move(row));
  }
  return out;
}

/// Diagonal entries are the slot identities, the rest vanish.
template <Presentation P, FieldScalar S>
bool is_identity(const Category<P, S>& cat, const MorphismMatrix<P, S>& a) {
  if (a.rows.size() != a.cols.size()) return false;
  for (std::size_t r = 0; r < a.rows.size(); ++r) {
    for (std::size_t c = 0; c < a.cols.size(); ++c) {
      const auto& e = a.entries[r][c];
      if (r == c ? !cat.equal(e, slot_identity(cat, a.rows[r])) : !e.is_zero()) return false;
    }
  }
  return true;
}

/// Every slot and entry tensored on the right with identity(k).
template <Presentation P, FieldScalar S>
MorphismMatrix<P, S> tensor_identity(const Category<P, S>& cat, const MorphismMatrix<P, S>& a, unsigned k) {
  auto widen = [&](Slot<P, S> s) {
    s.power += k;
    if (s.idempotent) s.idempotent = cat.tensor(*s.idempotent, cat.identity(k));
    return s;
  };
  MorphismMatrix<P, S> out;
  for (const auto& s : a.rows) out.rows.push_back(widen(s));
  for (const auto& s : a.cols) out.cols.push_back(widen(s));
  for (const auto& row : a.entries) {
    std::vector<Morphism<P, S>> r;
    for (const auto& e : row) r.push_back(cat.tensor(e, cat.identity(k)));
    out.entries.push_back(std::move(r));
  }
  return out;
}

/// The two matrices of X ~ (direct sum), first the map out of X, then the
/// map back.
template <Presentation P, FieldScalar S>
struct IsoPair {
  MorphismMatrix<P, S> col;
  MorphismMatrix<P, S> row;
};

/// X ~ 1 (+) X[-d] via (z^*, y)^T and (z, x).
template <FieldScalar S>
IsoPair<Jacobson, S> iso_pair(const Category<Jacobson, S>& cat) {
  const int d = cat.presentation().x_degree();
  using Sl = Slot<Jacobson, S>;
  const std::vector<Sl> sum{Sl{0, 0, {}}, Sl{1, -d, {}}};
  const std::vector<Sl> x{Sl{1, 0, {}}};
  IsoPair<Jacobson, S> out;
  out.col = {sum, x, {{cat.generator("z^*")}, {cat.generator("y")}}};
  out.row = {x, sum, {{cat.generator("z"), cat.generator("x")}}};
  return out;
}

/// X ~ 1 (+) X^L via (z^*, x_1^*, ..., x_L^*)^T and (z, x_1, ..., x_L).
template <FieldScalar S>
IsoPair<Leavitt, S> iso_pair(const Category<Leavitt, S>& cat) {
  using Sl = Slot<Leavitt, S>;
  const unsigned L = cat.presentation().loops();
  std::vector<Sl> sum{Sl{0, 0, {}}};
  for (unsigned i = 0; i < L; ++i) sum.push_back(Sl{1, 0, {}});
  const std::vector<Sl> x{Sl{1, 0, {}}};
  IsoPair<Leavitt, S> out;
  out.col = {sum, x, {{cat.generator("z^*")}}};
  out.row = {x, sum, {{cat.generator("z")}}};
  for (unsigned i = 1; i <= L; ++i) {
    out.col.entries.push_back({cat.generator("x" + std::to_string(i) + "^*")});
    out.row.entries[0].push_back(cat.generator("x" + std::to_string(i)));
  }
  return out;
}

/// X ~ 1 (+) (X, 1 - bc) via (c, 1 - bc)^T and (b, 1 - bc).
template <FieldScalar S>
IsoPair<Quiver, S> iso_pair(const Category<Quiver, S>& cat) {
  using Sl = Slot<Quiver, S>;
  const auto e = cat.sub(cat.identity(1), cat.compose(cat.generator("b"), cat.generator("c")));
  const std::vector<Sl> sum{Sl{0, 0, {}}, Sl{1, 0, e}};
  const std::vector<Sl> x{Sl{1, 0, {}}};
  IsoPair<Quiver, S> out;
  out.col = {sum, x, {{cat.generator("c")}, {e}}};
  out.row = {x, sum, {{cat.generator("b"), e}}};
  return out;
}

struct IsoReport {
  bool well_formed = false;
  bool row_col_identity = false;  // row o col on X^k
  bool col_row_identity = false;  // col o row on the sum
  bool ok() const { return well_formed && row_col_identity && col_row_identity; }
};

/// Builds the pair tensored with identity(k-1) and composes both ways.
template <Presentation P, FieldScalar S>
IsoReport verify_iso_pair(const Category<P, S>& cat, unsigned k) {
  if (k < 1) throw std::invalid_argument("verify_iso_pair: k must be at least 1");
  const auto base = iso_pair(cat);
  const auto col = tensor_identity(cat, base.col, k - 1);
  const auto row = tensor_identity(cat, base.row, k - 1);
  IsoReport r;
  r.well_formed = well_formed(cat, col) && well_formed(cat, row);
  r.row_col_identity = is_identity(cat, compose(cat, row, col));
  r.col_row_identity = is_identity(cat, compose(cat, col, row));
  return r;
}

/// The relation the k = 1 isomorphism forces on x = [X]: each slot adds
/// (-1)^shift [X]^power. A slot cut down by a proper idempotent brings in a
/// class the ledger cannot name, so the relation is then undetermined.
template <Presentation P, FieldScalar S>
LedgerRelation iso_relation(const Category<P, S>& cat) {
  const auto pair = iso_pair(cat);
  LedgerRelation rel{1, 0, 0, 0};
  for (const auto& s : pair.col.rows) {
    if (s.idempotent && !cat.equal(*s.idempotent, cat.identity(s.power))) {
      throw K0Error(K0Error::Kind::Undetermined,
                    "isomorphism involves the image of an idempotent; [X] is not determined by the ledger");
    }
    if (s.power > 1) throw K0Error(K0Error::Kind::Undetermined, "nonlinear relation");
    const std::int64_t sign = s.shift % 2 == 0 ? 1 : -1;
    (s.power == 0 ? rel.d : rel.c) += sign;
  }
  return rel;
}

inline K0Elem k0_power(const K0Elem& x, unsigned k) {
  K0Elem r(1);
  for (unsigned i = 0; i < k; ++i) r = r * x;
  return r;
}

/// [X]^k = [X^k], with [X] solved from the verified isomorphism.
template <Presentation P, FieldScalar S>
K0Elem k0_class_of_power(const Category<P, S>& cat, unsigned k) {
  if (k == 0) return K0Elem(1);
  if (!verify_iso_pair(cat, 1).ok()) {
    throw K0Error(K0Error::Kind::Undetermined, "the isomorphism pair does not compose to identities");
  }
  return k0_power(ledger_reduce(iso_relation(cat)), k);
}

}  // namespace arcdiag
