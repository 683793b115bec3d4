#pragma once

#include <charconv>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "arcdiag/category.hpp"
#include "arcdiag/presets/jacobson.hpp"
#include "arcdiag/presets/leavitt.hpp"
#include "arcdiag/presets/quiver.hpp"
#include "arcdiag/scalar.hpp"

namespace arcdiag {

enum class PresetKind { Jacobson, Leavitt, Quiver };
enum class FieldKind { Gf2, Q };

struct PresetSpec {
  PresetKind kind = PresetKind::Jacobson;
  int param = 1;  // deg x for jacobson-dg, loop count for leavitt
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::optional<int> to_int(std::string_view s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace detail

/// "jacobson-dg", "jacobson-dg:<d>", "leavitt:<L>", "quiver-example1".
inline PresetSpec parse_preset(std::string_view name) {
  constexpr std::string_view jac = "jacobson-dg";
  constexpr std::string_view lea = "leavitt:";
  if (name == jac) return {PresetKind::Jacobson, 1};
  if (name.substr(0, jac.size() + 1) == "jacobson-dg:") {
    auto d = detail::to_int(name.substr(jac.size() + 1));
    if (!d || *d == 0) throw UsageError("jacobson-dg:<d> needs a nonzero integer degree");
    return {PresetKind::Jacobson, *d};
  }
  if (name.substr(0, lea.size()) == lea) {
    auto L = detail::to_int(name.substr(lea.size()));
    if (!L || *L < 2 || *L > 15) throw UsageError("leavitt:<L> needs 2 <= L <= 15");
    return {PresetKind::Leavitt, *L};
  }
  if (name == "quiver-example1") return {PresetKind::Quiver, 0};
  throw UsageError("unknown preset '" + std::string(name) + "' (jacobson-dg[:d], leavitt:L, quiver-example1)");
}

inline std::string preset_name(const PresetSpec& s) {
  switch (s.kind) {
    case PresetKind::Jacobson: return Jacobson(s.param).name();
    case PresetKind::Leavitt: return Leavitt(static_cast<unsigned>(s.param)).name();
    case PresetKind::Quiver: return Quiver().name();
  }
  return {};
}

/// GF2 is the default for jacobson-dg, Q elsewhere.
inline FieldKind parse_field(const std::optional<std::string>& field, const PresetSpec& preset) {
  if (!field) return preset.kind == PresetKind::Jacobson ? FieldKind::Gf2 : FieldKind::Q;
  if (*field == "gf2") return FieldKind::Gf2;
  if (*field == "q") return FieldKind::Q;
  throw UsageError("unknown field '" + *field + "' (gf2 or q)");
}

inline std::string field_name(FieldKind f) { return f == FieldKind::Gf2 ? "gf2" : "q"; }

/// Calls f(category) with the concrete Category for the preset and field.
template <class F>
decltype(auto) with_category(const PresetSpec& preset, FieldKind field, F&& f) {
  auto go = [&](auto presentation) -> decltype(auto) {
    using P = decltype(presentation);
    if (field == FieldKind::Gf2) {
      Category<P, Gf2> cat(presentation);
      return f(cat);
    }
    Category<P, Rational> cat(presentation);
    return f(cat);
  };
  switch (preset.kind) {
    case PresetKind::Leavitt: return go(Leavitt(static_cast<unsigned>(preset.param)));
    case PresetKind::Quiver: return go(Quiver());
    case PresetKind::Jacobson: break;
  }
  return go(Jacobson(preset.param));
}

}  // namespace arcdiag
