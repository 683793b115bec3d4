#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "arcdiag/category.hpp"
#include "arcdiag/eval.hpp"
#include "arcdiag/factorize.hpp"

namespace arcdiag {

using Json = nlohmann::ordered_json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Labels travel as generator expressions, e.g. "x.x.z" or "z^*.y".
template <Presentation P>
std::string label_text(const P& p, const typename P::Top& t) {
  return print_expr(*detail::chain_expr(p.top_chain(t)));
}
template <Presentation P>
std::string label_text(const P& p, const typename P::Bottom& b) {
  return print_expr(*detail::chain_expr(p.bottom_chain(b)));
}
template <Presentation P>
std::string label_text(const P& p, const typename P::Long& l) {
  return print_expr(*detail::chain_expr(p.long_chain(l)));
}

namespace detail {

// Reads back a label: the expression must evaluate to a single diagram with
// coefficient 1 of the expected shape.
template <class L, Presentation P, FieldScalar S>
L read_label(const Category<P, S>& cat, const Json& j, unsigned n, unsigned m) {
  if (!j.is_string()) throw FormatError("label must be a string");
  const auto text = j.get<std::string>();
  Morphism<P, S> mor;
  try {
    mor = eval(cat, text, Arity{n, m});
  } catch (const std::exception& e) {
    throw FormatError("bad label \"" + text + "\": " + e.what());
  }
  if (mor.n != n || mor.m != m || mor.terms.size() != 1 || !(mor.terms.begin()->second == S(1))) {
    throw FormatError("label \"" + text + "\" is not a basis label");
  }
  const auto& d = mor.terms.begin()->first;
  if constexpr (std::is_same_v<L, typename P::Top>) {
    if (d.tops.size() == 1) return d.tops[0];
  } else if constexpr (std::is_same_v<L, typename P::Bottom>) {
    if (d.bottoms.size() == 1) return d.bottoms[0];
  } else {
    if (d.longs.size() == 1) return d.longs[0];
  }
  throw FormatError("label \"" + text + "\" has the wrong shape");
}

}  // namespace detail

template <Presentation P>
Json diagram_to_json(const P& p, const BasisDiagram<P>& d) {
  Json out = Json::object();
  Json pairs = Json::array();
  for (const auto& [i, j] : d.pb.pairs) pairs.push_back({i, j});
  out["pairs"] = pairs;
  Json tops = Json::array();
  for (const auto& t : d.tops) tops.push_back(label_text(p, t));
  out["tops"] = tops;
  Json longs = Json::array();
  for (const auto& l : d.longs) longs.push_back(label_text(p, l));
  out["longs"] = longs;
  Json bottoms = Json::array();
  for (const auto& b : d.bottoms) bottoms.push_back(label_text(p, b));
  out["bottoms"] = bottoms;
  return out;
}

template <Presentation P, FieldScalar S>
Json to_json(const Category<P, S>& cat, const Morphism<P, S>& mor) {
  Json out = Json::object();
  out["preset"] = cat.presentation().name();
  out["field"] = std::string(S::field_name);
  out["n"] = mor.n;
  out["m"] = mor.m;
  Json terms = Json::array();
  for (const auto& [d, c] : mor.terms) {
    Json t = Json::object();
    t["coeff"] = c.str();
    const Json fields = diagram_to_json(cat.presentation(), d);
    for (const auto& [k, v] : fields.items()) t[k] = v;
    terms.push_back(t);
  }
  out["terms"] = terms;
  return out;
}

/// Inverse of to_json. The preset name must match; the field is informative
/// (coefficients are re-read in the category's field).
template <Presentation P, FieldScalar S>
Morphism<P, S> from_json(const Category<P, S>& cat, const Json& j) {
  try {
    if (j.contains("preset") && j.at("preset").get<std::string>() != cat.presentation().name()) {
      throw FormatError("preset mismatch: file has " + j.at("preset").get<std::string>());
    }
    const unsigned n = j.at("n").get<unsigned>();
    const unsigned m = j.at("m").get<unsigned>();
    Morphism<P, S> out = cat.zero(n, m);
    for (const auto& t : j.at("terms")) {
      BasisDiagram<P> d;
      d.pb = PartialBijection{n, m, {}};
      for (const auto& pr : t.at("pairs")) d.pb.pairs.emplace_back(pr.at(0).get<unsigned>(), pr.at(1).get<unsigned>());
      if (!d.pb.valid()) throw FormatError("pairs do not form an order-preserving partial bijection");
      for (const auto& l : t.at("tops")) d.tops.push_back(detail::read_label<typename P::Top>(cat, l, 0, 1));
      for (const auto& l : t.at("longs")) d.longs.push_back(detail::read_label<typename P::Long>(cat, l, 1, 1));
      for (const auto& l : t.at("bottoms")) d.bottoms.push_back(detail::read_label<typename P::Bottom>(cat, l, 1, 0));
      if (!valid_diagram(cat.presentation(), d)) throw FormatError("label counts do not match the pairs");
      out.terms.add(d, S::from_string(t.at("coeff").get<std::string>()));
    }
    return out;
  } catch (const FormatError&) {
    throw;
  } catch (const Json::exception& e) {
    throw FormatError(std::string("malformed morphism file: ") + e.what());
  } catch (const std::exception& e) {
    // bad label text or coefficient
    throw FormatError(std::string("malformed morphism file: ") + e.what());
  }
}

}  // namespace arcdiag
