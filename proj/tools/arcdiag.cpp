// arcdiag: command-line front end for the arc-diagram engine.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "arcdiag/arcdiag.hpp"

using namespace arcdiag;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Globals {
  std::string preset = "jacobson-dg";
  std::optional<std::string> field;
  std::uint64_t seed = AcceptanceOptions{}.seed;
  bool json = false;
};

// Common report envelope. Wall time is the only nondeterministic field.
struct Report {
  std::string command;
  std::string preset;
  std::string field;
  Json parameters = Json::object();
  std::string outcome = "value";
  Json result;
  Json witnesses = Json::array();
  std::string text;  // human-readable form
};

std::size_t max_terms_from_env() {
  const char* env = std::getenv("ARCDIAG_MAX_TERMS");
  if (!env || !*env) return 1000000;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0') throw UsageError("ARCDIAG_MAX_TERMS must be a nonnegative integer");
  return static_cast<std::size_t>(v);
}

int emit(const Globals& g, Report& r, double seconds) {
  if (g.json) {
    Json out = Json::object();
    out["command"] = r.command;
    out["preset"] = r.preset;
    out["field"] = r.field;
    out["seed"] = g.seed;
    out["parameters"] = r.parameters;
    out["outcome"] = r.outcome;
    out["result"] = r.result;
    out["witnesses"] = r.witnesses;
    out["wall_time_s"] = seconds;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << r.text;
    if (!r.text.empty() && r.text.back() != '\n') std::cout << "\n";
  }
  return r.outcome == "fail" ? kFail : kOk;
}

template <class F>
int with_preset(const Globals& g, Report& r, F&& f) {
  const PresetSpec spec = parse_preset(g.preset);
  const FieldKind field = parse_field(g.field, spec);
  r.preset = preset_name(spec);
  r.field = field_name(field);
  const std::size_t cap = max_terms_from_env();
  with_category(spec, field, [&](auto& cat) {
    cat.set_max_terms(cap);
    f(cat);
    return 0;
  });
  return 0;
}

std::optional<Arity> arity_hint(const std::optional<unsigned>& n, const std::optional<unsigned>& m) {
  if (n && m) return Arity{*n, *m};
  if (n || m) throw UsageError("give both --n and --m, or neither");
  return std::nullopt;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

template <class Cat>
constexpr bool is_jacobson = std::is_same_v<typename std::decay_t<Cat>::Pres, Jacobson>;

std::string skew_text(const SkewWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.e.size(); ++i) {
    if (w.e[i] == 0) continue;
    if (!s.empty()) s += " ";
    s += "a" + std::to_string(i + 1);
    if (w.e[i] != 1) s += "^" + std::to_string(w.e[i]);
  }
  return s.empty() ? "1" : s;
}

template <FieldScalar S>
std::string skew_poly_text(const SkewPoly<S>& p) {
  if (p.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : p) {
    std::string coeff = c.str();
    const bool neg = coeff[0] == '-';
    if (neg) coeff.erase(0, 1);
    std::string term = coeff == "1" ? skew_text(w) : coeff + "*" + skew_text(w);
    out += out.empty() ? (neg ? "-" + term : term) : (neg ? " - " : " + ") + term;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbolic engine for arc-diagram monoidal categories"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Globals g;
  app.add_option("--preset", g.preset, "jacobson-dg[:d], leavitt:L or quiver-example1")->capture_default_str();
  app.add_option("--field", g.field, "gf2 or q (default: gf2 for jacobson-dg, q otherwise)");
  app.add_option("--seed", g.seed, "seed for randomized checks")->capture_default_str();
  app.add_flag("--json", g.json, "machine-readable report");

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "normal form of an expression");
  std::string expr_text;
  std::optional<unsigned> hint_n, hint_m;
  eval_cmd->add_option("EXPR", expr_text)->required();
  eval_cmd->add_option("--n", hint_n, "source arity (needed for a bare 0)");
  eval_cmd->add_option("--m", hint_m, "target arity");

  // compose
  auto* compose_cmd = app.add_subcommand("compose", "compose two morphism files, upper first");
  std::string upper_file, lower_file;
  compose_cmd->add_option("UPPER", upper_file)->required();
  compose_cmd->add_option("LOWER", lower_file)->required();

  // basis
  auto* basis_cmd = app.add_subcommand("basis", "enumerate basis diagrams");
  unsigned bn = 1, bm = 1, bw = 1;
  std::optional<int> deg_min, deg_max;
  bool count_only = false;
  basis_cmd->add_option("--n", bn)->capture_default_str();
  basis_cmd->add_option("--m", bm)->capture_default_str();
  basis_cmd->add_option("--max-weight", bw)->capture_default_str();
  basis_cmd->add_option("--deg-min", deg_min);
  basis_cmd->add_option("--deg-max", deg_max);
  basis_cmd->add_flag("--count", count_only, "print only the count");

  // count-pb
  auto* count_cmd = app.add_subcommand("count-pb", "number of partial order-preserving bijections");
  unsigned cn = 0, cm = 0;
  count_cmd->add_option("--n", cn)->required();
  count_cmd->add_option("--m", cm)->required();

  // ideal-check
  auto* ideal_cmd = app.add_subcommand("ideal-check", "random products against the ideal filtration");
  unsigned ideal_rounds = 500;
  ideal_cmd->add_option("--rounds", ideal_rounds)->capture_default_str();

  // lk
  auto* lk_cmd = app.add_subcommand("lk", "the quotient L_k");
  lk_cmd->require_subcommand(1);
  auto* lk_mul = lk_cmd->add_subcommand("mul", "product of two classes in L_k");
  std::string lk_a, lk_b;
  lk_mul->add_option("A", lk_a)->required();
  lk_mul->add_option("B", lk_b)->required();
  auto* lk_skew = lk_cmd->add_subcommand("skew", "image in the skew Laurent ring (jacobson-dg)");
  std::string lk_e;
  lk_skew->add_option("EXPR", lk_e)->required();

  // plk
  auto* plk_cmd = app.add_subcommand("plk", "the complex P(L_k) (jacobson-dg)");
  unsigned plk_k = 1, plk_n = 2, plk_w = 1;
  bool plk_d2 = false, plk_h = false;
  plk_cmd->add_option("--k", plk_k)->capture_default_str();
  plk_cmd->add_option("--max-index", plk_n)->capture_default_str();
  plk_cmd->add_option("--max-weight", plk_w, "weight bound for --homology")->capture_default_str();
  plk_cmd->add_flag("--d2", plk_d2, "check d^2 = 0");
  plk_cmd->add_flag("--homology", plk_h, "k = 1 homology check");

  // oracle check
  auto* oracle_cmd = app.add_subcommand("oracle", "truncated representation");
  oracle_cmd->require_subcommand(1);
  auto* oracle_check = oracle_cmd->add_subcommand("check", "compare two expressions on the safe window");
  std::string oc_lhs, oc_rhs;
  unsigned oc_trunc = 12, oc_weight = 2;
  oracle_check->add_option("LHS", oc_lhs, "default: every defining relation of the preset");
  oracle_check->add_option("RHS", oc_rhs);
  oracle_check->add_option("--truncation", oc_trunc)->capture_default_str();
  oracle_check->add_option("--weight", oc_weight)->capture_default_str();

  // k0
  auto* k0_cmd = app.add_subcommand("k0", "class of X^k in the Grothendieck ledger");
  unsigned k0_power_k = 1;
  std::string k0_relation;
  k0_cmd->add_option("--power", k0_power_k)->capture_default_str();
  k0_cmd->add_option("--relation", k0_relation, "solve a relation such as \"x = -x + 1\" instead");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "acceptance suite");
  verify_cmd->require_subcommand(1);
  auto* verify_all = verify_cmd->add_subcommand("all", "run all criteria");
  std::vector<int> only;
  verify_all->add_option("--only", only, "criterion numbers to run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };
  Report r;

  try {
    if (*eval_cmd) {
      r.command = "eval";
      r.parameters["expr"] = expr_text;
      with_preset(g, r, [&](auto& cat) {
        const auto m = eval(cat, expr_text, arity_hint(hint_n, hint_m));
        r.text = print(cat.presentation(), m);
        r.result = arcdiag::to_json(cat, m);
        r.result["text"] = r.text;
      });
    } else if (*compose_cmd) {
      r.command = "compose";
      r.parameters["upper"] = upper_file;
      r.parameters["lower"] = lower_file;
      with_preset(g, r, [&](auto& cat) {
        const auto upper = arcdiag::from_json(cat, read_json_file(upper_file));
        const auto lower = arcdiag::from_json(cat, read_json_file(lower_file));
        const auto m = cat.compose(upper, lower);
        r.text = print(cat.presentation(), m);
        r.result = arcdiag::to_json(cat, m);
      });
    } else if (*basis_cmd) {
      r.command = "basis";
      r.parameters = {{"n", bn}, {"m", bm}, {"max_weight", bw}};
      if (deg_min) r.parameters["deg_min"] = *deg_min;
      if (deg_max) r.parameters["deg_max"] = *deg_max;
      with_preset(g, r, [&](auto& cat) {
        std::optional<DegreeWindow> window;
        if (deg_min || deg_max) window = DegreeWindow{deg_min.value_or(INT32_MIN), deg_max.value_or(INT32_MAX)};
        std::uint64_t count = 0;
        Json list = Json::array();
        std::ostringstream text;
        cat.for_each_basis_diagram(bn, bm, bw, window, [&](const auto& d) {
          ++count;
          if (count_only) return;
          const std::string body = print_expr(*factorize(cat.presentation(), d));
          text << body << "\n";
          Json item = diagram_to_json(cat.presentation(), d);
          item["text"] = body;
          item["degree"] = diagram_degree(cat.presentation(), d);
          list.push_back(item);
        });
        text << "count " << count << "\n";
        r.text = text.str();
        r.result = {{"count", count}};
        if (!window) r.result["formula"] = cat.basis_count_formula(bn, bm, bw);
        if (!count_only) r.result["diagrams"] = list;
      });
    } else if (*count_cmd) {
      r.command = "count-pb";
      r.parameters = {{"n", cn}, {"m", cm}};
      const auto c = count_partial_bijections(cn, cm);
      r.preset = g.preset;
      r.field = g.field.value_or("");
      r.text = std::to_string(c);
      r.result = c;
    } else if (*ideal_cmd) {
      r.command = "ideal-check";
      r.parameters = {{"rounds", ideal_rounds}};
      with_preset(g, r, [&](auto& cat) {
        using Cat = std::decay_t<decltype(cat)>;
        RandomMorphisms<typename Cat::Pres, typename Cat::Scalar> rnd(cat, g.seed, 2);
        std::size_t checks = 0;
        for (unsigned i = 0; i < ideal_rounds && r.outcome != "fail"; ++i) {
          const unsigned k = rnd.uniform(1, 3);
          const int l1 = static_cast<int>(rnd.uniform(0, k));
          const int l2 = static_cast<int>(rnd.uniform(0, k));
          const auto a = rnd.morphism(k, k, 3, l1);
          const auto b = rnd.morphism(k, k, 3, l2);
          const auto h = rnd.morphism(k, k, 3);
          const bool ok = in_ideal(cat.compose(a, b), std::min(l1, l2)) && in_ideal(cat.compose(h, a), l1) &&
                          in_ideal(cat.compose(a, h), l1);
          checks += 3;
          if (!ok) {
            r.outcome = "fail";
            r.witnesses.push_back({{"g", arcdiag::to_json(cat, a)}, {"g2", arcdiag::to_json(cat, b)}, {"h", arcdiag::to_json(cat, h)},
                                   {"bound_g", l1}, {"bound_g2", l2}});
          }
        }
        if (r.outcome != "fail") r.outcome = "pass";
        r.result = {{"products", checks}};
        r.text = r.outcome + ": " + std::to_string(checks) + " products";
      });
    } else if (*lk_cmd) {
      with_preset(g, r, [&](auto& cat) {
        if (*lk_mul) {
          r.command = "lk mul";
          r.parameters = {{"a", lk_a}, {"b", lk_b}};
          const auto a = eval(cat, lk_a);
          const auto b = eval(cat, lk_b);
          const auto prod = lk_multiply(cat, project_Lk(a), project_Lk(b));
          const auto rep = lift_Lk(cat, prod);
          r.text = print(cat.presentation(), rep);
          r.result = arcdiag::to_json(cat, rep);
          r.result["text"] = r.text;
          if constexpr (is_jacobson<decltype(cat)>) {
            r.result["skew"] = skew_poly_text(lk_to_skew(prod));
            r.text += "\n" + skew_poly_text(lk_to_skew(prod));
          }
        } else {
          r.command = "lk skew";
          r.parameters = {{"expr", lk_e}};
          if constexpr (is_jacobson<decltype(cat)>) {
            const auto s = lk_to_skew(project_Lk(eval(cat, lk_e)));
            r.text = skew_poly_text(s);
            r.result = r.text;
          } else {
            throw UsageError("lk skew needs the jacobson-dg preset");
          }
        }
      });
    } else if (*plk_cmd) {
      r.command = "plk";
      r.parameters = {{"k", plk_k}, {"max_index", plk_n}};
      with_preset(g, r, [&](auto& cat) {
        if constexpr (is_jacobson<decltype(cat)>) {
          const auto cx = build_PLk(plk_k, plk_n);
          r.result = {{"terms", cx.terms.size()}, {"maps", cx.maps.size()}};
          r.text = std::to_string(cx.terms.size()) + " generators, " + std::to_string(cx.maps.size()) + " maps";
          bool ok = true;
          if (plk_d2) {
            const bool d2 = check_d_squared(cat, cx);
            r.result["d_squared_zero"] = d2;
            r.text += std::string("\nd^2 = 0: ") + (d2 ? "yes" : "no");
            ok = ok && d2;
          }
          if (plk_h) {
            if (plk_k != 1) throw UsageError("--homology is only available for k = 1");
            r.parameters["max_weight"] = plk_w;
            const auto h = homology_check_k1(cat, plk_n, plk_w);
            r.result["homology"] = {{"injective", h.injective},       {"rank", h.rank},
                                    {"codomain_dim", h.codomain_dim}, {"cokernel_dim", h.cokernel_dim},
                                    {"expected", h.expected_cokernel}};
            r.text += "\ninjective: " + std::string(h.injective ? "yes" : "no") + ", cokernel " +
                      std::to_string(h.cokernel_dim) + " (expected " + std::to_string(h.expected_cokernel) + ")";
            ok = ok && h.ok;
          }
          if (plk_d2 || plk_h) r.outcome = ok ? "pass" : "fail";
          if (!ok) r.witnesses.push_back(r.result);
        } else {
          throw UsageError("plk needs the jacobson-dg preset");
        }
      });
    } else if (*oracle_cmd) {
      r.command = "oracle check";
      r.parameters = {{"truncation", oc_trunc}, {"weight", oc_weight}};
      with_preset(g, r, [&](auto& cat) {
        using Cat = std::decay_t<decltype(cat)>;
        using P = typename Cat::Pres;
        std::vector<accept::Relation> rels;
        if (!oc_lhs.empty()) {
          if (oc_rhs.empty()) throw UsageError("oracle check needs both LHS and RHS");
          rels.push_back({oc_lhs, oc_rhs});
        } else if constexpr (std::is_same_v<P, Jacobson>) {
          rels = accept::jacobson_relations();
        } else if constexpr (std::is_same_v<P, Leavitt>) {
          rels = accept::leavitt_relations(cat.presentation().loops());
        } else {
          rels = accept::quiver_relations();
        }
        Oracle<P, typename Cat::Scalar> oracle(cat.presentation(), oc_trunc);
        using Op = typename Oracle<P, typename Cat::Scalar>::Op;
        std::vector<std::pair<Op, Op>> pairs;
        for (const auto& rel : rels) {
          const auto lhs = oracle.rep_expr(*parse(rel.lhs));
          pairs.emplace_back(lhs, oracle.rep_expr(*parse(rel.rhs), std::pair{lhs.n(), lhs.m()}));
        }
        const auto res = oracle.equal_on_window(pairs, oc_weight);
        Json list = Json::array();
        std::ostringstream text;
        bool all = true;
        for (std::size_t i = 0; i < rels.size(); ++i) {
          list.push_back({{"lhs", rels[i].lhs}, {"rhs", rels[i].rhs}, {"equal", res[i].equal},
                          {"inputs_checked", res[i].inputs_checked}});
          text << (res[i].equal ? "ok   " : "FAIL ") << rels[i].lhs << " = " << rels[i].rhs << "  ("
               << res[i].inputs_checked << " inputs)\n";
          if (!res[i].equal) {
            all = false;
            r.witnesses.push_back({{"lhs", rels[i].lhs}, {"rhs", rels[i].rhs}, {"input", res[i].witness}});
          }
        }
        r.result = list;
        r.outcome = all ? "pass" : "fail";
        r.text = text.str();
      });
    } else if (*k0_cmd) {
      r.command = "k0";
      if (!k0_relation.empty()) {
        r.parameters = {{"relation", k0_relation}};
        r.preset = g.preset;
        r.field = g.field.value_or("");
        try {
          const auto x = ledger_reduce(k0_relation);
          r.result = x.str();
          r.text = x.str();
        } catch (const K0Error& e) {
          if (e.kind() == K0Error::Kind::Syntax) throw UsageError(e.what());
          r.result = {{"error", e.kind() == K0Error::Kind::Collapse ? "collapse" : "undetermined"},
                      {"message", e.what()}};
          r.text = e.kind() == K0Error::Kind::Collapse ? std::string("collapse: ") + e.what() : e.what();
        }
      } else {
        r.parameters = {{"power", k0_power_k}};
        with_preset(g, r, [&](auto& cat) {
          const auto iso = verify_iso_pair(cat, 1);
          r.result = Json::object();
          r.result["iso_pair_verified"] = iso.ok();
          try {
            const auto x = k0_class_of_power(cat, k0_power_k);
            r.result["class"] = x.str();
            r.text = x.str();
          } catch (const K0Error& e) {
            r.result["class"] = nullptr;
            r.result["error"] = e.what();
            r.text = e.what();
          }
          r.text += std::string("\nisomorphism pair verified: ") + (iso.ok() ? "yes" : "no");
          if (!iso.ok()) {
            r.outcome = "fail";
            r.witnesses.push_back({{"well_formed", iso.well_formed},
                                   {"row_col_identity", iso.row_col_identity},
                                   {"col_row_identity", iso.col_row_identity}});
          }
        });
      }
    } else if (*verify_cmd) {
      r.command = "verify all";
      r.preset = g.preset;
      r.field = g.field.value_or("");
      // the suite spans every preset and both fields; --preset and --field
      // are recorded but do not narrow it
      parse_preset(g.preset);
      AcceptanceOptions opt;
      opt.seed = g.seed;
      Json list = Json::array();
      std::ostringstream text;
      bool all = true;
      run_acceptance(opt, only, [&](const CriterionResult& c) {
        Json item = {{"id", c.id}, {"title", c.title}, {"pass", c.pass}, {"detail", c.detail}};
        list.push_back(item);
        if (!c.pass) {
          all = false;
          r.witnesses.push_back({{"id", c.id}, {"witness", c.witness}});
        }
        if (!g.json) {
          std::cout << "criterion " << c.id << ": " << (c.pass ? "PASS" : "FAIL") << "  " << c.title << "  ["
                    << c.detail << "]" << std::endl;
          if (!c.pass && !c.witness.empty()) std::cout << "  witness: " << c.witness << std::endl;
        }
      });
      r.result = list;
      r.outcome = all ? "pass" : "fail";
      r.text = all ? "all criteria passed" : "some criteria failed";
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error at " << e.position() << ": " << e.what() << "\n";
    return kUsage;
  } catch (const ArityError& e) {
    std::cerr << "arity error: " << e.what() << "\n";
    return kUsage;
  } catch (const TermLimitError& e) {
    std::cerr << "term limit: " << e.what() << "\n";
    return kUsage;
  } catch (const FormatError& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  return emit(g, r, elapsed());
}
