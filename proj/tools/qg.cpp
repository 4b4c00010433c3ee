// qg: command-line front end for the quantum group library.

#include <qg/io.hpp>
#include <qg/parser.hpp>
#include <qg/verify.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace qg;

namespace {

enum Exit { Ok = 0, VerifyFail = 1, Usage = 2, Capacity = 3 };

struct RunConfig {
  std::string type = "A1";
  int rank = 0;
  std::string variant = "Utilde";
  std::optional<int> bound;
  bool json = false;
  std::string json_path;
  bool csv = false;
  unsigned seed = 1;

  CartanDatum cartan() const { return parse_cartan(type, rank); }
  AlgebraPtr algebra() const { return Algebra::get(cartan(), parse_variant(variant)); }
};

class UsageError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void emit_json(const RunConfig &cfg, const json &j) {
  if (cfg.json_path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(cfg.json_path);
  if (!out)
    throw UsageError("cannot open " + cfg.json_path + " for writing");
  out << j.dump(2) << "\n";
}

void print_element(const RunConfig &cfg, const Element &x) {
  if (cfg.json)
    emit_json(cfg, element_to_json(x));
  else
    std::cout << x.to_string() << "\n";
}

std::string csv_field(std::string s) {
  if (s.find_first_of(",\"") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char ch : s)
    out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

std::string pbw_expansion_string(const Element &x) {
  std::string s;
  for (const auto &[m, c] : expand_pbw(x)) {
    if (!s.empty())
      s += " + ";
    s += "(" + c.to_string() + ")*" + pbw_to_string(m);
  }
  return s.empty() ? "0" : s;
}

Weight filled(const CartanDatum &cd, int n) { return Weight(static_cast<std::size_t>(cd.rank()), n); }

// dcb ----------------------------------------------------------------------

struct DcbOpts {
  std::optional<int> wplus, wminus;
};

int cmd_dcb(const RunConfig &cfg, const DcbOpts &o) {
  const CartanDatum cd = cfg.cartan();
  const Variant var = parse_variant(cfg.variant);
  if (var != Variant::Utilde && var != Variant::Uhat)
    throw UsageError("dcb needs the Utilde or Uhat presentation");
  const int dflt = cfg.bound.value_or(1);
  const int wp = o.wplus.value_or(dflt), wm = o.wminus.value_or(dflt);
  if (wp < 0 || wm < 0)
    throw UsageError("weight bounds must be nonnegative");
  const AlgebraPtr alg = Algebra::get(cd, var);
  const bool rank_one = cd.name() == "A1";

  json rows = json::array();
  if (cfg.csv)
    std::cout << "index,element,pbw,bar_fixed" << (rank_one ? ",label" : "") << "\n";
  for (const Weight &p : detail::boxes(filled(cd, wp)))
    for (const Weight &m : detail::boxes(filled(cd, wm))) {
      const DCBFamily &fam = cb_family(cd, GammaDegree{p, m});
      for (std::size_t k = 0; k < fam.index.size(); ++k) {
        const DCBIndex &idx = fam.index[k];
        const Element x = fam.elements[k].reinterpret(alg);
        const bool fixed = bar(x) == x;
        std::string label;
        if (rank_one) {
          const int l = idx.alpha[0] + idx.beta[0];
          label = "L" + to_string(LDomPair{idx.alpha[0], idx.beta[0], idx.c[0] + l, idx.a[0] + l});
        }
        if (cfg.json) {
          json row{{"index", dcb_index_json(idx)},
                   {"element", x.to_string()},
                   {"pbw", element_to_json(x)},
                   {"bar_fixed", fixed}};
          if (rank_one)
            row["label"] = label;
          rows.push_back(row);
        } else if (cfg.csv) {
          std::cout << csv_field(dcb_index_to_string(idx)) << "," << csv_field(x.to_string()) << ","
                    << csv_field(pbw_expansion_string(x)) << "," << (fixed ? "true" : "false")
                    << (rank_one ? "," + label : "") << "\n";
        } else {
          std::cout << dcb_index_to_string(idx);
          if (rank_one)
            std::cout << "  " << label;
          std::cout << "\n  element: " << x.to_string() << "\n  pbw:     " << pbw_expansion_string(x)
                    << "\n  bar-fixed: " << (fixed ? "true" : "false") << "\n";
        }
      }
    }
  if (cfg.json)
    emit_json(cfg, json{{"presentation", presentation_json(alg)},
                        {"wplus", wp},
                        {"wminus", wm},
                        {"elements", rows}});
  return Ok;
}

// expand -------------------------------------------------------------------

int cmd_expand(const RunConfig &cfg, const std::string &expr, bool pbw) {
  const Element x = parse_element(expr, cfg.algebra());
  if (pbw) {
    if (cfg.json)
      emit_json(cfg, element_to_json(x));
    else
      std::cout << pbw_expansion_string(x) << "\n";
    return Ok;
  }
  const Expansion e = expand_in_dcb(x, cfg.bound);
  if (cfg.json) {
    emit_json(cfg, expansion_to_json(e));
  } else if (cfg.csv) {
    std::cout << "index,coefficient\n";
    for (const auto &[i, c] : e.coeffs)
      std::cout << csv_field(dcb_index_to_string(i)) << "," << csv_field(c.to_string()) << "\n";
  } else {
    for (const auto &[i, c] : e.coeffs)
      std::cout << "(" << c.to_string() << ") * C[" << dcb_index_to_string(i) << "]\n";
    if (e.coeffs.empty())
      std::cout << "0\n";
  }
  return Ok;
}

// sl2 ----------------------------------------------------------------------

void print_table(const RunConfig &cfg, const DCBExpansion &e) {
  if (cfg.json) {
    emit_json(cfg, dcb_expansion_to_json(e));
    return;
  }
  std::cout << "v1,v2,w1,w2,coefficient\n";
  for (const auto &[p, c] : e)
    std::cout << p.v1 << "," << p.v2 << "," << p.w1 << "," << p.w2 << "," << csv_field(c.to_string())
              << "\n";
}

LDomPair pair_from(const std::vector<int> &v, const std::vector<int> &w) {
  if (v.size() != 2 || w.size() != 2)
    throw UsageError("--v and --w take two integers each");
  return LDomPair{v[0], v[1], w[0], w[1]};
}

AlgebraPtr sl2_alg(const RunConfig &cfg) {
  const CartanDatum cd = cfg.cartan();
  if (cd.name() != "A1")
    throw UsageError("sl2 commands need type A1");
  return Algebra::get(cd, parse_variant(cfg.variant));
}

// verify -------------------------------------------------------------------

int cmd_verify(const RunConfig &cfg, const std::string &suite) {
  const CartanDatum cd = cfg.cartan();
  std::vector<std::string> names;
  if (suite == "all")
    names = suite_names();
  else if (std::find(suite_names().begin(), suite_names().end(), suite) != suite_names().end())
    names = {suite};
  else
    throw UsageError("unknown suite '" + suite + "'");
  bool ok = true;
  json reports = json::array();
  for (const std::string &n : names) {
    const SuiteReport r = run_suite(n, cd, cfg.bound.value_or(0), cfg.seed);
    ok = ok && r.pass;
    if (cfg.json) {
      reports.push_back(json{{"suite", r.suite},
                             {"type", cd.name()},
                             {"pass", r.pass},
                             {"checks", r.checks},
                             {"failures", r.failures}});
    } else {
      std::cout << r.suite << " " << cd.name() << ": " << (r.pass ? "PASS" : "FAIL") << " ("
                << r.checks << " checks)\n";
      for (const std::string &f : r.failures)
        std::cout << "  failed: " << f << "\n";
    }
  }
  if (cfg.json)
    emit_json(cfg, reports);
  return ok ? Ok : VerifyFail;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact computations in Drinfeld double quantum groups"};
  app.fallthrough();
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--type", cfg.type, "Cartan type, e.g. A1, A2, D4, or a letter with --rank");
  app.add_option("--rank", cfg.rank, "rank when --type is a bare letter");
  app.add_option("--variant", cfg.variant, "presentation: Utilde, Uhat, Hplus, Hminus");
  app.add_option("--bound", cfg.bound, "weight/degree bound")->check(CLI::NonNegativeNumber);
  auto *json_opt =
      app.add_option("--json", cfg.json_path, "JSON output, optionally to a file")->expected(0, 1);
  app.add_flag("--csv", cfg.csv, "CSV output");
  app.add_option("--seed", cfg.seed, "seed for randomized suites");

  std::string expr, expr2;
  int result = Ok;
  std::function<int()> run;

  auto *nf = app.add_subcommand("normal-form", "print the PBW normal form of an expression");
  nf->add_option("expr", expr)->required();
  nf->callback([&] { run = [&] { print_element(cfg, parse_element(expr, cfg.algebra())); return int(Ok); }; });

  auto *mul = app.add_subcommand("multiply", "multiply two expressions");
  mul->add_option("x", expr)->required();
  mul->add_option("y", expr2)->required();
  mul->callback([&] {
    run = [&] {
      const AlgebraPtr alg = cfg.algebra();
      print_element(cfg, parse_element(expr, alg) * parse_element(expr2, alg));
      return int(Ok);
    };
  });

  std::string op;
  int index = 1;
  std::string dir = "fwd";
  auto *apply = app.add_subcommand("apply", "apply an involution or braid operator");
  apply->add_option("--op", op, "bar, star, transpose, chevalley or braid")->required();
  apply->add_option("--index", index, "braid index (1-based)");
  apply->add_option("--dir", dir, "braid direction: fwd or inv");
  apply->add_option("expr", expr)->required();
  apply->callback([&] {
    run = [&] {
      const Element x = parse_element(expr, cfg.algebra());
      if (op == "braid") {
        if (dir != "fwd" && dir != "inv")
          throw UsageError("--dir must be fwd or inv");
        if (index < 1 || index > cfg.cartan().rank())
          throw UsageError("--index out of range");
        print_element(cfg, braid(index - 1, dir == "fwd" ? BraidDir::Fwd : BraidDir::Inv, x));
      } else {
        print_element(cfg, involution(parse_involution(op), x));
      }
      return int(Ok);
    };
  });

  auto *pair = app.add_subcommand("pair", "Hopf pairing (y, x) with y in U^- and x in U^+");
  pair->add_option("y", expr)->required();
  pair->add_option("x", expr2)->required();
  pair->callback([&] {
    run = [&] {
      const AlgebraPtr alg = cfg.algebra();
      const RatFunc c = hopf_pair(parse_element(expr, alg), parse_element(expr2, alg));
      if (cfg.json)
        emit_json(cfg, coeff_to_json(c));
      else
        std::cout << c.to_string() << "\n";
      return int(Ok);
    };
  });

  DcbOpts dopts;
  auto *dcb = app.add_subcommand("dcb", "list double canonical basis elements up to a bound");
  dcb->add_option("--wplus", dopts.wplus, "bound on the E-degree");
  dcb->add_option("--wminus", dopts.wminus, "bound on the F-degree");
  dcb->callback([&] { run = [&] { return cmd_dcb(cfg, dopts); }; });

  bool in_dcb = false, in_pbw = false;
  auto *expand = app.add_subcommand("expand", "expand an expression in a basis");
  auto *g1 = expand->add_flag("--in-dcb", in_dcb, "double canonical basis (default)");
  expand->add_flag("--pbw", in_pbw, "PBW basis")->excludes(g1);
  expand->add_option("expr", expr)->required();
  expand->callback([&] { run = [&] { return cmd_expand(cfg, expr, in_pbw); }; });

  auto *sl2 = app.add_subcommand("sl2", "rank-one closed formulas");
  sl2->require_subcommand(1);
  std::vector<int> vv, ww;
  auto *sl2L = sl2->add_subcommand("L", "closed form of L(v,w)");
  sl2L->add_option("--v", vv)->expected(2)->required();
  sl2L->add_option("--w", ww)->expected(2)->required();
  sl2L->callback([&] {
    run = [&] { print_element(cfg, L_closed_form(pair_from(vv, ww), sl2_alg(cfg))); return int(Ok); };
  });
  auto *sl2pi = sl2->add_subcommand("pi", "decomposition of pi(v,w) into L(v',w)");
  sl2pi->add_option("--v", vv)->expected(2)->required();
  sl2pi->add_option("--w", ww)->expected(2)->required();
  sl2pi->callback([&] { run = [&] { print_table(cfg, pi_decompose(pair_from(vv, ww))); return int(Ok); }; });
  int ea = 0, eb = 0;
  auto *sl2ef = sl2->add_subcommand("ef-expand", "E^a F^b in the dual canonical basis");
  sl2ef->add_option("a", ea)->required();
  sl2ef->add_option("b", eb)->required();
  sl2ef->callback([&] { run = [&] { print_table(cfg, ef_expand(ea, eb)); return int(Ok); }; });
  int cm = 0;
  auto *sl2c = sl2->add_subcommand("casimir", "divided Casimir C^(m)");
  sl2c->add_option("m", cm)->required();
  sl2c->callback([&] { run = [&] { print_element(cfg, casimir(cm, sl2_alg(cfg))); return int(Ok); }; });

  std::string suite;
  auto *ver = app.add_subcommand("verify", "run an invariant suite");
  ver->add_option("--suite", suite, "relations, braid, binomials, oracle, positivity, involutions, "
                                    "pairing, pbw or all")
      ->required();
  ver->callback([&] { run = [&] { return cmd_verify(cfg, suite); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? Ok : Usage;
  }
  cfg.json = json_opt->count() > 0;

  try {
    result = run();
  } catch (const CapacityError &e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return Capacity;
  } catch (const ParseError &e) {
    std::cerr << e.what() << "\n";
    return Usage;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return Usage;
  } catch (const std::domain_error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return Usage;
  } catch (const std::out_of_range &e) {
    std::cerr << "error: " << e.what() << "\n";
    return Usage;
  }
  std::cout.flush();
  return result;
}
