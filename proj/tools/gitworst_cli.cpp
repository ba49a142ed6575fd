// gitworst: exact computations around worst unstable monomial subspaces —
// Hilbert polynomial decompositions, derived scalars and thresholds, state
// vectors, exhaustive and closed-form worst-point searches, membership and
// regularity reports, and normalized pairing expansions.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
// 3 enumeration budget refusal.

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "gitworst/serialize.hpp"
#include "gitworst/suites.hpp"

using namespace gitworst;

namespace {

long long env_budget() {
  if (const char* s = std::getenv("GIT_LAB_BUDGET")) {
    try {
      size_t pos = 0;
      long long v = std::stoll(s, &pos);
      if (pos != std::string(s).size() || v < 1) throw std::invalid_argument("");
      return v;
    } catch (...) {
      throw SpecError("GIT_LAB_BUDGET must be a positive integer");
    }
  }
  return kDefaultBudget;
}

/// --ideal accepts either a file of generators or the literal generator list.
std::string ideal_text(const std::string& arg) {
  std::ifstream f(arg);
  if (f.good()) return std::string(std::istreambuf_iterator<char>(f), {});
  return arg;
}

OnePS parse_lambda(const std::string& text, int r) {
  OnePS lam;
  std::string buf;
  auto flush = [&]() {
    if (buf.empty()) throw SpecError("empty weight in lambda");
    lam.weights.push_back(Int(buf));
    buf.clear();
  };
  for (char ch : text) {
    if (ch == ',') flush();
    else if (!std::isspace(static_cast<unsigned char>(ch))) buf += ch;
  }
  flush();
  if (static_cast<int>(lam.weights.size()) != r + 1)
    throw SpecError("lambda needs exactly r+1 weights");
  return lam;
}

struct Common {
  std::string format = "json";
  long long budget = 0;  // resolved after parsing (flag overrides env)
  std::optional<long long> budget_flag;
};

void emit(const Json& j, const Common& c) { std::cout << emit_report(j, c.format); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact worst-unstable-point computations for monomial subspaces"};
  app.require_subcommand(1);
  Common common;
  int verificationFailures = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", common.format, "Output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--budget", common.budget_flag,
                    "Enumeration budget (overrides GIT_LAB_BUDGET)");
  };
  auto resolve_budget = [&]() {
    common.budget = common.budget_flag ? *common.budget_flag : env_budget();
    if (common.budget < 1) throw SpecError("budget must be positive");
  };

  // --- macaulay ------------------------------------------------------------
  {
    auto* sub = app.add_subcommand("macaulay", "Binomial decomposition of a polynomial spec");
    auto r = std::make_shared<int>(0);
    auto poly = std::make_shared<std::string>();
    sub->add_option("--r", *r, "Ambient projective dimension")->required();
    sub->add_option("--poly", *poly, "Polynomial spec (const:c | goodsit:g,p | binom:c0,c1,...)")
        ->required();
    add_common(sub);
    sub->callback([&, r, poly] {
      resolve_budget();
      emit(json_macaulay(HilbertPolySpec::parse(*poly, *r)), common);
    });
  }

  // --- scalars -------------------------------------------------------------
  {
    auto* sub = app.add_subcommand("scalars", "Derived scalar functions at a degree");
    auto r = std::make_shared<int>(0);
    auto d = std::make_shared<long long>(0);
    auto poly = std::make_shared<std::string>();
    sub->add_option("--r", *r, "Ambient projective dimension")->required();
    sub->add_option("--poly", *poly, "Polynomial spec")->required();
    sub->add_option("--d", *d, "Degree (at least the Gotzmann number)")->required();
    add_common(sub);
    sub->callback([&, r, d, poly] {
      resolve_budget();
      HilbertPolySpec spec = HilbertPolySpec::parse(*poly, *r);
      emit(json_scalars(spec.derived_scalars(*d)), common);
    });
  }

  // --- thresholds ----------------------------------------------------------
  {
    auto* sub = app.add_subcommand("thresholds", "Certified stable-window thresholds");
    auto r = std::make_shared<int>(0);
    auto cap = std::make_shared<long long>(400);
    auto poly = std::make_shared<std::string>();
    sub->add_option("--r", *r, "Ambient projective dimension")->required();
    sub->add_option("--poly", *poly, "Polynomial spec")->required();
    sub->add_option("--cap", *cap, "Largest degree scanned for the certificate");
    add_common(sub);
    sub->callback([&, r, cap, poly] {
      resolve_budget();
      HilbertPolySpec spec = HilbertPolySpec::parse(*poly, *r);
      std::optional<long long> dP = threshold_DP(spec, *cap);
      std::optional<long long> dUp;
      if (spec.r() >= 2) dUp = threshold_Dup(spec, *cap);
      emit(json_thresholds(spec, *cap, dP, dUp), common);
    });
  }

  // --- state ---------------------------------------------------------------
  {
    auto* sub = app.add_subcommand("state", "State vector and adapted direction of a subspace");
    auto r = std::make_shared<int>(0);
    auto d = std::make_shared<long long>(0);
    auto members = std::make_shared<std::string>();
    sub->add_option("--r", *r, "Ambient projective dimension")->required();
    sub->add_option("--d", *d, "Degree of the subspace")->required();
    sub->add_option("members", *members, "Comma-separated monomials, e.g. x0^3,x0^2*x1")
        ->required();
    add_common(sub);
    sub->callback([&, r, d, members] {
      resolve_budget();
      MonomialSubspace W = MonomialSubspace::parse(*members, *r, static_cast<int>(*d));
      emit(json_state(state_vector(W), adapted_one_ps(W)), common);
    });
  }

  // --- worst-gr ------------------------------------------------------------
  {
    auto* sub = app.add_subcommand("worst-gr", "Worst points of the Grassmannian of subspaces");
    auto r = std::make_shared<int>(0);
    auto d = std::make_shared<long long>(0);
    auto b = std::make_shared<long long>(0);
    auto brute = std::make_shared<bool>(false);
    auto construct = std::make_shared<bool>(false);
    sub->add_option("--r", *r, "Ambient projective dimension")->required();
    sub->add_option("--d", *d, "Degree")->required();
    sub->add_option("--b", *b, "Subspace dimension")->required();
    auto* fb = sub->add_flag("--brute", *brute, "Force exhaustive search");
    sub->add_flag("--construct", *construct, "Force the closed-form route")->excludes(fb);
    add_common(sub);
    sub->callback([&, r, d, b, brute, construct] {
      resolve_budget();
      WorstReport rep = *brute       ? brute_force_Z(*r, *d, *b, common.budget)
                        : *construct ? worst_Z_construct(*r, *d, *b, common.budget)
                                     : worst_Z(*r, *d, *b, common.budget);
      emit(json_worst(rep), common);
    });
  }

  // --- worst-hilb ----------------------------------------------------------
  {
    auto* sub = app.add_subcommand("worst-hilb", "Worst points of the Hilbert scheme");
    auto r = std::make_shared<int>(0);
    auto d = std::make_shared<long long>(0);
    auto poly = std::make_shared<std::string>();
    auto brute = std::make_shared<bool>(false);
    auto construct = std::make_shared<bool>(false);
    sub->add_option("--r", *r, "Ambient projective dimension")->required();
    sub->add_option("--poly", *poly, "Polynomial spec")->required();
    sub->add_option("--d", *d, "Degree (at least the Gotzmann number)")->required();
    auto* fb = sub->add_flag("--brute", *brute, "Force exhaustive search with membership filter");
    sub->add_flag("--construct", *construct, "Force the closed-form route")->excludes(fb);
    add_common(sub);
    sub->callback([&, r, d, poly, brute, construct] {
      resolve_budget();
      HilbertPolySpec spec = HilbertPolySpec::parse(*poly, *r);
      auto construct_route = [&] {
        if (!spec.p_const())
          throw SpecError("closed form needs a hypersurface-plus-points or constant spec");
        return suite_construct_for(spec, *d, common.budget);
      };
      WorstReport rep;
      if (*brute) {
        rep = brute_force_X(*r, spec, *d, common.budget);
      } else if (*construct) {
        rep = construct_route();
      } else {
        try {
          rep = brute_force_X(*r, spec, *d, common.budget);
        } catch (const BudgetExceeded&) {
          if (!spec.p_const()) throw;
          rep = construct_route();
        }
      }
      emit(json_worst(rep), common);
    });
  }

  // --- regularity ----------------------------------------------------------
  {
    auto* sub = app.add_subcommand("regularity", "Saturation and regularity of a monomial ideal");
    auto r = std::make_shared<int>(0);
    auto ideal = std::make_shared<std::string>();
    sub->add_option("--r", *r, "Ambient projective dimension")->required();
    sub->add_option("--ideal", *ideal, "Generator list or path to a file with one")->required();
    add_common(sub);
    sub->callback([&, r, ideal] {
      resolve_budget();
      MonomialIdeal I = MonomialIdeal::parse(ideal_text(*ideal), *r);
      emit(json_regularity(regularity_report(I)), common);
    });
  }

  // --- persistence ---------------------------------------------------------
  {
    auto* sub = app.add_subcommand("persistence", "Dimension-growth membership test");
    auto r = std::make_shared<int>(0);
    auto d = std::make_shared<long long>(0);
    auto poly = std::make_shared<std::string>();
    auto members = std::make_shared<std::string>();
    sub->add_option("--r", *r, "Ambient projective dimension")->required();
    sub->add_option("--poly", *poly, "Polynomial spec")->required();
    sub->add_option("--d", *d, "Degree of the subspace")->required();
    sub->add_option("members", *members, "Comma-separated monomials")->required();
    add_common(sub);
    sub->callback([&, r, d, poly, members] {
      resolve_budget();
      HilbertPolySpec spec = HilbertPolySpec::parse(*poly, *r);
      MonomialSubspace W = MonomialSubspace::parse(*members, *r, static_cast<int>(*d));
      emit(json_persistence(persistence_check(W, spec)), common);
    });
  }

  // --- murai ---------------------------------------------------------------
  {
    auto* sub = app.add_subcommand("murai", "Divisor/exchange membership test");
    auto r = std::make_shared<int>(0);
    auto d = std::make_shared<long long>(0);
    auto poly = std::make_shared<std::string>();
    auto members = std::make_shared<std::string>();
    sub->add_option("--r", *r, "Ambient projective dimension")->required();
    sub->add_option("--poly", *poly, "Polynomial spec")->required();
    sub->add_option("--d", *d, "Degree of the subspace")->required();
    sub->add_option("members", *members, "Comma-separated monomials")->required();
    add_common(sub);
    sub->callback([&, r, d, poly, members] {
      resolve_budget();
      HilbertPolySpec spec = HilbertPolySpec::parse(*poly, *r);
      MonomialSubspace W = MonomialSubspace::parse(*members, *r, static_cast<int>(*d));
      emit(json_murai(murai_check(W, spec)), common);
    });
  }

  // --- futaki --------------------------------------------------------------
  {
    auto* sub = app.add_subcommand("futaki", "Normalized pairing expansion A0 + A1/d + o(1/d)");
    auto r = std::make_shared<int>(0);
    auto ideal = std::make_shared<std::string>();
    auto fromWorst = std::make_shared<std::string>();
    auto lambdaText = std::make_shared<std::string>();
    auto dMin = std::make_shared<long long>(0);
    sub->add_option("--r", *r, "Ambient projective dimension")->required();
    auto* oi = sub->add_option("--ideal", *ideal, "Generator list or path to a file with one");
    sub->add_option("--from-worst", *fromWorst,
                    "Use the saturated worst ideal of this polynomial spec")
        ->excludes(oi);
    sub->add_option("--lambda", *lambdaText, "Comma-separated weights w0,w1,...");
    sub->add_option("--d", *dMin, "First sampled degree");
    add_common(sub);
    sub->callback([&, r, ideal, fromWorst, lambdaText, dMin] {
      resolve_budget();
      MonomialIdeal I = MonomialIdeal::zero(*r);
      std::optional<HilbertPolySpec> spec;
      if (!fromWorst->empty()) {
        spec = HilbertPolySpec::parse(*fromWorst, *r);
        if (!spec->p_const())
          throw SpecError("closed form needs a hypersurface-plus-points or constant spec");
        WorstReport rep = suite_construct_for(*spec, suite_window_start(*spec), common.budget);
        I = MonomialIdeal::from_subspace(rep.maximizers.front()).saturation();
      } else if (!ideal->empty()) {
        I = MonomialIdeal::parse(ideal_text(*ideal), *r);
      } else {
        throw SpecError("futaki needs --ideal or --from-worst");
      }
      long long start = *dMin;
      if (start == 0)
        start = std::max<long long>(I.max_generator_degree() + *r + 2,
                                    spec ? spec->gotzmann_number() + *r + 2 : 1);
      if (!lambdaText->empty()) {
        OnePS lam = parse_lambda(*lambdaText, *r);
        FutakiExpansion fe = futaki_expansion(I, lam, start);
        emit(json_futaki(fe, fe.A1 > 0), common);
      } else {
        KInstabilityReport rep =
            spec ? k_instability_report(I, *spec)
                 : k_instability_report(I, HilbertPolySpec::constant(*r, 1), start);
        Json out;
        out["plus"] = json_futaki(rep.plus, rep.plus.A1 > 0);
        out["minus"] = json_futaki(rep.minus, rep.minus.A1 > 0);
        out["destabilized"] = rep.destabilized;
        emit(out, common);
      }
    });
  }

  // --- verify --------------------------------------------------------------
  {
    auto* sub = app.add_subcommand("verify", "Run a theorem-verification suite");
    auto name = std::make_shared<std::string>();
    sub->add_option("--suite", *name, "Suite name, or 'all'")->required();
    add_common(sub);
    sub->callback([&, name] {
      resolve_budget();
      std::vector<std::string> names =
          *name == "all" ? suite_names() : std::vector<std::string>{*name};
      Json out = Json::array();
      for (const std::string& n : names) {
        SuiteResult res = run_suite(n, common.budget);
        Json js;
        js["suite"] = res.name;
        js["passed"] = res.passed;
        js["failed"] = res.failed;
        Json cases = Json::array();
        for (const SuiteCase& c : res.cases)
          cases.push_back(Json{{"params", c.params},
                               {"expected", c.expected},
                               {"got", c.got},
                               {"pass", c.pass}});
        js["cases"] = std::move(cases);
        out.push_back(std::move(js));
        verificationFailures += res.failed;
      }
      emit(out.size() == 1 ? out.front() : out, common);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return verificationFailures == 0 ? 0 : 1;
}
