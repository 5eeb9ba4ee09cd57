#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stabkit/bounds.hpp"
#include "stabkit/catalog.hpp"
#include "stabkit/error.hpp"
#include "stabkit/report.hpp"
#include "stabkit/scenario.hpp"
#include "stabkit/verify.hpp"

namespace {

using namespace stabkit;
using ordered_json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kBadInput = 2;
constexpr int kHypothesis = 3;

constexpr const char* kGrammar = R"(Scenario references:
  knot       id | sum(knot, knot, ...) | sum^n(knot)         e.g. sum^3(9_46)
  discs      term+term+...  one term per summand, term = name[^n] or id.name[^n]
             e.g. left^3   left+right   9_46.left+6_1.std
  two-knot   part # part ...  part = unknot | double(id.disc)[^n]
             e.g. double(9_46.right)^2
  satellite  thmC(g=1) | thmC(N=5, base=6_1.std, companion=6_1.std)
             or JSON {"base","base_disc","companion","companion_disc","copies"}
Built-in catalog: 9_46 (discs left, right), 6_1 (disc std), unknot (disc std).
Exit codes: 0 ok, 1 verify mismatch, 2 malformed input or unknown reference,
3 hypothesis failure.)";

struct Options {
  bool json = false;
  std::string catalog_path;
  unsigned seed = 0;
  bool seeded = false;
};

template <EuclideanRing R>
std::vector<std::string> formatted(const std::vector<R>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(RingTraits<R>::format(x));
  return out;
}

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ", ") + x;
  return "(" + out + ")";
}

/// Integral primitive representative with positive lowest coefficient, t^0 lowest.
std::string integral_polynomial(const LaurentPolyQ& p) {
  if (p.is_zero()) return "0";
  Integer den = 1;
  for (const auto& [e, c] : p.terms()) den = lcm(den, Integer(c.get_den()));
  Integer content = 0;
  for (const auto& [e, c] : p.terms()) content = gcd(content, Integer(c * den));
  IntLaurentPoly out;
  for (const auto& [e, c] : p.terms())
    out = out + IntLaurentPoly::monomial(Integer(c * den / content), e - p.low_exponent());
  if (out.trailing() < 0) out = -out;
  return to_string(out);
}

void emit(const Options& opt, const ordered_json& j, const std::string& text) {
  if (opt.json)
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text;
}

Catalog load_catalog(const Options& opt) {
  Catalog c = Catalog::builtin();
  if (!opt.catalog_path.empty()) c.merge_file(opt.catalog_path);
  return c;
}

int cmd_alexander(const Options& opt, const std::string& ref) {
  Catalog cat = load_catalog(opt);
  auto k = resolve_knot(cat, ref);
  auto pres = alexander_presentation(k.knot);
  auto m = alexander_module_q(k.knot);
  auto factors = formatted(invariant_factors(m));
  auto ord = order(m);
  std::size_t gr = generating_rank(m);

  ordered_json j;
  j["knot"] = ref;
  j["genus"] = k.knot.genus();
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < pres.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < pres.cols(); ++c) row.push_back(to_string(pres(i, c)));
    rows.push_back(row);
  }
  j["presentation"] = rows;
  j["invariant_factors"] = factors;
  j["order"] = to_string(ord);
  j["alexander_polynomial"] = integral_polynomial(ord);
  j["generating_rank"] = gr;

  std::ostringstream text;
  text << "knot                  " << ref << "\n"
       << "genus                 " << k.knot.genus() << "\n"
       << "presentation tV-V^T   " << to_string(pres) << "\n"
       << "invariant factors     " << join(factors) << "\n"
       << "order                 " << to_string(ord) << "\n"
       << "alexander polynomial  " << integral_polynomial(ord) << "\n"
       << "generating rank       " << gr << "\n";
  emit(opt, j, text.str());
  return kOk;
}

ordered_json module_json(const PresentedModule<LaurentPolyQ>& m) {
  ordered_json j;
  j["invariant_factors"] = formatted(invariant_factors(m));
  j["order"] = to_string(order(m));
  j["generating_rank"] = generating_rank(m);
  return j;
}

std::string module_text(const ordered_json& j) {
  std::vector<std::string> f = j["invariant_factors"];
  return join(f) + ", gr " + std::to_string(j["generating_rank"].get<std::size_t>());
}

int cmd_kernels(const Options& opt, const std::string& ref, const std::string& discs) {
  Catalog cat = load_catalog(opt);
  auto k = resolve_knot(cat, ref);
  std::vector<SurgeryDisc> ds;
  for (const auto& spec : split_top_level(discs, ',')) ds.push_back(resolve_disc(cat, k, spec));
  std::vector<Submodule<LaurentPolyQ>> kernels;
  for (const auto& d : ds) kernels.push_back(disc_kernel_q(d));

  ordered_json j;
  j["knot"] = ref;
  j["discs"] = ordered_json::array();
  std::ostringstream text;
  text << "knot " << ref << "\n";
  for (std::size_t i = 0; i < ds.size(); ++i) {
    ordered_json d;
    d["name"] = ds[i].name();
    d["kernel"] = module_json(submodule_presentation(kernels[i]));
    d["quotient"] = module_json(disc_module_q(ds[i]));
    text << "disc " << ds[i].name() << "\n"
         << "  kernel        " << module_text(d["kernel"]) << "\n"
         << "  A(D)          " << module_text(d["quotient"]) << "\n";
    j["discs"].push_back(d);
  }
  j["pairs"] = ordered_json::array();
  for (std::size_t a = 0; a < ds.size(); ++a)
    for (std::size_t b = a + 1; b < ds.size(); ++b) {
      ordered_json p;
      p["first"] = ds[a].name();
      p["second"] = ds[b].name();
      p["intersection"] = module_json(submodule_presentation(submodule_intersection(kernels[a], kernels[b])));
      p["second_mod_first"] = module_json(quotient_of_submodules(kernels[b], kernels[a]));
      p["first_mod_second"] = module_json(quotient_of_submodules(kernels[a], kernels[b]));
      text << "pair " << ds[a].name() << ", " << ds[b].name() << "\n"
           << "  P1 ∩ P2       " << module_text(p["intersection"]) << "\n"
           << "  P2/(P1 ∩ P2)  " << module_text(p["second_mod_first"]) << "\n"
           << "  P1/(P1 ∩ P2)  " << module_text(p["first_mod_second"]) << "\n";
      j["pairs"].push_back(p);
    }
  emit(opt, j, text.str());
  return kOk;
}

int print_report(const Options& opt, const BoundReport& r) {
  std::cout << (opt.json ? format_json(r) + "\n" : format_text(r));
  return kOk;
}

/// Randomized SNF self-checks over Z and Z[w] for replay with --seed.
std::vector<CheckResult> seeded_checks(unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> entry(-6, 6);
  std::vector<CheckResult> out;
  auto check = [&](const std::string& anchor, auto make) {
    CheckResult r{"seed", anchor, true, "seed " + std::to_string(seed), 0};
    for (int i = 0; i < 50 && r.passed; ++i) {
      auto m = make();
      auto s = smith_normal_form(m, {true, true, {}});
      if (!(s.U * m * s.V == s.D)) {
        r.passed = false;
        r.detail = "U M V != D for " + to_string(m);
      }
      for (std::size_t k = 1; k < s.invariant_factors.size() && r.passed; ++k)
        if (!divides(s.invariant_factors[k - 1], s.invariant_factors[k])) {
          r.passed = false;
          r.detail = "divisibility chain broken for " + to_string(m);
        }
    }
    out.push_back(r);
  };
  check("SNF over Z: U M V = D, d_i | d_(i+1)", [&] {
    Matrix<Integer> m(3, 4);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t c = 0; c < 4; ++c) m(i, c) = entry(rng);
    return m;
  });
  check("SNF over Z[w]: U M V = D, d_i | d_(i+1)", [&] {
    Matrix<EisensteinInt> m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t c = 0; c < 3; ++c) m(i, c) = EisensteinInt(Integer(entry(rng)), Integer(entry(rng)));
    return m;
  });
  return out;
}

int cmd_verify(const Options& opt, bool timing) {
  std::vector<CheckResult> results;
  try {
    Catalog cat = load_catalog(opt);
    results = run_verification(cat);
  } catch (const Error& e) {
    results.push_back({"cat", "catalog load", false, e.what(), 0});
  }
  if (opt.seeded)
    for (auto& r : seeded_checks(opt.seed)) results.push_back(std::move(r));
  bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  if (opt.json) {
    ordered_json j = ordered_json::array();
    for (const auto& r : results) {
      ordered_json c;
      c["group"] = r.group;
      c["anchor"] = r.anchor;
      c["passed"] = r.passed;
      c["detail"] = r.detail;
      if (timing) c["seconds"] = r.seconds;
      j.push_back(c);
    }
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << format_verification(results, timing);
  }
  if (!ok) {
    for (const auto& r : results)
      if (!r.passed) std::cerr << "mismatch: " << r.anchor << ": " << r.detail << '\n';
    return kMismatch;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stabilization-distance bounds from Alexander modules and metabelian invariants"};
  app.footer(kGrammar);
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "Emit JSON instead of text");
  app.add_option("--catalog", opt.catalog_path, "JSON catalog whose entries override the built-ins");
  auto* seed = app.add_option("--seed", opt.seed, "Seed for the randomized self-checks in verify");

  std::string knot_ref, disc_specs;
  auto* alexander = app.add_subcommand("alexander", "Alexander module of a knot");
  alexander->add_option("knot", knot_ref, "Knot reference")->required();

  auto* kernels = app.add_subcommand("kernels", "Disc kernels, pairwise intersections and quotients");
  kernels->add_option("knot", knot_ref, "Knot reference")->required();
  kernels->add_option("discs", disc_specs, "Comma-separated disc specs, e.g. left,right")->required();

  auto* bound = app.add_subcommand("bound", "Lower and upper distance bounds");
  bound->require_subcommand(1);
  std::string two_knot, versus = "unknot", scenario;
  auto* d1 = bound->add_subcommand("d1", "1-handle stabilization distance of two 2-knots");
  d1->add_option("--two-knot", two_knot, "Two-knot reference")->required();
  d1->add_option("--vs", versus, "Second two-knot reference")->capture_default_str();
  auto* d2 = bound->add_subcommand("d2", "Generalized stabilization distance of two discs");
  d2->add_option("--knot", knot_ref, "Knot reference")->required();
  d2->add_option("--discs", disc_specs, "Two comma-separated disc specs")->required();
  auto* meta = bound->add_subcommand("metabelian", "Metabelian bound for a satellite scenario");
  meta->add_option("--scenario", scenario, "thmC(...) or scenario JSON")->required();

  bool timing = false;
  auto* verify = app.add_subcommand("verify", "Replay the reference computations");
  verify->add_flag("--timing", timing, "Show per-check wall time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }
  opt.seeded = seed->count() > 0;

  try {
    if (*alexander) return cmd_alexander(opt, knot_ref);
    if (*kernels) return cmd_kernels(opt, knot_ref, disc_specs);
    if (*verify) return cmd_verify(opt, timing);
    Catalog cat = load_catalog(opt);
    if (*d1)
      return print_report(opt, full_report(TwoKnotPair{resolve_two_knot(cat, two_knot),
                                                       resolve_two_knot(cat, versus)}));
    if (*d2) {
      auto k = resolve_knot(cat, knot_ref);
      auto specs = split_top_level(disc_specs, ',');
      if (specs.size() != 2) throw Error(ErrorKind::InvalidInput, "bound d2 needs exactly two disc specs");
      return print_report(opt, full_report(DiscPair{resolve_disc(cat, k, specs[0]),
                                                    resolve_disc(cat, k, specs[1])}));
    }
    if (*meta) return print_report(opt, full_report(resolve_satellite(cat, scenario)));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Hypothesis) {
      std::cerr << "hypothesis failed: " << e.what() << '\n';
      return kHypothesis;
    }
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kOk;
}
