// Command-line front end: build catalog algebras, check algebra files,
// report structural invariants, and run the verification suites.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nlie/catalog.hpp"
#include "nlie/io.hpp"
#include "nlie/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

nlie::Rational parse_rational_flag(const std::string& s, const std::string& flag) {
  auto r = nlie::parse_rational(s);
  if (!r) throw UsageError(flag + ": expected a rational \"p/q\", got \"" + s + "\"");
  return *r;
}

std::vector<int> parse_sign_string(const std::string& s, const std::string& flag) {
  std::vector<int> signs;
  for (char c : s) {
    if (c == '+')
      signs.push_back(1);
    else if (c == '-')
      signs.push_back(-1);
    else
      throw UsageError(flag + ": expected a string of '+'/'-', got \"" + s + "\"");
  }
  return signs;
}

int parse_sign_flag(const std::string& s, const std::string& flag) {
  if (s == "+" || s == "+1" || s == "1") return 1;
  if (s == "-" || s == "-1") return -1;
  throw UsageError(flag + ": expected +1 or -1, got \"" + s + "\"");
}

nlie::SymForm parse_gram_flag(const std::string& s, int dim) {
  if (s == "identity") return nlie::SymForm::identity(dim);
  std::vector<int> signs = parse_sign_string(s, "--gram");
  if (signs.size() != static_cast<std::size_t>(dim))
    throw UsageError("--gram: expected " + std::to_string(dim) + " signs");
  std::vector<nlie::Rational> diag;
  for (int e : signs) diag.emplace_back(e);
  return nlie::SymForm::diagonal(diag);
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------------------
// catalog
// ---------------------------------------------------------------------------

int run_catalog(const std::string& family, int n, const std::string& eps, int m,
                const std::string& c_str, const std::string& x_sign,
                const std::string& e1_sign, int dim, int k, const std::string& gram,
                const std::string& tail_gram) {
  nlie::MetricNLie result = [&] {
    if (family == "simple" || family == "trivial-ext") {
      nlie::SimpleParams p;
      p.n = n;
      p.epsilons = eps.empty() ? std::vector<int>(n + 1, 1) : parse_sign_string(eps, "--eps");
      if (family == "simple") return nlie::simple_real(p);
      nlie::SymForm tail = tail_gram == "identity" ? nlie::SymForm::identity(k)
                                                   : parse_gram_flag(tail_gram, k);
      return nlie::trivial_extension(p, k, tail);
    }
    if (family == "case1" || family == "case2" || family == "case3") {
      nlie::FamilyParams p;
      p.n = n;
      p.family_case = family.back() - '0';
      p.m = m >= 0 ? m : p.eps_range().second;  // default: all +1
      p.c = parse_rational_flag(c_str, "--c");
      p.x_sign = parse_sign_flag(x_sign, "--x-sign");
      p.e1_sign = parse_sign_flag(e1_sign, "--e1-sign");
      return nlie::family_n3(p);
    }
    if (family == "abelian") {
      return nlie::abelian(n, dim, parse_gram_flag(gram, dim));
    }
    throw UsageError("unknown family \"" + family +
                     "\" (expected simple, case1, case2, case3, trivial-ext, abelian)");
  }();
  nlie::SymForm form = result.form();
  std::cout << nlie::algebra_to_json(result.algebra(), &form).dump(2) << "\n";
  return kExitPass;
}

// ---------------------------------------------------------------------------
// check / invariants
// ---------------------------------------------------------------------------

nlohmann::json build_report(const nlie::AlgebraFile& file, bool& all_pass) {
  using nlie::json;
  const nlie::NLieAlgebra& a = file.algebra;
  json rep;
  rep["arity"] = a.arity();
  rep["dim"] = a.dim();
  json witnesses = json::object();
  all_pass = true;

  auto jacobi = a.check_jacobi(1);
  rep["jacobi"] = jacobi.empty() ? "pass" : "fail";
  if (!jacobi.empty()) {
    all_pass = false;
    witnesses["jacobi"] = json{{"left", jacobi[0].left},
                               {"right", jacobi[0].right},
                               {"defect", nlie::detail::vector_json(jacobi[0].defect)}};
  }
  nlie::Subspace derived = a.derived_algebra();
  nlie::Subspace center = a.center();
  rep["dim_derived"] = derived.dim();
  rep["dim_center"] = center.dim();

  if (!file.form) {
    rep["invariance"] = "not-applicable";
    rep["center_perp"] = "not-applicable";
    rep["signature"] = nullptr;
    rep["center_isotropic"] = nullptr;
  } else {
    nlie::MetricNLie m = nlie::MetricNLie::raw(a, *file.form);
    bool nondeg = file.form->is_nondegenerate();
    rep["form_nondegenerate"] = nondeg ? "pass" : "fail";
    auto [p, q] = file.form->signature();
    rep["signature"] = json{{"positive", p}, {"negative", q}};
    auto inv = m.check_invariance(1);
    rep["invariance"] = inv.empty() ? "pass" : "fail";
    if (!inv.empty()) {
      all_pass = false;
      witnesses["invariance"] = json{{"left", inv[0].left},
                                     {"u", inv[0].u},
                                     {"v", inv[0].v},
                                     {"defect", nlie::to_string(inv[0].defect)}};
    }
    if (!nondeg) {
      all_pass = false;
      witnesses["form"] = "Gram matrix is degenerate";
      rep["center_perp"] = "not-applicable";
      rep["center_isotropic"] = nullptr;
    } else {
      bool perp = m.verify_center_perp();
      rep["center_perp"] = perp ? "pass" : "fail";
      if (!perp) {
        all_pass = false;
        witnesses["center_perp"] = json{{"dim_center", center.dim()},
                                        {"dim_derived_perp",
                                         m.orthogonal_complement(derived).dim()}};
      }
      rep["center_isotropic"] = m.is_isotropic(center);
    }
  }
  if (!witnesses.empty()) rep["witnesses"] = witnesses;
  return rep;
}

void print_report_table(const nlohmann::json& rep, std::ostream& os) {
  auto field = [&](const char* name) {
    const auto& v = rep.at(name);
    return v.is_null() ? std::string("-") : v.is_string() ? v.get<std::string>() : v.dump();
  };
  os << "arity            " << rep.at("arity") << "\n"
     << "dim              " << rep.at("dim") << "\n"
     << "dim g^1          " << rep.at("dim_derived") << "\n"
     << "dim C(g)         " << rep.at("dim_center") << "\n"
     << "jacobi           " << field("jacobi") << "\n"
     << "invariance       " << field("invariance") << "\n"
     << "center = perp    " << field("center_perp") << "\n"
     << "signature        " << field("signature") << "\n"
     << "center isotropic " << field("center_isotropic") << "\n";
}

int run_check(const std::string& path, bool table, bool gate) {
  nlie::AlgebraFile file = nlie::parse_algebra_text(read_input(path));
  bool all_pass = false;
  nlohmann::json rep = build_report(file, all_pass);
  std::cout << rep.dump(2) << "\n";
  if (table) print_report_table(rep, std::cerr);
  return (gate && !all_pass) ? kExitCheckFailed : kExitPass;
}

// ---------------------------------------------------------------------------
// verify-paper
// ---------------------------------------------------------------------------

std::pair<int, int> parse_range(const std::string& s) {
  auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      int v = std::stoi(s);
      return {v, v};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("--n-range: expected \"a..b\", got \"" + s + "\"");
  }
}

std::vector<nlie::Rational> parse_rational_list(const std::string& s, const std::string& flag) {
  std::vector<nlie::Rational> out;
  std::istringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational_flag(item, flag));
  if (out.empty()) throw UsageError(flag + ": empty list");
  return out;
}

int run_verify_paper(const std::string& n_range, const std::string& grid_str,
                     unsigned seed, const std::string& c_str, int samples, int t_max) {
  auto [n_min, n_max] = parse_range(n_range);
  if (n_min < 3 || n_max < n_min)
    throw UsageError("--n-range: need 3 <= min <= max");
  nlie::SuiteScope scope;
  scope.n_min = n_min;
  scope.n_max = n_max;
  scope.seed = seed;
  scope.sample_count = samples;
  scope.c_values = parse_rational_list(c_str, "--c-values");
  std::vector<nlie::Rational> grid = parse_rational_list(grid_str, "--grid");

  std::vector<nlie::VerifyReport> reports = nlie::verify_catalog_soundness(scope);
  for (auto& r : nlie::verify_theorem44_suite(scope)) reports.push_back(std::move(r));

  // center-dimension bound over every family member and an extension at each arity
  std::vector<nlie::MetricNLie> members;
  for (int n = n_min; n <= n_max; ++n) {
    for (int fc = 1; fc <= 3; ++fc) {
      nlie::FamilyParams p;
      p.n = n;
      p.family_case = fc;
      p.m = p.eps_range().second;
      members.push_back(nlie::family_n3(p));
    }
    nlie::SimpleParams sp;
    sp.n = n;
    sp.epsilons.assign(n + 1, 1);
    members.push_back(nlie::trivial_extension(sp, 2, nlie::SymForm::identity(2)));
  }
  reports.push_back(nlie::verify_lemma41(members));
  reports.push_back(nlie::verify_corollary33(3, std::max(10, n_max), t_max));
  reports.push_back(nlie::lemma43_obstruction(n_min, grid));

  bool all_pass = true;
  std::size_t fails = 0;
  for (const auto& r : reports) {
    std::cout << nlie::json(r).dump() << "\n";
    if (!r.pass) {
      all_pass = false;
      ++fails;
    }
  }
  std::cerr << "claim                              runs   fails\n";
  std::map<std::string, std::pair<std::size_t, std::size_t>> tally;
  for (const auto& r : reports) {
    auto& t = tally[r.claim];
    ++t.first;
    if (!r.pass) ++t.second;
  }
  for (const auto& [claim, t] : tally) {
    std::cerr << claim;
    for (std::size_t i = claim.size(); i < 35; ++i) std::cerr << ' ';
    std::cerr << t.first << "      " << t.second << "\n";
  }
  std::cerr << (all_pass ? "all claims pass" : "FAILURES: " + std::to_string(fails)) << "\n";
  return all_pass ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic kernel for n-Lie algebras with invariant metrics"};
  app.require_subcommand(1);

  // catalog
  auto* cat = app.add_subcommand("catalog", "emit a catalog algebra as JSON");
  std::string family;
  int n = 3, m = -1, dim = 1, k = 2;
  std::string eps, c_str = "1", x_sign = "+1", e1_sign = "+1", gram = "identity",
              tail_gram = "identity";
  cat->add_option("family", family,
                  "simple | case1 | case2 | case3 | trivial-ext | abelian")
      ->required();
  cat->add_option("--n", n, "arity");
  cat->add_option("--eps", eps, "signs, e.g. ++-+ (simple / trivial-ext)");
  cat->add_option("--m", m, "index up to which diagonal signs are +1 (families)");
  cat->add_option("--c", c_str, "nonzero constraint constant, rational p/q");
  cat->add_option("--x-sign", x_sign, "sign of <x,x> (cases 1, 2)");
  cat->add_option("--e1-sign", e1_sign, "sign of <e1,e1> (case 1)");
  cat->add_option("--dim", dim, "dimension (abelian)");
  cat->add_option("--k", k, "tail dimension (trivial-ext)");
  cat->add_option("--gram", gram, "identity or a sign string (abelian)");
  cat->add_option("--tail-gram", tail_gram, "identity or a sign string (trivial-ext)");

  // check / invariants
  auto* chk = app.add_subcommand("check", "validate an algebra file; exit 1 on math failure");
  auto* inv = app.add_subcommand("invariants", "report structural invariants of an algebra file");
  std::string check_path, inv_path;
  bool check_table = false, inv_table = false;
  chk->add_option("file", check_path, "algebra JSON file, or - for stdin")->required();
  chk->add_flag("--table", check_table, "also print a human-readable table to stderr");
  inv->add_option("file", inv_path, "algebra JSON file, or - for stdin")->required();
  inv->add_flag("--table", inv_table, "also print a human-readable table to stderr");

  // verify-paper
  auto* ver = app.add_subcommand("verify-paper", "run the verification suites");
  std::string n_range = "3..8", grid_str = "-1,0,1", cvals = "1,-1,2,1/2";
  unsigned seed = 1;
  int samples = 8, t_max = 20;
  ver->add_option("--n-range", n_range, "arity range a..b (default 3..8)");
  ver->add_option("--grid", grid_str, "coefficient grid for the obstruction search");
  ver->add_option("--seed", seed, "seed for sampled sign patterns");
  ver->add_option("--c-values", cvals, "constraint constants, comma-separated rationals");
  ver->add_option("--samples", samples, "sign-pattern samples per family for n > 3");
  ver->add_option("--t-max", t_max, "highest module weight checked");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (cat->parsed())
      return run_catalog(family, n, eps, m, c_str, x_sign, e1_sign, dim, k, gram, tail_gram);
    if (chk->parsed()) return run_check(check_path, check_table, true);
    if (inv->parsed()) return run_check(inv_path, inv_table, false);
    if (ver->parsed())
      return run_verify_paper(n_range, grid_str, seed, cvals, samples, t_max);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlie::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
