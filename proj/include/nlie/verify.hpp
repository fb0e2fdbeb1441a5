#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "nlie/catalog.hpp"
#include "nlie/metric.hpp"

namespace nlie {

using json = nlohmann::json;

struct VerifyReport {
  std::string claim;
  json params = json::object();
  bool pass = false;
  json witness;  // null iff pass

  bool operator==(const VerifyReport&) const = default;
};

inline void to_json(json& j, const VerifyReport& r) {
  j = json{{"claim", r.claim}, {"params", r.params}, {"status", r.pass ? "pass" : "fail"},
           {"witness", r.witness}};
}

inline void from_json(const json& j, VerifyReport& r) {
  j.at("claim").get_to(r.claim);
  r.params = j.at("params");
  r.pass = j.at("status").get<std::string>() == "pass";
  r.witness = j.at("witness");
}

inline unsigned thread_budget() {
  if (const char* s = std::getenv("NLIE_THREADS")) {
    long v = std::strtol(s, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

namespace detail {

/// Runs f(i) for i in [0, count), chunked over the thread budget. Callers
/// get determinism by writing results into slot i.
template <typename F>
void parallel_for_index(std::size_t count, F&& f) {
  unsigned workers = std::min<std::size_t>(thread_budget(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) f(i);
    });
  for (auto& t : pool) t.join();
}

inline json rational_json(const Rational& r) { return to_string(r); }

inline json vector_json(const Vector& v) {
  json j = json::array();
  for (const auto& x : v) j.push_back(to_string(x));
  return j;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// lemma43 ansatz: (n+3)-dimensional bracket with a 1-dimensional isotropic
// center candidate, free coefficients constrained by the two invariance
// relations, and the derived-dimension obstruction.
// ---------------------------------------------------------------------------

struct Lemma43Config {
  int n = 3;
  std::vector<int> epsilons;   // eps_i, i = 2..n+2
  std::vector<Rational> a1;    // a^1_{i,n+3}, i = 2..n+2
  std::vector<Rational> diag;  // a^i_{i,n+3}, i = 2..n+2

  int eps(int i) const { return epsilons.at(i - 2); }
  const Rational& a1_of(int i) const { return a1.at(i - 2); }
  const Rational& diag_of(int i) const { return diag.at(i - 2); }

  void validate() const {
    if (n < 3) throw std::invalid_argument("ansatz requires arity >= 3");
    std::size_t want = static_cast<std::size_t>(n + 1);
    if (epsilons.size() != want || a1.size() != want || diag.size() != want)
      throw std::invalid_argument("config arrays must have n+1 entries (indices 2..n+2)");
    for (int e : epsilons)
      if (e != 1 && e != -1) throw std::invalid_argument("signs must be +1 or -1");
  }

  json to_params() const {
    json eps = json::array(), a = json::array(), d = json::array();
    for (int e : epsilons) eps.push_back(e);
    for (const auto& r : a1) a.push_back(to_string(r));
    for (const auto& r : diag) d.push_back(to_string(r));
    return json{{"n", n}, {"epsilons", eps}, {"a1", a}, {"diag", d}};
  }
};

/// Assembles the ansatz bracket table (raw: Jacobi is NOT imposed) and its
/// form. The two cross coefficients of every c_{i,j} are derived from the
/// first invariance relation; the consistency relation across the diagonal
/// coefficients is checked and violations rejected with the offending pair.
inline std::pair<NLieAlgebra, SymForm> lemma43_build(const Lemma43Config& cfg) {
  cfg.validate();
  int n = cfg.n, d = n + 3;
  // consistency: (-1)^i eps_i a^i_{i,n+3} constant over i
  std::optional<Rational> common;
  int first_i = 0;
  for (int i = 2; i <= n + 2; ++i) {
    Rational k = Rational(detail::pow_sign(i) * cfg.eps(i)) * cfg.diag_of(i);
    if (!common) {
      common = k;
      first_i = i;
    } else if (k != *common) {
      std::ostringstream msg;
      msg << "diagonal coefficients are inconsistent between indices " << first_i << " and "
          << i;
      throw std::invalid_argument(msg.str());
    }
  }
  BracketTable table(n, d);
  for (int i = 2; i <= n + 2; ++i) {
    Vector v(d);
    v[0] = cfg.a1_of(i);
    v[i - 1] += cfg.diag_of(i);
    table.set(detail::range_without(2, n + 2, {i}), std::move(v));
  }
  for (int i = 2; i <= n + 2; ++i)
    for (int j = i + 1; j <= n + 2; ++j) {
      Vector v(d);
      v[i - 1] += Rational(-detail::pow_sign(n + 1 - i) * cfg.eps(i)) * cfg.a1_of(j);
      v[j - 1] += Rational(-detail::pow_sign(n + 2 - j) * cfg.eps(j)) * cfg.a1_of(i);
      table.set(detail::range_without(2, n + 3, {i, j}), std::move(v));
    }
  Matrix gram(d, d);
  gram.at(0, d - 1) = 1;
  gram.at(d - 1, 0) = 1;
  for (int i = 2; i <= n + 2; ++i) gram.at(i - 1, i - 1) = cfg.eps(i);
  return {NLieAlgebra{std::move(table)}, SymForm{std::move(gram)}};
}

/// Exhaustive check over all sign patterns and all grid assignments of the
/// free coefficients consistent with the diagonal relation: the two product
/// relations hold on the assembled table and no assignment reaches derived
/// dimension n+2.
inline VerifyReport lemma43_obstruction(int n, const std::vector<Rational>& grid) {
  if (grid.empty()) throw std::invalid_argument("grid must be nonempty");
  VerifyReport rep;
  rep.claim = "lemma43-obstruction";
  json gj = json::array();
  for (const auto& g : grid) gj.push_back(to_string(g));
  std::size_t k = static_cast<std::size_t>(n + 1);
  std::size_t checked = 0;
  rep.pass = true;

  auto fail = [&](const Lemma43Config& cfg, const std::string& what, json extra) {
    if (!rep.pass) return;  // keep the first witness
    rep.pass = false;
    rep.witness = json{{"violation", what}, {"config", cfg.to_params()}, {"detail", extra}};
  };

  std::vector<int> eps(k, 1);
  std::vector<std::size_t> a1_idx(k, 0), diag_idx(k, 0);
  auto next_multi = [&](std::vector<std::size_t>& idx, std::size_t base) {
    for (std::size_t p = 0; p < idx.size(); ++p) {
      if (++idx[p] < base) return true;
      idx[p] = 0;
    }
    return false;
  };

  for (std::size_t epat = 0; epat < (std::size_t{1} << k); ++epat) {
    for (std::size_t b = 0; b < k; ++b) eps[b] = (epat >> b) & 1 ? -1 : 1;
    std::fill(diag_idx.begin(), diag_idx.end(), 0);
    do {
      // filter by the diagonal consistency relation
      Lemma43Config cfg;
      cfg.n = n;
      cfg.epsilons = eps;
      cfg.diag.clear();
      for (std::size_t b = 0; b < k; ++b) cfg.diag.push_back(grid[diag_idx[b]]);
      bool consistent = true;
      Rational common =
          Rational(detail::pow_sign(2) * cfg.epsilons[0]) * cfg.diag[0];
      for (int i = 3; i <= n + 2 && consistent; ++i)
        consistent = Rational(detail::pow_sign(i) * cfg.eps(i)) * cfg.diag_of(i) == common;
      if (!consistent) continue;

      std::fill(a1_idx.begin(), a1_idx.end(), 0);
      do {
        cfg.a1.clear();
        for (std::size_t b = 0; b < k; ++b) cfg.a1.push_back(grid[a1_idx[b]]);
        auto [alg, form] = lemma43_build(cfg);
        ++checked;
        const BracketTable& t = alg.table();
        auto cval = [&](int i, int j) -> Vector {
          // bracket value c_{i,j}, 2 <= i < j <= n+3
          const Vector* v = j == n + 3 ? t.get(detail::range_without(2, n + 2, {i}))
                                       : t.get(detail::range_without(2, n + 3, {i, j}));
          return v ? *v : zero_vector(n + 3);
        };
        // relation (products of pair coefficients), all 1 < k0 < i < j < n+3:
        //   a^k_{k,i} c_{k,j} - a^k_{k,j} c_{k,i} = (-1)^{n-k} eps_k a^1_{k,n+3} c_{i,j}
        for (int k0 = 2; k0 <= n && rep.pass; ++k0)
          for (int i = k0 + 1; i <= n + 1 && rep.pass; ++i)
            for (int j = i + 1; j <= n + 2 && rep.pass; ++j) {
              Vector lhs = zero_vector(n + 3);
              add_scaled(lhs, cval(k0, i)[k0 - 1], cval(k0, j));
              add_scaled(lhs, -cval(k0, j)[k0 - 1], cval(k0, i));
              Vector rhs = zero_vector(n + 3);
              add_scaled(rhs,
                         Rational(detail::pow_sign(n - k0) * cfg.eps(k0)) *
                             cval(k0, n + 3)[0],
                         cval(i, j));
              if (lhs != rhs)
                fail(cfg, "pair-coefficient relation",
                     json{{"k", k0}, {"i", i}, {"j", j}});
            }
        // relation over 1 < i < j < n+3:
        //   (-1)^{n+1-i} eps_i a^i_{i,n+3} c_{i,j}
        //     = -a^1_{j,n+3} c_{i,n+3} + a^1_{i,n+3} c_{j,n+3}
        for (int i = 2; i <= n + 1 && rep.pass; ++i)
          for (int j = i + 1; j <= n + 2 && rep.pass; ++j) {
            Vector lhs = zero_vector(n + 3);
            add_scaled(lhs,
                       Rational(detail::pow_sign(n + 1 - i) * cfg.eps(i)) *
                           cval(i, n + 3)[i - 1],
                       cval(i, j));
            Vector rhs = zero_vector(n + 3);
            add_scaled(rhs, -cval(j, n + 3)[0], cval(i, n + 3));
            add_scaled(rhs, cval(i, n + 3)[0], cval(j, n + 3));
            if (lhs != rhs) fail(cfg, "diagonal-coefficient relation", json{{"i", i}, {"j", j}});
          }
        // the obstruction: derived dimension never reaches n+2
        std::size_t dim1 = alg.derived_algebra().dim();
        if (dim1 > static_cast<std::size_t>(n + 1))
          fail(cfg, "derived dimension exceeds n+1", json{{"dim", dim1}});
      } while (next_multi(a1_idx, grid.size()));
    } while (next_multi(diag_idx, grid.size()));
  }
  rep.params = json{{"n", n}, {"grid", gj}, {"assignments_checked", checked}};
  return rep;
}

// ---------------------------------------------------------------------------
// Catalog-wide suites.
// ---------------------------------------------------------------------------

struct SuiteScope {
  int n_min = 3;
  int n_max = 8;
  std::vector<Rational> c_values{rat(1), rat(-1), rat(2), rat(1, 2)};
  int sample_count = 8;  // sign-pattern samples per family for n > 3
  unsigned seed = 1u;

  void validate() const {
    if (n_min < 3 || n_max < n_min) throw std::invalid_argument("empty or invalid arity range");
    if (c_values.empty()) throw std::invalid_argument("no constraint constants given");
    for (const auto& c : c_values)
      if (is_zero(c)) throw std::invalid_argument("constraint constant c must be nonzero");
    if (sample_count < 1) throw std::invalid_argument("sample count must be >= 1");
  }
};

namespace detail {

/// Deterministic choice of `take` distinct indices out of [0, total).
inline std::vector<std::size_t> sample_indices(std::size_t total, std::size_t take,
                                               unsigned seed) {
  std::vector<std::size_t> idx(total);
  std::iota(idx.begin(), idx.end(), 0);
  if (take >= total) return idx;
  std::mt19937 gen(seed);
  for (std::size_t i = 0; i < take; ++i)
    std::swap(idx[i], idx[i + gen() % (total - i)]);
  idx.resize(take);
  std::sort(idx.begin(), idx.end());
  return idx;
}

struct CheckList {
  json failures = json::array();

  void expect(bool ok, const std::string& what, json detail = nullptr) {
    if (!ok) failures.push_back(json{{"check", what}, {"detail", detail}});
  }
  bool pass() const { return failures.empty(); }
};

/// The shared dimension, center-perp and isotropy battery for an
/// (n+3)-dimensional family member.
inline void run_family_checks(const MetricNLie& m, int n, int family_case, CheckList& cl) {
  cl.expect(m.algebra().check_jacobi(1).empty(), "jacobi");
  cl.expect(m.check_invariance(1).empty(), "invariance");
  Subspace center = m.algebra().center();
  Subspace derived = m.algebra().derived_algebra();
  cl.expect(center.dim() == 2, "center dimension = 2", center.dim());
  cl.expect(derived.dim() == static_cast<std::size_t>(n + 1), "derived dimension = n+1",
            derived.dim());
  cl.expect(m.verify_center_perp(), "center equals perp of derived algebra");
  auto split = split_off_nonisotropic_center(m);
  if (family_case == 3) {
    cl.expect(m.is_isotropic(center), "case 3 center is isotropic");
    cl.expect(!split.has_value(), "case 3 split does not fire");
  } else {
    cl.expect(!m.is_isotropic(center), "center is non-isotropic");
    cl.expect(split.has_value(), "split fires");
    if (split) {
      cl.expect(split->second.dim() == n + 2, "complement has dimension n+2",
                split->second.dim());
      cl.expect(split->second.form().is_nondegenerate(), "restricted form non-degenerate");
      cl.expect(split->second.algebra().center().dim() < center.dim(),
                "center shrinks after split");
    }
  }
}

}  // namespace detail

/// Soundness of the three (n+3)-dimensional families: every sampled
/// parameter combination builds, validates, and has the dimensions and
/// isotropy behaviour its defining statement forces.
inline std::vector<VerifyReport> verify_theorem44_suite(const SuiteScope& scope) {
  scope.validate();
  struct Combo {
    int n, family_case, m, x_sign, e1_sign;
    Rational c;
  };
  std::vector<Combo> combos;
  for (int n = scope.n_min; n <= scope.n_max; ++n)
    for (int fc = 1; fc <= 3; ++fc) {
      FamilyParams probe;
      probe.n = n;
      probe.family_case = fc;
      auto [lo, hi] = probe.eps_range();
      std::vector<Combo> pattern;  // sign patterns before c expansion
      for (int m = lo - 1; m <= hi; ++m)
        for (int xs : {1, -1})
          for (int es : {1, -1}) {
            if (fc != 1 && es == -1) continue;  // e1 sign only exists in case 1
            if (fc == 3 && xs == -1) continue;  // no x line in case 3
            pattern.push_back({n, fc, m, xs, es, rat(1)});
          }
      std::vector<std::size_t> keep;
      if (n == 3) {
        keep.resize(pattern.size());
        std::iota(keep.begin(), keep.end(), 0);
      } else {
        keep = detail::sample_indices(pattern.size(), scope.sample_count,
                                      scope.seed + 97u * n + 13u * fc);
      }
      for (std::size_t i : keep)
        for (const auto& c : scope.c_values) {
          Combo combo = pattern[i];
          combo.c = c;
          combos.push_back(combo);
        }
    }

  std::vector<VerifyReport> reports(combos.size());
  detail::parallel_for_index(combos.size(), [&](std::size_t i) {
    const Combo& co = combos[i];
    VerifyReport rep;
    rep.claim = "theorem44-case-" + std::to_string(co.family_case);
    rep.params = json{{"n", co.n},       {"case", co.family_case}, {"m", co.m},
                      {"x_sign", co.x_sign}, {"e1_sign", co.e1_sign},  {"c", to_string(co.c)},
                      {"seed", scope.seed}};
    detail::CheckList cl;
    try {
      FamilyParams p;
      p.n = co.n;
      p.family_case = co.family_case;
      p.m = co.m;
      p.x_sign = co.x_sign;
      p.e1_sign = co.e1_sign;
      p.c = co.c;
      MetricNLie m = family_n3(p);
      detail::run_family_checks(m, co.n, co.family_case, cl);
    } catch (const std::exception& e) {
      cl.expect(false, "construction", e.what());
    }
    rep.pass = cl.pass();
    if (!rep.pass) rep.witness = cl.failures;
    reports[i] = rep;
  });
  return reports;
}

/// Soundness of the simple algebras and their trivial extensions, including
/// the derived-dimension bound of the (n+3)-dimensional construction.
inline std::vector<VerifyReport> verify_catalog_soundness(const SuiteScope& scope) {
  scope.validate();
  struct Item {
    int n;
    std::vector<int> eps;
    int tail;  // 0: bare simple algebra, 2: extension by a 2-dim tail
    int tail_kind;  // 0: diag(1,1), 1: diag(1,-1)
  };
  std::vector<Item> items;
  for (int n = scope.n_min; n <= scope.n_max; ++n) {
    std::size_t total = std::size_t{1} << (n + 1);
    std::vector<std::size_t> keep;
    if (n == 3) {
      keep.resize(total);
      std::iota(keep.begin(), keep.end(), 0);
    } else {
      keep = detail::sample_indices(total, scope.sample_count, scope.seed + 31u * n);
    }
    for (std::size_t pat : keep) {
      std::vector<int> eps(n + 1);
      for (int b = 0; b <= n; ++b) eps[b] = (pat >> b) & 1 ? -1 : 1;
      items.push_back({n, eps, 0, 0});
      items.push_back({n, eps, 2, 0});
      items.push_back({n, eps, 2, 1});
    }
  }

  std::vector<VerifyReport> reports(items.size());
  detail::parallel_for_index(items.size(), [&](std::size_t i) {
    const Item& it = items[i];
    VerifyReport rep;
    rep.claim = it.tail == 0 ? "simple-algebra" : "trivial-extension";
    json eps = json::array();
    for (int e : it.eps) eps.push_back(e);
    rep.params = json{{"n", it.n}, {"epsilons", eps}, {"tail_dim", it.tail},
                      {"tail_kind", it.tail_kind}, {"seed", scope.seed}};
    detail::CheckList cl;
    try {
      SimpleParams p{it.n, it.eps};
      if (it.tail == 0) {
        MetricNLie m = simple_real(p);
        cl.expect(m.algebra().check_jacobi(1).empty(), "jacobi");
        cl.expect(m.check_invariance(1).empty(), "invariance");
        cl.expect(m.algebra().center().dim() == 0, "zero center");
        cl.expect(m.algebra().derived_algebra() == Subspace::full(it.n + 1),
                  "derived algebra is everything");
        cl.expect(m.verify_center_perp(), "center equals perp of derived algebra");
        std::size_t plus = std::count(it.eps.begin(), it.eps.end(), 1);
        cl.expect(m.form().signature() ==
                      std::pair<std::size_t, std::size_t>{plus, it.eps.size() - plus},
                  "signature matches sign counts");
      } else {
        SymForm tail = it.tail_kind == 0 ? SymForm::diagonal({rat(1), rat(1)})
                                         : SymForm::diagonal({rat(1), rat(-1)});
        MetricNLie m = trivial_extension(p, it.tail, tail);
        cl.expect(m.dim() == it.n + 3, "dimension n+3", m.dim());
        cl.expect(m.algebra().check_jacobi(1).empty(), "jacobi");
        cl.expect(m.check_invariance(1).empty(), "invariance");
        std::size_t d1 = m.algebra().derived_algebra().dim();
        cl.expect(d1 == static_cast<std::size_t>(it.n + 1), "derived dimension = n+1", d1);
        cl.expect(d1 <= static_cast<std::size_t>(it.n + 2), "derived dimension <= n+2", d1);
        cl.expect(m.algebra().center().dim() == 2, "center is the tail");
        cl.expect(m.verify_center_perp(), "center equals perp of derived algebra");
      }
    } catch (const std::exception& e) {
      cl.expect(false, "construction", e.what());
    }
    rep.pass = cl.pass();
    if (!rep.pass) rep.witness = cl.failures;
    reports[i] = rep;
  });
  return reports;
}

/// Center dimension of a non-abelian (n+3)-dimensional metric algebra is 1
/// or 2.
inline VerifyReport verify_lemma41(const std::vector<MetricNLie>& algebras) {
  VerifyReport rep;
  rep.claim = "lemma41-center-dimension";
  rep.pass = true;
  std::size_t seen = 0;
  for (const MetricNLie& m : algebras) {
    if (m.algebra().derived_algebra().dim() == 0)
      throw std::invalid_argument("abelian input: the center-dimension bound assumes non-abelian");
    if (m.dim() != m.arity() + 3)
      throw std::invalid_argument("input is not (n+3)-dimensional");
    if (!m.is_validated()) throw std::invalid_argument("input must be validated");
    std::size_t c = m.algebra().center().dim();
    ++seen;
    if (rep.pass && (c < 1 || c > 2)) {
      rep.pass = false;
      rep.witness = json{{"center_dim", c}, {"arity", m.arity()}, {"dim", m.dim()}};
    }
  }
  rep.params = json{{"algebras", seen}};
  return rep;
}

/// The module-dimension formula: integer, > 2 for t >= 1, and 1 at t = 0.
inline VerifyReport verify_corollary33(int n_min, int n_max, int t_max) {
  if (n_min < 3 || n_max < n_min || t_max < 1)
    throw std::invalid_argument("invalid corollary ranges");
  VerifyReport rep;
  rep.claim = "corollary33-module-dimensions";
  rep.params = json{{"n_min", n_min}, {"n_max", n_max}, {"t_max", t_max}};
  rep.pass = true;
  for (int n = n_min; n <= n_max && rep.pass; ++n) {
    if (module_dim({n, 0}) != 1) {
      rep.pass = false;
      rep.witness = json{{"n", n}, {"t", 0}, {"value", to_string(module_dim({n, 0}))}};
      break;
    }
    for (int t = 1; t <= t_max; ++t) {
      Rational v = module_dim({n, t});
      if (v.get_den() != 1 || v <= 2) {
        rep.pass = false;
        rep.witness = json{{"n", n}, {"t", t}, {"value", to_string(v)}};
        break;
      }
    }
  }
  return rep;
}

}  // namespace nlie
