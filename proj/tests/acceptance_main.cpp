// Acceptance gate: eight end-to-end criteria, one PASS/FAIL line each.
// Thresholds (time budgets, instance counts, the speedup ratio) are pinned
// here as constants.  Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "pmdet/bench.hpp"
#include "pmdet/colbasis.hpp"
#include "pmdet/detconst.hpp"
#include "pmdet/determinant.hpp"
#include "pmdet/errors.hpp"
#include "pmdet/gen.hpp"
#include "pmdet/kernel.hpp"
#include "pmdet/oracle.hpp"
#include "support/fixtures.hpp"
#include "support/testutil.hpp"

using namespace pmdet;

namespace {

constexpr double kWorkedExampleBudget = 1.0;  // seconds, criterion 1
constexpr int kCorpusPerPrime = 168;          // 3 primes * 168 >= 500
constexpr double kCorpusBudget = 300.0;       // seconds, criterion 3
constexpr int kKernelPerPrime = 70;           // 3 primes * 70 >= 200
constexpr int kColBasisPerPrime = 70;         // 3 primes * 70 >= 200
constexpr int kUnimodularCount = 100;         // criterion 7
constexpr double kSpeedupRatioLimit = 0.5;    // criterion 8, n = 48
const std::vector<std::size_t> kBenchSizes = {8, 16, 32, 48};
constexpr long kBenchDegree = 4;
constexpr std::uint64_t kBenchPrime = 998244353;
const std::vector<std::uint64_t> kPrimes = {7, 97, 998244353};

int failures = 0;

void report(int idx, bool ok, const std::string& text) {
  std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", idx,
              text.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

bool associates(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.degree() != b.degree()) return false;
  const FieldContext& c = a.ctx();
  FieldElement ratio = c.mul(a.leading_coeff(), c.inv(b.leading_coeff()));
  return a == b.scale(ratio);
}

ConstMatrix concat(const ConstMatrix& a, const ConstMatrix& b) {
  ConstMatrix m(a.ctx(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m.set(i, j, a.at(i, j));
    for (std::size_t j = 0; j < b.cols(); ++j)
      m.set(i, a.cols() + j, b.at(i, j));
  }
  return m;
}

bool zero_product(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix prod = mul(a, b);
  for (std::size_t i = 0; i < prod.rows(); ++i)
    for (std::size_t j = 0; j < prod.cols(); ++j)
      if (!prod.at(i, j).is_zero()) return false;
  return true;
}

/// Guaranteed degree bounds at one recursion node: the second block's
/// degree sum never exceeds the shift sum of the node input, and the first
/// block's sorted column degrees are dominated by the k largest input
/// column degrees.
bool node_bounds_hold(const DetNode& node) {
  if (node.k == 0) return true;
  long shift_sum = Shift::from_cdeg(node.cdeg_f).sum();
  if (sum_cdeg(node.cdeg_g2) > Degree(shift_sum)) return false;
  std::vector<Degree> top(node.cdeg_f.begin(), node.cdeg_f.end());
  std::sort(top.begin(), top.end(), std::greater<>());
  std::vector<Degree> g1(node.cdeg_g1.begin(), node.cdeg_g1.end());
  std::sort(g1.begin(), g1.end(), std::greater<>());
  if (g1.size() > top.size()) return false;
  for (std::size_t i = 0; i < g1.size(); ++i)
    if (g1[i] > top[i]) return false;
  return true;
}

// ---- criterion 1: worked 5x5 determinant, exact value, under budget ----

void criterion1() {
  PolyMatrix f = worked_example_matrix();
  Polynomial expect = fx::example2_det(fx::ctx7());
  auto t0 = std::chrono::steady_clock::now();
  Polynomial det = determinant(f);
  double dt = seconds_since(t0);
  bool ok = det == expect && dt < kWorkedExampleBudget;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "worked 5x5 determinant equals [0,0,0,0,0,2,0,5,5,0,2] "
                "in %.4fs (budget %.0fs)",
                dt, kWorkedExampleBudget);
  report(1, ok, buf);
}

// ---- criterion 2: root factorization det = d_V * det G1 * det G2 ----

void criterion2() {
  FieldContext c = fx::ctx7();
  DetReport rep = determinant_with_report(worked_example_matrix());
  Polynomial expect = fx::example2_det(c);

  Polynomial product = rep.root_det_g1.mul(rep.root_det_g2).scale(rep.root_d_v);
  bool product_ok = product == expect && rep.det == expect;

  // The second diagonal block always contributes an associate of x^4 - x.
  bool g2_ok = associates(rep.root_det_g2, fx::P(c, {0, -1, 0, 0, 1}));

  // With the worked example's own column basis and kernel, the constant
  // unimodular contribution is exactly 2.
  FieldElement d_v = unimodular_det_contribution(
      fx::example2_VU(c).constant_term(),
      fx::example1_N(c).constant_term());
  bool dv_ok = d_v.v == 2;

  char buf[160];
  std::snprintf(buf, sizeof buf,
                "root factorization d_V*detG1*detG2 reproduces the "
                "determinant; detG2 ~ x^4-x; fixture d_V = %llu",
                static_cast<unsigned long long>(d_v.v));
  report(2, product_ok && g2_ok && dv_ok, buf);
}

// ---- criteria 3 + 6: random corpus vs oracle, plus node bounds ----

struct CorpusOutcome {
  int count = 0;
  int mismatches = 0;
  long nodes = 0;
  long node_violations = 0;
  double seconds = 0;
};

CorpusOutcome run_corpus() {
  CorpusOutcome out;
  auto t0 = std::chrono::steady_clock::now();
  for (std::size_t pi = 0; pi < kPrimes.size(); ++pi) {
    for (int i = 0; i < kCorpusPerPrime; ++i) {
      std::size_t n = 1 + static_cast<std::size_t>(i % 10);
      long maxd = i % 9;
      GenProfile prof =
          (i % 4 == 3) ? GenProfile::kSkewed : GenProfile::kUniform;
      std::uint64_t seed = 9114327851ULL + pi * 100000 + i;
      PolyMatrix f = generate_matrix(kPrimes[pi], n, maxd, prof, seed);
      DetReport rep = determinant_with_report(f);
      if (rep.det != oracle_det(f) || rep.singular) ++out.mismatches;
      for (const DetNode& node : rep.nodes) {
        ++out.nodes;
        if (!node_bounds_hold(node)) ++out.node_violations;
      }
      ++out.count;
    }
  }
  out.seconds = seconds_since(t0);
  return out;
}

void criterion3(const CorpusOutcome& out) {
  bool ok = out.count >= 500 && out.mismatches == 0 &&
            out.seconds < kCorpusBudget;
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "%d/%d random determinants (p in {7,97,998244353}, n<=10, "
                "deg<=8, uniform+skewed) match the oracle in %.1fs "
                "(budget %.0fs)",
                out.count - out.mismatches, out.count, out.seconds,
                kCorpusBudget);
  report(3, ok, buf);
}

void criterion6(const CorpusOutcome& out) {
  bool ok = out.nodes > 0 && out.node_violations == 0;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "recursion traces: %ld nodes checked, %ld degree-bound "
                "violations",
                out.nodes, out.node_violations);
  report(6, ok, buf);
}

// ---- criterion 4: kernel bases vs definition and brute force ----

void criterion4() {
  int count = 0, bad = 0;
  tu::Rng rng(9216403175ULL);
  for (std::uint64_t p : kPrimes) {
    FieldContext c(p);
    for (int i = 0; i < kKernelPerPrime; ++i) {
      std::size_t rows = 1 + static_cast<std::size_t>(i % 4);
      std::size_t cols = rows + static_cast<std::size_t>((i / 4) % 4);
      long deg = i % 4;
      PolyMatrix f = tu::random_matrix(c, rows, cols, deg, rng);
      std::vector<long> sv;
      for (const Degree& d : f.cdeg())
        sv.push_back((d.finite() && d.value() > 0 ? d.value() : 0) +
                     static_cast<long>(rng() % 3));
      Shift s{std::move(sv)};

      KernelBasis kb = kernel_basis(f, s);
      bool ok = is_kernel_basis(f, kb.basis(), s);
      PolyMatrix bf = coefficient_nullspace(f, s.sum());
      ok = ok && oracle_in_span(kb.basis(), bf, s);
      ok = ok && (bf.cols() == 0 ||
                  tu::in_coefficient_span(bf, kb.basis(), s.sum()));
      ok = ok && zero_product(f, kb.basis());
      if (!ok) ++bad;
      ++count;
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "%d/%d kernel bases pass the definition check and span the "
                "brute-force nullspace",
                count - bad, count);
  report(4, count >= 200 && bad == 0, buf);
}

// ---- criterion 5: column bases multiply back, nonsingular, bounded ----

void criterion5() {
  int count = 0, bad = 0;
  tu::Rng rng(9321540928ULL);
  for (std::uint64_t p : kPrimes) {
    FieldContext c(p);
    for (int i = 0; i < kColBasisPerPrime; ++i) {
      std::size_t rows = 1 + static_cast<std::size_t>(i % 4);
      std::size_t cols = rows + static_cast<std::size_t>(i % 3);
      long deg = i % 4;
      for (int attempt = 0;; ++attempt) {
        PolyMatrix f = tu::random_matrix(c, rows, cols, deg, rng);
        Shift s = Shift::from_cdeg(f.cdeg());
        try {
          ColBasisTriple t = col_basis(f, s);
          bool ok = mul(t.g1, t.v_u) == f;
          ok = ok && !oracle_det(t.g1).is_zero();
          ok = ok && zero_product(f, t.n.basis());
          std::vector<Degree> top(f.cdeg());
          std::sort(top.begin(), top.end(), std::greater<>());
          std::vector<Degree> g1(t.g1.cdeg());
          std::sort(g1.begin(), g1.end(), std::greater<>());
          for (std::size_t j = 0; j < g1.size(); ++j)
            ok = ok && !(g1[j] > top[j]);
          if (!ok) ++bad;
          ++count;
          break;
        } catch (const RankDeficientError&) {
          if (attempt > 50) throw; // random full-rank draws cannot all fail
        }
      }
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "%d/%d column bases satisfy G1*V_U = F, nonsingular G1, and "
                "the degree bound",
                count - bad, count);
  report(5, count >= 200 && bad == 0, buf);
}

// ---- criterion 7: unimodular constant determinants and completions ----

void criterion7() {
  int count = 0, bad = 0;
  tu::Rng rng(9425167033ULL);
  for (int it = 0; it < kUnimodularCount; ++it) {
    FieldContext c(kPrimes[it % kPrimes.size()]);
    std::size_t n = 3 + static_cast<std::size_t>(it % 3);

    // U = product of elementary column operations; det U is the constant
    // product of the elementary determinants.
    std::vector<std::vector<Polynomial>> colv(
        n, std::vector<Polynomial>(n, Polynomial(c)));
    for (std::size_t j = 0; j < n; ++j)
      colv[j][j] = Polynomial::constant(c, c.one());
    FieldElement expect = c.one();
    for (int op = 0; op < 25; ++op) {
      std::size_t i = rng() % n, j = rng() % n;
      if (rng() % 3 == 0) {
        FieldElement sc = tu::random_elem(c, rng);
        if (c.is_zero(sc)) sc = c.one();
        for (std::size_t r = 0; r < n; ++r)
          colv[j][r] = colv[j][r].scale(sc);
        expect = c.mul(expect, sc);
      } else if (i != j) {
        Polynomial q = tu::random_poly(c, 2, rng);
        for (std::size_t r = 0; r < n; ++r)
          colv[j][r] = colv[j][r].add(colv[i][r].mul(q));
      }
    }
    std::vector<Polynomial> flat;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t j = 0; j < n; ++j) flat.push_back(colv[j][r]);
    PolyMatrix u(c, n, n, std::move(flat));
    bool ok = det_const(u.constant_term()) == expect;
    ok = ok && oracle_det(u) == Polynomial::constant(c, expect);

    // The constant contribution is completion-independent: any random
    // complement C with [C, U_R0] invertible yields the same scalar.
    std::size_t k = (n + 1) / 2;
    PolyMatrix g(c, 0, 0, {});
    for (int attempt = 0;; ++attempt) {
      g = tu::random_matrix(c, k, n, 2, rng);
      try {
        ColBasisTriple t = col_basis(g, Shift::from_cdeg(g.cdeg()));
        ConstMatrix v_u0 = t.v_u.constant_term();
        ConstMatrix u_r0 = t.n.basis().constant_term();
        FieldElement canonical = unimodular_det_contribution(v_u0, u_r0);
        for (int rc = 0; rc < 3; ++rc) {
          ConstMatrix cand(c, n, k);
          FieldElement den = c.zero();
          do {
            for (std::size_t a = 0; a < n; ++a)
              for (std::size_t b = 0; b < k; ++b)
                cand.set(a, b, tu::random_elem(c, rng));
            den = det_const(concat(cand, u_r0));
          } while (c.is_zero(den));
          FieldElement num = det_const(mul(v_u0, cand));
          ok = ok && c.mul(num, c.inv(den)) == canonical;
        }
        break;
      } catch (const RankDeficientError&) {
        if (attempt > 50) throw;
      }
    }
    if (!ok) ++bad;
    ++count;
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "%d/%d unimodular products: det U(0) matches the elementary "
                "product; contributions are completion-invariant",
                count - bad, count);
  report(7, count >= kUnimodularCount && bad == 0, buf);
}

// ---- criterion 8: size sweep, n = 48 beats fraction-free elimination ----

void criterion8() {
  BenchResult r =
      run_bench(kBenchPrime, kBenchSizes, kBenchDegree, 9530284146ULL, true);
  bool all_verified = true;
  double rec48 = -1, bar48 = -1;
  for (const BenchRow& row : r.rows) {
    all_verified = all_verified && row.verified;
    if (row.n == 48) {
      rec48 = row.seconds;
      bar48 = row.oracle_seconds;
    }
  }
  double ratio = (bar48 > 0) ? rec48 / bar48 : -1;
  bool ok = all_verified && std::isfinite(r.slope) && ratio >= 0 &&
            ratio <= kSpeedupRatioLimit;
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "bench n in {8,16,32,48} d=4 verified; log-log slope %.2f; "
                "n=48 recursive %.3fs vs elimination %.3fs "
                "(ratio %.3f, limit %.2f)",
                r.slope, rec48, bar48, ratio, kSpeedupRatioLimit);
  report(8, ok, buf);
}

} // namespace

int main() {
  criterion1();
  criterion2();
  CorpusOutcome corpus = run_corpus();
  criterion3(corpus);
  criterion4();
  criterion5();
  criterion6(corpus);
  criterion7();
  criterion8();
  std::printf("acceptance: %d/8 criteria passed\n", 8 - failures);
  return failures;
}
