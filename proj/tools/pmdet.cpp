// Command-line front end: determinants, kernel and column bases, matrix
// generation, and benchmarks for polynomial matrices over Z_p.
//
// Exit codes: 0 success, 1 usage/parse error, 2 internal-consistency
// failure, 3 oracle mismatch.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pmdet/bench.hpp"
#include "pmdet/colbasis.hpp"
#include "pmdet/determinant.hpp"
#include "pmdet/errors.hpp"
#include "pmdet/gen.hpp"
#include "pmdet/io.hpp"
#include "pmdet/kernel.hpp"
#include "pmdet/oracle.hpp"

namespace {

using namespace pmdet;

PolyMatrix load(const std::string& path) {
  if (path == "-") return read_matrix(std::cin);
  return read_matrix_file(path);
}

Shift resolve_shift(const std::string& spec, const PolyMatrix& f) {
  if (spec == "auto") return Shift::from_cdeg(f.cdeg());
  std::vector<long> v;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      v.push_back(std::stol(tok));
    } catch (const std::exception&) {
      throw UsageError("invalid shift entry '" + tok + "'");
    }
  }
  return Shift(std::move(v));
}

bool entries_all_zero(const PolyMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) return false;
  return true;
}

std::string degree_str(Degree d) {
  return d.is_neg_inf() ? "-inf" : std::to_string(d.value());
}

void print_trace(const DetReport& rep) {
  std::printf("# trace: nodes=%zu leaves=%zu root_d_v=%llu%s\n",
              rep.nodes.size(), rep.leaves.size(),
              static_cast<unsigned long long>(rep.root_d_v.v),
              rep.aborted ? " (aborted: rank-deficient block)" : "");
  std::printf("# %5s %5s %5s %9s %9s %12s %12s\n", "level", "dim", "k",
              "sum_cdeg", "d_v", "sum_cdeg_g1", "sum_cdeg_g2");
  for (const DetNode& n : rep.nodes)
    std::printf("  %5zu %5zu %5zu %9s %9llu %12s %12s\n", n.level, n.dim, n.k,
                degree_str(n.sum_cdeg).c_str(),
                static_cast<unsigned long long>(n.d_v.v),
                degree_str(sum_cdeg(n.cdeg_g1)).c_str(),
                degree_str(sum_cdeg(n.cdeg_g2)).c_str());
  std::printf("# level_seconds:");
  for (std::size_t i = 0; i < rep.level_seconds.size(); ++i)
    std::printf(" %zu=%.6f", i, rep.level_seconds[i]);
  std::printf("\n");
}

int cmd_det(const std::string& path, bool auto_orient, bool trace,
            bool oracle_check) {
  PolyMatrix f = load(path);
  if (auto_orient) {
    PolyMatrix t = f.transpose();
    if (sum_cdeg(t.cdeg()) < sum_cdeg(f.cdeg())) f = std::move(t);
  }
  DetReport rep = determinant_with_report(f);
  std::cout << render_poly(rep.det) << '\n';
  if (rep.singular) std::cerr << "note: matrix is singular\n";
  if (trace) print_trace(rep);
  if (oracle_check) {
    if (oracle_det(f) == rep.det) {
      std::cout << "oracle check: MATCH\n";
    } else {
      std::cerr << "oracle check: MISMATCH\n";
      return 3;
    }
  }
  return 0;
}

int cmd_kernel(const std::string& path, const std::string& shift_spec) {
  PolyMatrix f = load(path);
  Shift s = resolve_shift(shift_spec, f);
  KernelBasis kb = kernel_basis(f, s);
  const PolyMatrix& n = kb.basis();
  if (!entries_all_zero(mul(f, n)))
    throw InternalError("kernel self-check failed: F*N != 0");
  if (n.cols() == 0) std::cerr << "note: trivial kernel\n";
  std::cout << "# shift:";
  for (long v : s.values()) std::cout << ' ' << v;
  std::cout << '\n';
  write_matrix(std::cout, n);
  return 0;
}

int cmd_colbasis(const std::string& path, const std::string& shift_spec) {
  PolyMatrix f = load(path);
  Shift s = resolve_shift(shift_spec, f);
  try {
    ColBasisTriple t = col_basis(f, s);
    std::cout << "# G1\n";
    write_matrix(std::cout, t.g1);
    std::cout << "# V_U\n";
    write_matrix(std::cout, t.v_u);
    std::cout << "# N\n";
    write_matrix(std::cout, t.n.basis());
    return 0;
  } catch (const RankDeficientError& e) {
    std::cerr << "error: rank " << e.rank() << " < " << e.required() << '\n';
    return 1;
  }
}

int cmd_gen(std::size_t n, const std::string& profile, std::uint64_t p,
            std::optional<std::uint64_t> seed, long max_deg,
            const std::string& out_path) {
  GenProfile prof;
  if (profile == "uniform") {
    prof = GenProfile::kUniform;
  } else if (profile == "skewed") {
    prof = GenProfile::kSkewed;
  } else if (profile == "paper-example") {
    prof = GenProfile::kExample;
  } else {
    throw UsageError("unknown profile '" + profile + "'");
  }
  if (!seed) {
    seed = 0;
    if (prof != GenProfile::kExample) { // fixture output needs no entropy
      std::random_device rd;
      seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
      std::cerr << "seed: " << *seed << '\n';
    }
  }
  PolyMatrix f = generate_matrix(p, n, max_deg, prof, *seed);
  if (out_path.empty()) {
    write_matrix(std::cout, f);
  } else {
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot write file: " + out_path);
    write_matrix(out, f);
  }
  return 0;
}

int cmd_bench(const std::string& sizes_spec, long max_deg, std::uint64_t p,
              std::uint64_t seed, bool compare_oracle) {
  std::vector<std::size_t> sizes;
  std::stringstream ss(sizes_spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      sizes.push_back(std::stoul(tok));
    } catch (const std::exception&) {
      throw UsageError("invalid size entry '" + tok + "'");
    }
  }
  if (sizes.empty()) throw UsageError("empty size list");

  BenchResult r = run_bench(p, sizes, max_deg, seed, compare_oracle);
  if (compare_oracle)
    std::printf("%6s %8s %10s %10s %9s\n", "n", "avg_deg", "seconds",
                "bareiss", "verified");
  else
    std::printf("%6s %8s %10s %9s\n", "n", "avg_deg", "seconds", "verified");
  for (const BenchRow& row : r.rows) {
    if (compare_oracle)
      std::printf("%6zu %8.2f %10.4f %10.4f %9s\n", row.n, row.avg_deg,
                  row.seconds, row.oracle_seconds,
                  row.verified ? "ok" : "FAIL");
    else
      std::printf("%6zu %8.2f %10.4f %9s\n", row.n, row.avg_deg, row.seconds,
                  row.verified ? "ok" : "FAIL");
  }
  std::printf("csv: n,avg_deg,seconds,oracle_seconds,verified\n");
  for (const BenchRow& row : r.rows)
    std::printf("csv: %zu,%.3f,%.6f,%.6f,%d\n", row.n, row.avg_deg,
                row.seconds, row.oracle_seconds, row.verified ? 1 : 0);
  std::printf("fitted log-log slope: %.3f\n", r.slope);
  for (const BenchRow& row : r.rows)
    if (!row.verified) {
      std::cerr << "oracle mismatch at n=" << row.n << '\n';
      return 3;
    }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact determinants of polynomial matrices over Z_p"};
  app.require_subcommand(1);

  auto* det = app.add_subcommand(
      "det", "Determinant of a square matrix read from FILE ('-' = stdin)");
  std::string det_path;
  bool auto_orient = false, trace = false, oracle_check = false;
  det->add_option("file", det_path, "matrix file")->required();
  det->add_flag("--auto-orient", auto_orient,
                "work on the transpose when it has smaller column degrees");
  det->add_flag("--trace", trace, "print the recursion node table");
  det->add_flag("--oracle-check", oracle_check,
                "recompute with the reference oracle and compare");

  auto* kernel = app.add_subcommand(
      "kernel", "Shift-minimal right kernel basis of a matrix");
  std::string kernel_path, kernel_shift = "auto";
  kernel->add_option("file", kernel_path, "matrix file")->required();
  kernel->add_option("--shift", kernel_shift,
                     "'auto' (column degrees) or a comma-separated list");

  auto* colbasis = app.add_subcommand(
      "colbasis", "Column basis G1 with right factor V_U and kernel N");
  std::string colbasis_path, colbasis_shift = "auto";
  colbasis->add_option("file", colbasis_path, "matrix file")->required();
  colbasis->add_option("--shift", colbasis_shift,
                       "'auto' (column degrees) or a comma-separated list");

  auto* gen = app.add_subcommand(
      "gen", "Generate a seeded nonsingular matrix in the text format");
  std::size_t gen_n = 0;
  std::string gen_profile = "uniform", gen_out;
  std::uint64_t gen_p = 998244353;
  long gen_deg = 2;
  std::uint64_t gen_seed_value = 0;
  gen->add_option("--n", gen_n, "dimension");
  gen->add_option("--degree", gen_deg, "max entry degree")->capture_default_str();
  gen->add_option("--p", gen_p, "prime modulus")->capture_default_str();
  gen->add_option("--profile", gen_profile,
                  "uniform | skewed | paper-example")->capture_default_str();
  auto* gen_seed_opt = gen->add_option(
      "--seed", gen_seed_value, "RNG seed (omitted: random, printed)");
  gen->add_option("--out", gen_out, "output file (default stdout)");

  auto* bench = app.add_subcommand(
      "bench", "Time the determinant across a size sweep");
  std::string bench_sizes = "8,16,32,48";
  long bench_deg = 4;
  std::uint64_t bench_p = 998244353, bench_seed = 1;
  bool compare_oracle = false;
  bench->add_option("--sizes", bench_sizes, "comma-separated dimensions")->capture_default_str();
  bench->add_option("--degree", bench_deg, "max entry degree")->capture_default_str();
  bench->add_option("--p", bench_p, "prime modulus")->capture_default_str();
  bench->add_option("--seed", bench_seed, "RNG seed")->capture_default_str();
  bench->add_flag("--compare-oracle", compare_oracle,
                  "also time fraction-free elimination");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (det->parsed())
      return cmd_det(det_path, auto_orient, trace, oracle_check);
    if (kernel->parsed()) return cmd_kernel(kernel_path, kernel_shift);
    if (colbasis->parsed())
      return cmd_colbasis(colbasis_path, colbasis_shift);
    if (gen->parsed()) {
      std::optional<std::uint64_t> seed;
      if (gen_seed_opt->count() > 0) seed = gen_seed_value;
      if (gen_profile != "paper-example" && gen_n == 0)
        throw UsageError("gen requires --n for random profiles");
      return cmd_gen(gen_n, gen_profile, gen_p, seed, gen_deg, gen_out);
    }
    if (bench->parsed())
      return cmd_bench(bench_sizes, bench_deg, bench_p, bench_seed,
                       compare_oracle);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const RankDeficientError& e) {
    std::cerr << "error: rank " << e.rank() << " < " << e.required() << '\n';
    return 1;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
