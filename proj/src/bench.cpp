#include "pmdet/bench.hpp"

#include <chrono>
#include <cmath>
#include <functional>

#include "pmdet/determinant.hpp"
#include "pmdet/gen.hpp"
#include "pmdet/oracle.hpp"

namespace pmdet {

namespace {

double time_of(const std::function<void()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  body();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

} // namespace

BenchResult run_bench(std::uint64_t p, const std::vector<std::size_t>& sizes,
                      long max_deg, std::uint64_t seed, bool compare_oracle) {
  BenchResult result;
  for (std::size_t n : sizes) {
    PolyMatrix f =
        generate_matrix(p, n, max_deg, GenProfile::kUniform, seed + n);
    BenchRow row;
    row.n = n;
    double sum = 0.0;
    for (const Degree& d : f.cdeg()) sum += d.finite() ? double(d.value()) : 0;
    row.avg_deg = sum / static_cast<double>(n);

    Polynomial det(f.ctx());
    row.seconds = time_of([&] { det = determinant(f); });
    row.verified = det == oracle_det(f);
    if (compare_oracle) {
      Polynomial od(f.ctx());
      row.oracle_seconds = time_of([&] { od = oracle_det_bareiss(f); });
      row.verified = row.verified && od == det;
    }
    result.rows.push_back(row);
  }
  result.slope = fitted_slope(result.rows);
  return result;
}

double fitted_slope(const std::vector<BenchRow>& rows) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t m = 0;
  for (const BenchRow& r : rows) {
    if (r.seconds <= 0 || r.n == 0) continue;
    double x = std::log(static_cast<double>(r.n)), y = std::log(r.seconds);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  if (m < 2) return 0.0;
  double denom = m * sxx - sx * sx;
  if (denom == 0) return 0.0;
  return (m * sxy - sx * sy) / denom;
}

} // namespace pmdet
