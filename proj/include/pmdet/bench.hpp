#pragma once

#include <cstdint>
#include <vector>

namespace pmdet {

/// One measured size in a benchmark sweep.
struct BenchRow {
  std::size_t n = 0;
  double avg_deg = 0.0;        ///< measured average column degree
  double seconds = 0.0;        ///< recursive determinant wall time
  double oracle_seconds = -1.0; ///< Bareiss wall time, -1 when not measured
  bool verified = false;       ///< spot check against the reference oracle
};

struct BenchResult {
  std::vector<BenchRow> rows;
  double slope = 0.0; ///< least-squares log-log slope of seconds vs n
};

/// Times the recursive determinant on seeded nonsingular uniform matrices
/// of the given sizes.  Every result is spot-verified against the
/// reference oracle (verified flag); compare_oracle additionally times the
/// fraction-free elimination oracle on each size.
BenchResult run_bench(std::uint64_t p, const std::vector<std::size_t>& sizes,
                      long max_deg, std::uint64_t seed, bool compare_oracle);

/// Least-squares slope of log(seconds) against log(n) over rows with
/// positive time; 0 when fewer than two usable rows exist.
double fitted_slope(const std::vector<BenchRow>& rows);

} // namespace pmdet
