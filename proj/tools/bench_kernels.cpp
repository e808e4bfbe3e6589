// Benchmark of the production matrix-multiply kernel (NTT-based, OpenMP
// over output rows) against the serial schoolbook reference that the test
// suite uses for cross-checking.  Both products are compared for equality
// on every instance.

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <random>
#include <vector>

#include "pmdet/polymat.hpp"
#include "pmdet/oracle.hpp"

namespace {

using namespace pmdet;

PolyMatrix random_matrix(const FieldContext& ctx, std::size_t n, long deg,
                         std::mt19937_64& rng) {
  std::vector<Polynomial> e;
  e.reserve(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    std::vector<FieldElement> c(static_cast<std::size_t>(deg) + 1);
    for (auto& x : c) x = FieldElement{rng() % ctx.modulus()};
    e.emplace_back(ctx, std::move(c));
  }
  return PolyMatrix(ctx, n, n, std::move(e));
}

template <typename F>
double time_of(F&& body) {
  auto t0 = std::chrono::steady_clock::now();
  body();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compare the parallel NTT multiply with the serial reference"};
  std::string sizes_spec = "8,16,32";
  std::string degs_spec = "4,16,64";
  std::uint64_t p = 998244353, seed = 1;
  app.add_option("--sizes", sizes_spec, "comma-separated dimensions")->capture_default_str();
  app.add_option("--degrees", degs_spec, "comma-separated entry degrees")->capture_default_str();
  app.add_option("--p", p, "prime modulus")->capture_default_str();
  app.add_option("--seed", seed, "RNG seed")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  auto parse_list = [](const std::string& s) {
    std::vector<long> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
      std::size_t next = s.find(',', pos);
      if (next == std::string::npos) next = s.size();
      out.push_back(std::stol(s.substr(pos, next - pos)));
      pos = next + 1;
    }
    return out;
  };

  FieldContext ctx(p);
  std::mt19937_64 rng(seed);
  std::printf("%6s %6s %12s %12s %9s %6s\n", "n", "deg", "mul_s",
              "naive_s", "speedup", "match");
  bool all_match = true;
  for (long n : parse_list(sizes_spec)) {
    for (long d : parse_list(degs_spec)) {
      PolyMatrix a = random_matrix(ctx, static_cast<std::size_t>(n), d, rng);
      PolyMatrix b = random_matrix(ctx, static_cast<std::size_t>(n), d, rng);
      PolyMatrix fast(ctx, 0, 0, {});
      PolyMatrix slow(ctx, 0, 0, {});
      double tf = time_of([&] { fast = mul(a, b); });
      double ts = time_of([&] { slow = naive_mul(a, b); });
      bool match = fast == slow;
      all_match = all_match && match;
      std::printf("%6ld %6ld %12.6f %12.6f %8.2fx %6s\n", n, d, tf, ts,
                  tf > 0 ? ts / tf : 0.0, match ? "yes" : "NO");
    }
  }
  if (!all_match) {
    std::fprintf(stderr, "kernel results diverged\n");
    return 2;
  }
  return 0;
}
