#include <doctest.h>

#include <cstdint>

#include "pmdet/kernel.hpp"
#include "pmdet/oracle.hpp"
#include "support/fixtures.hpp"
#include "support/testutil.hpp"

using namespace pmdet;

namespace {

Shift cdeg_shift(const PolyMatrix& f) { return Shift::from_cdeg(f.cdeg()); }

} // namespace

TEST_CASE("kernel of the worked 3x5 example") {
  auto c = fx::ctx7();
  PolyMatrix f = fx::example1(c);
  Shift s({1, 3, 4, 4, 2});
  KernelBasis kb = kernel_basis(f, s);
  const PolyMatrix& n = kb.basis();

  REQUIRE(n.cols() == 2);
  CHECK(tu::is_zero_matrix(naive_mul(f, n)));
  // Columns come sorted by ascending shifted degree; the module's minimal
  // shifted degrees are 2 and 5.
  DegreeProfile sd = cdeg_shifted(n, s);
  CHECK(sd[0] == Degree(2));
  CHECK(sd[1] == Degree(5));
  CHECK(sum_cdeg(sd) <= Degree(s.sum()));

  // The printed basis and the computed one generate each other.
  PolyMatrix printed = fx::example1_N(c);
  CHECK(oracle_in_span(n, printed, s));
  CHECK(oracle_in_span(printed, n, s));
  CHECK(is_kernel_basis(f, n, s));
}

TEST_CASE("unit kernel for a matrix with a zero column") {
  FieldContext c(7);
  PolyMatrix f = fx::M(c, {{{1}, {}}});
  KernelBasis kb = kernel_basis(f, Shift::zeros(2));
  CHECK(kb.basis() == fx::M(c, {{{}}, {{1}}}));
  CHECK(kb.source_rows() == 1);
  CHECK(kb.source_cols() == 2);
}

TEST_CASE("square nonsingular input has a zero width kernel") {
  FieldContext c(97);
  tu::Rng rng(4582575694);
  PolyMatrix f = tu::random_matrix(c, 3, 3, 2, rng);
  REQUIRE(!oracle_det(f).is_zero());
  KernelBasis kb = kernel_basis(f, cdeg_shift(f));
  CHECK(kb.basis().cols() == 0);
  CHECK(is_kernel_basis(f, kb.basis(), cdeg_shift(f)));
}

TEST_CASE("random full row rank instances") {
  tu::Rng rng(4690415759);
  for (std::uint64_t p : {7ull, 97ull, 998244353ull}) {
    FieldContext c(p);
    for (int it = 0; it < 4; ++it) {
      // An embedded identity block guarantees full row rank, so the kernel
      // width is exactly cols - rows.
      PolyMatrix f =
          hstack(PolyMatrix::identity(c, 2), tu::random_matrix(c, 2, 3, 3, rng));
      Shift s = cdeg_shift(f);
      KernelBasis kb = kernel_basis(f, s);
      CHECK(kb.basis().cols() == 3);
      CHECK(is_kernel_basis(f, kb.basis(), s));

      // Every bounded-degree kernel vector is spanned, and every basis
      // column is a field combination of the brute-force vectors.
      PolyMatrix bf = coefficient_nullspace(f, s.sum());
      CHECK(oracle_in_span(kb.basis(), bf, s));
      CHECK(tu::in_coefficient_span(bf, kb.basis(), s.sum()));
    }
  }
}

TEST_CASE("shift translation yields an equivalent basis") {
  tu::Rng rng(4795831523);
  FieldContext c(97);
  PolyMatrix f = tu::random_matrix(c, 2, 4, 3, rng);
  Shift s = cdeg_shift(f);
  std::vector<long> tv(s.values());
  for (long& x : tv) x += 3;
  Shift t(tv);
  KernelBasis a = kernel_basis(f, s);
  KernelBasis b = kernel_basis(f, t);
  REQUIRE(a.basis().cols() == b.basis().cols());
  CHECK(oracle_in_span(a.basis(), b.basis(), s));
  CHECK(oracle_in_span(b.basis(), a.basis(), s));
}

TEST_CASE("definition check rejects non-bases") {
  auto c = fx::ctx7();
  PolyMatrix f = fx::example1(c);
  Shift s({1, 3, 4, 4, 2});
  PolyMatrix n = fx::example1_N(c);
  CHECK(is_kernel_basis(f, n, s));
  // Dropping a column breaks generation.
  CHECK(!is_kernel_basis(f, select_columns(n, {0}), s));
  // A non-annihilated column breaks exactness.
  PolyMatrix junk = hstack(select_columns(n, {0}),
                           select_columns(PolyMatrix::identity(c, 5), {0}));
  CHECK(!is_kernel_basis(f, junk, s));
  // Duplicating a column breaks full rank.
  PolyMatrix dup = hstack(n, select_columns(n, {0}));
  CHECK(!is_kernel_basis(f, dup, s));
}

TEST_CASE("usage validation") {
  FieldContext c(7);
  PolyMatrix f = fx::M(c, {{{1, 1}, {1}}});
  CHECK_THROWS_AS(kernel_basis(f, Shift::zeros(3)), UsageError);
  CHECK_THROWS_AS(kernel_basis(f, Shift({-1, 0})), UsageError);
  CHECK_THROWS_AS(kernel_basis(f, Shift::zeros(2)), UsageError); // s < cdeg
  CHECK_THROWS_AS(is_kernel_basis(f, PolyMatrix(c, 3, 1), Shift::zeros(2)),
                  UsageError);
}
