#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <functional>

#include "pmdet/colbasis.hpp"
#include "pmdet/oracle.hpp"
#include "support/fixtures.hpp"
#include "support/testutil.hpp"

using namespace pmdet;

namespace {

// Independent weak Popov check: every row nonzero with a monic pivot (the
// rightmost entry of maximal degree), pivot positions strictly increasing.
bool is_weak_popov(const PolyMatrix& m) {
  long prev = -1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Degree d = Degree::neg_inf();
    for (std::size_t j = 0; j < m.cols(); ++j)
      d = std::max(d, m.at(i, j).degree());
    if (!d.finite()) return false;
    long pos = -1;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j).degree() == d) pos = static_cast<long>(j);
    if (pos <= prev) return false;
    if (m.at(i, static_cast<std::size_t>(pos)).leading_coeff().v != 1)
      return false;
    prev = pos;
  }
  return true;
}

} // namespace

TEST_CASE("weak Popov of an already reduced matrix") {
  FieldContext c(7);
  PolyMatrix a = fx::M(c, {{{0, 0, 1}, {1}}, {{}, {0, 1}}});
  REQUIRE(is_weak_popov(a));
  RowBasisPair rb = weak_popov_row_basis(a);
  CHECK(rb.r == a);
  CHECK(rb.vleft == PolyMatrix::identity(c, 2));
}

TEST_CASE("duplicated row is reconstructed through the left factor") {
  FieldContext c(7);
  PolyMatrix a = fx::M(c, {{{0, 1}, {1}}, {{1}, {0, 1}}, {{0, 1}, {1}}});
  RowBasisPair rb = weak_popov_row_basis(a);
  CHECK(rb.r.rows() == 2);
  CHECK(is_weak_popov(rb.r));
  CHECK(mul(rb.vleft, rb.r) == a);
}

TEST_CASE("random tall reconstructions") {
  tu::Rng rng(5130181433);
  for (std::uint64_t p : {7ull, 97ull, 998244353ull}) {
    FieldContext c(p);
    for (int it = 0; it < 5; ++it) {
      PolyMatrix a = tu::random_matrix(c, 5, 3, 3, rng);
      RowBasisPair rb = weak_popov_row_basis(a);
      CHECK(is_weak_popov(rb.r));
      CHECK(mul(rb.vleft, rb.r) == a);
      CHECK(rb.r.rows() <= 3);
      CHECK(rb.vleft.cols() == rb.r.rows());
    }
  }
}

TEST_CASE("column basis of the worked 3x5 example") {
  auto c = fx::ctx7();
  PolyMatrix f = fx::example1(c);
  Shift s({1, 3, 4, 4, 2});
  ColBasisTriple t = col_basis(f, s);

  REQUIRE(t.g1.rows() == 3);
  REQUIRE(t.g1.cols() == 3);
  CHECK(mul(t.g1, t.v_u) == f);
  CHECK(tu::is_zero_matrix(naive_mul(f, t.n.basis())));
  CHECK(!oracle_det(t.g1).is_zero());
  CHECK(t.n.basis() == kernel_basis(f, s).basis());

  // Same column module as the printed basis (the first three columns of f).
  PolyMatrix printed = fx::example2_G1(c);
  CHECK(oracle_in_span(t.g1, printed, Shift::zeros(3)));
  CHECK(oracle_in_span(printed, t.g1, Shift::zeros(3)));

  // Membership of the remaining columns in the printed module; the fourth
  // satisfies f4 = 2 g1 + 2 x^2 g2 - x g3.
  PolyMatrix q = fx::M(c, {{{2}}, {{0, 0, 2}}, {{0, -1}}});
  CHECK(mul(printed, q) == select_columns(f, {3}));
  CHECK(oracle_in_span(printed, f, Shift::zeros(3)));

  // Column degrees bounded by the three largest input column degrees.
  DegreeProfile dg = t.g1.cdeg();
  std::sort(dg.begin(), dg.end(), std::greater<>());
  CHECK(dg[0] <= Degree(4));
  CHECK(dg[1] <= Degree(4));
  CHECK(dg[2] <= Degree(3));
}

TEST_CASE("square nonsingular input keeps its module and has no kernel") {
  FieldContext c(97);
  tu::Rng rng(5263524396);
  PolyMatrix f = tu::random_matrix(c, 3, 3, 2, rng);
  REQUIRE(!oracle_det(f).is_zero());
  Shift s = Shift::from_cdeg(f.cdeg());
  ColBasisTriple t = col_basis(f, s);
  CHECK(t.n.basis().cols() == 0);
  CHECK(mul(t.g1, t.v_u) == f);
  CHECK(oracle_in_span(t.g1, f, Shift::zeros(3)));
  CHECK(oracle_in_span(f, t.g1, Shift::zeros(3)));
}

TEST_CASE("one by two worked case") {
  FieldContext c(7);
  PolyMatrix f = fx::M(c, {{{1}, {0, 1}}});
  ColBasisTriple t = col_basis(f, Shift({0, 1}));
  CHECK(t.g1 == fx::M(c, {{{1}}}));
  CHECK(t.v_u == f);
  REQUIRE(t.n.basis().cols() == 1);
  // Kernel generated by (-x, 1), up to a unit.
  const Polynomial& bottom = t.n.basis().at(1, 0);
  REQUIRE(bottom.degree() == Degree(0));
  CHECK(t.n.basis().at(0, 0) ==
        fx::P(c, {0, -1}).scale(bottom.constant_term()));
}

TEST_CASE("rank deficiency is reported with the discovered rank") {
  FieldContext c(7);
  PolyMatrix f = fx::M(c, {{{0, 1}, {0, 0, 1}}, {{1}, {0, 1}}});
  try {
    col_basis(f, Shift({1, 2}));
    FAIL("expected a rank deficiency report");
  } catch (const RankDeficientError& e) {
    CHECK(e.rank() == 1);
    CHECK(e.required() == 2);
  }

  // More rows than columns can never have full row rank.
  PolyMatrix tall = fx::M(c, {{{1}, {}}, {{}, {1}}, {{1}, {1}}});
  CHECK_THROWS_AS(col_basis(tall, Shift::zeros(2)), RankDeficientError);
}

TEST_CASE("usage validation") {
  FieldContext c(7);
  PolyMatrix f = fx::M(c, {{{1}, {0, 1}}});
  CHECK_THROWS_AS(col_basis(f, Shift::zeros(3)), UsageError);
  CHECK_THROWS_AS(col_basis(f, Shift::zeros(2)), UsageError); // s < cdeg
  CHECK_THROWS_AS(col_basis(PolyMatrix(c, 0, 2), Shift::zeros(2)),
                  UsageError);
}
