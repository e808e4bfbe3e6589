#include <doctest.h>

#include <cstdint>

#include "pmdet/colbasis.hpp"
#include "pmdet/detconst.hpp"
#include "pmdet/oracle.hpp"
#include "support/fixtures.hpp"
#include "support/testutil.hpp"

using namespace pmdet;

namespace {

ConstMatrix from_ints(const FieldContext& c,
                      std::vector<std::vector<long long>> rows) {
  ConstMatrix m(c, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m.set(i, j, c.from_int(rows[i][j]));
  return m;
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

} // namespace

TEST_CASE("determinant of small constant matrices") {
  FieldContext c(7);
  CHECK(det_const(ConstMatrix::identity(c, 4)).v == 1);
  CHECK(det_const(from_ints(c, {{0, 1}, {1, 0}})).v == 6); // transposition
  CHECK(det_const(from_ints(c, {{1, 2}, {2, 4}})).v == 0); // singular
  CHECK(det_const(ConstMatrix(c, 0, 0)).v == 1);           // empty product
  CHECK_THROWS_AS(det_const(ConstMatrix(c, 2, 3)), UsageError);
}

TEST_CASE("determinant equals the diagonal product on triangular input") {
  FieldContext c(998244353);
  tu::Rng rng(6017345821);
  ConstMatrix m(c, 5, 5);
  FieldElement expect = c.one();
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i; j < 5; ++j) m.set(i, j, tu::random_elem(c, rng));
    if (c.is_zero(m.at(i, i))) m.set(i, i, c.one());
    expect = c.mul(expect, m.at(i, i));
  }
  CHECK(det_const(m).v == expect.v);
}

TEST_CASE("completion of the worked example constant kernel") {
  auto c = fx::ctx7();
  ConstMatrix u_r0 = fx::example1_N(c).constant_term();
  REQUIRE(u_r0.rows() == 5);
  REQUIRE(u_r0.cols() == 2);

  ConstMatrix u_l = unimodular_completion(u_r0);
  CHECK(u_l == from_ints(c, {{1, 0, 0},
                             {0, 1, 0},
                             {0, 0, 1},
                             {0, 0, 0},
                             {0, 0, 0}}));
  // det [U_L*, U_R0] = -3 = 4 over Z_7.
  CHECK(det_const(concat(u_l, u_r0)).v == 4);

  ConstMatrix v_u0 = fx::example2_VU(c).constant_term();
  CHECK(unimodular_det_contribution(v_u0, u_r0).v == 2);
}

TEST_CASE("completion of a trailing identity column") {
  FieldContext c(7);
  ConstMatrix u_r0(c, 2, 1);
  u_r0.set(1, 0, c.one());
  ConstMatrix u_l = unimodular_completion(u_r0);
  CHECK(u_l == from_ints(c, {{1}, {0}}));
}

TEST_CASE("random completions are always nonsingular") {
  tu::Rng rng(6147583901);
  for (std::uint64_t p : {7ull, 97ull, 998244353ull}) {
    FieldContext c(p);
    for (int it = 0; it < 10; ++it) {
      ConstMatrix m(c, 4, 2);
      do {
        for (std::size_t i = 0; i < 4; ++i)
          for (std::size_t j = 0; j < 2; ++j)
            m.set(i, j, tu::random_elem(c, rng));
      } while (rank(m) < 2);
      ConstMatrix u_l = unimodular_completion(m);
      CHECK(!c.is_zero(det_const(concat(u_l, m))));
    }
  }
}

TEST_CASE("degenerate contribution without a kernel block") {
  FieldContext c(7);
  ConstMatrix v = from_ints(c, {{2, 1}, {1, 1}});
  CHECK(unimodular_det_contribution(v, ConstMatrix(c, 2, 0)).v == 1);
}

TEST_CASE("contribution is invariant under the completion choice") {
  auto c = fx::ctx7();
  PolyMatrix f = fx::example1(c);
  ColBasisTriple t = col_basis(f, Shift({1, 3, 4, 4, 2}));
  ConstMatrix v_u0 = t.v_u.constant_term();
  ConstMatrix u_r0 = t.n.basis().constant_term();
  FieldElement canonical = unimodular_det_contribution(v_u0, u_r0);

  tu::Rng rng(6244831760);
  for (int it = 0; it < 20; ++it) {
    // Random completion: any C with [C, U_R0] invertible must give the
    // same scalar det(V_U0 C) / det([C, U_R0]).
    ConstMatrix cand(c, 5, 3);
    FieldElement den = c.zero();
    ConstMatrix star(c, 5, 5);
    do {
      for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 3; ++j)
          cand.set(i, j, tu::random_elem(c, rng));
      star = concat(cand, u_r0);
      den = det_const(star);
    } while (c.is_zero(den));
    FieldElement num = det_const(mul(v_u0, cand));
    CHECK(c.mul(num, c.inv(den)).v == canonical.v);
  }
}

TEST_CASE("constant determinant of constructed unimodular matrices") {
  // U is assembled from elementary column operations over Z_p[x]; its
  // determinant is the constant product of the elementary determinants and
  // must equal det_const(U(0)).
  tu::Rng rng(6398571204);
  FieldContext c(97);
  for (int it = 0; it < 10; ++it) {
    std::size_t n = 4;
    std::vector<std::vector<Polynomial>> cols(
        n, std::vector<Polynomial>(n, Polynomial(c)));
    for (std::size_t j = 0; j < n; ++j)
      cols[j][j] = Polynomial::constant(c, c.one());
    FieldElement expect = c.one();
    for (int op = 0; op < 25; ++op) {
      std::size_t i = rng() % n, j = rng() % n;
      if (rng() % 3 == 0) {
        FieldElement s = tu::random_elem(c, rng);
        if (c.is_zero(s)) s = c.one();
        for (std::size_t r = 0; r < n; ++r) cols[j][r] = cols[j][r].scale(s);
        expect = c.mul(expect, s);
      } else if (i != j) {
        Polynomial q = tu::random_poly(c, 2, rng);
        for (std::size_t r = 0; r < n; ++r)
          cols[j][r] = cols[j][r].add(cols[i][r].mul(q));
      }
    }
    std::vector<Polynomial> flat;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t j = 0; j < n; ++j) flat.push_back(cols[j][r]);
    PolyMatrix u(c, n, n, std::move(flat));
    CHECK(det_const(u.constant_term()).v == expect.v);
    CHECK(oracle_det(u) == Polynomial::constant(c, expect));
  }
}

TEST_CASE("error reporting") {
  FieldContext c(7);
  // A zero column can never be completed.
  CHECK_THROWS_AS(unimodular_completion(ConstMatrix(c, 3, 1)), InternalError);
  CHECK_THROWS_AS(unimodular_completion(ConstMatrix(c, 1, 2)), UsageError);
  // Non-annihilating pair violates the V_U0 * U_R0 = 0 precondition.
  ConstMatrix v = from_ints(c, {{1, 1}});
  ConstMatrix u = from_ints(c, {{1}, {0}});
  CHECK_THROWS_AS(unimodular_det_contribution(v, u), InternalError);
  // Shape mismatch: k + (n - k) must add up.
  CHECK_THROWS_AS(unimodular_det_contribution(v, ConstMatrix(c, 2, 0)),
                  UsageError);
}
