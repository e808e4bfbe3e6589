#pragma once

// Shared worked-example fixtures: a 3x5 matrix with a known minimal kernel
// basis, and its 5x5 extension with known column-basis factors and a known
// determinant.  All over Z_7.

#include <vector>

#include "pmdet/polymat.hpp"

namespace fx {

using pmdet::FieldContext;
using pmdet::PolyMatrix;
using pmdet::Polynomial;

inline FieldContext ctx7() { return FieldContext(7); }

inline Polynomial P(const FieldContext& c, std::vector<long long> v) {
  return Polynomial::from_ints(c, std::move(v));
}

inline PolyMatrix M(const FieldContext& c,
                    std::vector<std::vector<std::vector<long long>>> rows) {
  std::vector<std::vector<Polynomial>> r;
  for (auto& row : rows) {
    std::vector<Polynomial> pr;
    for (auto& entry : row) pr.push_back(P(c, entry));
    r.push_back(std::move(pr));
  }
  return PolyMatrix::from_rows(c, r);
}

// 3x5, column degrees (1,3,4,4,2).
inline PolyMatrix example1(const FieldContext& c) {
  return M(c, {
                  {{0, 1}, {0, 0, 0, -1}, {0, 0, 0, 0, -2}, {0, 2}, {0, 0, -1}},
                  {{1}, {-1}, {0, -2}, {2}, {0, -1}},
                  {{-3}, {0, 1, 3}, {0, 0, 2}, {1, 0, 0, 0, -1}, {0, 3}},
              });
}

// A minimal kernel basis of example1 for the shift (1,3,4,4,2); shifted
// column degrees (5,2).
inline PolyMatrix example1_N(const FieldContext& c) {
  return M(c, {
                  {{-1}, {0, 1}},
                  {{0, 0, -1}, {}},
                  {{0, -3}, {}},
                  {{-3}, {}},
                  {{}, {1}},
              });
}

// 5x5 extension of example1; nonsingular, det = 2x^10 - 2x^8 - 2x^7 + 2x^5.
inline PolyMatrix example2(const FieldContext& c) {
  return M(c, {
                  {{0, 1}, {0, 0, 0, -1}, {0, 0, 0, 0, -2}, {0, 2}, {0, 0, -1}},
                  {{1}, {-1}, {0, -2}, {2}, {0, -1}},
                  {{-3}, {0, 1, 3}, {0, 0, 2}, {1, 0, 0, 0, -1}, {0, 3}},
                  {{}, {1}, {-2, 2, 1}, {-2, 2, 0, 1}, {}},
                  {{1}, {2, 0, -1}, {3, -3, 0, -2}, {2, 2}, {}},
              });
}

// A column basis of the top 3 rows of example2: its first three columns.
inline PolyMatrix example2_G1(const FieldContext& c) {
  return M(c, {
                  {{0, 1}, {0, 0, 0, -1}, {0, 0, 0, 0, -2}},
                  {{1}, {-1}, {0, -2}},
                  {{-3}, {0, 1, 3}, {0, 0, 2}},
              });
}

// The right factor pairing with example2_G1: G1 * V_U = top 3 rows.
inline PolyMatrix example2_VU(const FieldContext& c) {
  return M(c, {
                  {{1}, {}, {}, {2}, {0, -1}},
                  {{}, {1}, {}, {0, 0, 2}, {}},
                  {{}, {}, {1}, {0, -1}, {}},
              });
}

// det(example2) in canonical ascending coefficients.
inline Polynomial example2_det(const FieldContext& c) {
  return P(c, {0, 0, 0, 0, 0, 2, 0, -2, -2, 0, 2});
}

} // namespace fx
