#pragma once

#include <cstdint>

#include "pmdet/polymat.hpp"

namespace pmdet {

/// Degree profiles for generated matrices.  kUniform fills every entry
/// with a random polynomial of degree <= max_deg; kSkewed gives one random
/// column degree n*max_deg and keeps the others constant; kExample ignores
/// all parameters and returns the built-in worked 5x5 fixture over Z_7.
enum class GenProfile { kUniform, kSkewed, kExample };

/// Deterministic seeded generator of nonsingular square matrices.
/// Nonsingularity is certified before returning: for small dimensions via
/// the exact reference determinant, otherwise via a nonzero determinant of
/// a random evaluation (a sound certificate); singular draws are retried
/// with fresh randomness.
PolyMatrix generate_matrix(std::uint64_t p, std::size_t n, long max_deg,
                           GenProfile profile, std::uint64_t seed);

/// The built-in worked example: the 5x5 matrix over Z_7 with determinant
/// 2x^10 + 5x^8 + 5x^7 + 2x^5.
PolyMatrix worked_example_matrix();

} // namespace pmdet
