#pragma once

#include <iosfwd>
#include <string>

#include "pmdet/polymat.hpp"

namespace pmdet {

/// Matrix text format: the first significant line is "p nrows ncols"; then
/// nrows*ncols significant lines, row-major, each entry a comma-separated
/// ascending coefficient list with values in [0, p) ("0" is the zero
/// polynomial).  Blank lines and lines starting with '#' are skipped.
/// Malformed input (including a composite p) raises UsageError.
PolyMatrix read_matrix(std::istream& in);
PolyMatrix read_matrix_file(const std::string& path);

/// Renders in the same format with canonical residues and no comments, so
/// parse(render(m)) == m exactly.
void write_matrix(std::ostream& out, const PolyMatrix& m);
std::string render_matrix(const PolyMatrix& m);

/// One entry line: "c0,c1,...,cdeg" ascending, "0" when zero.
std::string render_entry(const Polynomial& p);
Polynomial parse_entry(const FieldContext& ctx, const std::string& line);

/// Determinant-style rendering: "[c0,c1,...]", "[]" for the zero
/// polynomial.
std::string render_poly(const Polynomial& p);

} // namespace pmdet
