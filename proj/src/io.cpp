#include "pmdet/io.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "pmdet/errors.hpp"

namespace pmdet {

namespace {

std::string strip(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

/// Next line that is neither blank nor a '#' comment; false at EOF.
bool next_significant_line(std::istream& in, std::string& out) {
  std::string line;
  while (std::getline(in, line)) {
    std::string t = strip(line);
    if (t.empty() || t[0] == '#') continue;
    out = std::move(t);
    return true;
  }
  return false;
}

std::uint64_t parse_u64(const std::string& tok, const char* what) {
  if (tok.empty()) throw UsageError(std::string("empty ") + what);
  std::uint64_t v = 0;
  for (char ch : tok) {
    if (ch < '0' || ch > '9')
      throw UsageError(std::string("invalid ") + what + ": '" + tok + "'");
    std::uint64_t d = static_cast<std::uint64_t>(ch - '0');
    if (v > (UINT64_MAX - d) / 10)
      throw UsageError(std::string("out-of-range ") + what + ": '" + tok +
                       "'");
    v = v * 10 + d;
  }
  return v;
}

} // namespace

Polynomial parse_entry(const FieldContext& ctx, const std::string& line) {
  std::vector<FieldElement> coeffs;
  std::string tok;
  std::stringstream ss(strip(line));
  while (std::getline(ss, tok, ',')) {
    std::uint64_t v = parse_u64(strip(tok), "coefficient");
    if (v >= ctx.modulus())
      throw UsageError("coefficient " + tok + " not in [0, " +
                       std::to_string(ctx.modulus()) + ")");
    coeffs.push_back(FieldElement{v});
  }
  if (coeffs.empty()) throw UsageError("empty matrix entry line");
  return Polynomial(ctx, std::move(coeffs));
}

PolyMatrix read_matrix(std::istream& in) {
  std::string line;
  if (!next_significant_line(in, line))
    throw UsageError("missing header line 'p nrows ncols'");
  std::stringstream hs(line);
  std::string tp, tr, tc, extra;
  if (!(hs >> tp >> tr >> tc) || (hs >> extra))
    throw UsageError("header must be exactly 'p nrows ncols', got '" + line +
                     "'");
  FieldContext ctx(parse_u64(tp, "modulus")); // validates primality
  std::size_t rows = static_cast<std::size_t>(parse_u64(tr, "row count"));
  std::size_t cols = static_cast<std::size_t>(parse_u64(tc, "column count"));

  std::vector<Polynomial> entries;
  entries.reserve(rows * cols);
  for (std::size_t i = 0; i < rows * cols; ++i) {
    if (!next_significant_line(in, line))
      throw UsageError("expected " + std::to_string(rows * cols) +
                       " entry lines, found " + std::to_string(i));
    entries.push_back(parse_entry(ctx, line));
  }
  return PolyMatrix(ctx, rows, cols, std::move(entries));
}

PolyMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open file: " + path);
  return read_matrix(in);
}

std::string render_entry(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.coeffs()[i].v);
  }
  return out;
}

void write_matrix(std::ostream& out, const PolyMatrix& m) {
  out << m.ctx().modulus() << ' ' << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out << render_entry(m.at(i, j)) << '\n';
}

std::string render_matrix(const PolyMatrix& m) {
  std::ostringstream os;
  write_matrix(os, m);
  return os.str();
}

std::string render_poly(const Polynomial& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.coeffs()[i].v);
  }
  return out + "]";
}

} // namespace pmdet
