#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "gorkit/poly.hpp"
#include "gorkit/polytope.hpp"

namespace gorkit {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_no, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

/**
 * Polytope file: a "d n" header followed by n rows of d integers.
 * Nef file: a "d r" header followed by r blocks, each a count line "n_i"
 * and n_i rows of d integers. '#' starts a comment, blank lines are skipped,
 * CRLF is accepted.
 */
LatticePolytope read_polytope(std::istream& in);
std::vector<LatticePolytope> read_nef_parts(std::istream& in);
LatticePolytope read_polytope_file(const std::string& path);
std::vector<LatticePolytope> read_nef_file(const std::string& path);

void write_polytope(std::ostream& out, const LatticePolytope& p);
void write_nef_parts(std::ostream& out, const std::vector<LatticePolytope>& parts);

/** Decimal string when the value does not fit in 64 bits, plain number otherwise. */
nlohmann::json json_int(const Int& x);
nlohmann::json json_rat(const Rat& x);
nlohmann::json json_vec(const Vec& v);
nlohmann::json json_vertices(const LatticePolytope& p);
nlohmann::json json_unipoly(const UniPoly& p);
nlohmann::json json_laurent2(const LaurentPoly2& p);

}  // namespace gorkit
