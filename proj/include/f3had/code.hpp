// Ternary linear codes and the structured generator-matrix families:
// bordered double circulant, quasi-twisted and four-negacirculant codes.

#pragma once

#include <optional>
#include <string>

#include "f3had/gf3.hpp"

namespace f3had {

struct TernaryCode {
    int n = 0;  // length
    int k = 0;  // dimension
    Gf3Mat gen;        // generator matrix, kept in its construction shape
    RrefResult rr;     // reduced form of gen, computed once
    std::string label;

    bool contains(const Gf3Vec& v) const { return in_row_space(rr, v); }
};

// rows may be dependent; the code keeps a full-rank basis in that case
TernaryCode make_code(const Gf3Mat& rows, std::string label);

// [2m, m] code (I | P), P = border row (0,1,...,1), border column of 1's,
// lower-right block circulant(r, +1); m = len(r) + 1.
TernaryCode bordered_double_circulant(const Gf3Vec& r, std::string label = "");

// [2m, m] code (I | N), N = circulant(r, -1)
TernaryCode quasi_twisted(const Gf3Vec& r, std::string label = "");

// [4m, 2m] code (I | M), M = [[A, B], [2B^T, A^T]],
// A = circulant(ra, -1), B = circulant(rb, -1)
TernaryCode four_negacirculant(const Gf3Vec& ra, const Gf3Vec& rb, std::string label = "");

TernaryCode dual(const TernaryCode& c);
bool is_self_dual(const TernaryCode& c);
TernaryCode apply_monomial(const TernaryCode& c, const MonomialMap& p);
bool row_space_equal(const TernaryCode& a, const TernaryCode& b);

// one-line code spec:
//   family={bdc|qt|4nc} n=<len> rA=<ternary> [rB=<ternary>] label=<name>
TernaryCode parse_code_spec(const std::string& line);
std::string format_code_spec(const std::string& family, int n, const std::string& ra,
                             const std::string& rb, const std::string& label);

}  // namespace f3had
