// {+1,-1} vectors and Hadamard matrices over the integers, the lift from
// full-weight GF(3) words, and a tolerant text parser for matrix files.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "f3had/code.hpp"
#include "f3had/gf3.hpp"

namespace f3had {

struct SignVec {
    uint64_t neg = 0;  // bit i set iff entry i is -1
    int n = 0;

    int get(int i) const { return (neg >> i) & 1 ? -1 : 1; }
    void set(int i, int v) {
        const uint64_t b = uint64_t{1} << i;
        if (v < 0) neg |= b;
        else neg &= ~b;
    }
    int ones() const { return n - std::popcount(neg); }  // n1(x)
    SignVec negated() const { return {~neg & low_mask(n), n}; }
    bool operator==(const SignVec& o) const { return n == o.n && neg == o.neg; }
    std::string to_string() const;  // "1 -1 1 ..."
};

inline int dot(const SignVec& a, const SignVec& b) {
    return a.n - 2 * std::popcount(a.neg ^ b.neg);
}

inline bool orthogonal(const SignVec& a, const SignVec& b) { return dot(a, b) == 0; }

// entry-wise 1 -> +1, 2 -> -1; defined only on words without zeros
SignVec lift_bar(const Gf3Vec& x);

// +1 -> 1, -1 -> 2
Gf3Vec sign_to_gf3(const SignVec& s);

// the statement of the parity lemma for one pair: either the vectors are
// not orthogonal, or their +1 counts agree mod 2 (requires n = 0 mod 4)
bool orthogonality_parity(const SignVec& r1, const SignVec& r2);

struct HadamardMatrix {
    int n = 0;
    std::vector<SignVec> rows;

    bool verify() const;  // H H^T == n I
    HadamardMatrix transposed() const;
    bool operator==(const HadamardMatrix& o) const { return n == o.n && rows == o.rows; }
};

// GF(3) row space of H with entries read as 1 -> 1, -1 -> 2
TernaryCode code_from_hadamard(const HadamardMatrix& h, std::string label = "");

std::string write_hadamard(const HadamardMatrix& h);

struct HadamardParseReport {
    std::vector<HadamardMatrix> matrices;
    std::vector<std::string> errors;  // one message per rejected block
};

// Blocks of n lines forming square matrices, separated by blank or
// non-data lines.  Symbols per block are auto-detected: "1/-1" tokens,
// or rows of +- characters, or rows of 01 characters (0 meaning -1).
HadamardParseReport parse_hadamard_file(std::istream& in);
HadamardParseReport parse_hadamard_text(const std::string& text);

}  // namespace f3had
