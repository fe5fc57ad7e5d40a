// Bitsliced arithmetic over GF(3) = {0,1,2} for vectors of length <= 64.
//
// A vector is held as two bitplanes: bit i of p1 is set iff coordinate i
// equals 1, bit i of p2 iff it equals 2.  Addition, negation and inner
// products are then word-parallel, which is what makes the 3^18 codeword
// sweeps cheap.

#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace f3had {

constexpr int kMaxLen = 64;

inline uint64_t low_mask(int n) {
    return n >= 64 ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
}

struct Gf3Vec {
    uint64_t p1 = 0;  // coords equal to 1
    uint64_t p2 = 0;  // coords equal to 2
    int n = 0;

    static Gf3Vec zero(int n);
    static Gf3Vec parse(std::string_view digits);  // "0120..." left to right

    int get(int i) const {
        return int((p1 >> i) & 1) + 2 * int((p2 >> i) & 1);
    }
    void set(int i, int v) {
        const uint64_t b = uint64_t{1} << i;
        p1 &= ~b;
        p2 &= ~b;
        if (v == 1) p1 |= b;
        else if (v == 2) p2 |= b;
    }
    int weight() const { return std::popcount(p1 | p2); }
    bool is_zero() const { return (p1 | p2) == 0; }
    Gf3Vec negated() const { return {p2, p1, n}; }

    bool operator==(const Gf3Vec& o) const {
        return n == o.n && p1 == o.p1 && p2 == o.p2;
    }
    std::string to_string() const;
};

inline Gf3Vec add(const Gf3Vec& a, const Gf3Vec& b) {
    const uint64_t az = ~(a.p1 | a.p2), bz = ~(b.p1 | b.p2);
    return {(a.p1 & bz) | (b.p1 & az) | (a.p2 & b.p2),
            (a.p2 & bz) | (b.p2 & az) | (a.p1 & b.p1), a.n};
}

inline Gf3Vec sub(const Gf3Vec& a, const Gf3Vec& b) { return add(a, b.negated()); }

// c in {0,1,2}
inline Gf3Vec scale(const Gf3Vec& a, int c) {
    if (c == 0) return Gf3Vec::zero(a.n);
    return c == 1 ? a : a.negated();
}

inline int inner(const Gf3Vec& a, const Gf3Vec& b) {
    const int ones = std::popcount(a.p1 & b.p1) + std::popcount(a.p2 & b.p2);
    const int twos = std::popcount(a.p1 & b.p2) + std::popcount(a.p2 & b.p1);
    return (ones + 2 * twos) % 3;
}

// coordinate-lexicographic order (coordinate 0 most significant)
bool lex_less(const Gf3Vec& a, const Gf3Vec& b);

struct Gf3Mat {
    std::vector<Gf3Vec> rows;
    int ncols = 0;

    int nrows() const { return int(rows.size()); }
    static Gf3Mat identity(int n);
    std::string to_string() const;
    bool operator==(const Gf3Mat& o) const { return ncols == o.ncols && rows == o.rows; }
};

// m x m matrix whose first row is r and whose every next row is the
// previous one shifted right by one position, the wrapped entry
// multiplied by mu (mu = +1: circulant, mu = -1: negacirculant).
Gf3Mat circulant(const Gf3Vec& first_row, int mu);

Gf3Mat transpose(const Gf3Mat& m);
Gf3Mat matmul(const Gf3Mat& a, const Gf3Mat& b);

// G * G^T == 0, i.e. all pairwise row inner products vanish
bool gram_is_zero(const Gf3Mat& g);

struct RrefResult {
    Gf3Mat mat;              // reduced rows only (rank many), pivots scaled to 1
    std::vector<int> pivots; // pivot column per row, strictly increasing
};

// Gaussian elimination, leftmost pivot first; deterministic.
RrefResult rref(const Gf3Mat& g);

inline int rank(const Gf3Mat& g) { return int(rref(g).pivots.size()); }

// basis of { x : G x^T = 0 }, as an (ncols - rank) x ncols matrix
Gf3Mat nullspace(const Gf3Mat& g);

// sum_i digits[i] * rows[i]
Gf3Vec combine(const Gf3Mat& g, const std::vector<int>& digits);

// true iff v lies in the row space described by an rref
bool in_row_space(const RrefResult& r, const Gf3Vec& v);

// signed coordinate permutation: y[j] = signs[j] * x[perm[j]]
struct MonomialMap {
    std::vector<int> perm;   // source index per target position
    std::vector<int> signs;  // 1 or 2

    int size() const { return int(perm.size()); }
    Gf3Vec apply(const Gf3Vec& x) const;
    MonomialMap inverse() const;
    static MonomialMap identity(int n);
    static MonomialMap random(int n, std::mt19937_64& rng);
};

}  // namespace f3had
