// The weight-36 pipeline: split lifted codewords by the parity invariant,
// build orthogonality graphs, enumerate 36-cliques, and assemble the
// Hadamard matrices they span.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "f3had/canonical.hpp"
#include "f3had/hadamard.hpp"
#include "f3had/weight.hpp"

namespace f3had {

struct OrthGraph {
    int nv = 0;
    int stride = 0;                // uint64 words per adjacency row
    std::vector<uint64_t> adj;     // nv * stride bitset rows
    std::vector<SignVec> verts;

    bool edge(int i, int j) const {
        return (adj[size_t(i) * size_t(stride) + size_t(j >> 6)] >> (j & 63)) & 1;
    }
    int degree(int i) const;
};

// keep the representative with first coordinate 1 from each {x, 2x} pair,
// lift to sign vectors, split by the parity of the +1 count
struct W1Split {
    std::vector<SignVec> w10, w11;
};
W1Split build_w1(const std::vector<Gf3Vec>& weight_n_words);

OrthGraph build_gamma(const std::vector<SignVec>& w, int threads = 0);
OrthGraph build_gamma_serial(const std::vector<SignVec>& w);

// all cliques of exactly `size` vertices (given as sorted index lists,
// lexicographically ordered); exact Bron-Kerbosch with pivoting, branches
// that cannot reach `size` are cut
std::vector<std::vector<int>> find_cliques_of_size(const OrthGraph& g, int size, int threads = 0);

inline std::vector<std::vector<int>> find_36_cliques(const OrthGraph& g, int threads = 0) {
    return find_cliques_of_size(g, 36, threads);
}

// rows sorted by sign pattern; verifies H H^T = n I
HadamardMatrix assemble_hadamard(const std::vector<SignVec>& clique);

struct SearchTuple {
    int w10 = 0, w11 = 0;
    long n0 = 0, n1 = 0, neq = 0;

    bool operator==(const SearchTuple& o) const = default;
    std::string to_string() const;  // "(w10,w11,n0,n1,neq)"
};

struct TupleResult {
    SearchTuple tuple;
    WeightEnumerator we;
    std::vector<HadamardMatrix> reps;   // one matrix per equivalence class
    std::vector<CanonCert> certs;       // parallel to reps, sorted by cert hex
};

TupleResult search_tuple(const TernaryCode& c, const SweepOptions& opt = {});

}  // namespace f3had
