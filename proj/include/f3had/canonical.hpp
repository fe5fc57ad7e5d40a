// Canonical forms for vertex-colored graphs via individualization and
// equitable refinement, with automorphism discovery.  On top of that sit
// the two reductions used here: Hadamard-matrix equivalence under signed
// row/column permutations, and ternary-code equivalence under monomial
// maps.  Equal certificates mean equivalent objects (within a kind).

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "f3had/code.hpp"
#include "f3had/hadamard.hpp"
#include "f3had/weight.hpp"

namespace f3had {

struct ColoredGraph {
    int n = 0;
    std::vector<int> color;              // one entry per vertex
    std::vector<std::vector<int>> adj;   // undirected; fill via add_edge

    explicit ColoredGraph(int nv = 0) : n(nv), color(size_t(nv), 0), adj(size_t(nv)) {}
    void add_edge(int u, int v) {
        adj[size_t(u)].push_back(v);
        adj[size_t(v)].push_back(u);
    }
};

struct CanonResult {
    std::vector<int> order;              // order[pos] = vertex at canonical position pos
    std::array<uint8_t, 32> digest;      // SHA-256 of the canonical form
    uint64_t aut_order = 1;              // color-preserving automorphism group order
    std::vector<std::vector<int>> generators;
    uint64_t nodes = 0;                  // search tree nodes (diagnostics)
};

// tag is mixed into the digest so that certificates of different object
// kinds can never collide structurally
CanonResult canonical_form(const ColoredGraph& g, std::string_view tag = {},
                           uint64_t node_limit = 200'000'000);

struct CanonCert {
    std::array<uint8_t, 32> bytes{};
    uint64_t aut_order = 0;
    char kind = '?';  // 'H' or 'C'

    std::string hex() const;
    bool operator==(const CanonCert& o) const { return kind == o.kind && bytes == o.bytes; }
};

// 4n vertices: n antipodal row pairs and n antipodal column pairs, joined
// by a perfect matching within each side; row/column incidence edges follow
// the sign of the entry; two color classes keep the sides apart.
ColoredGraph hadamard_to_graph(const HadamardMatrix& h);

CanonCert hadamard_cert(const HadamardMatrix& h);
bool hadamard_equivalent(const HadamardMatrix& h, const HadamardMatrix& k);

// |Aut(H)| under the convention that reproduces the published group orders:
// the number of signed row/column permutation pairs (P, Q) with P H Q = H,
// which is exactly the color-preserving graph group.  The normalization
// constant was calibrated once against known orders (12, 144, 72) and is
// frozen at 1.
uint64_t hadamard_aut_order(const HadamardMatrix& h);
constexpr uint64_t kHadamardAutNorm = 1;

// Code certificates are built from the incidence graph between signed
// coordinates (2n vertices, value 1 / value 2 joined by a matching edge)
// and low-weight codewords; both x and 2x appear as vertices joined by a
// matching edge.  Weight classes are added, lightest first, until the
// included words span the code, so certificate equality is equivalence.
struct CodeCertOptions {
    uint64_t budget = kDefaultBudget;  // fallback sweep budget for codes
                                       // without a usable self-dual fast path
    size_t max_words = 50000;          // refuse beyond this many word vertices
};

CanonCert code_cert(const TernaryCode& c, const CodeCertOptions& opt = {});
CanonCert code_cert_from_words(int n, const std::vector<std::pair<int, std::vector<Gf3Vec>>>& classes);
bool code_equivalent(const TernaryCode& a, const TernaryCode& b, const CodeCertOptions& opt = {});

}  // namespace f3had
