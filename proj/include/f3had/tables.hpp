// Bundled reference data: construction parameters for the catalogued code
// families and the published values their analysis must reproduce.

#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "f3had/code.hpp"

namespace f3had {

struct BundledCode {
    std::string label;   // "P36", "D36-4", "F36-260"
    std::string family;  // "bdc" or "4nc"
    std::string ra, rb;  // first rows as ternary strings
};

// table ids: "T2-bdc" (12 codes), "T4-4nc" (260 codes), "P36"
std::vector<BundledCode> load_bundled_params(const std::string& table);
const BundledCode& bundled_by_label(const std::string& label);  // throws if unknown
TernaryCode construct_bundled(const BundledCode& b);
TernaryCode bundled_code(const std::string& label);

// FNV-1a 64 over the bundled text blocks, frozen at transcription time
uint64_t bundle_checksum(const std::string& table);

// published weight-9 counts
int expected_a9_d(int i);  // i = 1..12
int expected_a9_f(int i);  // i = 1..260
int expected_a9_t(int i);  // i = 1..10 (index 11 generates an extremal code)

// published search tuples (w10, w11, n0, n1, neq)
std::array<int, 5> expected_tuple_f(int i);  // i = 1..260
std::array<int, 5> expected_tuple_d(int i);  // i = 8..10
std::array<int, 5> expected_tuple_t(int i);  // i = 1..8, 10

// published automorphism-group orders, one row per inequivalent matrix,
// keyed by (code index, matrix index)
const std::vector<std::array<int, 3>>& aut_order_rows();  // {i, j, order}, 89 rows

// per-code multiset of |Aut| over all its matrix classes, with the rows
// omitted from the published list (equivalent to an earlier matrix)
// filled in from the equivalence chains
std::vector<int> expected_aut_multiset_f(int i);

// the six triples of pairwise equivalent matrices across different codes
const std::vector<std::array<std::pair<int, int>, 3>>& equivalence_chains();

// the 13 (s,t) whose transposed matrix is equivalent to none of the found ones
const std::vector<std::pair<int, int>>& transpose_exceptional_pairs();

bool expected_dim16(int i, int j);        // dim C(H) = 16 for these, 18 otherwise
bool expected_minweight12(int i, int j);  // d(C(H)) = 12 for these, 9 otherwise

}  // namespace f3had
