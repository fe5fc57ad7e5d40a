// Exhaustive classification of the three structured families of length-36
// self-dual codes: enumerate the parameter space, keep the vectors passing
// the algebraic self-duality criterion, keep those of minimum weight 9, and
// collapse to equivalence classes by code certificate.  Long-running;
// progress is checkpointed to a plain-text file and runs are resumable.

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "f3had/code.hpp"

namespace f3had {

enum class Family { bdc, qt, four_nc };

const char* family_name(Family f);
Family family_from_name(const std::string& name);

// family-specific self-duality tests on first rows (algebraic, no matrix
// assembly); equivalent to G G^T = 0 on the assembled generator
bool bdc_self_dual(const Gf3Vec& r);
bool qt_self_dual(const Gf3Vec& r);
bool fournc_self_dual(const Gf3Vec& ra, const Gf3Vec& rb);

TernaryCode build_family_code(Family f, const std::string& ra, const std::string& rb);

struct ClassifyOptions {
    std::string checkpoint;                 // path for progress; empty = none
    uint64_t max_candidates = UINT64_MAX;   // candidates to scan this run
    int threads = 0;
    std::function<void(const std::string&)> log;  // optional progress sink
};

struct CodeClass {
    std::string ra, rb;     // representative parameters (lexicographically least)
    int a9 = 0;
    uint64_t members = 0;   // distinct parameter vectors in the class
    std::string cert_hex;
};

struct ClassifyResult {
    Family family{};
    bool complete = false;
    uint64_t cursor = 0;         // scan resume point (candidate units, see space)
    uint64_t space = 0;          // total candidate count in cursor units
    uint64_t self_dual = 0;      // vectors passing the algebraic criterion
    uint64_t near_extremal = 0;  // of those, codes with minimum weight 9
    std::vector<CodeClass> classes;
};

// cursor units: bdc and qt count first rows (3^17 and 3^18); the
// four-negacirculant scan iterates over the 3^9 values of rB, with all
// matching rA found per step, so its cursor counts rB values.
ClassifyResult classify_family(Family f, const ClassifyOptions& opt = {});

}  // namespace f3had
