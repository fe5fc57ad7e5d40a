// Full-space codeword enumeration and weight statistics.
//
// The sweep walks all 3^k messages in reflected ternary Gray order, so each
// step adds or subtracts a single generator row and the codeword weight is
// one popcount away.  The parallel kernel partitions the message space by
// the top few ternary digits; every partition is an independent serial
// sweep and the results merge by coefficient-wise addition (enumerators)
// and concatenation (collected codewords).

#pragma once

#include <cstdint>
#include <vector>

#include "f3had/code.hpp"
#include "f3had/gf3.hpp"

namespace f3had {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr uint64_t kDefaultBudget = 387420489;  // 3^18

inline uint64_t pow3(int k) {
    uint64_t v = 1;
    while (k-- > 0) v *= 3;
    return v;
}

inline int weight(const Gf3Vec& x) { return x.weight(); }

struct WeightEnumerator {
    int n = 0;
    std::vector<uint64_t> a;  // a[w] = number of codewords of weight w

    uint64_t total() const {
        uint64_t s = 0;
        for (uint64_t c : a) s += c;
        return s;
    }
    int min_weight() const {  // -1 when only the zero word exists
        for (int w = 1; w <= n; ++w)
            if (a[size_t(w)]) return w;
        return -1;
    }
    bool operator==(const WeightEnumerator& o) const { return n == o.n && a == o.a; }
};

std::string enumerator_csv(const WeightEnumerator& we);  // "weight,count" rows

struct SweepOptions {
    uint64_t budget = kDefaultBudget;
    uint64_t collect_mask = 0;        // bit w set: collect codewords of weight w
    size_t collect_cap = 1u << 21;    // hard cap on collected words
    int split_digits = 4;             // partition granularity for the parallel kernel
    int threads = 0;                  // 0 = OpenMP default
};

struct SweepResult {
    WeightEnumerator we;
    std::vector<Gf3Vec> collected;
};

SweepResult sweep_serial(const TernaryCode& c, const SweepOptions& opt = {});
SweepResult sweep_parallel(const TernaryCode& c, const SweepOptions& opt = {});

WeightEnumerator weight_enumerator(const TernaryCode& c, const SweepOptions& opt = {});
int min_weight(const TernaryCode& c, const SweepOptions& opt = {});
std::vector<Gf3Vec> codewords_of_weight(const TernaryCode& c, int w, const SweepOptions& opt = {});

enum class Extremality { extremal, near_extremal, neither };

struct ExtremalityClass {
    Extremality kind = Extremality::neither;
    int bound = 0;  // 3 * floor(n/12) + 3
};

const char* to_string(Extremality e);
ExtremalityClass classify_extremality(int n, int d);

// the one-parameter weight enumerator family for self-dual [36,18] codes of
// minimum weight 9; alpha = A_9 must be 8*beta with beta in 1..111
WeightEnumerator near_extremal_enumerator_36(int alpha);

}  // namespace f3had
