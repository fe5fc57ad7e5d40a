#include <doctest.h>

#include <algorithm>
#include <random>

#include "f3had/lowweight.hpp"
#include "f3had/weight.hpp"

using namespace f3had;

namespace {

Gf3Vec random_vec(int n, std::mt19937_64& rng) {
    Gf3Vec v = Gf3Vec::zero(n);
    for (int i = 0; i < n; ++i) v.set(i, int(rng() % 3));
    return v;
}

// small self-dual codes found by sampling the quasi-twisted family
std::vector<TernaryCode> sample_self_dual(int m, int want, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<TernaryCode> out;
    while (int(out.size()) < want) {
        TernaryCode c = quasi_twisted(random_vec(m, rng));
        if (is_self_dual(c)) out.push_back(std::move(c));
    }
    return out;
}

std::vector<std::string> sorted_strings(const std::vector<Gf3Vec>& v) {
    std::vector<std::string> s;
    for (const auto& x : v) s.push_back(x.to_string());
    std::sort(s.begin(), s.end());
    return s;
}

}  // namespace

TEST_CASE("scan agrees with the full sweep on small self-dual codes") {
    for (const TernaryCode& c : sample_self_dual(6, 8, 59)) {
        const WeightEnumerator we = weight_enumerator(c);
        const int d = we.min_weight();
        const LowWeightScan scan = scan_low_weight(c, 9, d);
        CHECK(scan.min_found == d);
        CHECK(scan.words.size() == we.a[size_t(d)]);
        CHECK(sorted_strings(scan.words) == sorted_strings(codewords_of_weight(c, d)));
    }
}

TEST_CASE("scan classes match sweep classes at every collectable weight") {
    for (const TernaryCode& c : sample_self_dual(8, 4, 61)) {
        const WeightEnumerator we = weight_enumerator(c);
        for (int w = 3; w <= 9; w += 3) {
            const auto scan = low_weight_class(c, w);
            CHECK(scan.size() == we.a[size_t(w)]);
            if (!scan.empty())
                CHECK(sorted_strings(scan) == sorted_strings(codewords_of_weight(c, w)));
        }
    }
}

TEST_CASE("stop_below aborts on lighter words") {
    // a code with minimum weight 3 must abort a stop_below=9 scan
    for (const TernaryCode& c : sample_self_dual(6, 8, 67)) {
        const int d = min_weight(c);
        const LowWeightScan scan = scan_low_weight(c, 9, 9, 9);
        if (d < 9) {
            CHECK(scan.aborted);
            CHECK(scan.min_found < 9);
        } else {
            CHECK(!scan.aborted);
        }
    }
}

TEST_CASE("scan works when the reduced pivots are not the identity block") {
    // permute a self-dual code so its pivot columns move away from the front
    for (TernaryCode c : sample_self_dual(6, 3, 71)) {
        std::mt19937_64 rng(73);
        MonomialMap p = MonomialMap::random(c.n, rng);
        const TernaryCode moved = apply_monomial(c, p);
        REQUIRE(is_self_dual(moved));
        const WeightEnumerator we = weight_enumerator(moved);
        const int d = we.min_weight();
        CHECK(low_weight_class(moved, d).size() == we.a[size_t(d)]);
    }
}

TEST_CASE("scan rejects non-self-dual input") {
    Gf3Mat g;
    g.ncols = 4;
    g.rows = {Gf3Vec::parse("1100")};
    CHECK_THROWS_AS(scan_low_weight(make_code(g, ""), 3), std::invalid_argument);
}
