#include <doctest.h>

#include <algorithm>
#include <random>

#include "f3had/weight.hpp"
#include "naive_gf3.hpp"

using namespace f3had;

namespace {

Gf3Vec random_vec(int n, std::mt19937_64& rng) {
    Gf3Vec v = Gf3Vec::zero(n);
    for (int i = 0; i < n; ++i) v.set(i, int(rng() % 3));
    return v;
}

naive::Mat to_naive(const Gf3Mat& g) {
    naive::Mat m;
    for (const auto& r : g.rows) {
        naive::Vec v(static_cast<size_t>(g.ncols));
        for (int i = 0; i < g.ncols; ++i) v[size_t(i)] = r.get(i);
        m.push_back(v);
    }
    return m;
}

WeightEnumerator naive_enumerator(const TernaryCode& c) {
    WeightEnumerator we;
    we.n = c.n;
    we.a.assign(size_t(c.n) + 1, 0);
    for (const auto& w : naive::all_codewords(to_naive(c.rr.mat))) we.a[size_t(naive::weight(w))]++;
    return we;
}

std::vector<std::string> sorted_strings(const std::vector<Gf3Vec>& v) {
    std::vector<std::string> s;
    s.reserve(v.size());
    for (const auto& x : v) s.push_back(x.to_string());
    std::sort(s.begin(), s.end());
    return s;
}

}  // namespace

TEST_CASE("weight basics") {
    CHECK(weight(Gf3Vec::parse("0000")) == 0);
    CHECK(weight(Gf3Vec::parse("1201")) == 3);
}

TEST_CASE("every nonzero tetracode word has weight 3") {
    Gf3Mat g;
    g.ncols = 4;
    g.rows = {Gf3Vec::parse("1110"), Gf3Vec::parse("0121")};
    const TernaryCode tetra = make_code(g, "tetracode");
    const WeightEnumerator we = weight_enumerator(tetra);
    CHECK(we.a[0] == 1);
    CHECK(we.a[3] == 8);
    CHECK(we.total() == 9);
    CHECK(min_weight(tetra) == 3);
}

TEST_CASE("zero code enumerator") {
    const TernaryCode z = make_code(Gf3Mat{{}, 4}, "zero");
    CHECK(z.k == 0);
    const WeightEnumerator we = weight_enumerator(z);
    CHECK(we.a == std::vector<uint64_t>{1, 0, 0, 0, 0});
    CHECK_THROWS_AS(min_weight(z), std::invalid_argument);
}

TEST_CASE("serial sweep equals the naive enumeration") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 30; ++trial) {
        Gf3Mat g;
        g.ncols = 10;
        const int rows = 1 + int(rng() % 6);
        for (int i = 0; i < rows; ++i) g.rows.push_back(random_vec(10, rng));
        const TernaryCode c = make_code(g, "rand");
        const SweepResult sw = sweep_serial(c);
        CHECK(sw.we == naive_enumerator(c));
        CHECK(sw.we.total() == pow3(c.k));
    }
}

TEST_CASE("parallel partitioned sweep reproduces the serial result exactly") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 10; ++trial) {
        Gf3Mat g;
        g.ncols = 14;
        for (int i = 0; i < 7; ++i) g.rows.push_back(random_vec(14, rng));
        const TernaryCode c = make_code(g, "rand");
        SweepOptions opt;
        opt.collect_mask = (uint64_t{1} << 5) | (uint64_t{1} << 7);
        opt.split_digits = 3;
        const SweepResult s = sweep_serial(c, opt);
        const SweepResult p = sweep_parallel(c, opt);
        CHECK(s.we == p.we);
        CHECK(sorted_strings(s.collected) == sorted_strings(p.collected));
    }
}

TEST_CASE("codewords_of_weight returns each word exactly once") {
    Gf3Mat g;
    g.ncols = 4;
    g.rows = {Gf3Vec::parse("1110"), Gf3Vec::parse("0121")};
    const TernaryCode tetra = make_code(g, "tetracode");
    const auto w3 = codewords_of_weight(tetra, 3);
    CHECK(w3.size() == 8);
    auto s = sorted_strings(w3);
    CHECK(std::unique(s.begin(), s.end()) == s.end());
    CHECK(codewords_of_weight(tetra, 1).empty());
    CHECK(codewords_of_weight(tetra, 0).size() == 1);
    CHECK_THROWS_AS(codewords_of_weight(tetra, 5), std::invalid_argument);
}

TEST_CASE("budget refusal names the required step count") {
    Gf3Mat g;
    g.ncols = 40;
    std::mt19937_64 rng(53);
    for (int i = 0; i < 19; ++i) g.rows.push_back(random_vec(40, rng));
    const TernaryCode c = make_code(g, "big");
    REQUIRE(c.k >= 19);  // random 19x40 is essentially always full rank
    CHECK_THROWS_WITH_AS(weight_enumerator(c),
                         doctest::Contains(("3^" + std::to_string(c.k)).c_str()), BudgetExceeded);
    SweepOptions opt;
    opt.budget = 100;
    Gf3Mat small;
    small.ncols = 10;
    for (int i = 0; i < 5; ++i) small.rows.push_back(random_vec(10, rng));
    CHECK_THROWS_AS(weight_enumerator(make_code(small, ""), opt), BudgetExceeded);
}

TEST_CASE("extremality classification at length 36 and 12") {
    CHECK(classify_extremality(36, 12).kind == Extremality::extremal);
    CHECK(classify_extremality(36, 9).kind == Extremality::near_extremal);
    CHECK(classify_extremality(36, 6).kind == Extremality::neither);
    CHECK(classify_extremality(12, 6).kind == Extremality::extremal);
    CHECK(classify_extremality(36, 12).bound == 12);
    CHECK_THROWS_AS(classify_extremality(36, 15), std::invalid_argument);
    CHECK_THROWS_AS(classify_extremality(35, 9), std::invalid_argument);
}

TEST_CASE("length-36 near-extremal enumerator family") {
    const WeightEnumerator we = near_extremal_enumerator_36(72);
    CHECK(we.a[9] == 72);
    CHECK(we.a[12] == 42192);
    CHECK(we.a[36] == 816);
    for (int beta = 1; beta <= 111; ++beta)
        CHECK(near_extremal_enumerator_36(8 * beta).total() == 387420489);
    // the alpha terms cancel coefficient-wise across the family
    const WeightEnumerator a = near_extremal_enumerator_36(8), b = near_extremal_enumerator_36(16);
    int64_t delta = 0;
    for (int w = 0; w <= 36; ++w) delta += int64_t(b.a[size_t(w)]) - int64_t(a.a[size_t(w)]);
    CHECK(delta == 0);
    CHECK_THROWS_AS(near_extremal_enumerator_36(0), std::invalid_argument);
    CHECK_THROWS_AS(near_extremal_enumerator_36(4), std::invalid_argument);
    CHECK_THROWS_AS(near_extremal_enumerator_36(896), std::invalid_argument);
    CHECK(near_extremal_enumerator_36(888).a[36] == 0);
}

TEST_CASE("self-dual codes have all weights divisible by 3") {
    Gf3Mat g;
    g.ncols = 4;
    g.rows = {Gf3Vec::parse("1110"), Gf3Vec::parse("0121")};
    const WeightEnumerator we = weight_enumerator(make_code(g, ""));
    for (int w = 0; w <= 4; ++w)
        if (w % 3 != 0) CHECK(we.a[size_t(w)] == 0);
}
