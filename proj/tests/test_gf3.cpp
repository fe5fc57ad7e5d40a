#include <doctest.h>

#include <random>

#include "f3had/gf3.hpp"
#include "naive_gf3.hpp"

using namespace f3had;

namespace {

Gf3Vec from_naive(const naive::Vec& v) {
    Gf3Vec out = Gf3Vec::zero(int(v.size()));
    for (size_t i = 0; i < v.size(); ++i) out.set(int(i), v[i]);
    return out;
}

naive::Vec to_naive(const Gf3Vec& v) {
    naive::Vec out(size_t(v.n));
    for (int i = 0; i < v.n; ++i) out[size_t(i)] = v.get(i);
    return out;
}

naive::Vec random_vec(int n, std::mt19937_64& rng) {
    naive::Vec v(static_cast<size_t>(n));
    for (auto& x : v) x = int(rng() % 3);
    return v;
}

}  // namespace

TEST_CASE("parse and to_string round-trip") {
    const Gf3Vec v = Gf3Vec::parse("012210");
    CHECK(v.n == 6);
    CHECK(v.get(0) == 0);
    CHECK(v.get(1) == 1);
    CHECK(v.get(2) == 2);
    CHECK(v.to_string() == "012210");
    CHECK(v.weight() == 4);
    CHECK_THROWS_AS(Gf3Vec::parse("013"), std::invalid_argument);
}

TEST_CASE("bitplane add/sub/inner agree with integer arithmetic") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 1 + int(rng() % 64);
        const naive::Vec a = random_vec(n, rng), b = random_vec(n, rng);
        const Gf3Vec fa = from_naive(a), fb = from_naive(b);
        CHECK(to_naive(add(fa, fb)) == naive::add(a, b));
        CHECK(to_naive(sub(fa, fb)) == naive::add(a, naive::scale(b, 2)));
        CHECK(inner(fa, fb) == naive::inner(a, b));
        CHECK(fa.weight() == naive::weight(a));
        CHECK(to_naive(fa.negated()) == naive::scale(a, 2));
    }
}

TEST_CASE("circulant shift relation") {
    const Gf3Mat m = circulant(Gf3Vec::parse("012"), 1);
    CHECK(m.rows[0].to_string() == "012");
    CHECK(m.rows[1].to_string() == "201");
    CHECK(m.rows[2].to_string() == "120");

    const Gf3Mat one = circulant(Gf3Vec::parse("1"), -1);
    CHECK(one.nrows() == 1);
    CHECK(one.rows[0].to_string() == "1");

    const Gf3Mat id9 = circulant(Gf3Vec::parse("100000000"), -1);
    CHECK(id9 == Gf3Mat::identity(9));

    CHECK_THROWS_AS(circulant(Gf3Vec::zero(0), 1), std::invalid_argument);
}

TEST_CASE("negacirculant wrap is negated, general shift relation") {
    std::mt19937_64 rng(11);
    for (int mu : {1, -1}) {
        const Gf3Vec r = from_naive(random_vec(7, rng));
        const Gf3Mat m = circulant(r, mu);
        for (int i = 0; i + 1 < 7; ++i)
            for (int j = 0; j < 7; ++j) {
                const int prev = m.rows[size_t(i)].get((j + 6) % 7);
                const int expect = j == 0 ? (mu == 1 ? prev : (3 - prev) % 3) : prev;
                CHECK(m.rows[size_t(i + 1)].get(j) == expect);
            }
    }
}

TEST_CASE("rank and rref match the reference elimination") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const int rows = 1 + int(rng() % 8), cols = 1 + int(rng() % 12);
        naive::Mat m;
        Gf3Mat g;
        g.ncols = cols;
        for (int i = 0; i < rows; ++i) {
            m.push_back(random_vec(cols, rng));
            g.rows.push_back(from_naive(m.back()));
        }
        CHECK(rank(g) == naive::rank(m));
    }
}

TEST_CASE("nullspace vectors annihilate the row space") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const int rows = 1 + int(rng() % 6), cols = 2 + int(rng() % 10);
        Gf3Mat g;
        g.ncols = cols;
        for (int i = 0; i < rows; ++i) g.rows.push_back(from_naive(random_vec(cols, rng)));
        const Gf3Mat ns = nullspace(g);
        CHECK(ns.nrows() == cols - rank(g));
        for (const auto& x : ns.rows)
            for (const auto& r : g.rows) CHECK(inner(x, r) == 0);
        CHECK(rank(ns) == ns.nrows());
    }
}

TEST_CASE("matmul and transpose against the reference") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 50; ++trial) {
        const int a = 1 + int(rng() % 5), b = 1 + int(rng() % 5), c = 1 + int(rng() % 5);
        naive::Mat ma, mb;
        Gf3Mat ga, gb;
        ga.ncols = b;
        gb.ncols = c;
        for (int i = 0; i < a; ++i) {
            ma.push_back(random_vec(b, rng));
            ga.rows.push_back(from_naive(ma.back()));
        }
        for (int i = 0; i < b; ++i) {
            mb.push_back(random_vec(c, rng));
            gb.rows.push_back(from_naive(mb.back()));
        }
        const Gf3Mat prod = matmul(ga, gb);
        const naive::Mat ref = naive::matmul(ma, mb);
        for (int i = 0; i < a; ++i) CHECK(to_naive(prod.rows[size_t(i)]) == ref[size_t(i)]);
        const Gf3Mat tt = transpose(transpose(ga));
        CHECK(tt == ga);
    }
}

TEST_CASE("monomial maps compose to the identity with their inverse") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + int(rng() % 30);
        const MonomialMap p = MonomialMap::random(n, rng);
        const MonomialMap q = p.inverse();
        const Gf3Vec x = from_naive(random_vec(n, rng));
        CHECK(q.apply(p.apply(x)) == x);
        CHECK(p.apply(q.apply(x)) == x);
        CHECK(p.apply(x).weight() == x.weight());
    }
}

TEST_CASE("lex order compares coordinates left to right") {
    CHECK(lex_less(Gf3Vec::parse("0120"), Gf3Vec::parse("0121")));
    CHECK(lex_less(Gf3Vec::parse("012"), Gf3Vec::parse("020")));
    CHECK(!lex_less(Gf3Vec::parse("2"), Gf3Vec::parse("1")));
}
