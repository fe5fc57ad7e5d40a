#include "f3had/lowweight.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace f3had {

namespace {

struct PairHash {
    size_t operator()(const std::pair<uint64_t, uint64_t>& p) const {
        uint64_t x = p.first * 0x9e3779b97f4a7c15ULL ^ p.second;
        x ^= x >> 29;
        x *= 0xbf58476d1ce4e5b9ULL;
        return size_t(x ^ (x >> 32));
    }
};

Gf3Vec projective_rep(const Gf3Vec& w) {  // first nonzero coordinate scaled to 1
    const int i = std::countr_zero(w.p1 | w.p2);
    return (w.p2 >> i) & 1 ? w.negated() : w;
}

struct Scan {
    int wmax, collect, stop_below;
    LowWeightScan out;
    std::unordered_set<std::pair<uint64_t, uint64_t>, PairHash> seen;

    bool emit(const Gf3Vec& w) {  // returns false to abort the whole scan
        const int wt = w.weight();
        if (wt == 0 || wt > wmax) return true;
        const Gf3Vec rep = projective_rep(w);
        if (!seen.insert({rep.p1, rep.p2}).second) return true;
        if (out.min_found < 0 || wt < out.min_found) out.min_found = wt;
        if (wt == collect) {
            out.words.push_back(rep);
            out.words.push_back(rep.negated());
        }
        if (stop_below > 0 && wt < stop_below) {
            out.aborted = true;
            return false;
        }
        return true;
    }
};

// all combinations of <= t generator rows with the lowest-index coefficient
// fixed to 1 (one representative per {x, 2x} message pair)
bool enum_side(const Gf3Mat& gen, int t, Scan& scan) {
    const int k = gen.nrows();
    // rec over rows >= from, up to `left` more terms
    auto rec = [&](auto&& self, int from, int left, const Gf3Vec& sum) -> bool {
        if (!scan.emit(sum)) return false;
        if (left == 0) return true;
        for (int j = from; j < k; ++j) {
            if (!self(self, j + 1, left - 1, add(sum, gen.rows[size_t(j)]))) return false;
            if (!self(self, j + 1, left - 1, sub(sum, gen.rows[size_t(j)]))) return false;
        }
        return true;
    };
    for (int i = 0; i + 1 <= k; ++i)
        if (!rec(rec, i + 1, t - 1, gen.rows[size_t(i)])) return false;
    return true;
}

}  // namespace

LowWeightScan scan_low_weight(const TernaryCode& c, int wmax, int collect, int stop_below) {
    if (!is_self_dual(c))
        throw std::invalid_argument("scan_low_weight: requires a self-dual code");
    if (wmax < 1 || wmax > c.n) throw std::invalid_argument("scan_low_weight: bad weight bound");
    const int k = c.k, n = c.n;
    const int t = std::max(1, wmax / 2);

    // move the pivot columns to the front: C_sys = (I | M) up to a column
    // permutation, which preserves weights and self-duality
    std::vector<int> origin = c.rr.pivots;  // sys column -> original column
    std::vector<bool> is_pivot(size_t(n), false);
    for (int p : c.rr.pivots) is_pivot[size_t(p)] = true;
    for (int j = 0; j < n; ++j)
        if (!is_pivot[size_t(j)]) origin.push_back(j);

    Gf3Mat m;  // right block of the systematic form, k x (n-k)
    m.ncols = n - k;
    for (int i = 0; i < k; ++i) {
        Gf3Vec row = Gf3Vec::zero(n - k);
        for (int j = 0; j < n - k; ++j) row.set(j, c.rr.mat.rows[size_t(i)].get(origin[size_t(k + j)]));
        m.rows.push_back(row);
    }
    Gf3Mat g1;  // (I | M)
    g1.ncols = n;
    for (int i = 0; i < k; ++i) {
        Gf3Vec row = Gf3Vec::zero(n);
        row.set(i, 1);
        row.p1 |= m.rows[size_t(i)].p1 << k;
        row.p2 |= m.rows[size_t(i)].p2 << k;
        g1.rows.push_back(row);
    }
    Gf3Mat g2;  // (2 M^T | I), the same code seen from the second half
    g2.ncols = n;
    for (int j = 0; j < n - k; ++j) {
        Gf3Vec row = Gf3Vec::zero(n);
        for (int i = 0; i < k; ++i) {
            const int v = m.rows[size_t(i)].get(j);
            if (v) row.set(i, 3 - v);
        }
        row.set(k + j, 1);
        g2.rows.push_back(row);
    }

    Scan scan{wmax, collect, stop_below, {}, {}};
    if (enum_side(g1, t, scan)) enum_side(g2, t, scan);

    // map collected words back to the original coordinate order
    for (auto& w : scan.out.words) {
        Gf3Vec orig = Gf3Vec::zero(n);
        for (int s = 0; s < n; ++s) {
            const int v = w.get(s);
            if (v) orig.set(origin[size_t(s)], v);
        }
        w = orig;
    }
    return std::move(scan.out);
}

std::vector<Gf3Vec> low_weight_class(const TernaryCode& c, int w) {
    return scan_low_weight(c, w, w).words;
}

}  // namespace f3had
