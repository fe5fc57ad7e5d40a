#include "f3had/gf3.hpp"

#include <algorithm>

namespace f3had {

Gf3Vec Gf3Vec::zero(int n) {
    if (n < 0 || n > kMaxLen) throw std::invalid_argument("Gf3Vec: length out of range");
    return {0, 0, n};
}

Gf3Vec Gf3Vec::parse(std::string_view digits) {
    Gf3Vec v = zero(int(digits.size()));
    for (int i = 0; i < v.n; ++i) {
        const char c = digits[i];
        if (c < '0' || c > '2') throw std::invalid_argument("Gf3Vec: digit must be 0, 1 or 2");
        v.set(i, c - '0');
    }
    return v;
}

std::string Gf3Vec::to_string() const {
    std::string s(size_t(n), '0');
    for (int i = 0; i < n; ++i) s[size_t(i)] = char('0' + get(i));
    return s;
}

bool lex_less(const Gf3Vec& a, const Gf3Vec& b) {
    const int m = std::min(a.n, b.n);
    for (int i = 0; i < m; ++i) {
        const int x = a.get(i), y = b.get(i);
        if (x != y) return x < y;
    }
    return a.n < b.n;
}

Gf3Mat Gf3Mat::identity(int n) {
    Gf3Mat m;
    m.ncols = n;
    m.rows.reserve(size_t(n));
    for (int i = 0; i < n; ++i) {
        Gf3Vec r = Gf3Vec::zero(n);
        r.set(i, 1);
        m.rows.push_back(r);
    }
    return m;
}

std::string Gf3Mat::to_string() const {
    std::string s;
    for (const auto& r : rows) {
        s += r.to_string();
        s += '\n';
    }
    return s;
}

Gf3Mat circulant(const Gf3Vec& first_row, int mu) {
    const int m = first_row.n;
    if (m < 1) throw std::invalid_argument("circulant: empty first row");
    if (mu != 1 && mu != -1) throw std::invalid_argument("circulant: mu must be +1 or -1");
    const uint64_t mask = low_mask(m);
    Gf3Mat out;
    out.ncols = m;
    out.rows.reserve(size_t(m));
    Gf3Vec row = first_row;
    for (int i = 0; i < m; ++i) {
        out.rows.push_back(row);
        if (i + 1 == m) break;
        const uint64_t w1 = row.p1 >> (m - 1), w2 = row.p2 >> (m - 1);
        Gf3Vec next{(row.p1 << 1) & mask, (row.p2 << 1) & mask, m};
        if (mu == 1) {
            next.p1 |= w1;
            next.p2 |= w2;
        } else {  // wrapped entry negated
            next.p1 |= w2;
            next.p2 |= w1;
        }
        row = next;
    }
    return out;
}

Gf3Mat transpose(const Gf3Mat& m) {
    Gf3Mat out;
    out.ncols = m.nrows();
    out.rows.assign(size_t(m.ncols), Gf3Vec::zero(m.nrows()));
    for (int i = 0; i < m.nrows(); ++i)
        for (int j = 0; j < m.ncols; ++j) out.rows[size_t(j)].set(i, m.rows[size_t(i)].get(j));
    return out;
}

Gf3Mat matmul(const Gf3Mat& a, const Gf3Mat& b) {
    if (a.ncols != b.nrows()) throw std::invalid_argument("matmul: shape mismatch");
    Gf3Mat out;
    out.ncols = b.ncols;
    out.rows.reserve(size_t(a.nrows()));
    for (const auto& ar : a.rows) {
        Gf3Vec acc = Gf3Vec::zero(b.ncols);
        for (int j = 0; j < a.ncols; ++j) {
            const int c = ar.get(j);
            if (c) acc = add(acc, scale(b.rows[size_t(j)], c));
        }
        out.rows.push_back(acc);
    }
    return out;
}

bool gram_is_zero(const Gf3Mat& g) {
    for (size_t i = 0; i < g.rows.size(); ++i)
        for (size_t j = i; j < g.rows.size(); ++j)
            if (inner(g.rows[i], g.rows[j]) != 0) return false;
    return true;
}

RrefResult rref(const Gf3Mat& g) {
    RrefResult res;
    res.mat.ncols = g.ncols;
    std::vector<Gf3Vec> work = g.rows;
    size_t done = 0;
    for (int col = 0; col < g.ncols && done < work.size(); ++col) {
        size_t piv = done;
        while (piv < work.size() && work[piv].get(col) == 0) ++piv;
        if (piv == work.size()) continue;
        std::swap(work[done], work[piv]);
        if (work[done].get(col) == 2) work[done] = work[done].negated();
        for (size_t r = 0; r < work.size(); ++r) {
            if (r == done) continue;
            const int c = work[r].get(col);
            if (c) work[r] = sub(work[r], scale(work[done], c));
        }
        res.pivots.push_back(col);
        ++done;
    }
    work.resize(done);
    res.mat.rows = std::move(work);
    return res;
}

Gf3Mat nullspace(const Gf3Mat& g) {
    const RrefResult r = rref(g);
    const int n = g.ncols;
    std::vector<bool> is_pivot(size_t(n), false);
    for (int p : r.pivots) is_pivot[size_t(p)] = true;
    Gf3Mat out;
    out.ncols = n;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[size_t(f)]) continue;
        Gf3Vec v = Gf3Vec::zero(n);
        v.set(f, 1);
        for (size_t row = 0; row < r.pivots.size(); ++row) {
            const int c = r.mat.rows[row].get(f);
            if (c) v.set(r.pivots[row], (3 - c) % 3);
        }
        out.rows.push_back(v);
    }
    return out;
}

Gf3Vec combine(const Gf3Mat& g, const std::vector<int>& digits) {
    if (digits.size() != g.rows.size()) throw std::invalid_argument("combine: digit count mismatch");
    Gf3Vec acc = Gf3Vec::zero(g.ncols);
    for (size_t i = 0; i < digits.size(); ++i)
        if (digits[i]) acc = add(acc, scale(g.rows[i], digits[i]));
    return acc;
}

bool in_row_space(const RrefResult& r, const Gf3Vec& v) {
    Gf3Vec x = v;
    for (size_t row = 0; row < r.pivots.size(); ++row) {
        const int c = x.get(r.pivots[row]);
        if (c) x = sub(x, scale(r.mat.rows[row], c));
    }
    return x.is_zero();
}

Gf3Vec MonomialMap::apply(const Gf3Vec& x) const {
    if (x.n != size()) throw std::invalid_argument("MonomialMap: length mismatch");
    Gf3Vec y = Gf3Vec::zero(x.n);
    for (int j = 0; j < x.n; ++j) {
        const int v = x.get(perm[size_t(j)]);
        y.set(j, v == 0 ? 0 : (signs[size_t(j)] == 1 ? v : 3 - v));
    }
    return y;
}

MonomialMap MonomialMap::inverse() const {
    MonomialMap inv;
    inv.perm.resize(perm.size());
    inv.signs.resize(perm.size());
    for (int j = 0; j < size(); ++j) {
        inv.perm[size_t(perm[size_t(j)])] = j;
        inv.signs[size_t(perm[size_t(j)])] = signs[size_t(j)];
    }
    return inv;
}

MonomialMap MonomialMap::identity(int n) {
    MonomialMap m;
    m.perm.resize(size_t(n));
    m.signs.assign(size_t(n), 1);
    for (int i = 0; i < n; ++i) m.perm[size_t(i)] = i;
    return m;
}

MonomialMap MonomialMap::random(int n, std::mt19937_64& rng) {
    MonomialMap m = identity(n);
    for (int i = n - 1; i > 0; --i) {
        std::uniform_int_distribution<int> d(0, i);
        std::swap(m.perm[size_t(i)], m.perm[size_t(d(rng))]);
    }
    std::uniform_int_distribution<int> s(1, 2);
    for (int i = 0; i < n; ++i) m.signs[size_t(i)] = s(rng);
    return m;
}

}  // namespace f3had
