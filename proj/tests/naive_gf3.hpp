// Test-only reference implementation of GF(3) arithmetic on plain integer
// vectors.  Deliberately independent of the bitplane code paths it checks.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace naive {

using Vec = std::vector<int>;  // entries 0,1,2
using Mat = std::vector<Vec>;

inline Vec add(const Vec& a, const Vec& b) {
    Vec s(a.size());
    for (size_t i = 0; i < a.size(); ++i) s[i] = (a[i] + b[i]) % 3;
    return s;
}

inline Vec scale(const Vec& a, int c) {
    Vec s(a.size());
    for (size_t i = 0; i < a.size(); ++i) s[i] = (a[i] * c) % 3;
    return s;
}

inline int inner(const Vec& a, const Vec& b) {
    int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s = (s + a[i] * b[i]) % 3;
    return s;
}

inline int weight(const Vec& a) {
    int w = 0;
    for (int x : a) w += x != 0;
    return w;
}

inline Mat matmul(const Mat& a, const Mat& b) {
    Mat out(a.size(), Vec(b[0].size(), 0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b[0].size(); ++j) {
            int s = 0;
            for (size_t t = 0; t < b.size(); ++t) s += a[i][t] * b[t][j];
            out[i][j] = s % 3;
        }
    return out;
}

inline int rank(Mat m) {
    if (m.empty()) return 0;
    const size_t cols = m[0].size();
    size_t done = 0;
    for (size_t col = 0; col < cols && done < m.size(); ++col) {
        size_t piv = done;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[done], m[piv]);
        if (m[done][col] == 2) m[done] = scale(m[done], 2);
        for (size_t r = 0; r < m.size(); ++r)
            if (r != done && m[r][col]) m[r] = add(m[r], scale(m[done], 3 - m[r][col]));
        ++done;
    }
    return int(done);
}

// every codeword of the row space, by full message enumeration
inline std::vector<Vec> all_codewords(const Mat& gen) {
    const size_t k = gen.size();
    size_t total = 1;
    for (size_t i = 0; i < k; ++i) {
        total *= 3;
        if (total > 1u << 22) throw std::runtime_error("naive enumeration too large");
    }
    std::vector<Vec> out;
    out.reserve(total);
    for (size_t msg = 0; msg < total; ++msg) {
        Vec c(gen[0].size(), 0);
        size_t m = msg;
        for (size_t i = 0; i < k; ++i, m /= 3)
            if (m % 3) c = add(c, scale(gen[i], int(m % 3)));
        out.push_back(c);
    }
    return out;
}

}  // namespace naive
