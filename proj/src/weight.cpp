#include "f3had/weight.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <array>
#include <sstream>

namespace f3had {

std::string enumerator_csv(const WeightEnumerator& we) {
    std::ostringstream out;
    out << "weight,count\n";
    for (int w = 0; w <= we.n; ++w)
        if (we.a[size_t(w)]) out << w << ',' << we.a[size_t(w)] << '\n';
    return out.str();
}

namespace {

struct LocalTally {
    std::array<uint64_t, kMaxLen + 1> hist{};
    std::vector<Gf3Vec> collected;
};

// Visit base + sum(d_i * rows_i) over all digit vectors d in {0,1,2}^t in
// reflected ternary Gray order (loopless focus-pointer formulation); each
// step changes one digit by +-1.
void gray_sweep(const Gf3Vec* rows, int t, const Gf3Vec& base, uint64_t collect_mask,
                size_t collect_cap, LocalTally& out) {
    std::vector<Gf3Vec> pos(rows, rows + t), neg;
    neg.reserve(size_t(t));
    for (int i = 0; i < t; ++i) neg.push_back(rows[i].negated());

    std::vector<int> digit(size_t(t), 0), dir(size_t(t), 1), focus(size_t(t) + 1);
    for (int i = 0; i <= t; ++i) focus[size_t(i)] = i;

    Gf3Vec cur = base;
    auto visit = [&](const Gf3Vec& v) {
        const int w = v.weight();
        out.hist[size_t(w)]++;
        if ((collect_mask >> w) & 1) {
            if (out.collected.size() >= collect_cap)
                throw BudgetExceeded("codeword collection exceeds cap of " +
                                     std::to_string(collect_cap));
            out.collected.push_back(v);
        }
    };
    visit(cur);
    for (;;) {
        const int j = focus[0];
        focus[0] = 0;
        if (j == t) break;
        const int d = dir[size_t(j)];
        digit[size_t(j)] += d;
        cur = add(cur, d > 0 ? pos[size_t(j)] : neg[size_t(j)]);
        if (digit[size_t(j)] == 0 || digit[size_t(j)] == 2) {
            dir[size_t(j)] = -d;
            focus[size_t(j)] = focus[size_t(j) + 1];
            focus[size_t(j) + 1] = j + 1;
        }
        visit(cur);
    }
}

void check_budget(const TernaryCode& c, const SweepOptions& opt) {
    if (c.k > 40 || pow3(c.k) > opt.budget)
        throw BudgetExceeded("enumeration needs 3^" + std::to_string(c.k) +
                             " steps, over the budget of " + std::to_string(opt.budget));
}

SweepResult finish(const TernaryCode& c, LocalTally&& t) {
    SweepResult r;
    r.we.n = c.n;
    r.we.a.assign(size_t(c.n) + 1, 0);
    for (int w = 0; w <= c.n; ++w) r.we.a[size_t(w)] = t.hist[size_t(w)];
    r.collected = std::move(t.collected);
    return r;
}

}  // namespace

SweepResult sweep_serial(const TernaryCode& c, const SweepOptions& opt) {
    check_budget(c, opt);
    LocalTally t;
    gray_sweep(c.gen.rows.data(), c.k, Gf3Vec::zero(c.n), opt.collect_mask, opt.collect_cap, t);
    return finish(c, std::move(t));
}

SweepResult sweep_parallel(const TernaryCode& c, const SweepOptions& opt) {
    check_budget(c, opt);
    const int split = std::clamp(opt.split_digits, 1, 8);
    if (c.k <= split + 1) return sweep_serial(c, opt);
    const int t = c.k - split;                 // low digits swept per task
    const uint64_t tasks = pow3(split);        // fixed top-digit prefixes
    std::vector<LocalTally> parts(tasks);
    std::exception_ptr err;

#ifdef _OPENMP
    const int prev = omp_get_max_threads();
    if (opt.threads > 0) omp_set_num_threads(opt.threads);
#endif
#pragma omp parallel for schedule(dynamic)
    for (int64_t task = 0; task < int64_t(tasks); ++task) {
        try {
            Gf3Vec base = Gf3Vec::zero(c.n);
            uint64_t rem = uint64_t(task);
            for (int d = 0; d < split; ++d, rem /= 3) {
                const int dig = int(rem % 3);
                if (dig) base = add(base, scale(c.gen.rows[size_t(t + d)], dig));
            }
            gray_sweep(c.gen.rows.data(), t, base, opt.collect_mask, opt.collect_cap,
                       parts[size_t(task)]);
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
#ifdef _OPENMP
    if (opt.threads > 0) omp_set_num_threads(prev);
#endif
    if (err) std::rethrow_exception(err);

    LocalTally merged;
    size_t total_collected = 0;
    for (const auto& p : parts) total_collected += p.collected.size();
    if (total_collected > opt.collect_cap)
        throw BudgetExceeded("codeword collection exceeds cap of " +
                             std::to_string(opt.collect_cap));
    merged.collected.reserve(total_collected);
    for (auto& p : parts) {
        for (int w = 0; w <= kMaxLen; ++w) merged.hist[size_t(w)] += p.hist[size_t(w)];
        merged.collected.insert(merged.collected.end(), p.collected.begin(), p.collected.end());
    }
    return finish(c, std::move(merged));
}

WeightEnumerator weight_enumerator(const TernaryCode& c, const SweepOptions& opt) {
    SweepOptions o = opt;
    o.collect_mask = 0;
    return sweep_parallel(c, o).we;
}

int min_weight(const TernaryCode& c, const SweepOptions& opt) {
    if (c.k == 0) throw std::invalid_argument("min_weight: zero code");
    const int d = weight_enumerator(c, opt).min_weight();
    if (d < 0) throw std::logic_error("min_weight: enumeration found no nonzero word");
    return d;
}

std::vector<Gf3Vec> codewords_of_weight(const TernaryCode& c, int w, const SweepOptions& opt) {
    if (w < 0 || w > c.n) throw std::invalid_argument("codewords_of_weight: weight out of range");
    if (w == 0) return {Gf3Vec::zero(c.n)};
    SweepOptions o = opt;
    o.collect_mask = uint64_t{1} << w;
    return sweep_parallel(c, o).collected;
}

const char* to_string(Extremality e) {
    switch (e) {
        case Extremality::extremal: return "extremal";
        case Extremality::near_extremal: return "near-extremal";
        default: return "neither";
    }
}

ExtremalityClass classify_extremality(int n, int d) {
    if (n <= 0 || n % 4 != 0)
        throw std::invalid_argument("classify_extremality: length must be a positive multiple of 4");
    ExtremalityClass ec;
    ec.bound = 3 * (n / 12) + 3;
    if (d > ec.bound)
        throw std::invalid_argument("classify_extremality: d=" + std::to_string(d) +
                                    " exceeds the bound " + std::to_string(ec.bound));
    if (d == ec.bound) ec.kind = Extremality::extremal;
    else if (d == ec.bound - 3) ec.kind = Extremality::near_extremal;
    else ec.kind = Extremality::neither;
    return ec;
}

WeightEnumerator near_extremal_enumerator_36(int alpha) {
    if (alpha % 8 != 0 || alpha / 8 < 1 || alpha / 8 > 111)
        throw std::invalid_argument("near_extremal_enumerator_36: alpha must be 8*beta, beta in 1..111");
    WeightEnumerator we;
    we.n = 36;
    we.a.assign(37, 0);
    const int64_t al = alpha;
    we.a[0] = 1;
    we.a[9] = uint64_t(al);
    we.a[12] = uint64_t(42840 - 9 * al);
    we.a[15] = uint64_t(1400256 + 36 * al);
    we.a[18] = uint64_t(18452280 - 84 * al);
    we.a[21] = uint64_t(90370368 + 126 * al);
    we.a[24] = uint64_t(162663480 - 126 * al);
    we.a[27] = uint64_t(97808480 + 84 * al);
    we.a[30] = uint64_t(16210656 - 36 * al);
    we.a[33] = uint64_t(471240 + 9 * al);
    we.a[36] = uint64_t(888 - al);
    return we;
}

}  // namespace f3had
