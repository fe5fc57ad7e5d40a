#include "f3had/ortho.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <map>

namespace f3had {

int OrthGraph::degree(int i) const {
    int d = 0;
    for (int w = 0; w < stride; ++w)
        d += std::popcount(adj[size_t(i) * size_t(stride) + size_t(w)]);
    return d;
}

W1Split build_w1(const std::vector<Gf3Vec>& words) {
    W1Split out;
    for (const auto& x : words) {
        const int first = x.get(0);
        if (first == 0)
            throw std::invalid_argument("build_w1: word with zero first coordinate");
        if (first != 1) continue;  // its negation carries the class
        const SignVec s = lift_bar(x);
        if (s.ones() % 2 == 0) out.w10.push_back(s);
        else out.w11.push_back(s);
    }
    return out;
}

OrthGraph build_gamma_serial(const std::vector<SignVec>& w) {
    OrthGraph g;
    g.nv = int(w.size());
    g.stride = (g.nv + 63) / 64;
    g.verts = w;
    g.adj.assign(size_t(g.nv) * size_t(g.stride), 0);
    for (int i = 0; i < g.nv; ++i)
        for (int j = i + 1; j < g.nv; ++j)
            if (orthogonal(w[size_t(i)], w[size_t(j)])) {
                g.adj[size_t(i) * size_t(g.stride) + size_t(j >> 6)] |= uint64_t{1} << (j & 63);
                g.adj[size_t(j) * size_t(g.stride) + size_t(i >> 6)] |= uint64_t{1} << (i & 63);
            }
    return g;
}

OrthGraph build_gamma(const std::vector<SignVec>& w, int threads) {
    OrthGraph g;
    g.nv = int(w.size());
    g.stride = (g.nv + 63) / 64;
    g.verts = w;
    g.adj.assign(size_t(g.nv) * size_t(g.stride), 0);
#ifdef _OPENMP
    const int prev = omp_get_max_threads();
    if (threads > 0) omp_set_num_threads(threads);
#endif
#pragma omp parallel for schedule(static)
    for (int i = 0; i < g.nv; ++i) {
        uint64_t* row = g.adj.data() + size_t(i) * size_t(g.stride);
        for (int j = 0; j < g.nv; ++j)
            if (j != i && orthogonal(w[size_t(i)], w[size_t(j)]))
                row[j >> 6] |= uint64_t{1} << (j & 63);
    }
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(prev);
#endif
    return g;
}

namespace {

// k-clique listing with a greedy-colouring bound: candidates are coloured,
// processed in descending colour order, and a branch on v dies once
// |R| + colour(v) cannot reach the target size (every clique inside the
// candidates up to v uses pairwise distinct colours).  Each clique is
// listed exactly once because a branch keeps only candidates that precede
// v in the node's processing order.
struct CliqueSearch {
    const OrthGraph& g;
    int want;
    std::vector<std::vector<int>>& out;

    // candidates of p in colour order; returns (vertex, colour) pairs with
    // colours 1-based, sorted ascending by colour (stable in vertex order)
    void colour_sort(const std::vector<uint64_t>& p, std::vector<std::pair<int, int>>& order,
                     std::vector<std::vector<uint64_t>>& classes) {
        const int stride = g.stride;
        order.clear();
        size_t used = 0;
        for (int w = 0; w < stride; ++w) {
            uint64_t m = p[size_t(w)];
            while (m) {
                const int v = (w << 6) + std::countr_zero(m);
                m &= m - 1;
                const uint64_t* nb = g.adj.data() + size_t(v) * size_t(stride);
                size_t ci = 0;
                for (; ci < used; ++ci) {
                    const uint64_t* cls = classes[ci].data();
                    uint64_t clash = 0;
                    for (int u = 0; u < stride; ++u) clash |= cls[u] & nb[u];
                    if (!clash) break;
                }
                if (ci == used) {
                    if (classes.size() <= used) classes.emplace_back();
                    classes[used].assign(size_t(stride), 0);
                    ++used;
                }
                classes[ci][size_t(v >> 6)] |= uint64_t{1} << (v & 63);
                order.emplace_back(v, int(ci) + 1);
            }
        }
        std::stable_sort(order.begin(), order.end(),
                         [](const auto& a, const auto& b) { return a.second < b.second; });
    }

    void expand(std::vector<int>& r, const std::vector<uint64_t>& p) {
        const int stride = g.stride;
        if (int(r.size()) == want) {
            out.push_back(r);
            return;
        }
        const int need = want - int(r.size());
        int pcount = 0;
        for (int w = 0; w < stride; ++w) pcount += std::popcount(p[size_t(w)]);
        if (pcount < need) return;

        std::vector<std::pair<int, int>> order;
        std::vector<std::vector<uint64_t>> classes;
        colour_sort(p, order, classes);
        std::vector<uint64_t> remaining = p, np(static_cast<size_t>(stride));
        for (size_t i = order.size(); i-- > 0;) {
            const auto [v, colour] = order[i];
            if (colour < need) break;  // all remaining candidates bounded below
            remaining[size_t(v >> 6)] &= ~(uint64_t{1} << (v & 63));
            const uint64_t* nb = g.adj.data() + size_t(v) * size_t(stride);
            for (int u = 0; u < stride; ++u) np[size_t(u)] = remaining[size_t(u)] & nb[u];
            r.push_back(v);
            expand(r, np);
            r.pop_back();
        }
    }
};

}  // namespace

std::vector<std::vector<int>> find_cliques_of_size(const OrthGraph& g, int size, int threads) {
    std::vector<std::vector<int>> out;
    if (g.nv == 0 || size <= 0 || g.nv < size) return out;
    const int stride = g.stride;

    // root level unrolled so the surviving branches can run in parallel
    std::vector<uint64_t> all(size_t(stride), 0);
    for (int v = 0; v < g.nv; ++v) all[size_t(v >> 6)] |= uint64_t{1} << (v & 63);
    CliqueSearch root{g, size, out};
    std::vector<std::pair<int, int>> order;
    std::vector<std::vector<uint64_t>> classes;
    root.colour_sort(all, order, classes);

    struct Branch {
        int v;
        std::vector<uint64_t> p;
    };
    std::vector<Branch> branches;
    std::vector<uint64_t> remaining = all;
    for (size_t i = order.size(); i-- > 0;) {
        const auto [v, colour] = order[i];
        if (colour < size) break;
        remaining[size_t(v >> 6)] &= ~(uint64_t{1} << (v & 63));
        Branch b;
        b.v = v;
        b.p.resize(size_t(stride));
        const uint64_t* nb = g.adj.data() + size_t(v) * size_t(stride);
        for (int u = 0; u < stride; ++u) b.p[size_t(u)] = remaining[size_t(u)] & nb[u];
        branches.push_back(std::move(b));
    }

    std::vector<std::vector<std::vector<int>>> branch_out(branches.size());
#ifdef _OPENMP
    const int prev = omp_get_max_threads();
    if (threads > 0) omp_set_num_threads(threads);
#endif
#pragma omp parallel for schedule(dynamic)
    for (int64_t b = 0; b < int64_t(branches.size()); ++b) {
        std::vector<int> r{branches[size_t(b)].v};
        CliqueSearch cs{g, size, branch_out[size_t(b)]};
        cs.expand(r, branches[size_t(b)].p);
    }
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(prev);
#endif
    for (auto& bo : branch_out)
        for (auto& c : bo) {
            std::sort(c.begin(), c.end());
            out.push_back(std::move(c));
        }
    std::sort(out.begin(), out.end());
    return out;
}

HadamardMatrix assemble_hadamard(const std::vector<SignVec>& clique) {
    HadamardMatrix h;
    h.n = clique.empty() ? 0 : clique.front().n;
    if (int(clique.size()) != h.n)
        throw std::invalid_argument("assemble_hadamard: need n vectors of length n");
    h.rows = clique;
    std::sort(h.rows.begin(), h.rows.end(),
              [](const SignVec& a, const SignVec& b) { return a.neg < b.neg; });
    if (!h.verify())
        throw std::logic_error("assemble_hadamard: clique rows fail H H^T = n I");
    return h;
}

std::string SearchTuple::to_string() const {
    return "(" + std::to_string(w10) + "," + std::to_string(w11) + "," + std::to_string(n0) +
           "," + std::to_string(n1) + "," + std::to_string(neq) + ")";
}

TupleResult search_tuple(const TernaryCode& c, const SweepOptions& opt) {
    if (c.n != 2 * c.k || c.n >= 64)
        throw std::invalid_argument("search_tuple: expects an [n, n/2] code, n < 64");
    TupleResult res;
    SweepOptions o = opt;
    o.collect_mask = uint64_t{1} << c.n;
    SweepResult sw = sweep_parallel(c, o);
    res.we = std::move(sw.we);

    const W1Split w1 = build_w1(sw.collected);
    res.tuple.w10 = int(w1.w10.size());
    res.tuple.w11 = int(w1.w11.size());
    if (2 * (res.tuple.w10 + res.tuple.w11) != int(res.we.a[size_t(c.n)]))
        throw std::logic_error("search_tuple: split sizes disagree with the enumerator");

    std::map<std::string, std::pair<CanonCert, HadamardMatrix>> classes;
    for (int side = 0; side < 2; ++side) {
        const auto& w = side == 0 ? w1.w10 : w1.w11;
        long& count = side == 0 ? res.tuple.n0 : res.tuple.n1;
        if (int(w.size()) < c.n) continue;
        const OrthGraph g = build_gamma(w, opt.threads);
        const auto cliques = find_cliques_of_size(g, c.n, opt.threads);
        count = long(cliques.size());
        for (const auto& cl : cliques) {
            std::vector<SignVec> rows;
            rows.reserve(cl.size());
            for (const int v : cl) rows.push_back(g.verts[size_t(v)]);
            HadamardMatrix h = assemble_hadamard(rows);
            CanonCert cert = hadamard_cert(h);
            classes.emplace(cert.hex(), std::make_pair(cert, std::move(h)));
        }
    }
    res.tuple.neq = long(classes.size());
    for (auto& [hex, ch] : classes) {
        res.certs.push_back(ch.first);
        res.reps.push_back(std::move(ch.second));
    }
    return res;
}

}  // namespace f3had
