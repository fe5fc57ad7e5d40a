#include "f3had/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "f3had/lowweight.hpp"
#include "f3had/sha256.hpp"
#include "f3had/weight.hpp"

namespace f3had {

namespace {

inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// ordered partition of the vertex set into cells, nauty-style arrays
struct Part {
    std::vector<int32_t> lab;     // lab[p] = vertex at position p
    std::vector<int32_t> pos;     // pos[v] = position of vertex v
    std::vector<int32_t> cstart;  // cstart[p] = start position of the cell holding p
    std::vector<int32_t> clen;    // valid at start positions only
};

using Ahash = std::array<uint64_t, 2>;

struct Leaf {
    bool valid = false;
    std::vector<int32_t> lab;
    Ahash ahash{};
    std::vector<uint64_t> trace;
};

class Searcher {
public:
    Searcher(const ColoredGraph& g, uint64_t node_limit)  // g.adj must be sorted
        : n_(g.n), adj_(g.adj), color_(g.color), node_limit_(node_limit) {
        cnt_.assign(size_t(n_), 0);
        valcnt_.assign(size_t(n_) + 1, 0);
        cellmark_.assign(size_t(n_), 0);
        inwl_.assign(size_t(n_), 0);
        scratch_.resize(size_t(n_) + 1);  // stable addresses across recursion
    }

    CanonResult run() {
        Part root = initial_partition();
        wl_.clear();
        wl_head_ = 0;
        for (int p = 0; p < n_; p += root.clen[size_t(p)]) {
            wl_.push_back(p);
            inwl_[size_t(p)] = 1;
        }
        uint64_t h = 0x1234567;
        refine(root, h);
        path_trace_.push_back(h);
        dfs(root, 0, CmpState{0, true, true});

        CanonResult res;
        res.nodes = nodes_;
        res.generators = gens_;
        res.order.assign(best_.lab.begin(), best_.lab.end());
        res.aut_order = group_order();
        res.digest = leaf_digest(best_.lab);
        return res;
    }

    std::string_view tag;

private:
    struct CmpState {
        int vs_best;    // -1 strictly better somewhere, 0 equal so far, +1 worse but first-equal
        bool eq_first;  // trace equal to the first path so far
        bool on_spine;  // this node lies on the leftmost root path
    };

    Part initial_partition() {
        Part p;
        p.lab.resize(size_t(n_));
        p.pos.resize(size_t(n_));
        p.cstart.resize(size_t(n_));
        p.clen.assign(size_t(n_), 0);
        std::iota(p.lab.begin(), p.lab.end(), 0);
        std::stable_sort(p.lab.begin(), p.lab.end(),
                         [&](int a, int b) { return color_[size_t(a)] < color_[size_t(b)]; });
        int start = 0;
        for (int q = 0; q < n_; ++q) {
            p.pos[size_t(p.lab[size_t(q)])] = q;
            if (q + 1 == n_ || color_[size_t(p.lab[size_t(q + 1)])] != color_[size_t(p.lab[size_t(q)])]) {
                for (int r = start; r <= q; ++r) p.cstart[size_t(r)] = start;
                p.clen[size_t(start)] = q - start + 1;
                start = q + 1;
            }
        }
        return p;
    }

    // equitable refinement against the pending splitters in wl_; events are
    // mixed into h.  Scratch arrays are members so the hot path does not
    // allocate.
    void refine(Part& p, uint64_t& h) {
        touched_.clear();
        int ncells = 0;
        for (int q = 0; q < n_; q += p.clen[size_t(q)]) ++ncells;
        while (wl_head_ < wl_.size()) {
            if (ncells == n_) {  // discrete already; nothing can split
                for (size_t i = wl_head_; i < wl_.size(); ++i) inwl_[size_t(wl_[i])] = 0;
                break;
            }
            const int ws = wl_[wl_head_++];
            inwl_[size_t(ws)] = 0;
            const int wlen = p.clen[size_t(ws)];
            h = mix64(h ^ (uint64_t(ws) << 20 ^ uint64_t(wlen)));

            touched_.clear();
            for (int q = ws; q < ws + wlen; ++q)
                for (int u : adj_[size_t(p.lab[size_t(q)])])
                    if (cnt_[size_t(u)]++ == 0) touched_.push_back(u);

            cells_.clear();
            for (int u : touched_) {
                const int cs = p.cstart[size_t(p.pos[size_t(u)])];
                if (!cellmark_[size_t(cs)]) {
                    cellmark_[size_t(cs)] = 1;
                    cells_.push_back(cs);
                }
            }
            std::sort(cells_.begin(), cells_.end());

            for (const int cs : cells_) {
                cellmark_[size_t(cs)] = 0;
                const int len = p.clen[size_t(cs)];
                if (len == 1) {
                    h = mix64(h ^ (uint64_t(cs) << 18 ^ uint64_t(cnt_[size_t(p.lab[size_t(cs)])])));
                    continue;
                }
                // distinct adjacency counts in this cell, ascending
                vals_.clear();
                for (int q = cs; q < cs + len; ++q) {
                    const int c = cnt_[size_t(p.lab[size_t(q)])];
                    if (valcnt_[size_t(c)]++ == 0) vals_.push_back(c);
                }
                if (vals_.size() == 1) {
                    valcnt_[size_t(vals_[0])] = 0;
                    h = mix64(h ^ (uint64_t(cs) << 18 ^ uint64_t(vals_[0]) << 1 ^ 1));
                    continue;
                }
                std::sort(vals_.begin(), vals_.end());
                // stable counting partition into member_, fragments ascending
                const bool was_listed = inwl_[size_t(cs)] != 0;
                member_.resize(size_t(len));
                int offset = 0, largest_start = -1, largest_len = -1;
                frag_.clear();
                for (const int val : vals_) {
                    const int fs = cs + offset, fl = valcnt_[size_t(val)];
                    frag_.push_back(fs);
                    p.clen[size_t(fs)] = fl;
                    valcnt_[size_t(val)] = offset;  // reuse as placement cursor
                    offset += fl;
                    if (fl > largest_len) {
                        largest_len = fl;
                        largest_start = fs;
                    }
                    h = mix64(h ^ (uint64_t(fs) << 32 ^ uint64_t(fl) << 8 ^ uint64_t(val)));
                }
                for (int q = cs; q < cs + len; ++q) {
                    const int v = p.lab[size_t(q)];
                    member_[size_t(valcnt_[size_t(cnt_[size_t(v)])]++)] = v;
                }
                for (const int val : vals_) valcnt_[size_t(val)] = 0;
                for (int i = 0; i < len; ++i) {
                    const int v = member_[size_t(i)];
                    p.lab[size_t(cs + i)] = v;
                    p.pos[size_t(v)] = cs + i;
                }
                ncells += int(frag_.size()) - 1;
                for (const int fs : frag_)
                    for (int q = fs; q < fs + p.clen[size_t(fs)]; ++q) p.cstart[size_t(q)] = fs;
                for (const int fs : frag_) {
                    if (inwl_[size_t(fs)]) continue;
                    if (!was_listed && fs == largest_start) continue;  // Hopcroft: skip one largest
                    wl_.push_back(fs);
                    inwl_[size_t(fs)] = 1;
                }
            }
            for (int u : touched_) cnt_[size_t(u)] = 0;
        }
        wl_.clear();
        wl_head_ = 0;
        // summary of the resulting cell structure
        for (int q = 0; q < n_; q += p.clen[size_t(q)])
            h = mix64(h ^ (uint64_t(q) << 24 ^ uint64_t(p.clen[size_t(q)])));
    }

    // the largest non-singleton cell individualizes fastest on the regular
    // graphs seen here; first such cell on ties keeps it deterministic
    int target_cell(const Part& p) const {
        int best = -1, best_len = 1;
        for (int q = 0; q < n_; q += p.clen[size_t(q)]) {
            const int len = p.clen[size_t(q)];
            if (len > best_len) {
                best_len = len;
                best = q;
            }
        }
        return best;
    }

    // returns an unwind barrier: frames deeper than the barrier pop
    // immediately after an automorphism collapsed their subtree
    int dfs(const Part& p, int depth, CmpState cmp) {
        if (++nodes_ > node_limit_)
            throw std::runtime_error("canonical_form: search tree exceeded node limit");
        const int tc = target_cell(p);
        if (tc < 0) return handle_leaf(p, depth, cmp);
        std::vector<int>& cands = scratch_[size_t(depth)].cands;
        cands.assign(p.lab.begin() + tc, p.lab.begin() + tc + p.clen[size_t(tc)]);

        // spine frames prune siblings that known automorphisms map to an
        // already-explored child
        std::vector<int> processed;
        OrbitCache oc;
        for (size_t ci = 0; ci < cands.size(); ++ci) {
            const int v = cands[ci];
            if (cmp.on_spine && ci > 0 && first_.valid) {
                refresh_orbits(oc, depth);
                bool pruned = false;
                for (const int u : processed)
                    if (oc.find(u) == oc.find(v)) {
                        pruned = true;
                        break;
                    }
                if (pruned) continue;
            }
            Part& child = scratch_[size_t(depth)].part;
            child = p;
            individualize(child, tc, v);
            wl_.clear();
            wl_head_ = 0;
            wl_.push_back(tc);
            inwl_[size_t(tc)] = 1;
            uint64_t h = mix64(uint64_t(depth) << 40 ^ uint64_t(tc) << 8 ^ 0xabc);
            refine(child, h);

            CmpState sub = cmp;
            sub.on_spine = cmp.on_spine && !first_.valid;
            if (first_.valid) {
                sub.eq_first = cmp.eq_first && depth + 1 < int(first_.trace.size()) &&
                               h == first_.trace[size_t(depth + 1)];
                if (sub.vs_best == 0) {
                    if (depth + 1 >= int(best_.trace.size())) {
                        sub.vs_best = 1;  // deeper than the best leaf: cannot beat it
                    } else if (h < best_.trace[size_t(depth + 1)]) {
                        sub.vs_best = -1;
                    } else if (h > best_.trace[size_t(depth + 1)]) {
                        sub.vs_best = 1;
                    }
                }
                if (sub.vs_best == 1 && !sub.eq_first) continue;  // prune subtree
            }
            if (int(path_trace_.size()) <= depth + 1) path_trace_.resize(size_t(depth + 2));
            path_trace_[size_t(depth + 1)] = h;
            if (int(path_choice_.size()) <= depth) path_choice_.resize(size_t(depth + 1));
            path_choice_[size_t(depth)] = v;

            if (cmp.on_spine && !first_.valid) base_.push_back(v);
            processed.push_back(v);
            const int barrier = dfs(child, depth + 1, sub);
            if (barrier < depth) return barrier;
        }
        return depth;
    }

    void individualize(Part& p, int tc, int v) {
        const int len = p.clen[size_t(tc)];
        const int pv = p.pos[size_t(v)];
        std::swap(p.lab[size_t(tc)], p.lab[size_t(pv)]);
        p.pos[size_t(p.lab[size_t(pv)])] = pv;
        p.pos[size_t(v)] = tc;
        p.clen[size_t(tc)] = 1;
        p.cstart[size_t(tc)] = tc;
        if (len > 1) {
            p.clen[size_t(tc + 1)] = len - 1;
            for (int q = tc + 1; q < tc + len; ++q) p.cstart[size_t(q)] = tc + 1;
        }
    }

    Ahash labeled_hash(const std::vector<int32_t>& lab) const {
        std::vector<int32_t> pos(static_cast<size_t>(n_));
        for (int q = 0; q < n_; ++q) pos[size_t(lab[size_t(q)])] = q;
        Ahash h{0x243f6a8885a308d3ULL, 0x13198a2e03707344ULL};
        for (int q = 0; q < n_; ++q) {
            const int v = lab[size_t(q)];
            uint64_t row = uint64_t(color_[size_t(v)]) + 1;
            for (const int u : adj_[size_t(v)]) row += mix64(uint64_t(pos[size_t(u)]) + 0x51);
            h[0] = mix64(h[0] ^ row ^ (uint64_t(q) << 32));
            h[1] = h[1] * 0x100000001b3ULL + (row ^ uint64_t(q));
        }
        return h;
    }

    // returns the depth to unwind to (INT_MAX: none)
    int handle_leaf(const Part& p, int depth, const CmpState& cmp) {
        const Ahash ah = labeled_hash(p.lab);
        std::vector<uint64_t> trace(path_trace_.begin(), path_trace_.begin() + depth + 1);
        if (!first_.valid) {
            first_ = Leaf{true, p.lab, ah, trace};
            best_ = first_;
            return depth;
        }
        if (cmp.eq_first && depth + 1 == int(first_.trace.size()) && ah == first_.ahash)
            if (try_automorphism(first_.lab, p.lab)) return first_divergence(depth);
        if (cmp.vs_best == -1 || (cmp.vs_best == 0 && ah < best_.ahash)) {
            best_ = Leaf{true, p.lab, ah, trace};
            return depth;
        }
        if (cmp.vs_best == 0 && ah == best_.ahash) try_automorphism(best_.lab, p.lab);
        return depth;
    }

    // level where the current path left the first path: everything below
    // has just been shown equivalent to an explored subtree
    int first_divergence(int depth) const {
        const int upto = std::min(depth, int(base_.size()));
        for (int d = 0; d < upto; ++d)
            if (path_choice_[size_t(d)] != base_[size_t(d)]) return d;
        return depth;
    }

    // candidate automorphism g with g[ref_lab[q]] = leaf_lab[q]; verified exactly
    bool try_automorphism(const std::vector<int32_t>& ref, const std::vector<int32_t>& leaf) {
        std::vector<int> g(static_cast<size_t>(n_));
        bool identity = true;
        for (int q = 0; q < n_; ++q) {
            g[size_t(ref[size_t(q)])] = leaf[size_t(q)];
            identity = identity && ref[size_t(q)] == leaf[size_t(q)];
        }
        if (identity) return false;
        std::vector<int> img;
        for (int v = 0; v < n_; ++v) {
            if (color_[size_t(g[size_t(v)])] != color_[size_t(v)]) return false;
            img.clear();
            img.reserve(adj_[size_t(v)].size());
            for (const int u : adj_[size_t(v)]) img.push_back(g[size_t(u)]);
            std::sort(img.begin(), img.end());
            if (img != adj_[size_t(g[size_t(v)])]) return false;
        }
        for (const auto& known : gens_)
            if (known == g) return true;
        gens_.push_back(std::move(g));
        gen_fix_.push_back(fixed_prefix(gens_.back()));
        return true;
    }

    int fixed_prefix(const std::vector<int>& g) const {
        int d = 0;
        while (d < int(base_.size()) && g[size_t(base_[size_t(d)])] == base_[size_t(d)]) ++d;
        return d;
    }

    struct OrbitCache {
        int gen_count = -1;
        std::vector<int32_t> uf;
        int find(int v) {
            while (uf[size_t(v)] != v) {
                uf[size_t(v)] = uf[size_t(uf[size_t(v)])];
                v = uf[size_t(v)];
            }
            return v;
        }
    };

    void refresh_orbits(OrbitCache& oc, int depth) {
        if (oc.gen_count == int(gens_.size())) return;
        oc.gen_count = int(gens_.size());
        oc.uf.resize(size_t(n_));
        std::iota(oc.uf.begin(), oc.uf.end(), 0);
        for (size_t gi = 0; gi < gens_.size(); ++gi) {
            if (gen_fix_[gi] < depth) continue;  // must fix base[0..depth-1] pointwise
            for (int v = 0; v < n_; ++v) {
                const int a = oc.find(v), b = oc.find(gens_[gi][size_t(v)]);
                if (a != b) oc.uf[size_t(a)] = b;
            }
        }
    }

    uint64_t group_order() {
        uint64_t order = 1;
        for (size_t d = 0; d < base_.size(); ++d) {
            OrbitCache oc;
            oc.gen_count = -2;  // force rebuild
            oc.uf.resize(size_t(n_));
            std::iota(oc.uf.begin(), oc.uf.end(), 0);
            for (size_t gi = 0; gi < gens_.size(); ++gi) {
                if (gen_fix_[gi] < int(d)) continue;
                for (int v = 0; v < n_; ++v) {
                    const int a = oc.find(v), b = oc.find(gens_[gi][size_t(v)]);
                    if (a != b) oc.uf[size_t(a)] = b;
                }
            }
            const int root = oc.find(base_[d]);
            uint64_t sz = 0;
            for (int v = 0; v < n_; ++v)
                if (oc.find(v) == root) ++sz;
            order *= sz;
        }
        return order;
    }

    std::array<uint8_t, 32> leaf_digest(const std::vector<int32_t>& lab) {
        std::vector<int32_t> pos(static_cast<size_t>(n_));
        for (int q = 0; q < n_; ++q) pos[size_t(lab[size_t(q)])] = q;
        Sha256 sha;
        sha.update(tag.data(), tag.size());
        sha.update_u32(uint32_t(n_));
        for (int q = 0; q < n_; ++q) sha.update_u32(uint32_t(color_[size_t(lab[size_t(q)])]));
        std::vector<std::pair<uint32_t, uint32_t>> edges;
        for (int v = 0; v < n_; ++v)
            for (const int u : adj_[size_t(v)]) {
                const uint32_t a = uint32_t(pos[size_t(v)]), b = uint32_t(pos[size_t(u)]);
                if (a < b) edges.emplace_back(a, b);
            }
        std::sort(edges.begin(), edges.end());
        sha.update_u32(uint32_t(edges.size()));
        for (const auto& [a, b] : edges) {
            sha.update_u32(a);
            sha.update_u32(b);
        }
        return sha.digest();
    }

    int n_;
    const std::vector<std::vector<int>>& adj_;
    const std::vector<int>& color_;
    uint64_t node_limit_;
    uint64_t nodes_ = 0;

    std::vector<int32_t> cnt_, valcnt_;
    std::vector<uint8_t> cellmark_, inwl_;
    std::vector<int> wl_, touched_, cells_, vals_, member_, frag_;
    size_t wl_head_ = 0;
    struct DepthScratch {
        Part part;
        std::vector<int> cands;
    };
    std::vector<DepthScratch> scratch_;
    std::vector<uint64_t> path_trace_;
    std::vector<int> path_choice_;

    Leaf first_, best_;
    std::vector<int> base_;
    std::vector<std::vector<int>> gens_;
    std::vector<int> gen_fix_;
};

}  // namespace

CanonResult canonical_form(const ColoredGraph& g, std::string_view tag, uint64_t node_limit) {
    if (g.n == 0) {
        CanonResult r;
        Sha256 sha;
        sha.update(tag.data(), tag.size());
        sha.update_u32(0);
        r.digest = sha.digest();
        return r;
    }
    ColoredGraph work = g;
    for (auto& a : work.adj) std::sort(a.begin(), a.end());
    Searcher s(work, node_limit);
    s.tag = tag;
    return s.run();
}

std::string CanonCert::hex() const {
    std::string s(1, kind);
    s += ':';
    s += hex_digest(bytes);
    return s;
}

ColoredGraph hadamard_to_graph(const HadamardMatrix& h) {
    const int n = h.n;
    ColoredGraph g(4 * n);
    // vertices: 2i / 2i+1 = row i (+/-), 2n+2j / 2n+2j+1 = column j (+/-)
    for (int v = 0; v < 2 * n; ++v) g.color[size_t(v)] = 0;
    for (int v = 2 * n; v < 4 * n; ++v) g.color[size_t(v)] = 1;
    for (int i = 0; i < n; ++i) g.add_edge(2 * i, 2 * i + 1);
    for (int j = 0; j < n; ++j) g.add_edge(2 * n + 2 * j, 2 * n + 2 * j + 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int rp = 2 * i, rm = 2 * i + 1;
            const int cp = 2 * n + 2 * j, cm = 2 * n + 2 * j + 1;
            if (h.rows[size_t(i)].get(j) > 0) {
                g.add_edge(rp, cp);
                g.add_edge(rm, cm);
            } else {
                g.add_edge(rp, cm);
                g.add_edge(rm, cp);
            }
        }
    return g;
}

CanonCert hadamard_cert(const HadamardMatrix& h) {
    if (!h.verify()) throw std::invalid_argument("hadamard_cert: not a Hadamard matrix");
    const CanonResult r = canonical_form(hadamard_to_graph(h), "HAD1");
    CanonCert c;
    c.bytes = r.digest;
    c.aut_order = r.aut_order / kHadamardAutNorm;
    c.kind = 'H';
    return c;
}

bool hadamard_equivalent(const HadamardMatrix& h, const HadamardMatrix& k) {
    if (h.n != k.n) return false;
    return hadamard_cert(h) == hadamard_cert(k);
}

uint64_t hadamard_aut_order(const HadamardMatrix& h) { return hadamard_cert(h).aut_order; }

CanonCert code_cert_from_words(int n, const std::vector<std::pair<int, std::vector<Gf3Vec>>>& classes) {
    // words in each class come in {x, 2x} pairs; build one vertex per word
    size_t total = 0;
    for (const auto& [w, words] : classes) total += words.size();
    ColoredGraph g(2 * n + int(total));
    std::string tag = "COD1:" + std::to_string(n);
    for (int i = 0; i < n; ++i) {
        g.color[size_t(2 * i)] = 0;
        g.color[size_t(2 * i + 1)] = 0;
        g.add_edge(2 * i, 2 * i + 1);  // value-1 / value-2 pairing
    }
    int next = 2 * n;
    int class_color = 1;
    for (const auto& [w, words] : classes) {
        tag += ":" + std::to_string(w) + "x" + std::to_string(words.size());
        // index words to find each word's negation partner
        std::map<std::pair<uint64_t, uint64_t>, int> index;
        const int first_id = next;
        for (const auto& x : words) {
            g.color[size_t(next)] = class_color;
            index[{x.p1, x.p2}] = next;
            ++next;
        }
        for (size_t wi = 0; wi < words.size(); ++wi) {
            const Gf3Vec& x = words[wi];
            const int id = first_id + int(wi);
            for (int i = 0; i < n; ++i) {
                const int v = x.get(i);
                if (v) g.add_edge(id, 2 * i + (v - 1));
            }
            const Gf3Vec nx = x.negated();
            const auto it = index.find({nx.p1, nx.p2});
            if (it == index.end())
                throw std::invalid_argument("code_cert_from_words: word list not closed under negation");
            if (it->second > id) g.add_edge(id, it->second);
        }
        ++class_color;
    }
    const CanonResult r = canonical_form(g, tag);
    CanonCert c;
    c.bytes = r.digest;
    c.aut_order = r.aut_order;
    c.kind = 'C';
    return c;
}

namespace {

// weight classes, lightest first, until the words span the code
std::vector<std::pair<int, std::vector<Gf3Vec>>> cert_classes(const TernaryCode& c,
                                                              const CodeCertOptions& opt) {
    std::vector<std::pair<int, std::vector<Gf3Vec>>> classes;
    Gf3Mat span;
    span.ncols = c.n;
    const bool fast = is_self_dual(c);
    WeightEnumerator we;
    if (!fast) {
        SweepOptions so;
        so.budget = opt.budget;
        we = weight_enumerator(c, so);
    }
    size_t total = 0;
    int w = 0;
    while (rank(span) < c.k) {
        std::vector<Gf3Vec> words;
        if (fast) {
            do {  // self-dual: weights are multiples of 3
                w += 3;
                if (w > c.n) throw std::logic_error("code_cert: ran out of weight classes");
                words = low_weight_class(c, w);
            } while (words.empty());
        } else {
            do {
                ++w;
                if (w > c.n) throw std::logic_error("code_cert: ran out of weight classes");
            } while (we.a[size_t(w)] == 0);
            SweepOptions so;
            so.budget = opt.budget;
            words = codewords_of_weight(c, w, so);
        }
        total += words.size();
        if (total > opt.max_words)
            throw BudgetExceeded("code_cert: word classes exceed " + std::to_string(opt.max_words));
        for (const auto& x : words) span.rows.push_back(x);
        classes.emplace_back(w, std::move(words));
    }
    return classes;
}

}  // namespace

CanonCert code_cert(const TernaryCode& c, const CodeCertOptions& opt) {
    if (c.k == 0) throw std::invalid_argument("code_cert: zero code");
    return code_cert_from_words(c.n, cert_classes(c, opt));
}

bool code_equivalent(const TernaryCode& a, const TernaryCode& b, const CodeCertOptions& opt) {
    if (a.n != b.n || a.k != b.k) return false;
    if (row_space_equal(a, b)) return true;
    return code_cert(a, opt) == code_cert(b, opt);
}

}  // namespace f3had
