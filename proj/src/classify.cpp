#include "f3had/classify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "f3had/canonical.hpp"
#include "f3had/lowweight.hpp"

namespace f3had {

const char* family_name(Family f) {
    switch (f) {
        case Family::bdc: return "bdc";
        case Family::qt: return "qt";
        default: return "4nc";
    }
}

Family family_from_name(const std::string& name) {
    if (name == "bdc") return Family::bdc;
    if (name == "qt") return Family::qt;
    if (name == "4nc") return Family::four_nc;
    throw std::invalid_argument("unknown family '" + name + "' (want bdc, qt or 4nc)");
}

namespace {

// cyclic / negacyclic rotation of an m-bit plane pair by s places
inline Gf3Vec rot(const Gf3Vec& v, int s, bool nega) {
    const int m = v.n;
    const uint64_t mask = low_mask(m);
    const uint64_t lo1 = (v.p1 << s) & mask, lo2 = (v.p2 << s) & mask;
    const uint64_t hi1 = v.p1 >> (m - s), hi2 = v.p2 >> (m - s);
    if (!nega) return {lo1 | hi1, lo2 | hi2, m};
    return {lo1 | hi2, lo2 | hi1, m};  // wrapped entries negated
}

inline int vec_sum_mod3(const Gf3Vec& v) {
    return (std::popcount(v.p1) + 2 * std::popcount(v.p2)) % 3;
}

}  // namespace

// (I | P) with P = border + circulant(r): self-dual iff P P^T = 2I, which
// reduces to sum(r) = 0, r.r = 1 and every cyclic autocorrelation = 2
bool bdc_self_dual(const Gf3Vec& r) {
    const int m = r.n;  // 2(m+1) = code length
    if (vec_sum_mod3(r) != 0) return false;
    if (inner(r, r) != 1) return false;
    for (int s = 1; s <= m / 2; ++s)
        if (inner(r, rot(r, s, false)) != 2) return false;
    return true;
}

// (I | N): self-dual iff N N^T = 2I, i.e. r.r = 2 and all negacyclic
// autocorrelations vanish (shifts past m/2 are forced by antisymmetry)
bool qt_self_dual(const Gf3Vec& r) {
    const int m = r.n;
    if (inner(r, r) != 2) return false;
    for (int s = 1; s <= (m - 1) / 2; ++s)
        if (inner(r, rot(r, s, true)) != 0) return false;
    return true;
}

// (I | M), M = [[A,B],[2B^T,A^T]]: negacirculants commute, so self-duality
// reduces to A A^T + B B^T = 2I, i.e. the negacyclic autocorrelations of
// rA and rB sum to 2 at shift 0 and to 0 elsewhere
bool fournc_self_dual(const Gf3Vec& ra, const Gf3Vec& rb) {
    const int m = ra.n;
    if ((inner(ra, ra) + inner(rb, rb)) % 3 != 2) return false;
    for (int s = 1; s <= (m - 1) / 2; ++s)
        if ((inner(ra, rot(ra, s, true)) + inner(rb, rot(rb, s, true))) % 3 != 0) return false;
    return true;
}

TernaryCode build_family_code(Family f, const std::string& ra, const std::string& rb) {
    switch (f) {
        case Family::bdc: return bordered_double_circulant(Gf3Vec::parse(ra));
        case Family::qt: return quasi_twisted(Gf3Vec::parse(ra));
        default: return four_negacirculant(Gf3Vec::parse(ra), Gf3Vec::parse(rb));
    }
}

namespace {

constexpr int kBdcLen = 17, kQtLen = 18, kNegaLen = 9;

Gf3Vec vec_from_index(uint64_t idx, int m) {
    Gf3Vec v = Gf3Vec::zero(m);
    for (int i = 0; i < m; ++i, idx /= 3) v.set(i, int(idx % 3));
    return v;
}

struct Survivor {
    std::string ra, rb;
    bool analyzed = false;
    int a9 = 0;           // 0 = rejected (minimum weight != 9)
    std::string cert;
};

struct Checkpoint {
    uint64_t cursor = 0;
    std::vector<Survivor> survivors;
    std::map<std::string, size_t> index;  // "ra:rb" -> survivors slot

    static std::string key(const std::string& ra, const std::string& rb) { return ra + ":" + rb; }

    void add_survivor(const std::string& ra, const std::string& rb, std::ofstream* out) {
        if (index.count(key(ra, rb))) return;
        index[key(ra, rb)] = survivors.size();
        survivors.push_back({ra, rb, false, 0, ""});
        if (out) *out << "S " << ra << (rb.empty() ? "" : " " + rb) << "\n";
    }
};

Checkpoint load_checkpoint(const std::string& path, Family fam) {
    Checkpoint cp;
    if (path.empty()) return cp;
    std::ifstream in(path);
    if (!in) return cp;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "F3HAD-CLASSIFY") {
            std::string fword;
            ls >> fword;
            if (fword != std::string("family=") + family_name(fam))
                throw std::runtime_error("checkpoint belongs to a different family: " + fword);
        } else if (tag == "C") {
            ls >> cp.cursor;
        } else if (tag == "S") {
            std::string ra, rb;
            ls >> ra >> rb;
            cp.add_survivor(ra, rb, nullptr);
        } else if (tag == "R") {
            std::string ra, rb, cert;
            int a9;
            if (fam == Family::four_nc) ls >> ra >> rb >> a9 >> cert;
            else {
                ls >> ra >> a9 >> cert;
            }
            cp.add_survivor(ra, rb, nullptr);
            Survivor& s = cp.survivors[cp.index[Checkpoint::key(ra, rb)]];
            s.analyzed = true;
            s.a9 = a9;
            s.cert = cert == "-" ? "" : cert;
        }
    }
    return cp;
}

}  // namespace

ClassifyResult classify_family(Family fam, const ClassifyOptions& opt) {
    ClassifyResult res;
    res.family = fam;
    res.space = fam == Family::bdc ? pow3(kBdcLen)
                : fam == Family::qt ? pow3(kQtLen)
                                    : pow3(kNegaLen);  // rB values; rA joined per step

    Checkpoint cp = load_checkpoint(opt.checkpoint, fam);
    std::ofstream out;
    if (!opt.checkpoint.empty()) {
        const bool fresh = cp.cursor == 0 && cp.survivors.empty();
        out.open(opt.checkpoint, std::ios::app);
        if (!out) throw std::runtime_error("cannot open checkpoint " + opt.checkpoint);
        if (fresh)
            out << "F3HAD-CLASSIFY family=" << family_name(fam) << " space=" << res.space << "\n";
    }
    const auto log = [&](const std::string& msg) {
        if (opt.log) opt.log(msg);
    };

    // ---- phase 1: scan the parameter space for self-dual vectors ----
    const uint64_t begin = cp.cursor;
    const uint64_t end = std::min(res.space, begin + (opt.max_candidates == UINT64_MAX
                                                          ? res.space
                                                          : opt.max_candidates));
    if (fam == Family::four_nc && begin < end) {
        // bucket join: group rA by its negacyclic autocorrelation profile,
        // then every rB picks the complementary bucket
        const uint64_t na = pow3(kNegaLen);
        auto profile = [](const Gf3Vec& v) {
            int key = inner(v, v);
            int mult = 3;
            for (int s = 1; s <= (kNegaLen - 1) / 2; ++s, mult *= 3)
                key += mult * inner(v, rot(v, s, true));
            return key;
        };
        std::vector<std::vector<uint32_t>> buckets(243);
        for (uint64_t ia = 0; ia < na; ++ia)
            buckets[size_t(profile(vec_from_index(ia, kNegaLen)))].push_back(uint32_t(ia));
        for (uint64_t ib = begin; ib < end; ++ib) {
            const Gf3Vec rb = vec_from_index(ib, kNegaLen);
            int want = (2 - inner(rb, rb) + 3) % 3;
            int mult = 3;
            for (int s = 1; s <= (kNegaLen - 1) / 2; ++s, mult *= 3)
                want += mult * ((3 - inner(rb, rot(rb, s, true))) % 3);
            for (const uint32_t ia : buckets[size_t(want)])
                cp.add_survivor(vec_from_index(ia, kNegaLen).to_string(), rb.to_string(),
                                out.is_open() ? &out : nullptr);
            cp.cursor = ib + 1;
            if ((ib & 0x3f) == 0 && out.is_open()) {
                out << "C " << cp.cursor << "\n";
                out.flush();
            }
        }
    } else if (begin < end) {
        const int m = fam == Family::bdc ? kBdcLen : kQtLen;
        const uint64_t chunk = 1 << 18;
        for (uint64_t lo = begin; lo < end; lo += chunk) {
            const uint64_t hi = std::min(end, lo + chunk);
            std::vector<std::vector<std::string>> found;
            const int64_t tasks = int64_t((hi - lo + chunk / 16 - 1) / (chunk / 16));
            found.resize(size_t(tasks));
#ifdef _OPENMP
            const int prev = omp_get_max_threads();
            if (opt.threads > 0) omp_set_num_threads(opt.threads);
#endif
#pragma omp parallel for schedule(dynamic)
            for (int64_t task = 0; task < tasks; ++task) {
                const uint64_t a = lo + uint64_t(task) * (chunk / 16);
                const uint64_t b = std::min(hi, a + chunk / 16);
                Gf3Vec r = vec_from_index(a, m);
                for (uint64_t i = a; i < b; ++i) {
                    const bool ok = fam == Family::bdc ? bdc_self_dual(r) : qt_self_dual(r);
                    if (ok) found[size_t(task)].push_back(r.to_string());
                    // odometer step to the next base-3 vector
                    for (int d = 0; d < m; ++d) {
                        const int v = r.get(d);
                        if (v < 2) {
                            r.set(d, v + 1);
                            break;
                        }
                        r.set(d, 0);
                    }
                }
            }
#ifdef _OPENMP
            if (opt.threads > 0) omp_set_num_threads(prev);
#endif
            for (const auto& batch : found)
                for (const auto& ra : batch)
                    cp.add_survivor(ra, "", out.is_open() ? &out : nullptr);
            cp.cursor = hi;
            if (out.is_open()) {
                out << "C " << cp.cursor << "\n";
                out.flush();
            }
        }
    }
    res.cursor = cp.cursor;
    res.complete = cp.cursor == res.space;
    res.self_dual = cp.survivors.size();
    log("scan at " + std::to_string(cp.cursor) + "/" + std::to_string(res.space) + ", " +
        std::to_string(cp.survivors.size()) + " self-dual");

    // ---- phase 2: minimum weight 9 filter, weight-9 count, certificate ----
    std::vector<size_t> todo;
    for (size_t i = 0; i < cp.survivors.size(); ++i)
        if (!cp.survivors[i].analyzed) todo.push_back(i);
#ifdef _OPENMP
    const int prev = omp_get_max_threads();
    if (opt.threads > 0) omp_set_num_threads(opt.threads);
#endif
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
    for (int64_t t = 0; t < int64_t(todo.size()); ++t) {
        try {
            Survivor& s = cp.survivors[todo[size_t(t)]];
            const TernaryCode c = build_family_code(fam, s.ra, s.rb);
            const LowWeightScan scan = scan_low_weight(c, 9, 9, 9);
            if (scan.aborted || scan.min_found != 9) {
                s.a9 = 0;
                s.cert = "";
            } else {
                s.a9 = int(scan.words.size());
                std::vector<std::pair<int, std::vector<Gf3Vec>>> classes{{9, scan.words}};
                Gf3Mat span;
                span.ncols = c.n;
                span.rows = scan.words;
                if (rank(span) < c.k) classes.emplace_back(12, low_weight_class(c, 12));
                s.cert = code_cert_from_words(c.n, classes).hex();
            }
            s.analyzed = true;
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
#ifdef _OPENMP
    if (opt.threads > 0) omp_set_num_threads(prev);
#endif
    if (err) std::rethrow_exception(err);
    if (out.is_open()) {
        for (const size_t i : todo) {
            const Survivor& s = cp.survivors[i];
            out << "R " << s.ra << (s.rb.empty() ? "" : " " + s.rb) << " " << s.a9 << " "
                << (s.cert.empty() ? "-" : s.cert) << "\n";
        }
        out.flush();
    }

    // ---- phase 3: collapse to classes ----
    std::map<std::string, CodeClass> classes;
    for (const auto& s : cp.survivors) {
        if (s.a9 == 0) continue;
        ++res.near_extremal;
        auto it = classes.find(s.cert);
        if (it == classes.end()) {
            classes.emplace(s.cert, CodeClass{s.ra, s.rb, s.a9, 1, s.cert});
        } else {
            it->second.members++;
            if (std::make_pair(s.ra, s.rb) < std::make_pair(it->second.ra, it->second.rb)) {
                it->second.ra = s.ra;
                it->second.rb = s.rb;
            }
        }
    }
    for (auto& [cert, cls] : classes) res.classes.push_back(cls);
    std::sort(res.classes.begin(), res.classes.end(), [](const CodeClass& a, const CodeClass& b) {
        return std::tie(a.a9, a.ra, a.rb) < std::tie(b.a9, b.ra, b.rb);
    });
    log("analyzed " + std::to_string(cp.survivors.size()) + " survivors, " +
        std::to_string(res.near_extremal) + " near-extremal, " +
        std::to_string(res.classes.size()) + " classes");
    return res;
}

}  // namespace f3had
