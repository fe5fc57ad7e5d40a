#include "f3had/hadamard.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace f3had {

std::string SignVec::to_string() const {
    std::string s;
    for (int i = 0; i < n; ++i) {
        if (i) s += ' ';
        s += get(i) > 0 ? "1" : "-1";
    }
    return s;
}

SignVec lift_bar(const Gf3Vec& x) {
    if (x.weight() != x.n)
        throw std::invalid_argument("lift_bar: vector has zero coordinates");
    return {x.p2, x.n};
}

Gf3Vec sign_to_gf3(const SignVec& s) {
    return {~s.neg & low_mask(s.n), s.neg, s.n};
}

bool orthogonality_parity(const SignVec& r1, const SignVec& r2) {
    if (r1.n != r2.n || r1.n % 4 != 0)
        throw std::invalid_argument("orthogonality_parity: need equal lengths divisible by 4");
    if (!orthogonal(r1, r2)) return true;
    return (r1.ones() & 1) == (r2.ones() & 1);
}

bool HadamardMatrix::verify() const {
    if (int(rows.size()) != n || n < 1) return false;
    for (int i = 0; i < n; ++i) {
        if (rows[size_t(i)].n != n) return false;
        for (int j = i; j < n; ++j) {
            const int d = dot(rows[size_t(i)], rows[size_t(j)]);
            if (d != (i == j ? n : 0)) return false;
        }
    }
    return true;
}

HadamardMatrix HadamardMatrix::transposed() const {
    HadamardMatrix t;
    t.n = n;
    t.rows.assign(size_t(n), SignVec{0, n});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t.rows[size_t(j)].set(i, rows[size_t(i)].get(j));
    return t;
}

TernaryCode code_from_hadamard(const HadamardMatrix& h, std::string label) {
    Gf3Mat m;
    m.ncols = h.n;
    m.rows.reserve(size_t(h.n));
    for (const auto& r : h.rows) m.rows.push_back(sign_to_gf3(r));
    return make_code(m, label.empty() ? "C(H)" : std::move(label));
}

std::string write_hadamard(const HadamardMatrix& h) {
    std::string out;
    for (const auto& r : h.rows) {
        out += r.to_string();
        out += '\n';
    }
    return out;
}

namespace {

// one parsed line: entries in {+1,-1}, or empty when the line is not data
std::vector<int> parse_line(const std::string& line) {
    std::vector<int> vals;
    // try whitespace-separated numeric tokens first
    {
        std::istringstream in(line);
        std::string tok;
        bool numeric = true;
        std::vector<int> nums;
        while (in >> tok) {
            if (tok == "1" || tok == "+1") nums.push_back(1);
            else if (tok == "-1") nums.push_back(-1);
            else if (tok == "0") nums.push_back(-1);  // 0/1 convention, 0 means -1
            else {
                numeric = false;
                break;
            }
        }
        if (numeric && !nums.empty()) return nums;
    }
    // compact character rows: +-..., 01..., or 12... are ambiguous; accept
    // only strings drawn entirely from one of the two-symbol alphabets
    bool pm = true, zo = true;
    for (char c : line) {
        if (c == ' ' || c == '\t' || c == '\r') continue;
        pm = pm && (c == '+' || c == '-');
        zo = zo && (c == '0' || c == '1');
    }
    if (!pm && !zo) return {};
    for (char c : line) {
        if (c == ' ' || c == '\t' || c == '\r') continue;
        if (pm) vals.push_back(c == '+' ? 1 : -1);
        else vals.push_back(c == '1' ? 1 : -1);
    }
    return vals;
}

}  // namespace

HadamardParseReport parse_hadamard_text(const std::string& text) {
    std::istringstream in(text);
    return parse_hadamard_file(in);
}

HadamardParseReport parse_hadamard_file(std::istream& in) {
    HadamardParseReport rep;
    std::vector<std::vector<int>> block;
    int block_first_line = 0, line_no = 0;

    auto flush = [&]() {
        if (block.empty()) return;
        const int n = int(block[0].size());
        std::string err;
        if (int(block.size()) != n)
            err = "block is " + std::to_string(block.size()) + " rows of " + std::to_string(n) +
                  " entries, not square";
        else if (n > kMaxLen)
            err = "order " + std::to_string(n) + " exceeds the supported maximum";
        if (err.empty()) {
            HadamardMatrix h;
            h.n = n;
            for (const auto& row : block) {
                SignVec v{0, n};
                for (int i = 0; i < n; ++i) v.set(i, row[size_t(i)]);
                h.rows.push_back(v);
            }
            if (!h.verify()) err = "matrix fails H H^T = n I";
            else rep.matrices.push_back(std::move(h));
        }
        if (!err.empty())
            rep.errors.push_back("block at line " + std::to_string(block_first_line) + ": " + err);
        block.clear();
    };

    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        std::vector<int> vals = parse_line(line);
        if (vals.empty()) {
            flush();
            continue;
        }
        if (block.empty()) block_first_line = line_no;
        else if (vals.size() != block[0].size()) {
            // row width changed: treat as a new block boundary
            flush();
            block_first_line = line_no;
        }
        block.push_back(std::move(vals));
        if (int(block.size()) == int(block[0].size())) flush();  // square block complete
    }
    flush();
    return rep;
}

}  // namespace f3had
