#include "f3had/code.hpp"

#include <sstream>

namespace f3had {

TernaryCode make_code(const Gf3Mat& rows, std::string label) {
    TernaryCode c;
    c.n = rows.ncols;
    c.rr = rref(rows);
    c.k = int(c.rr.pivots.size());
    c.gen = (c.k == rows.nrows()) ? rows : c.rr.mat;
    c.label = std::move(label);
    return c;
}

static Gf3Mat hstack(const Gf3Mat& left, const Gf3Mat& right) {
    if (left.nrows() != right.nrows()) throw std::invalid_argument("hstack: row mismatch");
    Gf3Mat out;
    out.ncols = left.ncols + right.ncols;
    out.rows.reserve(left.rows.size());
    for (size_t i = 0; i < left.rows.size(); ++i) {
        const Gf3Vec &l = left.rows[i], &r = right.rows[i];
        out.rows.push_back({l.p1 | (r.p1 << left.ncols), l.p2 | (r.p2 << left.ncols), out.ncols});
    }
    return out;
}

TernaryCode bordered_double_circulant(const Gf3Vec& r, std::string label) {
    const int m = r.n + 1;
    if (2 * m > kMaxLen) throw std::invalid_argument("bordered_double_circulant: length too large");
    const Gf3Mat circ = circulant(r, 1);
    Gf3Mat right;
    right.ncols = m;
    Gf3Vec border = Gf3Vec::zero(m);
    for (int j = 1; j < m; ++j) border.set(j, 1);
    right.rows.push_back(border);
    for (int i = 0; i < m - 1; ++i) {
        Gf3Vec row = Gf3Vec::zero(m);
        row.set(0, 1);
        row.p1 |= circ.rows[size_t(i)].p1 << 1;
        row.p2 |= circ.rows[size_t(i)].p2 << 1;
        right.rows.push_back(row);
    }
    return make_code(hstack(Gf3Mat::identity(m), right),
                     label.empty() ? "bdc(" + r.to_string() + ")" : std::move(label));
}

TernaryCode quasi_twisted(const Gf3Vec& r, std::string label) {
    const int m = r.n;
    if (2 * m > kMaxLen) throw std::invalid_argument("quasi_twisted: length too large");
    return make_code(hstack(Gf3Mat::identity(m), circulant(r, -1)),
                     label.empty() ? "qt(" + r.to_string() + ")" : std::move(label));
}

TernaryCode four_negacirculant(const Gf3Vec& ra, const Gf3Vec& rb, std::string label) {
    if (ra.n != rb.n) throw std::invalid_argument("four_negacirculant: length mismatch");
    const int m = ra.n;
    if (4 * m > kMaxLen) throw std::invalid_argument("four_negacirculant: length too large");
    const Gf3Mat a = circulant(ra, -1), b = circulant(rb, -1);
    const Gf3Mat at = transpose(a), bt = transpose(b);
    Gf3Mat right;
    right.ncols = 2 * m;
    for (int i = 0; i < m; ++i)
        right.rows.push_back({a.rows[size_t(i)].p1 | (b.rows[size_t(i)].p1 << m),
                              a.rows[size_t(i)].p2 | (b.rows[size_t(i)].p2 << m), 2 * m});
    for (int i = 0; i < m; ++i) {
        const Gf3Vec neg_bt = bt.rows[size_t(i)].negated();  // 2 B^T
        right.rows.push_back({neg_bt.p1 | (at.rows[size_t(i)].p1 << m),
                              neg_bt.p2 | (at.rows[size_t(i)].p2 << m), 2 * m});
    }
    return make_code(hstack(Gf3Mat::identity(2 * m), right),
                     label.empty() ? "4nc(" + ra.to_string() + "," + rb.to_string() + ")"
                                   : std::move(label));
}

TernaryCode dual(const TernaryCode& c) {
    return make_code(nullspace(c.rr.mat), c.label.empty() ? "dual" : "dual(" + c.label + ")");
}

bool is_self_dual(const TernaryCode& c) {
    return c.n == 2 * c.k && gram_is_zero(c.gen);
}

TernaryCode apply_monomial(const TernaryCode& c, const MonomialMap& p) {
    if (p.size() != c.n) throw std::invalid_argument("apply_monomial: dimension mismatch");
    Gf3Mat m;
    m.ncols = c.n;
    m.rows.reserve(c.gen.rows.size());
    for (const auto& row : c.gen.rows) m.rows.push_back(p.apply(row));
    return make_code(m, c.label);
}

bool row_space_equal(const TernaryCode& a, const TernaryCode& b) {
    return a.n == b.n && a.k == b.k && a.rr.mat == b.rr.mat && a.rr.pivots == b.rr.pivots;
}

TernaryCode parse_code_spec(const std::string& line) {
    std::istringstream in(line);
    std::string tok, family, ra, rb, label;
    int n = -1;
    while (in >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("code spec: expected key=value, got '" + tok + "'");
        const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
        if (key == "family") family = val;
        else if (key == "n") n = std::stoi(val);
        else if (key == "rA") ra = val;
        else if (key == "rB") rb = val;
        else if (key == "label") label = val;
        else throw std::invalid_argument("code spec: unknown key '" + key + "'");
    }
    if (family.empty() || ra.empty()) throw std::invalid_argument("code spec: family and rA are required");
    TernaryCode c;
    if (family == "bdc") c = bordered_double_circulant(Gf3Vec::parse(ra), label);
    else if (family == "qt") c = quasi_twisted(Gf3Vec::parse(ra), label);
    else if (family == "4nc") {
        if (rb.empty()) throw std::invalid_argument("code spec: family 4nc needs rB");
        c = four_negacirculant(Gf3Vec::parse(ra), Gf3Vec::parse(rb), label);
    } else {
        throw std::invalid_argument("code spec: family must be bdc, qt or 4nc");
    }
    if (n >= 0 && n != c.n)
        throw std::invalid_argument("code spec: stated n=" + std::to_string(n) +
                                    " but construction gives n=" + std::to_string(c.n));
    return c;
}

std::string format_code_spec(const std::string& family, int n, const std::string& ra,
                             const std::string& rb, const std::string& label) {
    std::string s = "family=" + family + " n=" + std::to_string(n) + " rA=" + ra;
    if (!rb.empty()) s += " rB=" + rb;
    if (!label.empty()) s += " label=" + label;
    return s;
}

}  // namespace f3had
