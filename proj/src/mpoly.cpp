#include "qtatoms/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qtatoms {

// ------------------------------------------------------------------ Mono ---

Mono Mono::with_xexp(int i, int e) const {
    if (e < 0 || e > kMaxExp) throw domain_error("Mono: exponent out of range");
    Mono m = *this;
    m.bits &= ~(0xFull << (4 * i));
    m.bits |= uint64_t(e) << (4 * i);
    return m;
}

Mono Mono::with_yexp(int i, int e) const {
    if (e < 0 || e > kMaxExp) throw domain_error("Mono: exponent out of range");
    Mono m = *this;
    m.bits &= ~(0xFull << (4 * (8 + i)));
    m.bits |= uint64_t(e) << (4 * (8 + i));
    return m;
}

namespace {
inline int nibble_sum(uint64_t v) {
    int s = 0;
    while (v) {
        s += int(v & 0xFull);
        v >>= 4;
    }
    return s;
}
}  // namespace

int Mono::xdeg() const { return nibble_sum(bits & 0xFFFFFFFFull); }
int Mono::ydeg() const { return nibble_sum(bits >> 32); }

// ----------------------------------------------------------------- MPoly ---

int MPoly::check_pairs(int n) {
    if (n < 0 || n > kMaxPairs) throw domain_error("MPoly: variable pair count out of range");
    return n;
}

MPoly::MPoly(int n, const mpq_class& c) : n_(check_pairs(n)) {
    if (c != 0) terms_[Mono::one()] = c;
}

MPoly MPoly::monomial(int n, Mono m, const mpq_class& c) {
    MPoly p(n);
    if (c != 0) p.terms_[m] = c;
    return p;
}

MPoly MPoly::var_x(int n, int i) { return monomial(n, Mono::one().with_xexp(i, 1), 1); }
MPoly MPoly::var_y(int n, int i) { return monomial(n, Mono::one().with_yexp(i, 1), 1); }

mpq_class MPoly::coeff(Mono m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

Mono MPoly::leading_monomial() const {
    if (terms_.empty()) throw domain_error("MPoly::leading_monomial: zero polynomial");
    return terms_.rbegin()->first;
}

mpq_class MPoly::leading_coeff() const {
    if (terms_.empty()) return 0;
    return terms_.rbegin()->second;
}

std::pair<int, int> MPoly::bidegree() const {
    if (terms_.empty()) return {0, 0};
    auto m = terms_.begin()->first;
    return {m.xdeg(), m.ydeg()};
}

bool MPoly::is_bihomogeneous() const {
    if (terms_.empty()) return true;
    auto [r, s] = bidegree();
    for (auto& [m, c] : terms_)
        if (m.xdeg() != r || m.ydeg() != s) return false;
    return true;
}

void MPoly::add_term(Mono m, const mpq_class& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r(n_);
    for (auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    if (n_ != o.n_) throw domain_error("MPoly: size mismatch");
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    if (n_ != o.n_) throw domain_error("MPoly: size mismatch");
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r = *this;
    r += o;
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly r = *this;
    r -= o;
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    if (n_ != o.n_) throw domain_error("MPoly: size mismatch");
    MPoly r(n_);
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_) {
            Mono m;
            // exponent-wise add with overflow check
            uint64_t sum = 0;
            for (int s = 0; s < 16; ++s) {
                int e = int((ma.bits >> (4 * s)) & 0xF) + int((mb.bits >> (4 * s)) & 0xF);
                if (e > kMaxExp) throw domain_error("MPoly: exponent overflow in product");
                sum |= uint64_t(e) << (4 * s);
            }
            m.bits = sum;
            r.add_term(m, ca * cb);
        }
    return r;
}

MPoly MPoly::operator*(const mpq_class& c) const {
    MPoly r(n_);
    if (c == 0) return r;
    for (auto& [m, cc] : terms_) r.terms_[m] = cc * c;
    return r;
}

MPoly MPoly::diff_x(int i, int order) const {
    if (i < 0 || i >= n_) throw domain_error("MPoly::diff_x: variable index out of range");
    if (order < 0) throw domain_error("MPoly::diff_x: negative order");
    MPoly r(n_);
    for (auto& [m, c] : terms_) {
        int e = m.xexp(i);
        if (e < order) continue;
        mpq_class f = c;
        for (int k = 0; k < order; ++k) f *= (e - k);
        r.add_term(m.with_xexp(i, e - order), f);
    }
    return r;
}

MPoly MPoly::diff_y(int i, int order) const {
    if (i < 0 || i >= n_) throw domain_error("MPoly::diff_y: variable index out of range");
    if (order < 0) throw domain_error("MPoly::diff_y: negative order");
    MPoly r(n_);
    for (auto& [m, c] : terms_) {
        int e = m.yexp(i);
        if (e < order) continue;
        mpq_class f = c;
        for (int k = 0; k < order; ++k) f *= (e - k);
        r.add_term(m.with_yexp(i, e - order), f);
    }
    return r;
}

MPoly MPoly::diagonal_act(const std::vector<int>& sigma) const {
    if (int(sigma.size()) != n_) throw domain_error("diagonal_act: permutation size mismatch");
    std::vector<bool> seen(size_t(n_), false);
    for (int v : sigma) {
        if (v < 0 || v >= n_ || seen[size_t(v)]) throw domain_error("diagonal_act: not a permutation");
        seen[size_t(v)] = true;
    }
    MPoly r(n_);
    for (auto& [m, c] : terms_) {
        Mono mm;
        for (int i = 0; i < n_; ++i) {
            // argument i of P becomes variable sigma[i]
            mm = mm.with_xexp(sigma[size_t(i)], m.xexp(i));
            mm = mm.with_yexp(sigma[size_t(i)], m.yexp(i));
        }
        r.add_term(mm, c);
    }
    return r;
}

MPoly MPoly::restrict_last_zero() const {
    if (n_ == 0) throw domain_error("restrict_last_zero: no variables");
    MPoly r(n_ - 1);
    for (auto& [m, c] : terms_)
        if (m.xexp(n_ - 1) == 0 && m.yexp(n_ - 1) == 0) r.add_term(m, c);
    return r;
}

MPoly MPoly::promote(int n) const {
    if (n < n_) throw domain_error("promote: cannot shrink");
    MPoly r(n);
    for (auto& [m, c] : terms_) r.terms_[m] = c;
    return r;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        mpq_class c = it->second;
        bool neg = c < 0;
        mpq_class a = neg ? mpq_class(-c) : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::ostringstream vars;
        bool star = false;
        for (int i = 0; i < n_; ++i) {
            int e = it->first.xexp(i);
            if (e > 0) {
                if (star) vars << "*";
                vars << "x" << (i + 1);
                if (e > 1) vars << "^" << e;
                star = true;
            }
        }
        for (int i = 0; i < n_; ++i) {
            int e = it->first.yexp(i);
            if (e > 0) {
                if (star) vars << "*";
                vars << "y" << (i + 1);
                if (e > 1) vars << "^" << e;
                star = true;
            }
        }
        std::string vs = vars.str();
        if (a != 1 || vs.empty()) {
            os << a.get_str();
            if (!vs.empty()) os << "*";
        }
        os << vs;
    }
    return os.str();
}

MPoly MPoly::parse(int n, const std::string& text) {
    // terms separated by +/- at top level; factors var^e or rationals
    MPoly result(n);
    size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
    };
    skip();
    bool first = true;
    while (pos < text.size()) {
        int sign = 1;
        skip();
        if (text[pos] == '+') {
            ++pos;
        } else if (text[pos] == '-') {
            sign = -1;
            ++pos;
        } else if (!first) {
            throw domain_error("MPoly::parse: expected +/- between terms");
        }
        first = false;
        skip();
        mpq_class coeff = 1;
        Mono m;
        bool any = false;
        for (;;) {
            skip();
            if (pos >= text.size()) break;
            char c = text[pos];
            if (c == '*') {
                ++pos;
                continue;
            }
            if (std::isdigit((unsigned char)c)) {
                size_t start = pos;
                while (pos < text.size() && (std::isdigit((unsigned char)text[pos]))) ++pos;
                std::string numstr = text.substr(start, pos - start);
                skip();
                if (pos < text.size() && text[pos] == '/') {
                    // lookahead: denominator must be an integer (rational coefficient)
                    size_t save = pos;
                    ++pos;
                    skip();
                    size_t ds = pos;
                    while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
                    if (ds == pos) {
                        pos = save;
                        coeff *= mpq_class(numstr);
                    } else {
                        coeff *= mpq_class(numstr + "/" + text.substr(ds, pos - ds));
                    }
                } else {
                    coeff *= mpq_class(numstr);
                }
                any = true;
                continue;
            }
            if (c == 'x' || c == 'y') {
                ++pos;
                size_t start = pos;
                while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
                if (start == pos) throw domain_error("MPoly::parse: variable needs an index");
                int idx = std::stoi(text.substr(start, pos - start)) - 1;
                if (idx < 0 || idx >= n) throw domain_error("MPoly::parse: variable index out of range");
                int e = 1;
                skip();
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    skip();
                    size_t es = pos;
                    while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
                    if (es == pos) throw domain_error("MPoly::parse: missing exponent");
                    e = std::stoi(text.substr(es, pos - es));
                }
                if (c == 'x') m = m.with_xexp(idx, m.xexp(idx) + e);
                else m = m.with_yexp(idx, m.yexp(idx) + e);
                any = true;
                continue;
            }
            break;  // next term
        }
        if (!any) throw domain_error("MPoly::parse: empty term");
        result.add_term(m, sign * coeff);
        skip();
    }
    return result;
}

// ------------------------------------------------------------- operators ---

MPoly apply_operator(const MPoly& p, const MPoly& q) {
    if (p.pairs() != q.pairs()) throw domain_error("apply_operator: size mismatch");
    int n = p.pairs();
    MPoly r(n);
    for (auto& [mp, cp] : p.terms()) {
        for (auto& [mq, cq] : q.terms()) {
            mpq_class f = cp * cq;
            Mono m = mq;
            bool dead = false;
            for (int i = 0; i < n && !dead; ++i) {
                int a = mp.xexp(i), e = m.xexp(i);
                if (a > 0) {
                    if (e < a) {
                        dead = true;
                        break;
                    }
                    for (int k = 0; k < a; ++k) f *= (e - k);
                    m = m.with_xexp(i, e - a);
                }
                int b = mp.yexp(i), ey = m.yexp(i);
                if (b > 0) {
                    if (ey < b) {
                        dead = true;
                        break;
                    }
                    for (int k = 0; k < b; ++k) f *= (ey - k);
                    m = m.with_yexp(i, ey - b);
                }
            }
            if (!dead) r.add_term(m, f);
        }
    }
    return r;
}

mpq_class apolar(const MPoly& p, const MPoly& q) {
    if (p.pairs() != q.pairs()) throw domain_error("apolar: size mismatch");
    int n = p.pairs();
    // distinct monomials are orthogonal; <m,m> = prod of factorials
    const bool p_smaller = p.terms().size() <= q.terms().size();
    const MPoly& a = p_smaller ? p : q;
    const MPoly& b = p_smaller ? q : p;
    mpq_class acc = 0;
    for (auto& [m, ca] : a.terms()) {
        auto it = b.terms().find(m);
        if (it == b.terms().end()) continue;
        mpz_class fact = 1, tmp;
        for (int i = 0; i < n; ++i) {
            mpz_fac_ui(tmp.get_mpz_t(), unsigned(m.xexp(i)));
            fact *= tmp;
            mpz_fac_ui(tmp.get_mpz_t(), unsigned(m.yexp(i)));
            fact *= tmp;
        }
        acc += ca * it->second * mpq_class(fact);
    }
    return acc;
}

MPoly polarize(const MPoly& p, int h, int k) {
    if (h < 0 || k < 0 || h + k < 1) throw domain_error("polarize: need h+k >= 1");
    MPoly r(p.pairs());
    for (int i = 0; i < p.pairs(); ++i) {
        MPoly d = p;
        if (h > 0) d = d.diff_x(i, h);
        if (k > 0) d = d.diff_y(i, k);
        r += d;
    }
    return r;
}

MPoly lattice_determinant(const LatticeDiagram& d) {
    int n = d.size();
    if (n == 0) return MPoly(0, 1);
    if (n > kMaxPairs) throw domain_error("lattice_determinant: too many cells");
    for (auto& c : d.cells())
        if (c.row > kMaxExp || c.col > kMaxExp)
            throw domain_error("lattice_determinant: cell coordinates too large");
    // 1/(p! q!) normalization
    mpz_class fact = 1, tmp;
    for (auto& c : d.cells()) {
        mpz_fac_ui(tmp.get_mpz_t(), unsigned(c.row));
        fact *= tmp;
        mpz_fac_ui(tmp.get_mpz_t(), unsigned(c.col));
        fact *= tmp;
    }
    mpq_class norm = mpq_class(1) / mpq_class(fact);

    MPoly r(n);
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[size_t(i)] = i;
    do {
        // sign of perm
        int sgn = 1;
        {
            std::vector<bool> vis(size_t(n), false);
            for (int i = 0; i < n; ++i) {
                if (vis[size_t(i)]) continue;
                int len = 0, j = i;
                while (!vis[size_t(j)]) {
                    vis[size_t(j)] = true;
                    j = perm[size_t(j)];
                    ++len;
                }
                if (len % 2 == 0) sgn = -sgn;
            }
        }
        Mono m;
        for (int j = 0; j < n; ++j) {
            // row perm[j] of the matrix pairs variable perm[j] with cell j
            const Cell& c = d.cells()[size_t(j)];
            m = m.with_xexp(perm[size_t(j)], c.row);
            m = m.with_yexp(perm[size_t(j)], c.col);
        }
        r.add_term(m, sgn * norm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return r;
}

}  // namespace qtatoms
