#include "qtatoms/qtfield.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace qtatoms {

// ---------------------------------------------------------------- QTPoly ---

QTPoly::QTPoly(long c) {
    if (c != 0) terms_[{0, 0}] = c;
}

QTPoly::QTPoly(const mpz_class& c) {
    if (c != 0) terms_[{0, 0}] = c;
}

QTPoly QTPoly::monomial(mpz_class c, int q_exp, int t_exp) {
    QTPoly p;
    if (c != 0) {
        if (q_exp < 0 || t_exp < 0) throw qt_error("QTPoly::monomial: negative exponent");
        p.terms_[{q_exp, t_exp}] = std::move(c);
    }
    return p;
}

QTPoly QTPoly::q() { return monomial(1, 1, 0); }
QTPoly QTPoly::t() { return monomial(1, 0, 1); }

bool QTPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Key{0, 0} &&
           terms_.begin()->second == 1;
}

int QTPoly::deg_q() const {
    int d = -1;
    for (auto& [k, c] : terms_) d = std::max(d, k.first);
    return d;
}

int QTPoly::deg_t() const {
    int d = -1;
    for (auto& [k, c] : terms_) d = std::max(d, k.second);
    return d;
}

int QTPoly::min_deg_q() const {
    int d = -1;
    for (auto& [k, c] : terms_) d = (d < 0) ? k.first : std::min(d, k.first);
    return d;
}

int QTPoly::min_deg_t() const {
    int d = -1;
    for (auto& [k, c] : terms_) d = (d < 0) ? k.second : std::min(d, k.second);
    return d;
}

mpz_class QTPoly::coeff(int q_exp, int t_exp) const {
    auto it = terms_.find({q_exp, t_exp});
    return it == terms_.end() ? mpz_class(0) : it->second;
}

mpz_class QTPoly::leading_coeff() const {
    if (terms_.empty()) return 0;
    return terms_.rbegin()->second;
}

void QTPoly::add_term(int q_exp, int t_exp, const mpz_class& c) {
    if (c == 0) return;
    if (q_exp < 0 || t_exp < 0) throw qt_error("QTPoly::add_term: negative exponent");
    auto it = terms_.find({q_exp, t_exp});
    if (it == terms_.end()) {
        terms_[{q_exp, t_exp}] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

QTPoly QTPoly::operator-() const {
    QTPoly r;
    for (auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

QTPoly& QTPoly::operator+=(const QTPoly& o) {
    for (auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

QTPoly& QTPoly::operator-=(const QTPoly& o) {
    for (auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

QTPoly QTPoly::operator+(const QTPoly& o) const {
    QTPoly r = *this;
    r += o;
    return r;
}

QTPoly QTPoly::operator-(const QTPoly& o) const {
    QTPoly r = *this;
    r -= o;
    return r;
}

QTPoly QTPoly::operator*(const QTPoly& o) const {
    QTPoly r;
    for (auto& [ka, ca] : terms_)
        for (auto& [kb, cb] : o.terms_)
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

QTPoly& QTPoly::operator*=(const QTPoly& o) { return *this = *this * o; }

QTPoly QTPoly::pow(int k) const {
    if (k < 0) throw qt_error("QTPoly::pow: negative exponent");
    QTPoly r(1), b = *this;
    while (k > 0) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

QTPoly QTPoly::divexact(const QTPoly& d) const {
    if (d.is_zero()) throw qt_error("QTPoly::divexact: division by zero");
    QTPoly r = *this, quot;
    const auto& dlead = *d.terms().rbegin();
    while (!r.is_zero()) {
        const auto& rlead = *r.terms().rbegin();
        int dq = rlead.first.first - dlead.first.first;
        int dt = rlead.first.second - dlead.first.second;
        if (dq < 0 || dt < 0) throw qt_error("QTPoly::divexact: not divisible");
        mpz_class c = rlead.second / dlead.second;
        if (c * dlead.second != rlead.second) throw qt_error("QTPoly::divexact: not divisible");
        QTPoly m = monomial(c, dq, dt);
        quot += m;
        r -= m * d;
    }
    return quot;
}

QTPoly QTPoly::swap_qt() const {
    QTPoly r;
    for (auto& [k, c] : terms_) r.terms_[{k.second, k.first}] = c;
    return r;
}

QTPoly QTPoly::shift(int dq, int dt) const {
    QTPoly r;
    for (auto& [k, c] : terms_) {
        int nq = k.first + dq, nt = k.second + dt;
        if (nq < 0 || nt < 0) throw qt_error("QTPoly::shift: negative exponent");
        r.terms_[{nq, nt}] = c;
    }
    return r;
}

mpq_class QTPoly::eval(const mpq_class& q0, const mpq_class& t0) const {
    // Horner in t within groups of equal q-exponent would be overkill here.
    mpq_class acc = 0;
    for (auto& [k, c] : terms_) {
        mpq_class term(c);
        mpq_class qp = 1, tp = 1;
        for (int i = 0; i < k.first; ++i) qp *= q0;
        for (int i = 0; i < k.second; ++i) tp *= t0;
        term *= qp;
        term *= tp;
        acc += term;
    }
    return acc;
}

std::string QTPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // highest terms first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        mpz_class c = it->second;
        bool neg = c < 0;
        mpz_class a = neg ? mpz_class(-c) : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        int qe = it->first.first, te = it->first.second;
        bool needs_coeff = (a != 1) || (qe == 0 && te == 0);
        if (needs_coeff) os << a.get_str();
        bool star = needs_coeff;
        if (qe > 0) {
            if (star) os << "*";
            os << "q";
            if (qe > 1) os << "^" << qe;
            star = true;
        }
        if (te > 0) {
            if (star) os << "*";
            os << "t";
            if (te > 1) os << "^" << te;
        }
    }
    return os.str();
}

// --------------------------------------------------------- bivariate gcd ---
// Primitive PRS in t with coefficients in Z[q]; Z[q] gcd is itself a
// primitive PRS over Z.

namespace {

using Zq = std::vector<mpz_class>;  // dense univariate in q

void zq_trim(Zq& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

bool zq_is_zero(const Zq& a) { return a.empty(); }

Zq zq_mul(const Zq& a, const Zq& b) {
    if (a.empty() || b.empty()) return {};
    Zq r(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    zq_trim(r);
    return r;
}

Zq zq_sub(const Zq& a, const Zq& b) {
    Zq r = a;
    if (r.size() < b.size()) r.resize(b.size(), mpz_class(0));
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    zq_trim(r);
    return r;
}

Zq zq_scale(const Zq& a, const mpz_class& c) {
    if (c == 0) return {};
    Zq r = a;
    for (auto& x : r) x *= c;
    return r;
}

mpz_class zq_content(const Zq& a) {
    mpz_class g = 0;
    for (auto& x : a) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Zq zq_divexact_int(const Zq& a, const mpz_class& c) {
    Zq r = a;
    for (auto& x : r) {
        mpz_class qq = x / c;
        if (qq * c != x) throw qt_error("zq_divexact_int: not divisible");
        x = qq;
    }
    return r;
}

// exact division of polynomials in Z[q]
Zq zq_divexact(const Zq& a, const Zq& b) {
    if (zq_is_zero(b)) throw qt_error("zq_divexact: /0");
    Zq r = a, quot;
    if (zq_is_zero(a)) return {};
    if (a.size() < b.size()) throw qt_error("zq_divexact: not divisible");
    quot.assign(a.size() - b.size() + 1, mpz_class(0));
    while (!zq_is_zero(r)) {
        if (r.size() < b.size()) throw qt_error("zq_divexact: not divisible");
        mpz_class c = r.back() / b.back();
        if (c * b.back() != r.back()) throw qt_error("zq_divexact: not divisible");
        size_t sh = r.size() - b.size();
        quot[sh] = c;
        Zq sub(sh, mpz_class(0));
        sub.insert(sub.end(), b.begin(), b.end());
        r = zq_sub(r, zq_scale(sub, c));
    }
    zq_trim(quot);
    return quot;
}

// primitive PRS gcd over Z[q], result primitive with positive leading coeff
Zq zq_gcd(Zq a, Zq b) {
    zq_trim(a);
    zq_trim(b);
    if (zq_is_zero(a)) std::swap(a, b);
    if (zq_is_zero(b)) {
        if (zq_is_zero(a)) return {};
        if (a.back() < 0) a = zq_scale(a, mpz_class(-1));
        return a;
    }
    mpz_class ca = zq_content(a), cb = zq_content(b), g;
    mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    a = zq_divexact_int(a, ca);
    b = zq_divexact_int(b, cb);
    if (a.size() < b.size()) std::swap(a, b);
    while (!zq_is_zero(b)) {
        // pseudo remainder: lb * r - lead(r) * x^shift * b until deg drops
        mpz_class lb = b.back();
        Zq r = a;
        while (!zq_is_zero(r) && r.size() >= b.size()) {
            size_t sh = r.size() - b.size();
            Zq sub(sh, mpz_class(0));
            sub.insert(sub.end(), b.begin(), b.end());
            r = zq_sub(zq_scale(r, lb), zq_scale(sub, r.back()));
        }
        a = b;
        b = r;
        if (!zq_is_zero(b)) {
            mpz_class c = zq_content(b);
            if (b.back() < 0) c = -c;
            b = zq_divexact_int(b, c);
        }
    }
    Zq res = a;
    mpz_class c = g;
    if (res.back() < 0) res = zq_scale(res, mpz_class(-1));
    return zq_scale(res, c >= 0 ? c : mpz_class(-c));
}

// dense in t, coefficients in Z[q]
using Biv = std::vector<Zq>;

void biv_trim(Biv& a) {
    while (!a.empty() && zq_is_zero(a.back())) a.pop_back();
}

Biv to_biv(const QTPoly& p) {
    Biv r(size_t(p.deg_t() + 1));
    for (auto& [k, c] : p.terms()) {
        Zq& row = r[size_t(k.second)];
        if (row.size() <= size_t(k.first)) row.resize(size_t(k.first) + 1, mpz_class(0));
        row[size_t(k.first)] = c;
    }
    for (auto& row : r) zq_trim(row);
    return r;
}

QTPoly from_biv(const Biv& a) {
    QTPoly p;
    for (size_t te = 0; te < a.size(); ++te)
        for (size_t qe = 0; qe < a[te].size(); ++qe)
            if (a[te][qe] != 0) p.add_term(int(qe), int(te), a[te][qe]);
    return p;
}

Zq biv_content(const Biv& a) {
    Zq g;
    for (auto& row : a)
        if (!zq_is_zero(row)) g = zq_gcd(g, row);
    return g;
}

Biv biv_divexact_zq(const Biv& a, const Zq& d) {
    Biv r = a;
    for (auto& row : r)
        if (!zq_is_zero(row)) row = zq_divexact(row, d);
    return r;
}

Biv biv_mul_zq(const Biv& a, const Zq& c) {
    Biv r = a;
    for (auto& row : r) row = zq_mul(row, c);
    return r;
}

Biv biv_sub(const Biv& a, const Biv& b) {
    Biv r = a;
    if (r.size() < b.size()) r.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) r[i] = zq_sub(r[i], b[i]);
    biv_trim(r);
    return r;
}

Biv biv_shift_t(const Biv& a, size_t k) {
    Biv r(k);
    r.insert(r.end(), a.begin(), a.end());
    return r;
}

}  // namespace

QTPoly QTPoly::gcd(const QTPoly& pa, const QTPoly& pb) {
    if (pa.is_zero() && pb.is_zero()) return QTPoly();
    if (pa.is_zero() || pb.is_zero()) {
        const QTPoly& nz = pa.is_zero() ? pb : pa;
        Biv b = to_biv(nz);
        Zq cont = biv_content(b);
        QTPoly r = from_biv(biv_divexact_zq(b, cont));
        QTPoly cp;
        for (size_t i = 0; i < cont.size(); ++i)
            if (cont[i] != 0) cp.add_term(int(i), 0, cont[i]);
        QTPoly res = r * cp;
        if (res.leading_coeff() < 0) res = -res;
        return res;
    }
    // fast path: monomial gcd
    if (pa.is_monomial() || pb.is_monomial()) {
        int qe = std::min(pa.min_deg_q(), pb.min_deg_q());
        int te = std::min(pa.min_deg_t(), pb.min_deg_t());
        mpz_class ca = 0, cb = 0, g;
        for (auto& [k, c] : pa.terms()) mpz_gcd(ca.get_mpz_t(), ca.get_mpz_t(), c.get_mpz_t());
        for (auto& [k, c] : pb.terms()) mpz_gcd(cb.get_mpz_t(), cb.get_mpz_t(), c.get_mpz_t());
        mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        return monomial(g, qe, te);
    }
    Biv a = to_biv(pa), b = to_biv(pb);
    Zq ca = biv_content(a), cb = biv_content(b);
    a = biv_divexact_zq(a, ca);
    b = biv_divexact_zq(b, cb);
    Zq gcont = zq_gcd(ca, cb);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        // pseudo remainder in t: lb * r - lead(r) * t^shift * b until deg drops
        Zq lb = b.back();
        Biv r = a;
        while (!r.empty() && r.size() >= b.size()) {
            Biv sub = biv_shift_t(biv_mul_zq(b, r.back()), r.size() - b.size());
            r = biv_sub(biv_mul_zq(r, lb), sub);
        }
        a = b;
        b = r;
        if (!b.empty()) {
            Zq c = biv_content(b);
            b = biv_divexact_zq(b, c);
        }
    }
    Zq acont = biv_content(a);
    a = biv_divexact_zq(a, acont);
    QTPoly pp = from_biv(a);
    QTPoly cp;
    for (size_t i = 0; i < gcont.size(); ++i)
        if (gcont[i] != 0) cp.add_term(int(i), 0, gcont[i]);
    QTPoly res = pp * cp;
    if (res.leading_coeff() < 0) res = -res;
    return res;
}

// -------------------------------------------------------------- QTScalar ---

QTScalar::QTScalar(const mpq_class& c) {
    mpq_class cc = c;
    cc.canonicalize();
    num_ = QTPoly(mpz_class(cc.get_num()));
    den_ = QTPoly(mpz_class(cc.get_den()));
}

QTScalar::QTScalar(QTPoly num, QTPoly den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

QTScalar normalize(QTPoly num, QTPoly den) { return QTScalar(std::move(num), std::move(den)); }

void QTScalar::normalize() {
    if (den_.is_zero()) throw qt_error("QTScalar: zero denominator");
    if (num_.is_zero()) {
        den_ = QTPoly(1);
        return;
    }
    QTPoly g = QTPoly::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_.divexact(g);
        den_ = den_.divexact(g);
    }
    if (den_.leading_coeff() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

QTScalar QTScalar::monomial(int q_exp, int t_exp, mpz_class c) {
    QTPoly n = QTPoly::monomial(std::move(c), std::max(q_exp, 0), std::max(t_exp, 0));
    QTPoly d = QTPoly::monomial(1, std::max(-q_exp, 0), std::max(-t_exp, 0));
    return QTScalar(std::move(n), std::move(d));
}

QTScalar QTScalar::operator-() const {
    QTScalar r = *this;
    r.num_ = -r.num_;
    return r;
}

QTScalar QTScalar::operator+(const QTScalar& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_.is_one() && o.den_.is_one()) {
        QTScalar r;
        r.num_ = num_ + o.num_;
        r.den_ = QTPoly(1);
        return r;
    }
    QTPoly g = QTPoly::gcd(den_, o.den_);
    QTPoly db = den_.divexact(g), dd = o.den_.divexact(g);
    return QTScalar(num_ * dd + o.num_ * db, db * o.den_);
}

QTScalar QTScalar::operator-(const QTScalar& o) const { return *this + (-o); }

QTScalar QTScalar::operator*(const QTScalar& o) const {
    if (is_zero() || o.is_zero()) return QTScalar();
    QTPoly g1 = QTPoly::gcd(num_, o.den_);
    QTPoly g2 = QTPoly::gcd(o.num_, den_);
    QTPoly n1 = num_.divexact(g1), d2 = o.den_.divexact(g1);
    QTPoly n2 = o.num_.divexact(g2), d1 = den_.divexact(g2);
    QTScalar r;
    r.num_ = n1 * n2;
    r.den_ = d1 * d2;
    if (r.den_.leading_coeff() < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

QTScalar QTScalar::inverse() const {
    if (is_zero()) throw qt_error("QTScalar::inverse: zero");
    QTScalar r;
    r.num_ = den_;
    r.den_ = num_;
    if (r.den_.leading_coeff() < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

QTScalar QTScalar::operator/(const QTScalar& o) const {
    if (o.is_zero()) throw qt_error("QTScalar: division by zero");
    return *this * o.inverse();
}

bool QTScalar::operator<(const QTScalar& o) const {
    if (num_ != o.num_) return num_ < o.num_;
    return den_ < o.den_;
}

QTScalar QTScalar::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    QTScalar r(1), b = *this;
    while (k > 0) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

QTScalar QTScalar::subst_invert() const {
    auto rev = [](const QTPoly& p, int dq, int dt) {
        QTPoly r;
        for (auto& [k, c] : p.terms()) r.add_term(dq - k.first, dt - k.second, c);
        return r;
    };
    if (is_zero()) return *this;
    int dqn = num_.deg_q(), dtn = num_.deg_t();
    int dqd = den_.deg_q(), dtd = den_.deg_t();
    // f(1/q,1/t) = rev(num) * q^(dqd-dqn) t^(dtd-dtn) / rev(den)
    QTPoly n = rev(num_, dqn, dtn), d = rev(den_, dqd, dtd);
    int sq = dqd - dqn, st = dtd - dtn;
    if (sq > 0) n = n.shift(sq, 0); else if (sq < 0) d = d.shift(-sq, 0);
    if (st > 0) n = n.shift(0, st); else if (st < 0) d = d.shift(0, -st);
    return QTScalar(std::move(n), std::move(d));
}

QTScalar QTScalar::subst_swap() const {
    QTScalar r;
    r.num_ = num_.swap_qt();
    r.den_ = den_.swap_qt();
    if (r.den_.leading_coeff() < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    // swapping keys can change the gcd representative's sign only
    return QTScalar(r.num_, r.den_);
}

QTScalar QTScalar::subst_t_to_qinv() const {
    // every monomial q^a t^b becomes q^(a-b); clear the common negative power
    auto conv = [](const QTPoly& p, int& minexp) {
        std::map<int, mpz_class> acc;
        minexp = 0;
        for (auto& [k, c] : p.terms()) {
            int e = k.first - k.second;
            acc[e] += c;
            minexp = std::min(minexp, e);
        }
        return acc;
    };
    int mn = 0, md = 0;
    auto an = conv(num_, mn), ad = conv(den_, md);
    int shift = -std::min(mn, md);
    QTPoly n, d;
    for (auto& [e, c] : an) if (c != 0) n.add_term(e + shift, 0, c);
    for (auto& [e, c] : ad) if (c != 0) d.add_term(e + shift, 0, c);
    return QTScalar(std::move(n), std::move(d));
}

mpq_class QTScalar::eval_at(const mpq_class& q0, const mpq_class& t0) const {
    mpq_class d = den_.eval(q0, t0);
    if (d == 0) throw pole_error("QTScalar::eval_at: pole at the evaluation point");
    mpq_class n = num_.eval(q0, t0);
    mpq_class r = n / d;
    r.canonicalize();
    return r;
}

std::string QTScalar::str() const {
    if (den_.is_one()) return num_.str();
    std::ostringstream os;
    if (num_.terms().size() > 1) os << "(" << num_.str() << ")";
    else os << num_.str();
    os << "/(" << den_.str() << ")";
    return os.str();
}

// ----------------------------------------------------------------- parser ---

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }

    QTScalar parse_expr() {
        QTScalar r = parse_term();
        for (;;) {
            if (eat('+')) r += parse_term();
            else if (eat('-')) r -= parse_term();
            else return r;
        }
    }
    QTScalar parse_term() {
        QTScalar r = parse_factor();
        for (;;) {
            if (eat('*')) r *= parse_factor();
            else if (eat('/')) r /= parse_factor();
            else {
                // implicit multiplication, e.g. "2q" or "q t"
                char c = peek();
                if (c == 'q' || c == 't' || c == '(' ||
                    std::isdigit(static_cast<unsigned char>(c)))
                    r *= parse_factor();
                else
                    return r;
            }
        }
    }
    QTScalar parse_factor() {
        bool neg = false;
        while (eat('-')) neg = !neg;
        QTScalar base = parse_base();
        if (eat('^')) {
            bool eneg = eat('-');
            long e = parse_int();
            base = base.pow(int(eneg ? -e : e));
        }
        return neg ? -base : base;
    }
    long parse_int() {
        skip();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw qt_error("QTScalar::parse: expected integer at '" + s.substr(start) + "'");
        return std::stol(s.substr(start, pos - start));
    }
    QTScalar parse_base() {
        char c = peek();
        if (c == '(') {
            eat('(');
            QTScalar r = parse_expr();
            if (!eat(')')) throw qt_error("QTScalar::parse: missing ')'");
            return r;
        }
        if (c == 'q') {
            ++pos;
            return QTScalar::q();
        }
        if (c == 't') {
            ++pos;
            return QTScalar::t();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            skip();
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            mpz_class v(s.substr(start, pos - start));
            return QTScalar(v);
        }
        throw qt_error("QTScalar::parse: unexpected character '" + std::string(1, c) + "'");
    }
};

}  // namespace

QTScalar QTScalar::parse(const std::string& text) {
    Parser p(text);
    QTScalar r = p.parse_expr();
    p.skip();
    if (p.pos != text.size()) throw qt_error("QTScalar::parse: trailing input");
    return r;
}

}  // namespace qtatoms
