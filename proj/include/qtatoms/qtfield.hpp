#pragma once
// Exact arithmetic in Z[q,t] and its fraction field Q(q,t).
//
// QTScalar keeps a unique canonical form (gcd-reduced, denominator with
// positive leading coefficient in the fixed monomial order), so structural
// equality is field equality.  This is the coefficient field for all
// symmetric-function computations in this project.

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace qtatoms {

struct qt_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Evaluation at a point where the reduced denominator vanishes.
struct pole_error : qt_error {
    using qt_error::qt_error;
};

/// Sparse polynomial in q,t with arbitrary-precision integer coefficients.
/// Exponents are >= 0.  Terms are keyed by (q-exponent, t-exponent); the
/// lexicographically largest key is the leading term.
class QTPoly {
public:
    using Key = std::pair<int, int>;  // (q exponent, t exponent)
    using TermMap = std::map<Key, mpz_class>;

    QTPoly() = default;
    QTPoly(long c);
    explicit QTPoly(const mpz_class& c);

    static QTPoly monomial(mpz_class c, int q_exp, int t_exp);
    static QTPoly q();
    static QTPoly t();

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }

    int deg_q() const;  // -1 for zero polynomial
    int deg_t() const;
    int min_deg_q() const;
    int min_deg_t() const;

    const TermMap& terms() const { return terms_; }
    mpz_class coeff(int q_exp, int t_exp) const;
    /// Coefficient of the lex-largest (q,t) key; 0 for the zero polynomial.
    mpz_class leading_coeff() const;

    QTPoly operator-() const;
    QTPoly operator+(const QTPoly& o) const;
    QTPoly operator-(const QTPoly& o) const;
    QTPoly operator*(const QTPoly& o) const;
    QTPoly& operator+=(const QTPoly& o);
    QTPoly& operator-=(const QTPoly& o);
    QTPoly& operator*=(const QTPoly& o);
    bool operator==(const QTPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const QTPoly& o) const { return !(*this == o); }
    bool operator<(const QTPoly& o) const { return terms_ < o.terms_; }

    QTPoly pow(int k) const;  // k >= 0

    /// Exact division; throws qt_error if the division is not exact.
    QTPoly divexact(const QTPoly& d) const;
    /// GCD, normalized to positive leading integer coefficient.
    static QTPoly gcd(const QTPoly& a, const QTPoly& b);

    QTPoly swap_qt() const;                      // q <-> t
    QTPoly shift(int dq, int dt) const;          // multiply by q^dq t^dt (result exps must stay >= 0)
    mpq_class eval(const mpq_class& q0, const mpq_class& t0) const;

    std::string str() const;

    void add_term(int q_exp, int t_exp, const mpz_class& c);

private:
    TermMap terms_;
};

/// Canonical fraction of two QTPoly.  den != 0 always; gcd(num,den) = 1 and
/// the leading integer coefficient of den is positive, so operator== is
/// mathematical equality.
class QTScalar {
public:
    QTScalar() : num_(), den_(1) {}
    QTScalar(long c) : num_(c), den_(1) {}
    QTScalar(const mpz_class& c) : num_(c), den_(1) {}
    QTScalar(const mpq_class& c);
    explicit QTScalar(QTPoly num) : num_(std::move(num)), den_(1) {}
    QTScalar(QTPoly num, QTPoly den);

    static QTScalar q() { return QTScalar(QTPoly::q()); }
    static QTScalar t() { return QTScalar(QTPoly::t()); }
    /// q^a t^b with possibly negative (Laurent) exponents.
    static QTScalar monomial(int q_exp, int t_exp, mpz_class c = 1);
    static QTScalar parse(const std::string& text);

    const QTPoly& num() const { return num_; }
    const QTPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_one() && num_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    QTScalar operator-() const;
    QTScalar operator+(const QTScalar& o) const;
    QTScalar operator-(const QTScalar& o) const;
    QTScalar operator*(const QTScalar& o) const;
    QTScalar operator/(const QTScalar& o) const;  // throws qt_error on /0
    QTScalar& operator+=(const QTScalar& o) { return *this = *this + o; }
    QTScalar& operator-=(const QTScalar& o) { return *this = *this - o; }
    QTScalar& operator*=(const QTScalar& o) { return *this = *this * o; }
    QTScalar& operator/=(const QTScalar& o) { return *this = *this / o; }
    bool operator==(const QTScalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const QTScalar& o) const { return !(*this == o); }
    bool operator<(const QTScalar& o) const;  // arbitrary total order (for containers)

    QTScalar inverse() const;
    QTScalar pow(int k) const;  // any integer k

    QTScalar subst_invert() const;    // q -> 1/q, t -> 1/t
    QTScalar subst_swap() const;      // q <-> t
    QTScalar subst_t_to_qinv() const; // t -> 1/q (result involves q only)

    /// Exact evaluation; throws pole_error when the *reduced* denominator
    /// vanishes at the point (no limits are taken).
    mpq_class eval_at(const mpq_class& q0, const mpq_class& t0) const;

    std::string str() const;

private:
    void normalize();
    QTPoly num_, den_;
};

QTScalar normalize(QTPoly num, QTPoly den);

}  // namespace qtatoms
