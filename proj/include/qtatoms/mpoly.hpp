#pragma once
// Sparse polynomials over exact rationals in x_1..x_n, y_1..y_n, with the
// differential-operator machinery of the lattice-module theory: partial
// derivatives, P(dx;dy)Q, the apolar pairing <P,Q> = P(d)Q|_0, the diagonal
// symmetric-group action, and the polarization operators D_x, D_y, D_hk.
//
// Monomials are packed into 64 bits (n <= 8 variable pairs, exponents <= 15);
// the global order is graded, ties broken by the packed key with y_n most
// significant.  This order fixes every pivot choice downstream.

#include "qtatoms/diagrams.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qtatoms {

constexpr int kMaxPairs = 8;
constexpr int kMaxExp = 15;

/// Packed exponent vector: nibble i = exponent of x_{i+1}, nibble 8+i = y_{i+1}.
struct Mono {
    uint64_t bits = 0;

    static Mono one() { return Mono{}; }
    int xexp(int i) const { return int((bits >> (4 * i)) & 0xFull); }          // 0-based
    int yexp(int i) const { return int((bits >> (4 * (8 + i))) & 0xFull); }
    Mono with_xexp(int i, int e) const;
    Mono with_yexp(int i, int e) const;
    int xdeg() const;
    int ydeg() const;
    int total() const { return xdeg() + ydeg(); }

    bool operator==(const Mono&) const = default;
};

/// Graded order, ties by packed key.  Used for leading monomials and pivots.
struct MonoLess {
    bool operator()(const Mono& a, const Mono& b) const {
        int ta = a.total(), tb = b.total();
        if (ta != tb) return ta < tb;
        return a.bits < b.bits;
    }
};

class MPoly {
public:
    using TermMap = std::map<Mono, mpq_class, MonoLess>;

    MPoly() = default;
    explicit MPoly(int n) : n_(check_pairs(n)) {}
    MPoly(int n, const mpq_class& c);

    static MPoly monomial(int n, Mono m, const mpq_class& c);
    static MPoly var_x(int n, int i);  // x_{i+1}, 0-based index
    static MPoly var_y(int n, int i);

    int pairs() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    mpq_class coeff(Mono m) const;
    Mono leading_monomial() const;        // largest in the global order
    mpq_class leading_coeff() const;
    std::pair<int, int> bidegree() const;  // (x-degree, y-degree); requires bihomogeneous
    bool is_bihomogeneous() const;

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator*(const mpq_class& c) const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    bool operator==(const MPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    void add_term(Mono m, const mpq_class& c);

    /// Partial derivative of given order in x_i or y_i (0-based i).
    MPoly diff_x(int i, int order = 1) const;
    MPoly diff_y(int i, int order = 1) const;

    /// Substitute x_i -> sigma maps variable index i to sigma[i] (0-based),
    /// simultaneously on x and y.
    MPoly diagonal_act(const std::vector<int>& sigma) const;

    /// Set x_n = y_n = 0 and drop the last variable pair.
    MPoly restrict_last_zero() const;
    /// Reinterpret with a larger number of pairs.
    MPoly promote(int n) const;

    std::string str() const;
    static MPoly parse(int n, const std::string& text);

private:
    static int check_pairs(int n);
    int n_ = 0;
    TermMap terms_;
};

/// P(dx;dy) Q
MPoly apply_operator(const MPoly& p, const MPoly& q);
/// <P,Q> = P(dx;dy)Q evaluated at 0; monomials are orthogonal with
/// <x^p y^q, x^p y^q> = p! q!.
mpq_class apolar(const MPoly& p, const MPoly& q);
/// D_hk = sum_i dx_i^h dy_i^k; h=k=0 is rejected.
MPoly polarize(const MPoly& p, int h, int k);

/// Lattice determinant of a diagram with n distinct cells:
/// det || x_i^{p_j} y_i^{q_j} || / (p! q!) with cells listed in increasing
/// lex order.  Bihomogeneous, alternating under the diagonal action.
MPoly lattice_determinant(const LatticeDiagram& d);

}  // namespace qtatoms
