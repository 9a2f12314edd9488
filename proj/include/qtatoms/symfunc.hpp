#pragma once
// Symmetric functions of a fixed degree over Q(q,t): the classical bases
// m, e, h, p, s and the modified Macdonald basis, with exact transitions,
// the Hall pairing, the involutions omega and "down", plethystic scalings
// p_k -> phi(q^k,t^k) p_k, and the nabla operator.
//
// Modified Macdonald polynomials are produced by solving the two-sided
// triangularity characterization exactly; K~(lambda,mu) coefficients come
// out as the s-basis coefficients.

#include "qtatoms/diagrams.hpp"
#include "qtatoms/qtfield.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace qtatoms {

enum class SFBasis { m, e, h, p, s, Htilde };

std::string basis_name(SFBasis b);
SFBasis basis_from_name(const std::string& name);

/// All partitions of n in descending lex order ([n] first, [1^n] last).
const std::vector<Partition>& partitions_of(int n);
int partition_index(int n, const Partition& lam);

/// Order of the centralizer of a permutation of cycle type lam.
long z_of(const Partition& lam);
/// Irreducible character chi^lambda evaluated on cycle type rho.
long sym_character(const Partition& lam, const Partition& rho);

class SymFun {
public:
    SymFun() = default;
    SymFun(int degree, SFBasis basis) : degree_(degree), basis_(basis) {}
    static SymFun unit(int degree, SFBasis basis, const Partition& lam,
                       const QTScalar& c = QTScalar(1));

    int degree() const { return degree_; }
    SFBasis basis() const { return basis_; }
    const std::map<Partition, QTScalar>& coeff() const { return coeff_; }
    QTScalar coeff_of(const Partition& lam) const;
    void add(const Partition& lam, const QTScalar& c);
    bool is_zero() const { return coeff_.empty(); }

    SymFun operator-() const;
    SymFun operator+(const SymFun& o) const;
    SymFun operator-(const SymFun& o) const;
    SymFun operator*(const QTScalar& c) const;
    SymFun& operator+=(const SymFun& o) { return *this = *this + o; }
    SymFun& operator-=(const SymFun& o) { return *this = *this - o; }
    bool operator==(const SymFun& o) const;
    bool operator!=(const SymFun& o) const { return !(*this == o); }

    std::string str() const;
    static SymFun parse(const std::string& text);

private:
    int degree_ = 0;
    SFBasis basis_ = SFBasis::s;
    std::map<Partition, QTScalar> coeff_;
};

/// Exact change of basis.  Converting to Htilde requires the Macdonald table
/// for the degree (subject to the degree cap).
SymFun convert(const SymFun& f, SFBasis target);

/// Product (degrees add); computed through the power-sum basis.
SymFun sf_multiply(const SymFun& f, const SymFun& g);

/// d/dp_1 in the power-sum basis; on Schur functions this removes one corner.
SymFun dp1(const SymFun& f);

/// omega: s_lambda -> s_lambda'.
SymFun omega_invol(const SymFun& f);
/// down: omega composed with q -> 1/q, t -> 1/t on coefficients.
SymFun down_invol(const SymFun& f);

/// Multiply the coefficient of p_lambda by prod_i factor(lambda_i).
SymFun plethystic_scale(const SymFun& f, const std::function<QTScalar(int)>& factor);

/// Convenience rules: f[X(1-q)], f[X(1-t)], f[X/(1-q)], f[X/(1-t)].
SymFun pleth_times_1mq(const SymFun& f);
SymFun pleth_times_1mt(const SymFun& f);
SymFun pleth_div_1mq(const SymFun& f);
SymFun pleth_div_1mt(const SymFun& f);

/// Hall inner product (<p_a, p_b> = delta z_a).
QTScalar hall_inner(const SymFun& f, const SymFun& g);

/// Modified Macdonald polynomial in the s-basis.
SymFun htilde(const Partition& mu);
QTScalar ktilde(const Partition& lam, const Partition& mu);
/// All Htilde of a degree, indexed like partitions_of(n).
const std::vector<SymFun>& htilde_table(int n);

/// nabla: eigenoperator with eigenvalue T_mu on Htilde_mu.
SymFun nabla(const SymFun& f);

/// k-th elementary symmetric function of a finite list of scalars.
QTScalar e_alphabet(int k, const std::vector<QTScalar>& monos);

int htilde_degree_cap();
void set_htilde_degree_cap(int cap);
void htilde_cache_clear();

/// Serialization hooks for the cache layer.
std::string htilde_table_serialize(int n);
bool htilde_table_load(int n, const std::string& text);  // false if malformed

}  // namespace qtatoms
