#pragma once
// Brute-force construction of the bigraded modules spanned by derivatives of
// lattice determinants: per-bidegree echelonized bases, Hilbert series,
// symmetric-group characters and Frobenius characteristics, subspace algebra
// (sum, intersection, orthogonal complement under the apolar pairing), flip
// maps, kernels of the polarization operators and their atom characteristics.

#include "qtatoms/mpoly.hpp"
#include "qtatoms/symfunc.hpp"

#include <map>
#include <optional>
#include <vector>

namespace qtatoms {

/// Reduced row-echelon basis of one bihomogeneous component.  Rows are monic
/// with distinct leading monomials and are mutually reduced, so coordinates
/// of a member can be read off at the leading monomials.
class EchelonBasis {
public:
    bool insert(MPoly v);  // returns true if the dimension grew
    int dim() const { return int(rows_.size()); }
    const std::vector<MPoly>& rows() const { return rows_; }
    /// Coordinates in the row basis; nullopt if v is outside the span.
    std::optional<std::vector<mpq_class>> coords(const MPoly& v) const;
    bool contains(const MPoly& v) const { return coords(v).has_value(); }

private:
    std::vector<MPoly> rows_;               // sorted by leading monomial, descending
    std::map<Mono, int, MonoLess> lead_;    // leading monomial -> row index
};

/// Map bidegree (xdeg, ydeg) -> echelon basis.
class BigradedBasis {
public:
    explicit BigradedBasis(int pairs = 0) : pairs_(pairs) {}

    int pairs() const { return pairs_; }
    bool insert(const MPoly& v);  // dispatch on bidegree; v must be bihomogeneous
    int dim() const;
    int dim_at(int r, int s) const;
    const std::map<std::pair<int, int>, EchelonBasis>& components() const { return comp_; }
    const EchelonBasis* component(int r, int s) const;
    bool contains(const MPoly& v) const;  // v bihomogeneous
    bool contains_all(const BigradedBasis& sub) const;

    std::string serialize() const;
    static BigradedBasis deserialize(const std::string& text);

private:
    int pairs_ = 0;
    std::map<std::pair<int, int>, EchelonBasis> comp_;
};

/// Span of all partial derivatives of P, organized by bidegree.
BigradedBasis derivative_span(const MPoly& p);

/// Bigraded Hilbert series: sum over bidegrees of t^xdeg q^ydeg dim.
QTPoly hilbert(const BigradedBasis& b);

/// Schur multiplicities per bidegree.
struct FrobSeries {
    int n = 0;  // symmetric group size
    std::map<std::pair<int, int>, std::map<Partition, long>> comp;

    /// Sum over bidegrees of t^r q^s times the Schur expansion.
    SymFun characteristic() const;
    QTPoly hilbert_from_multiplicities() const;
    bool operator==(const FrobSeries& o) const { return n == o.n && comp == o.comp; }
};

/// Frobenius characteristic of an invariant bigraded subspace.  Checks
/// invariance under the diagonal action and integrality/nonnegativity of all
/// multiplicities.
FrobSeries frobenius(const BigradedBasis& b);

// ------------------------------------------------------- subspace algebra ---

BigradedBasis subspace_sum(const BigradedBasis& a, const BigradedBasis& b);
BigradedBasis subspace_intersect(const BigradedBasis& a, const BigradedBasis& b);
/// { v in ambient : <v, s> = 0 for all s in sub }, componentwise.
BigradedBasis perp_within(const BigradedBasis& ambient, const BigradedBasis& sub);
/// { P(dx;dy) Delta : P in sub }.
BigradedBasis flip_image(const MPoly& delta, const BigradedBasis& sub);
/// Solve flip(P) = v for P within span; nullopt if v is not in the flip image.
std::optional<MPoly> flip_preimage(const MPoly& delta, const BigradedBasis& span,
                                   const MPoly& v);

/// Kernel of D_x (axis=false) or D_y (axis=true) acting on b.
BigradedBasis polarization_kernel(const BigradedBasis& b, bool y_axis);

/// M_S^T for S a list of predecessors of mu and T a subset (by index):
/// (intersection over T) cap orthogonal complement of
/// ((sum over S-T) cap (intersection over T)).
BigradedBasis m_s_t(const Partition& mu, const std::vector<Partition>& S,
                    const std::vector<int>& T_indices);

/// Basis of the sign-isotypic (alternant) subspace, componentwise.
BigradedBasis alternant_basis(const BigradedBasis& b);

/// Kernel and atom characteristic for the hole module of mu at cell c:
/// K = ker(D) on the span of derivatives of Delta_{mu/c}; the atom is the
/// characteristic of K minus that of the nested kernel one step along the
/// axis.  Returns both (kernel basis, atom characteristic as SymFun).
struct KernelAtom {
    BigradedBasis kernel;
    SymFun atom;  // s-basis with q,t coefficients
};
KernelAtom kernel_and_atom(const Partition& mu, Cell c, bool y_axis);

/// Derivative span of the hole diagram mu minus c (memoized internally).
const BigradedBasis& hole_module(const Partition& mu, Cell c);
const BigradedBasis& partition_module(const Partition& mu);
void clear_module_cache();

/// Representative permutation of a cycle type (0-based images).
std::vector<int> cycle_type_representative(const Partition& rho);

}  // namespace qtatoms
