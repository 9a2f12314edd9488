#pragma once
// The q,t-side of the theory as executable symmetric-function constructions:
// Pieri coefficients in product and corner-weight form, the phi
// characteristics attached to predecessor subsets, the conjectured hole
// characteristics C_{mu/ij} (three routes), the four-term recursion, atoms
// and their crucial/flip identities, the refined epsilon-indexed identities,
// the hook suite, and the lattice-diagram polynomial rules of the G_D
// heuristic.

#include "qtatoms/diagrams.hpp"
#include "qtatoms/symfunc.hpp"

#include <string>
#include <vector>

namespace qtatoms {

enum class CoeffForm { product, compact };
enum class CRoute { shadow_pieri, nabla_product, ek_sum };

/// Pieri coefficient c_{mu,nu} for nu a predecessor of mu, either as the
/// arm/leg product over the row and column of the removed corner, or as the
/// corner-weight quotient (both are equal).
QTScalar c_coeff(const Partition& mu, const Partition& nu, CoeffForm form);

struct PieriExpansion {
    Partition base;
    std::vector<std::pair<Partition, QTScalar>> terms;  // predecessor order
    SymFun as_symfun() const;                           // Htilde-basis combination
};

/// Expansion of d/dp1 Htilde_mu over the predecessors of mu.
PieriExpansion dp1_expand(const Partition& mu);

/// phi^(k) attached to a predecessor list S (in Htilde coordinates).
/// k = |S| is the alternating-sum seed; lower k apply (-nabla)^{|S|-k}.
SymFun phi_sf(const std::vector<Partition>& S, int k);

/// Conjectured characteristic of the hole module mu minus c.  All three
/// routes agree; cells outside mu give the zero function of degree |mu|-1.
SymFun conjectured_C(const Partition& mu, Cell c, CRoute route);

/// Four-term recursion residual at c (zero SymFun when the recursion holds).
/// Corner cells degenerate to the boundary identity and return zero.
struct FourTermWitness {
    bool degenerate = false;  // corner cell, nothing to check
    SymFun residual;          // Htilde basis, degree |mu|-1
    bool holds() const { return degenerate || residual.is_zero(); }
};
FourTermWitness four_term_check(const Partition& mu, Cell c);

/// Atom characteristics at a cell: A_x, A_y from the conjectured C's, and
/// the normalized atom Xi = A_x / q^arm = A_y / t^leg (corner-weight form).
struct Atoms {
    SymFun a_x, a_y;  // Htilde basis
    SymFun xi;        // Htilde basis, the closed corner-weight form
    QTScalar q_arm, t_leg, t_hole_weight;
};
Atoms atoms_qt(const Partition& mu, Cell c);

/// Xi via the operator route: product of (1 - nabla u_s / T_{mu/ij}) over the
/// inner corner weights applied to phi^(m).
SymFun xi_operator_route(const Partition& mu, Cell c);

/// Refined identities for an epsilon word with eps_m = 1: the x-side piece,
/// the matching y-side word, and the two residuals (both must vanish).
struct RefinedCheck {
    SymFun fch_x;       // s-basis characteristic of the x-side piece
    SymFun fch_y;       // for the shifted word
    SymFun fch_y_flip;  // for the complemented word
    bool crucial_ok = false;
    bool flip_ok = false;
};
RefinedCheck refined_identities(const Partition& mu, Cell c, const EpsilonWord& eps);

/// Characteristic of one epsilon-piece of the x- or y-atom.
SymFun refined_piece(const Partition& mu, Cell c, const EpsilonWord& word, bool y_side);

struct CheckItem {
    std::string name;
    bool ok = false;
    std::string detail;
};

/// Hook-shape suite for mu = (n+1-k, 1^k): product formulas for the corner
/// atoms, the two dp1 decompositions, the two-term product expansion, the
/// Hilbert-series recursion with F(1,1) = (n+1)!, and the exchange step.
std::vector<CheckItem> hook_suite(int n, int k);

/// Lattice-diagram polynomial checks: the two weighted expansions of
/// dp1 Htilde_mu over normalized atoms for all |mu| <= cap, plus the
/// specific printed instances and their gistol placements.
std::vector<CheckItem> gd_suite(int cap);

/// Residual of the corner-weight interpolation identity at a scalar z
/// (requires prod x_s = prod u_s and pairwise distinct x_s).
QTScalar lemma_1_2_residual(const std::vector<QTScalar>& xs, const std::vector<QTScalar>& us,
                            const QTScalar& z);

/// Same identity with z symbolic (z := q); xs/us must be rational constants.
/// Returns the residual and the z-degree of the right-hand side.
struct Lemma12Symbolic {
    QTScalar residual;
    int rhs_degree = 0;
    bool rhs_is_polynomial = false;
};
Lemma12Symbolic lemma_1_2_symbolic(const std::vector<mpq_class>& xs,
                                   const std::vector<mpq_class>& us_head);

/// t -> 1/q specialization of the Pieri coefficient against the hook-length
/// ratio form (returns true when they agree).
bool pieri_hook_ratio_check(const Partition& tau, const Partition& rho);

/// Rectangles of cells whose shadows contain the same corner set.
std::vector<std::vector<Cell>> shadow_rectangles(const Partition& mu);

}  // namespace qtatoms
