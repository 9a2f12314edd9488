#include "qtatoms/pieri.hpp"

#include <algorithm>
#include <sstream>

namespace qtatoms {

namespace {

QTScalar qt_M() {  // (1 - 1/t)(1 - 1/q)
    QTScalar one(1);
    return (one - QTScalar::monomial(0, -1)) * (one - QTScalar::monomial(-1, 0));
}

/// The cell removed from mu to reach predecessor nu.
Cell removed_corner(const Partition& mu, const Partition& nu) {
    for (auto& c : mu.corners())
        if (mu.remove_corner(c) == nu) return c;
    throw domain_error("removed_corner: " + nu.str() + " is not a predecessor of " + mu.str());
}

/// mu with the shadow shape of c replaced by rho (rho a partition inside it).
Partition replace_shadow(const Partition& mu, Cell c, const Partition& rho) {
    ShadowFrame f = shadow(mu, c);
    std::vector<int> parts;
    for (int r = 0; r < mu.length(); ++r) {
        int inside = r - c.row;  // row index within the shadow
        int len;
        if (inside >= 0 && inside < f.tau.length()) {
            len = c.col + rho.part(inside);
        } else {
            len = mu.part(r);
        }
        if (len > 0) parts.push_back(len);
    }
    std::sort(parts.rbegin(), parts.rend());
    return Partition(parts);
}

}  // namespace

// ----------------------------------------------------------------- c_coeff ---

QTScalar c_coeff(const Partition& mu, const Partition& nu, CoeffForm form) {
    auto preds = predecessors(mu);
    auto pos = std::find(preds.begin(), preds.end(), nu);
    if (pos == preds.end()) throw domain_error("c_coeff: nu is not a predecessor of mu");

    if (form == CoeffForm::product) {
        Cell rc = removed_corner(mu, nu);
        QTScalar r(1);
        for (auto& s : nu.cells()) {
            auto al = arm_leg(mu, s);
            if (s.row == rc.row) {
                // same row as the removed corner
                QTScalar tl = QTScalar::monomial(0, al.leg);
                QTScalar qa = QTScalar::monomial(al.arm, 0);
                r *= (tl - qa * QTScalar::q()) / (tl - qa);
            } else if (s.col == rc.col) {
                QTScalar tl = QTScalar::monomial(0, al.leg);
                QTScalar qa = QTScalar::monomial(al.arm, 0);
                r *= (qa - tl * QTScalar::t()) / (qa - tl);
            }
        }
        return r;
    }

    // compact corner-weight form
    ShadowFrame f = corner_data(mu);
    int i = int(pos - preds.begin()) + 1;  // 1-based corner index
    QTScalar num(1), den(1);
    for (int j = 0; j <= f.m; ++j) num *= f.xw(i) - f.uw(j);
    for (int j = 1; j <= f.m; ++j)
        if (j != i) den *= f.xw(i) - f.xw(j);
    return num / (den * f.xw(i) * qt_M());
}

// ------------------------------------------------------------- dp1_expand ---

SymFun PieriExpansion::as_symfun() const {
    SymFun out(base.size() - 1, SFBasis::Htilde);
    for (auto& [nu, c] : terms) out.add(nu, c);
    return out;
}

PieriExpansion dp1_expand(const Partition& mu) {
    PieriExpansion e;
    e.base = mu;
    for (auto& nu : predecessors(mu)) e.terms.emplace_back(nu, c_coeff(mu, nu, CoeffForm::compact));
    return e;
}

// ----------------------------------------------------------------- phi_sf ---

SymFun phi_sf(const std::vector<Partition>& S, int k) {
    int m = int(S.size());
    if (m == 0) throw domain_error("phi_sf: empty predecessor list");
    if (k < 1 || k > m) throw domain_error("phi_sf: k out of range");
    int n = S[0].size();
    std::vector<QTScalar> T;
    for (auto& a : S) T.push_back(t_weight(a));
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (T[size_t(a)] == T[size_t(b)])
                throw domain_error("phi_sf: coincident cell weights among predecessors");
    SymFun out(n, SFBasis::Htilde);
    for (int a = 0; a < m; ++a) {
        QTScalar coeff(1);
        for (int b = 0; b < m; ++b) {
            if (b == a) continue;
            coeff /= QTScalar(1) - T[size_t(a)] / T[size_t(b)];
        }
        // apply (-nabla)^{m-k} termwise
        coeff *= (-T[size_t(a)]).pow(m - k);
        out.add(S[size_t(a)], coeff);
    }
    return out;
}

// ---------------------------------------------------------- conjectured_C ---

SymFun conjectured_C(const Partition& mu, Cell c, CRoute route) {
    int n = mu.size() - 1;
    if (!mu.contains(c)) return SymFun(n, SFBasis::Htilde);  // boundary convention

    ShadowFrame f = shadow(mu, c);
    auto rhos = predecessors(f.tau);
    std::vector<Partition> S;
    for (auto& rho : rhos) S.push_back(replace_shadow(mu, c, rho));

    if (route == CRoute::shadow_pieri) {
        SymFun out(n, SFBasis::Htilde);
        for (size_t s = 0; s < rhos.size(); ++s)
            out.add(S[s], c_coeff(f.tau, rhos[s], CoeffForm::product));
        return out;
    }

    QTScalar Thole = t_weight(mu) / QTScalar::monomial(c.col, c.row);
    if (route == CRoute::nabla_product) {
        SymFun phi = phi_sf(S, f.m);
        SymFun out(n, SFBasis::Htilde);
        QTScalar M = qt_M();
        for (auto& [alpha, coeff] : phi.coeff()) {
            QTScalar Ta = t_weight(alpha);
            QTScalar v = coeff * Thole / (Ta * M);
            for (int s = 0; s <= f.m; ++s) v *= QTScalar(1) - Ta * f.uw(s) / Thole;
            out.add(alpha, v);
        }
        return out;
    }

    // ek_sum route
    std::vector<QTScalar> xs{f.x0}, us;
    for (int s = 1; s <= f.m; ++s) xs.push_back(f.xw(s));
    for (int s = 0; s <= f.m; ++s) us.push_back(f.uw(s));
    QTScalar M = qt_M();
    SymFun out(n, SFBasis::Htilde);
    for (int k = 1; k <= f.m; ++k) {
        SymFun phk = phi_sf(S, k);
        QTScalar factor = (e_alphabet(f.m + 1 - k, xs) - e_alphabet(f.m + 1 - k, us)) /
                          (M * Thole.pow(f.m - k));
        out += phk * factor;
    }
    return out;
}

// --------------------------------------------------------- four_term_check ---

FourTermWitness four_term_check(const Partition& mu, Cell c) {
    if (!mu.contains(c)) throw domain_error("four_term_check: cell outside partition");
    auto al = arm_leg(mu, c);
    FourTermWitness w;
    w.residual = SymFun(mu.size() - 1, SFBasis::Htilde);
    if (al.arm == 0 && al.leg == 0) {
        w.degenerate = true;  // corner: the recursion degenerates to the boundary identity
        return w;
    }
    QTScalar T = QTScalar::monomial(0, al.leg), Q = QTScalar::monomial(al.arm, 0);
    QTScalar D = T - Q;
    QTScalar x = (T - QTScalar::q() * Q) / D;
    QTScalar y = (QTScalar::t() * T - Q) / D;
    QTScalar z = (QTScalar::t() * T - QTScalar::q() * Q) / D;
    SymFun C00 = conjectured_C(mu, c, CRoute::shadow_pieri);
    SymFun C01 = conjectured_C(mu, {c.row, c.col + 1}, CRoute::shadow_pieri);
    SymFun C10 = conjectured_C(mu, {c.row + 1, c.col}, CRoute::shadow_pieri);
    SymFun C11 = conjectured_C(mu, {c.row + 1, c.col + 1}, CRoute::shadow_pieri);
    w.residual = C00 - C01 * x - C10 * y + C11 * z;
    return w;
}

// ---------------------------------------------------------------- atoms_qt ---

Atoms atoms_qt(const Partition& mu, Cell c) {
    if (!mu.contains(c)) throw domain_error("atoms_qt: cell outside partition");
    auto al = arm_leg(mu, c);
    Atoms A;
    A.q_arm = QTScalar::monomial(al.arm, 0);
    A.t_leg = QTScalar::monomial(0, al.leg);
    A.t_hole_weight = t_weight(mu) / QTScalar::monomial(c.col, c.row);

    SymFun C00 = conjectured_C(mu, c, CRoute::shadow_pieri);
    SymFun C01 = conjectured_C(mu, {c.row, c.col + 1}, CRoute::shadow_pieri);
    SymFun C10 = conjectured_C(mu, {c.row + 1, c.col}, CRoute::shadow_pieri);
    SymFun C11 = conjectured_C(mu, {c.row + 1, c.col + 1}, CRoute::shadow_pieri);
    QTScalar t = QTScalar::t(), q = QTScalar::q();
    A.a_x = C00 - C10 * t - C01 + C11 * t;
    A.a_y = C00 - C01 * q - C10 + C11 * q;

    // closed corner-weight form of the normalized atom
    ShadowFrame f = shadow(mu, c);
    auto rhos = predecessors(f.tau);
    SymFun xi(mu.size() - 1, SFBasis::Htilde);
    for (int s = 1; s <= f.m; ++s) {
        QTScalar num(1), den(1);
        for (int r = 1; r <= f.m - 1; ++r) num *= f.xw(s) - f.uw(r);
        for (int r = 1; r <= f.m; ++r)
            if (r != s) den *= f.xw(s) - f.xw(r);
        xi.add(replace_shadow(mu, c, rhos[size_t(s - 1)]), num / den);
    }
    A.xi = xi;
    return A;
}

SymFun xi_operator_route(const Partition& mu, Cell c) {
    ShadowFrame f = shadow(mu, c);
    auto rhos = predecessors(f.tau);
    std::vector<Partition> S;
    for (auto& rho : rhos) S.push_back(replace_shadow(mu, c, rho));
    QTScalar Thole = t_weight(mu) / QTScalar::monomial(c.col, c.row);
    SymFun phi = phi_sf(S, f.m);
    SymFun out(mu.size() - 1, SFBasis::Htilde);
    for (auto& [alpha, coeff] : phi.coeff()) {
        QTScalar Ta = t_weight(alpha);
        QTScalar v = coeff;
        for (int s = 1; s <= f.m - 1; ++s) v *= QTScalar(1) - Ta * f.uw(s) / Thole;
        out.add(alpha, v);
    }
    return out;
}

// ------------------------------------------------------- refined identities ---

SymFun refined_piece(const Partition& mu, Cell c, const EpsilonWord& word, bool y_side) {
    ShadowFrame f = shadow(mu, c);
    if (word.size() != f.m) throw domain_error("refined_piece: word length mismatch");
    auto rhos = predecessors(f.tau);
    std::vector<Partition> S;
    for (auto& rho : rhos) S.push_back(replace_shadow(mu, c, rho));
    int k = word.weight();
    if (k == 0) throw domain_error("refined_piece: empty subset");
    SymFun phi = phi_sf(S, f.m + 1 - k);
    QTScalar Tmu = t_weight(mu);
    QTScalar front = y_side ? Tmu / QTScalar::monomial(c.col - 1, c.row)
                            : Tmu / QTScalar::monomial(c.col, c.row - 1);
    QTScalar denom(1);
    for (int s = 1; s <= f.m; ++s) {
        if (!word.bit(s)) continue;
        QTScalar Ta = t_weight(S[size_t(s - 1)]);
        denom *= y_side ? Ta * QTScalar::monomial(f.width(s), 0)
                        : Ta * QTScalar::monomial(0, f.drop(s));
    }
    return convert(phi * (front / denom), SFBasis::s);
}

RefinedCheck refined_identities(const Partition& mu, Cell c, const EpsilonWord& eps) {
    ShadowFrame f = shadow(mu, c);
    if (eps.size() != f.m || !eps.bit(f.m))
        throw domain_error("refined_identities: need an epsilon word ending in 1");
    auto al = arm_leg(mu, c);
    RefinedCheck R;
    R.fch_x = refined_piece(mu, c, eps, false);

    std::vector<uint8_t> shifted(static_cast<size_t>(f.m)), complemented(static_cast<size_t>(f.m));
    shifted[0] = 1;
    complemented[0] = 1;
    for (int s = 1; s < f.m; ++s) {
        shifted[size_t(s)] = uint8_t(eps.bit(s));
        complemented[size_t(s)] = uint8_t(1 - eps.bit(s));
    }
    R.fch_y = refined_piece(mu, c, EpsilonWord(shifted), true);
    R.fch_y_flip = refined_piece(mu, c, EpsilonWord(complemented), true);

    QTScalar tl = QTScalar::monomial(0, al.leg), qa = QTScalar::monomial(al.arm, 0);
    R.crucial_ok = (R.fch_x * tl == R.fch_y * qa);
    QTScalar Thole = t_weight(mu) / QTScalar::monomial(c.col, c.row);
    R.flip_ok = (R.fch_x == down_invol(R.fch_y_flip) * Thole);
    return R;
}

// -------------------------------------------------------------- hook_suite ---

namespace {

QTScalar geom_q(int lo, int hi) {  // q^lo + ... + q^hi (empty when hi < lo)
    QTScalar s;
    for (int e = lo; e <= hi; ++e) s += QTScalar::monomial(e, 0);
    return s;
}
QTScalar geom_t(int lo, int hi) {
    QTScalar s;
    for (int e = lo; e <= hi; ++e) s += QTScalar::monomial(0, e);
    return s;
}
QTScalar qfact(int k, bool in_t) {  // [k]! in q or t
    QTScalar r(1);
    for (int j = 1; j <= k; ++j) r *= in_t ? geom_t(0, j - 1) : geom_q(0, j - 1);
    return r;
}

Partition hook_shape(int row, int ones) {  // (row, 1^ones)
    std::vector<int> parts;
    if (row > 0) parts.push_back(row);
    for (int i = 0; i < ones; ++i) parts.push_back(1);
    return Partition(parts);
}

QTScalar hilbert_series_of(const Partition& lam) {
    SymFun f = htilde(lam);
    for (int i = 0; i < lam.size(); ++i) f = dp1(f);
    return f.coeff_of(Partition());
}

}  // namespace

std::vector<CheckItem> hook_suite(int n, int k) {
    if (k < 0 || k > n) throw domain_error("hook_suite: need 0 <= k <= n");
    std::vector<CheckItem> out;
    Partition mu = hook_shape(n + 1 - k, k);
    SymFun prod = sf_multiply(htilde(hook_shape(0, k)), htilde(hook_shape(n - k, 0)));
    Atoms A = atoms_qt(mu, Cell{0, 0});

    auto push = [&](const std::string& name, bool ok, const std::string& detail = "") {
        out.push_back({name, ok, detail});
    };

    // corner atoms of the hole at the origin match the induced product
    push("atom_x_product", convert(A.a_x, SFBasis::s) == prod * QTScalar::monomial(n - k, 0),
         "A^x(0,0) vs q^(n-k) * column-row product");
    push("atom_y_product", convert(A.a_y, SFBasis::s) == prod * QTScalar::monomial(0, k),
         "A^y(0,0) vs t^k * column-row product");

    // the two dp1 decompositions
    SymFun lhs = dp1(htilde(mu));
    {
        SymFun rhs = prod * QTScalar::monomial(n - k, 0);
        if (k >= 1) rhs += htilde(hook_shape(n + 1 - k, k - 1)) * geom_t(1, k);
        if (n - k >= 1) rhs += htilde(hook_shape(n - k, k)) * geom_q(0, n - k - 1);
        push("dp1_split_x", lhs == rhs, "x-side split of dp1 Htilde");
    }
    {
        SymFun rhs = prod * QTScalar::monomial(0, k);
        if (k >= 1) rhs += htilde(hook_shape(n + 1 - k, k - 1)) * geom_t(0, k - 1);
        if (n - k >= 1) rhs += htilde(hook_shape(n - k, k)) * geom_q(1, n - k);
        push("dp1_split_y", lhs == rhs, "y-side split of dp1 Htilde");
    }

    // two-term expansion of the product, and the exchange step
    if (k >= 1 && n - k >= 1) {
        Partition alpha = hook_shape(n + 1 - k, k - 1), beta = hook_shape(n - k, k);
        QTScalar tk = QTScalar::monomial(0, k), qnk = QTScalar::monomial(n - k, 0);
        QTScalar den = tk - qnk;
        QTScalar ca = (tk - QTScalar(1)) / den, cb = (QTScalar(1) - qnk) / den;
        push("product_two_term", prod == htilde(alpha) * ca + htilde(beta) * cb,
             "column-row product over the two hooks");
        // exchange: solve the two-term relation for the beta characteristic
        SymFun c_beta = (prod - htilde(alpha) * ca) * cb.inverse();
        push("exchange_step", c_beta == htilde(beta), "recursion step solves to Htilde");
    }

    // Hilbert series recursion and the factorial specialization
    {
        QTScalar F = hilbert_series_of(mu);
        QTScalar rhs;
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), unsigned(n), unsigned(k));
        rhs += QTScalar::monomial(n - k, 0) * QTScalar(binom) * qfact(k, true) * qfact(n - k, false);
        if (k >= 1) rhs += geom_t(1, k) * hilbert_series_of(hook_shape(n + 1 - k, k - 1));
        if (n - k >= 1) rhs += geom_q(0, n - k - 1) * hilbert_series_of(hook_shape(n - k, k));
        push("hilbert_recursion", F == rhs, "graded dimension recursion");
        mpz_class fact;
        mpz_fac_ui(fact.get_mpz_t(), unsigned(n + 1));
        bool ok = false;
        try {
            ok = F.eval_at(1, 1) == mpq_class(fact);
        } catch (const pole_error&) {
            ok = false;
        }
        push("hilbert_factorial", ok, "F(1,1) = (n+1)!");
    }
    return out;
}

// ---------------------------------------------------------------- gd_suite ---

namespace {

SymFun xi_of(const Partition& mu, Cell c) { return atoms_qt(mu, c).xi; }

bool xi_matches(const Partition& mu, Cell c, const std::vector<std::pair<Partition, std::string>>& expect) {
    SymFun xi = xi_of(mu, c);
    SymFun want(mu.size() - 1, SFBasis::Htilde);
    for (auto& [nu, coeff] : expect) want.add(nu, QTScalar::parse(coeff));
    return xi == want;
}

}  // namespace

std::vector<CheckItem> gd_suite(int cap) {
    std::vector<CheckItem> out;
    auto push = [&](const std::string& name, bool ok, const std::string& detail = "") {
        out.push_back({name, ok, detail});
    };

    // both weighted expansions of dp1 Htilde over normalized atoms
    for (int n = 1; n <= cap; ++n) {
        bool ok_la = true, ok_al = true;
        for (auto& mu : partitions_of(n)) {
            SymFun lhs = dp1(htilde(mu));
            SymFun sum_a(n - 1, SFBasis::Htilde), sum_b(n - 1, SFBasis::Htilde);
            for (auto& cell : mu.cells()) {
                auto al = arm_leg(mu, cell);
                SymFun xi = xi_of(mu, cell);
                sum_a += xi * QTScalar::monomial(al.arm, al.coleg);
                sum_b += xi * QTScalar::monomial(al.coarm, al.leg);
            }
            if (lhs != convert(sum_a, SFBasis::s)) ok_la = false;
            if (lhs != convert(sum_b, SFBasis::s)) ok_al = false;
        }
        push("atom_expansion_coleg_arm_n" + std::to_string(n), ok_la,
             "dp1 Htilde = sum t^coleg q^arm Xi over cells");
        push("atom_expansion_leg_coarm_n" + std::to_string(n), ok_al,
             "dp1 Htilde = sum t^leg q^coarm Xi over cells");
    }

    // printed two-term instances
    push("instance_321_cell10",
         xi_matches(Partition({3, 2, 1}), Cell{1, 0},
                    {{Partition({3, 2}), "(1-t)/(q-t)"}, {Partition({3, 1, 1}), "(q-1)/(q-t)"}}),
         "normalized atom of (3,2,1) at (1,0)");
    push("instance_221_cell00",
         xi_matches(Partition({2, 2, 1}), Cell{0, 0},
                    {{Partition({2, 2}), "(1-t)/(q-t)"}, {Partition({2, 1, 1}), "(q-1)/(q-t)"}}),
         "normalized atom of (2,2,1) at (0,0)");
    push("instance_32_cell00",
         xi_matches(Partition({3, 2}), Cell{0, 0},
                    {{Partition({2, 2}), "(1-q)/(t-q)"}, {Partition({3, 1}), "(t-1)/(t-q)"}}),
         "normalized atom of (3,2) at (0,0)");
    push("instance_42_cell00",
         xi_matches(Partition({4, 2}), Cell{0, 0},
                    {{Partition({3, 2}), "(1-q^2)/(t-q^2)"}, {Partition({4, 1}), "(t-1)/(t-q^2)"}}),
         "normalized atom of (4,2) at (0,0)");

    // the q<->t swap relation between the (2,2,1) and (3,2) instances
    {
        SymFun a = xi_of(Partition({2, 2, 1}), Cell{0, 0});
        SymFun b = xi_of(Partition({3, 2}), Cell{0, 0});
        SymFun swapped(a.degree(), SFBasis::Htilde);
        for (auto& [nu, c] : a.coeff()) swapped.add(nu.conjugate(), c.subst_swap());
        push("swap_rule", swapped == b, "conjugate instance is the q<->t image");
    }

    // explicit corner-weight placements for the instances
    {
        QTScalar t = QTScalar::t(), q = QTScalar::q(), one(1);
        push("weights_t_q_1", (t - one) / (t - q) == QTScalar::parse("(1-t)/(q-t)") &&
                                  (q - one) / (q - t) == QTScalar::parse("(q-1)/(q-t)"),
             "weights x1=t, x2=q, u1=1 reproduce the printed coefficients");
        push("weights_t2_tq_t", (t * t - t) / (t * t - t * q) == QTScalar::parse("(1-t)/(q-t)"),
             "weights x1=t^2, x2=tq, u1=t give the same coefficient");
        QTScalar d1 = (t * q - q) / (t * q - q.pow(3));
        QTScalar d2 = (t - one) / (t - q * q);
        push("weights_tq_q3_q", d1 == d2, "weights (tq,q^3;q) match (t,q^2;1)");
    }

    // rectangle constancy used by the placements
    push("xi_rectangle_221",
         xi_of(Partition({2, 2, 1}), Cell{0, 0}) == xi_of(Partition({2, 2, 1}), Cell{1, 0}),
         "normalized atom constant along the first column pair");
    push("xi_rectangle_42",
         xi_of(Partition({4, 2}), Cell{0, 0}) == xi_of(Partition({4, 2}), Cell{0, 1}),
         "normalized atom constant along the first row pair");

    // gistol equivalences behind the placements
    {
        auto D1 = LatticeDiagram::hole(Partition({3, 2, 1}), Cell{1, 0});
        auto D2 = LatticeDiagram({{2, 0}, {1, 0}, {1, 1}, {1, 2}, {0, 2}});
        auto D3 = LatticeDiagram({{2, 1}, {1, 0}, {1, 1}, {1, 2}, {0, 0}});
        auto D4 = LatticeDiagram({{2, 2}, {1, 0}, {1, 1}, {1, 2}, {0, 0}});
        bool chain = gistol_equivalent(D1, D3) && gistol_equivalent(D3, D4) &&
                     gistol_equivalent(D4, D2);
        push("gistol_chain", chain, "the displayed equivalence chain has one canonical form");
        push("gistol_42_holes",
             gistol_equivalent(LatticeDiagram::hole(Partition({4, 2}), Cell{0, 0}),
                               LatticeDiagram::hole(Partition({4, 2}), Cell{0, 1})),
             "the two placements for the (4,2) instance are equivalent");
        push("gistol_221_holes",
             gistol_equivalent(LatticeDiagram::hole(Partition({2, 2, 1}), Cell{0, 0}),
                               LatticeDiagram::hole(Partition({2, 2, 1}), Cell{1, 0})),
             "the two placements for the (2,2,1) instance are equivalent");
    }
    return out;
}

// --------------------------------------------------------------- lemma 1.2 ---

QTScalar lemma_1_2_residual(const std::vector<QTScalar>& xs, const std::vector<QTScalar>& us,
                            const QTScalar& z) {
    if (xs.size() != us.size() || xs.empty())
        throw domain_error("lemma_1_2_residual: need equally many x and u values");
    int m = int(xs.size()) - 1;
    QTScalar px(1), pu(1);
    for (auto& v : xs) px *= v;
    for (auto& v : us) pu *= v;
    if (px != pu) throw domain_error("lemma_1_2_residual: product constraint violated");
    for (size_t a = 1; a < xs.size(); ++a)
        for (size_t b = a + 1; b < xs.size(); ++b)
            if (xs[a] == xs[b]) throw domain_error("lemma_1_2_residual: repeated x value");
    if (z.is_zero()) throw domain_error("lemma_1_2_residual: z must be nonzero");

    // the interpolation runs over the points 1/x_1 .. 1/x_m; x_0 enters only
    // through the product constraint
    QTScalar lhs;
    for (int s = 1; s <= m; ++s) {
        QTScalar num(1), den(1), tail(1);
        for (int r = 0; r <= m; ++r) num *= xs[size_t(s)] - us[size_t(r)];
        for (int r = 1; r <= m; ++r) {
            if (r == s) continue;
            den *= xs[size_t(s)] - xs[size_t(r)];
            tail *= QTScalar(1) - z * xs[size_t(r)];
        }
        lhs += num * tail / (den * xs[size_t(s)]);
    }
    QTScalar pu_z(1), px_z(1);
    for (int r = 0; r <= m; ++r) {
        pu_z *= QTScalar(1) - z * us[size_t(r)];
        px_z *= QTScalar(1) - z * xs[size_t(r)];
    }
    QTScalar rhs = (pu_z - px_z) / z;
    return lhs - rhs;
}

Lemma12Symbolic lemma_1_2_symbolic(const std::vector<mpq_class>& xs,
                                   const std::vector<mpq_class>& us_head) {
    if (xs.size() != us_head.size() + 1 || xs.empty())
        throw domain_error("lemma_1_2_symbolic: need one more x than head u values");
    std::vector<QTScalar> X, U;
    QTScalar px(1), pu(1);
    for (auto& v : xs) {
        X.emplace_back(v);
        px *= X.back();
    }
    for (auto& v : us_head) {
        U.emplace_back(v);
        pu *= U.back();
    }
    U.push_back(px / pu);  // closing value to satisfy the product constraint

    Lemma12Symbolic out;
    QTScalar z = QTScalar::q();
    out.residual = lemma_1_2_residual(X, U, z);
    QTScalar pu_z(1), px_z(1);
    for (auto& u : U) pu_z *= QTScalar(1) - z * u;
    for (auto& x : X) px_z *= QTScalar(1) - z * x;
    QTScalar rhs = (pu_z - px_z) / z;
    // a constant denominator may remain from rational inputs; the bound is
    // about the z-degree of the numerator
    out.rhs_is_polynomial = rhs.den().deg_q() == 0 && rhs.den().deg_t() == 0;
    out.rhs_degree = rhs.num().deg_q();
    return out;
}

// --------------------------------------------------------- t=1/q hook form ---

bool pieri_hook_ratio_check(const Partition& tau, const Partition& rho) {
    QTScalar lhs = c_coeff(tau, rho, CoeffForm::product).subst_t_to_qinv();
    Cell rc = removed_corner(tau, rho);
    int col_cells = 0;
    for (auto& s : rho.cells())
        if (s.col == rc.col) ++col_cells;
    QTScalar num(1), den(1);
    for (auto& s : tau.cells()) num *= QTScalar(1) - QTScalar::monomial(arm_leg(tau, s).hook(), 0);
    for (auto& s : rho.cells()) den *= QTScalar(1) - QTScalar::monomial(arm_leg(rho, s).hook(), 0);
    QTScalar rhs = num / (den * (QTScalar(1) - QTScalar::q()) * QTScalar::monomial(col_cells, 0));
    return lhs == rhs;
}

std::vector<std::vector<Cell>> shadow_rectangles(const Partition& mu) {
    std::map<std::vector<Cell>, std::vector<Cell>> groups;
    for (auto& cell : mu.cells()) {
        std::vector<Cell> key;
        for (auto& corner : mu.corners())
            if (corner.row >= cell.row && corner.col >= cell.col) key.push_back(corner);
        groups[key].push_back(cell);
    }
    std::vector<std::vector<Cell>> out;
    for (auto& [key, cells] : groups) out.push_back(cells);
    return out;
}

}  // namespace qtatoms
