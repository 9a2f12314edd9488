#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtatoms/mpoly.hpp"

#include <random>

using namespace qtatoms;

namespace {

std::mt19937 rng(424242);

MPoly random_mpoly(int n, int max_terms, int max_exp) {
    MPoly p(n);
    int terms = 1 + int(rng() % unsigned(max_terms));
    for (int i = 0; i < terms; ++i) {
        Mono m;
        for (int v = 0; v < n; ++v) {
            m = m.with_xexp(v, int(rng() % unsigned(max_exp + 1)));
            m = m.with_yexp(v, int(rng() % unsigned(max_exp + 1)));
        }
        long num = long(rng() % 9) - 4;
        if (num == 0) num = 1;
        p.add_term(m, mpq_class(num, 1 + long(rng() % 3)));
    }
    return p;
}

std::vector<int> random_perm(int n) {
    std::vector<int> s(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) s[size_t(i)] = i;
    std::shuffle(s.begin(), s.end(), rng);
    return s;
}

}  // namespace

TEST_CASE("derivatives") {
    MPoly x1 = MPoly::var_x(2, 0);
    MPoly sq = x1 * x1;
    CHECK(sq.diff_x(0) == x1 * mpq_class(2));
    MPoly xy = MPoly::var_x(2, 0) * MPoly::var_y(2, 0);
    CHECK(xy.diff_x(0).diff_y(0) == MPoly(2, 1));
    CHECK(MPoly::var_x(2, 0).diff_x(1).is_zero());
    CHECK_THROWS_AS(MPoly::var_x(2, 0).diff_x(5), domain_error);
}

TEST_CASE("operator application") {
    MPoly x1 = MPoly::var_x(2, 0);
    CHECK(apply_operator(x1, x1 * x1) == x1 * mpq_class(2));
    MPoly xy = MPoly::var_x(2, 0) * MPoly::var_y(2, 0);
    CHECK(apply_operator(xy, xy) == MPoly(2, 1));
    // operator composition agrees with iterated differentiation
    for (int i = 0; i < 30; ++i) {
        MPoly p = random_mpoly(3, 3, 2), q = random_mpoly(3, 3, 2), r = random_mpoly(3, 4, 3);
        CHECK(apply_operator(p * q, r) == apply_operator(p, apply_operator(q, r)));
    }
}

TEST_CASE("apolar pairing") {
    MPoly x1 = MPoly::var_x(2, 0);
    CHECK(apolar(x1 * x1, x1 * x1) == 2);
    CHECK(apolar(x1, MPoly::var_y(2, 0)) == 0);
    MPoly m = MPoly::var_x(2, 0) * MPoly::var_y(2, 1);
    CHECK(apolar(m, m) == 1);
    // monomial self-pairing is the product of factorials
    Mono mm = Mono::one().with_xexp(0, 3).with_yexp(1, 2);
    MPoly big = MPoly::monomial(2, mm, 1);
    CHECK(apolar(big, big) == 6 * 2);
    // symmetry and bilinearity on random samples
    for (int i = 0; i < 30; ++i) {
        MPoly a = random_mpoly(3, 4, 2), b = random_mpoly(3, 4, 2), c = random_mpoly(3, 4, 2);
        CHECK(apolar(a, b) == apolar(b, a));
        CHECK(apolar(a + b, c) == apolar(a, c) + apolar(b, c));
    }
}

TEST_CASE("diagonal action") {
    int n = 2;
    MPoly alt = MPoly::var_x(n, 1) - MPoly::var_x(n, 0);  // x2 - x1
    CHECK(alt.diagonal_act({1, 0}) == -alt);
    CHECK(alt.diagonal_act({0, 1}) == alt);
    // invariance of the pairing: <sigma P, Q> = <P, sigma^{-1} Q>
    for (int i = 0; i < 40; ++i) {
        int k = 2 + int(rng() % 4);  // up to 5 pairs
        MPoly p = random_mpoly(k, 4, 2), q = random_mpoly(k, 4, 2);
        auto sigma = random_perm(k);
        std::vector<int> inv(static_cast<size_t>(k));
        for (int j = 0; j < k; ++j) inv[size_t(sigma[size_t(j)])] = j;
        CHECK(apolar(p.diagonal_act(sigma), q) == apolar(p, q.diagonal_act(inv)));
    }
    CHECK_THROWS_AS(alt.diagonal_act({0, 0}), domain_error);
}

TEST_CASE("polarization") {
    MPoly s = MPoly::var_x(2, 0) + MPoly::var_x(2, 1);
    CHECK(polarize(s, 1, 0) == MPoly(2, 2));
    MPoly xy = MPoly::var_x(2, 0) * MPoly::var_y(2, 0);
    CHECK(polarize(xy, 1, 1) == MPoly(2, 1));
    CHECK_THROWS_AS(polarize(s, 0, 0), domain_error);
}

TEST_CASE("lattice determinants") {
    CHECK(lattice_determinant(LatticeDiagram({{0, 0}, {1, 0}})) ==
          MPoly::var_x(2, 1) - MPoly::var_x(2, 0));
    CHECK(lattice_determinant(LatticeDiagram({{0, 0}, {0, 1}})) ==
          MPoly::var_y(2, 1) - MPoly::var_y(2, 0));
    // a column shape gives the Vandermonde determinant in x
    for (int n : {2, 3, 4}) {
        std::vector<int> parts(size_t(n), 1);
        MPoly d = lattice_determinant(LatticeDiagram::of_partition(Partition(parts)));
        MPoly vand(n, 1);
        // product of (x_j - x_i) over i < j, normalized like the determinant
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) vand = vand * (MPoly::var_x(n, j) - MPoly::var_x(n, i));
        mpq_class norm = 1;
        for (int i = 0; i < n; ++i) {
            mpz_class f;
            mpz_fac_ui(f.get_mpz_t(), unsigned(i));
            norm *= mpq_class(f);
        }
        CHECK(d == vand * (1 / norm));
    }
    // alternation under the diagonal action, checked by direct expansion
    MPoly d21 = lattice_determinant(LatticeDiagram::of_partition(Partition({2, 1})));
    for (auto& sigma : {std::vector<int>{1, 0, 2}, std::vector<int>{0, 2, 1}, std::vector<int>{2, 1, 0}})
        CHECK(d21.diagonal_act(sigma) == -d21);
    CHECK(d21.is_bihomogeneous());
    CHECK(d21.bidegree() == std::pair<int, int>{1, 1});
}

TEST_CASE("size guards") {
    // more cells than variable pairs, and coordinates beyond the packed range
    std::vector<Cell> many;
    for (int i = 0; i < 9; ++i) many.push_back({i, 0});
    CHECK_THROWS_AS(lattice_determinant(LatticeDiagram(many)), domain_error);
    CHECK_THROWS_AS(lattice_determinant(LatticeDiagram({{16, 0}, {0, 0}})), domain_error);
    CHECK_THROWS_AS(Mono::one().with_xexp(0, 16), domain_error);
    CHECK_THROWS_AS(MPoly(9), domain_error);
}

TEST_CASE("text format round trips") {
    MPoly p = MPoly::parse(2, "3*x1^2*y2 - 1/2*y1");
    MPoly expect = MPoly::var_x(2, 0) * MPoly::var_x(2, 0) * MPoly::var_y(2, 1) * mpq_class(3) -
                   MPoly::var_y(2, 0) * mpq_class(1, 2);
    CHECK(p == expect);
    for (int i = 0; i < 50; ++i) {
        MPoly r = random_mpoly(4, 5, 3);
        CHECK(MPoly::parse(4, r.str()) == r);
    }
    CHECK(MPoly(3).str() == "0");
}

TEST_CASE("restriction and promotion") {
    MPoly p = MPoly::var_x(3, 2) * MPoly::var_y(3, 0) + MPoly::var_y(3, 0);
    MPoly r = p.restrict_last_zero();
    CHECK(r == MPoly::var_y(2, 0));
    CHECK(r.promote(3) + MPoly(3) == MPoly::var_y(3, 0));
}
