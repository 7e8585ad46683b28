#include <random>

#include <catch2/catch_amalgamated.hpp>
#include <sympla/action.hpp>
#include <sympla/extraction.hpp>

#include "fixtures.hpp"

using namespace sympla;

namespace {
Matrix tau_single(std::size_t adim, std::size_t m, std::size_t p, std::size_t i, const Rat& v) {
    Matrix t(adim, m);
    t(p, i) = v;
    return t;
}

CocycleTriple random_catalog_like(std::mt19937_64& rng) {
    switch (rng() % 4) {
        case 0: return fixtures::gamma0_xi1();
        case 1: return fixtures::gamma0_xipm(rng() % 2 ? 1 : -1);
        case 2: return fixtures::gamma0_xikappa(fixtures::random_rat(rng));
        default: return fixtures::h3r_xi1_l(rat(1 + (long)(rng() % 3)));
    }
}
}  // namespace

TEST_CASE("act_tau with tau = 0 is the identity") {
    CocycleTriple t = fixtures::gamma0_xikappa(rat(2));
    CHECK(act_tau(t, TauShift(Matrix(4, 1))) == t);
}

TEST_CASE("the worked shift on h3 + R: tau = s^1 x a_1") {
    // (s^1 x a^3 x s^1, 0, xi^1) tau = (s^1 x (a^1 + a^3) x s^1, 0, xi^1_{0,-1})
    CocycleTriple t = fixtures::h3r_xi1();
    CocycleTriple shifted = act_tau(t, TauShift(tau_single(4, 1, 0, 0, rat(1))));
    CocycleTriple expected = fixtures::h3r_xi1(rat(0), rat(-1));
    expected.gamma_at(0, 0, 0) = 1;  // gamma = s^1 x (a^1 + a^3) x s^1
    CHECK(shifted == expected);
}

TEST_CASE("act_tau is a group action: (t tau1) tau2 = t (tau1 + tau2)") {
    std::mt19937_64 rng(616);
    for (int it = 0; it < 40; ++it) {
        CocycleTriple t = random_catalog_like(rng);
        Matrix tau1 = fixtures::random_matrix(rng, t.a_dim(), t.l_dim);
        Matrix tau2 = fixtures::random_matrix(rng, t.a_dim(), t.l_dim);
        CocycleTriple lhs = act_tau(act_tau(t, TauShift(tau1)), TauShift(tau2));
        CocycleTriple rhs = act_tau(t, TauShift(tau1 + tau2));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("equivalence_iso certifies the model isomorphism") {
    std::mt19937_64 rng(617);
    for (int it = 0; it < 20; ++it) {
        CocycleTriple t = random_catalog_like(rng);
        Matrix tau = fixtures::random_matrix(rng, t.a_dim(), t.l_dim);
        Matrix sym = fixtures::random_matrix(rng, t.l_dim, t.l_dim);
        Matrix sigma(t.l_dim, t.l_dim);
        for (std::size_t i = 0; i < t.l_dim; ++i)
            for (std::size_t j = 0; j < t.l_dim; ++j) sigma(i, j) = sym(i, j) + sym(j, i);
        TauShift s(tau, sigma);
        LinearMap phi = equivalence_iso(t, s);
        SymplecticLieAlgebra before = build_standard_model(t);
        SymplecticLieAlgebra after = build_standard_model(act_tau(t, s));
        CHECK(check_symplectic_iso(before, after, phi));
    }
}

TEST_CASE("equivalence_iso with tau = sigma = 0 is the identity") {
    CocycleTriple t = fixtures::gamma0_xi1();
    CHECK(equivalence_iso(t, TauShift(Matrix(4, 1))) == Matrix::identity(6));
}

TEST_CASE("composition law: phi_tau2 o phi_tau1 = phi_{tau1+tau2, sigma}") {
    std::mt19937_64 rng(618);
    for (int it = 0; it < 20; ++it) {
        CocycleTriple t = random_catalog_like(rng);
        Matrix tau1 = fixtures::random_matrix(rng, t.a_dim(), t.l_dim);
        Matrix tau2 = fixtures::random_matrix(rng, t.a_dim(), t.l_dim);
        Matrix lhs = equivalence_iso(t, TauShift(tau2)) * equivalence_iso(t, TauShift(tau1));
        // sigma = (1/2) tau2^* tau1 - (1/2) tau1^* tau2, selfadjoint
        std::size_t m = t.l_dim;
        Matrix sigma(m, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t k = 0; k < m; ++k)
                sigma(k, i) = (bilinear(t.a.omega, tau2.column(k), tau1.column(i)) -
                               bilinear(t.a.omega, tau1.column(k), tau2.column(i))) /
                              2;
        REQUIRE(sigma.is_symmetric());
        Matrix rhs = equivalence_iso(t, TauShift(tau1 + tau2, sigma));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("pullback by the identity pair is the identity") {
    CocycleTriple t = fixtures::gamma0_xikappa(rat(2));
    PairIso p = make_group_element(t.a, Matrix::identity(1), Matrix::identity(4));
    CHECK(pullback(t, p) == t);
}

TEST_CASE("pair iso validation is a hard precondition") {
    CocycleTriple t = fixtures::h3r_xi1();
    // U = diag(2,1,1,1) breaks the form
    Matrix u = Matrix::identity(4);
    u(0, 0) = 2;
    CHECK_THROWS_AS(make_group_element(t.a, Matrix::identity(1), u), std::invalid_argument);
    // a bracket-breaking U on h3 + R: swap a1 <-> a3
    Matrix swap = Matrix::identity(4);
    swap(0, 0) = swap(2, 2) = 0;
    swap(0, 2) = swap(2, 0) = 1;
    CHECK_THROWS_AS(make_group_element(t.a, Matrix::identity(1), swap), std::invalid_argument);
    Matrix singular(4, 4);
    CHECK_THROWS_AS(make_group_element(t.a, Matrix::identity(1), singular),
                    std::invalid_argument);
}

TEST_CASE("the rescaling pullback: (32 gamma0, 0, xi1) -> (gamma0, 0, xi1)") {
    CocycleTriple t = fixtures::gamma0_xi1();
    for (auto& x : t.gamma) x *= 32;
    Matrix s(1, 1);
    s(0, 0) = rat(1, 4);
    Matrix u(4, 4);
    u(0, 0) = 2;
    u(1, 1) = rat(1, 2);
    u(2, 2) = 1;
    u(3, 3) = 1;
    PairIso p = make_group_element(t.a, s, u);
    CHECK(pullback(t, p) == fixtures::gamma0_xi1());
}

TEST_CASE("the sign-flip pullback on h3 + R") {
    // (-1, diag(1,-1,-1,1))^* (s^1 x (y2 a^2 + y4 a^4) x s^1, 0, xi^{1,n})
    //   = (s^1 x (-y2 a^2 + y4 a^4) x s^1, 0, xi^{1,n})
    CocycleTriple t = fixtures::h3r_xi1n(1, rat(1), rat(1));
    Matrix s(1, 1);
    s(0, 0) = -1;
    Matrix u(4, 4);
    u(0, 0) = 1;
    u(1, 1) = -1;
    u(2, 2) = -1;
    u(3, 3) = 1;
    PairIso p = make_group_element(t.a, s, u);
    CHECK(pullback(t, p) == fixtures::h3r_xi1n(1, rat(-1), rat(1)));
}

TEST_CASE("pullback and act_tau are compatible") {
    std::mt19937_64 rng(619);
    int done = 0;
    while (done < 30) {
        CocycleTriple t = random_catalog_like(rng);
        Matrix tau = fixtures::random_matrix(rng, t.a_dim(), t.l_dim);
        Matrix s = fixtures::random_invertible(rng, t.l_dim, 2);
        Matrix u = t.a.g == LieAlgebra::abelian(4)
                       ? fixtures::random_symplectic(rng, t.a.omega)
                       : fixtures::random_h3r_automorphism(rng);
        PairIso p = make_group_element(t.a, s, u);
        CocycleTriple lhs = pullback(act_tau(t, TauShift(tau)), p);
        CocycleTriple rhs = act_tau(pullback(t, p), TauShift(pullback_tau(tau, p)));
        CHECK(lhs == rhs);
        ++done;
    }
}

TEST_CASE("pullback preserves the cocycle predicates") {
    std::mt19937_64 rng(620);
    for (int it = 0; it < 10; ++it) {
        CocycleTriple t = random_catalog_like(rng);
        Matrix s = fixtures::random_invertible(rng, t.l_dim, 2);
        Matrix u = t.a.g == LieAlgebra::abelian(4)
                       ? fixtures::random_symplectic(rng, t.a.omega)
                       : fixtures::random_h3r_automorphism(rng);
        CocycleTriple back = pullback(t, make_group_element(t.a, s, u));
        CHECK(is_cocycle(back).ok == is_cocycle(t).ok);
        CHECK(is_balanced(back).ok == is_balanced(t).ok);
        CHECK(is_nilpotent_cocycle(back).ok == is_nilpotent_cocycle(t).ok);
    }
}

TEST_CASE("are_equivalent: reflexivity gives the zero witness") {
    CocycleTriple t = fixtures::gamma0_xikappa(rat(2));
    EquivalenceVerdict v = are_equivalent(t, t);
    REQUIRE(v.kind == EquivalenceKind::Witness);
    CHECK(v.tau->is_zero());
}

TEST_CASE("are_equivalent recovers the worked witness on h3 + R") {
    CocycleTriple t1 = fixtures::h3r_xi1();
    CocycleTriple t2 = fixtures::h3r_xi1(rat(0), rat(-1));
    t2.gamma_at(0, 0, 0) = 1;
    EquivalenceVerdict v = are_equivalent(t1, t2);
    REQUIRE(v.kind == EquivalenceKind::Witness);
    CHECK(act_tau(t1, TauShift(*v.tau)) == t2);
    SymplecticLieAlgebra m1 = build_standard_model(t1);
    SymplecticLieAlgebra m2 = build_standard_model(t2);
    CHECK(check_symplectic_iso(m1, m2, equivalence_iso(t1, TauShift(*v.tau))));
}

TEST_CASE("are_equivalent separates xi+ from xi-") {
    EquivalenceVerdict v = are_equivalent(fixtures::gamma0_xipm(1), fixtures::gamma0_xipm(-1));
    CHECK(v.kind == EquivalenceKind::NotEquivalent);
}

TEST_CASE("are_equivalent on random shifts of catalog cocycles") {
    std::mt19937_64 rng(621);
    for (int it = 0; it < 25; ++it) {
        CocycleTriple t = random_catalog_like(rng);
        Matrix tau = fixtures::random_matrix(rng, t.a_dim(), t.l_dim);
        CocycleTriple t2 = act_tau(t, TauShift(tau));
        EquivalenceVerdict v = are_equivalent(t, t2);
        REQUIRE(v.kind == EquivalenceKind::Witness);
        CHECK(act_tau(t, TauShift(*v.tau)) == t2);
    }
}

TEST_CASE("invariant sign of omega(xi^2 v, v)") {
    auto check_val = [](const InvariantValue& v, const Rat& expect) {
        REQUIRE(v.defined());
        CHECK(*v.value == expect);
    };
    check_val(invariant_sign_xi2(fixtures::gamma0_xipm(1)), Rat(1));
    check_val(invariant_sign_xi2(fixtures::gamma0_xipm(-1)), Rat(-1));
    check_val(invariant_sign_xi2(fixtures::gamma0_xi1()), Rat(0));  // xi^2 = 0
    // xi^{1,n}: omega(xi^2 v, v) = -n v1^2
    check_val(invariant_sign_xi2(fixtures::h3r_xi1n(1, rat(1), rat(1))), Rat(-1));
    check_val(invariant_sign_xi2(fixtures::h3r_xi1n(-1, rat(1), rat(1))), Rat(1));
    check_val(invariant_sign_xi2(fixtures::h3r_xi1n(0, rat(1), rat(1))), Rat(0));
    // xi^1 on h3 + R: omega(xi^2 v, v) = -v1 v2 is sign-indefinite
    CHECK_FALSE(invariant_sign_xi2(fixtures::h3r_xi1()).defined());
    // l must be one-dimensional
    CHECK_FALSE(invariant_sign_xi2(CocycleTriple(2, fixtures::r2())).defined());
}

TEST_CASE("invariant kappa^7") {
    auto check_val = [](const InvariantValue& v, const Rat& expect) {
        REQUIRE(v.defined());
        CHECK(*v.value == expect);
    };
    check_val(invariant_kappa7(fixtures::gamma0_xikappa(rat(2))), rat(128));
    check_val(invariant_kappa7(fixtures::gamma0_xikappa(rat(0))), rat(0));
    check_val(invariant_kappa7(fixtures::gamma0_xikappa(rat(-1))), rat(-1));
    CHECK_FALSE(invariant_kappa7(fixtures::gamma0_xi1()).defined());  // xi^3 = 0
}

TEST_CASE("invariant l") {
    auto check_val = [](const InvariantValue& v, const Rat& expect) {
        REQUIRE(v.defined());
        CHECK(*v.value == expect);
    };
    check_val(invariant_l(fixtures::h3r_xi1_l(rat(2))), rat(2));
    check_val(invariant_l(fixtures::h3r_xi1_l(rat(-1, 2))), rat(-1, 2));
    CHECK_FALSE(invariant_l(fixtures::h3r_xi1()).defined());  // xi^3 = 0
}

TEST_CASE("each invariant is constant under act_tau and pullback on its family") {
    std::mt19937_64 rng(622);
    auto perturb = [&](const CocycleTriple& t) {
        CocycleTriple moved = act_tau(t, TauShift(fixtures::random_matrix(rng, 4, 1)));
        Matrix s = fixtures::random_invertible(rng, 1, 3);
        Matrix u = t.a.g == LieAlgebra::abelian(4)
                       ? fixtures::random_symplectic(rng, t.a.omega)
                       : fixtures::random_h3r_automorphism(rng);
        return pullback(moved, make_group_element(t.a, s, u));
    };
    for (int sgn : {1, -1}) {
        CocycleTriple t = fixtures::gamma0_xipm(sgn);
        for (int it = 0; it < 10; ++it) {
            InvariantValue v = invariant_sign_xi2(perturb(t));
            REQUIRE(v.defined());
            CHECK(*v.value == sgn);
        }
    }
    for (const Rat& kappa : {rat(-1), rat(0), rat(2)}) {
        CocycleTriple t = fixtures::gamma0_xikappa(kappa);
        Rat expect = rat_pow(kappa, 7);
        for (int it = 0; it < 10; ++it) {
            InvariantValue v = invariant_kappa7(perturb(t));
            REQUIRE(v.defined());
            CHECK(*v.value == expect);
        }
    }
    for (const Rat& l : {rat(-2), rat(1, 2), rat(3)}) {
        CocycleTriple t = fixtures::h3r_xi1_l(l);
        for (int it = 0; it < 10; ++it) {
            InvariantValue v = invariant_l(perturb(t));
            REQUIRE(v.defined());
            CHECK(*v.value == l);
        }
    }
}

TEST_CASE("eps orbit keys on the classification examples") {
    Matrix a = fixtures::m_eps_diag(rat(1), rat(0), rat(-1));
    Matrix b = fixtures::m_eps_diag(rat(2), rat(0), rat(-2));
    Matrix c = fixtures::m_eps_diag(rat(1), rat(1), rat(-2));
    CHECK(eps_orbit_key(a) == eps_orbit_key(b));
    CHECK(eps_orbit_key(a) != eps_orbit_key(c));
    auto cert = certify_eps_conjugation(a, b);
    REQUIRE(cert);
    CHECK(cert->c == 2);

    // rotation-like vs nilpotent rank-2
    Matrix rot(3, 3);
    rot(0, 1) = 1;
    rot(1, 0) = -1;
    Matrix nil(3, 3);
    nil(0, 1) = 1;
    nil(1, 2) = 1;
    CHECK(eps_orbit_key(rot) != eps_orbit_key(nil));

    // diag(1,1,-2) vs its Jordan companion: same polynomial ratio, different
    // fingerprints in the double-root stratum
    Matrix jordan(3, 3);
    jordan(0, 0) = 1;
    jordan(0, 1) = 1;
    jordan(1, 1) = 1;
    jordan(2, 2) = -2;
    CHECK(eps_orbit_key(c) != eps_orbit_key(jordan));

    CHECK_THROWS_AS(eps_orbit_key(fixtures::m_eps_diag(rat(1), rat(1), rat(1))),
                    std::invalid_argument);
    Matrix rank1(3, 3);
    rank1(0, 1) = 1;
    CHECK_THROWS_AS(eps_orbit_key(rank1), std::invalid_argument);
}

TEST_CASE("eps orbit key obeys the det-weighted conjugation law") {
    std::mt19937_64 rng(623);
    std::vector<Matrix> reps = {fixtures::m_eps_diag(rat(1), rat(0), rat(-1)),
                                fixtures::m_eps_diag(rat(1), rat(1, 2), rat(-3, 2))};
    Matrix nil(3, 3);
    nil(0, 1) = 1;
    nil(1, 2) = 1;
    reps.push_back(nil);
    for (const auto& m : reps) {
        EpsOrbitKey key = eps_orbit_key(m);
        for (int it = 0; it < 10; ++it) {
            Matrix s = fixtures::random_invertible(rng, 3, 2);
            auto s_inv_t = inverse(s.transpose());
            REQUIRE(s_inv_t);
            Matrix transformed = determinant(s) * (s.transpose() * m * *s_inv_t);
            CHECK(eps_orbit_key(transformed) == key);
        }
    }
}
