#pragma once

#include <random>

#include <sympla/action.hpp>
#include <sympla/cocycle.hpp>
#include <sympla/symplectic.hpp>

// Shared fixtures: the low-dimensional nilpotent symplectic Lie algebras and
// the standard cocycle families used throughout the suite.
namespace fixtures {

using namespace sympla;

// omega = a^1^a^2 + a^3^a^4 on basis a_1..a_4
inline Matrix omega_1234() {
    Matrix om(4, 4);
    om(0, 1) = 1;
    om(1, 0) = -1;
    om(2, 3) = 1;
    om(3, 2) = -1;
    return om;
}

// omega = a^1^a^4 + a^2^a^3
inline Matrix omega_1423() {
    Matrix om(4, 4);
    om(0, 3) = 1;
    om(3, 0) = -1;
    om(1, 2) = 1;
    om(2, 1) = -1;
    return om;
}

inline SymplecticLieAlgebra r4() {
    return {LieAlgebra::abelian(4), omega_1234()};
}

// h3 + R: [a1, a2] = a3, omega = a^1^a^4 + a^2^a^3
inline SymplecticLieAlgebra h3r() {
    LieAlgebra g(4);
    g.set_bracket(0, 1, Vec{Rat(0), Rat(0), Rat(1), Rat(0)});
    return {std::move(g), omega_1423()};
}

// n4: [a4, a1] = a2, [a4, a2] = a3, omega = a^1^a^2 + a^3^a^4
inline SymplecticLieAlgebra n4() {
    LieAlgebra g(4);
    g.set_bracket(3, 0, Vec{Rat(0), Rat(1), Rat(0), Rat(0)});
    g.set_bracket(3, 1, Vec{Rat(0), Rat(0), Rat(1), Rat(0)});
    return {std::move(g), omega_1234()};
}

inline SymplecticLieAlgebra r2() {
    Matrix om(2, 2);
    om(0, 1) = 1;
    om(1, 0) = -1;
    return {LieAlgebra::abelian(2), om};
}

inline SymplecticLieAlgebra zero_algebra() {
    return {LieAlgebra::abelian(0), Matrix(0, 0)};
}

// --- cocycles on (R, R^4), omega = a^1^a^2 + a^3^a^4 ------------------------

// gamma^0 = s^1 x a^1 x s^1
inline CocycleTriple gamma0_xi1() {
    CocycleTriple t(1, r4());
    t.gamma_at(0, 0, 0) = 1;
    t.xi_at(0, 1, 0) = 1;  // xi_1 = s^1 x a^2 x a_1
    return t;
}

inline CocycleTriple gamma0_xipm(int sgn) {
    CocycleTriple t(1, r4());
    t.gamma_at(0, 0, 0) = 1;
    t.xi_at(0, 2, 0) = 1;    // s^1 x a^3 x a_1
    t.xi_at(0, 1, 2) = sgn;  // +- s^1 x a^2 x a_3
    return t;
}

inline CocycleTriple gamma0_xikappa(const Rat& kappa) {
    CocycleTriple t(1, r4());
    t.gamma_at(0, 0, 0) = 1;
    t.xi_at(0, 3, 0) = 1;      // a^4 x a_1
    t.xi_at(0, 1, 2) = 1;      // a^2 x a_3
    t.xi_at(0, 2, 3) = 1;      // a^3 x a_4
    t.xi_at(0, 2, 0) = kappa;  // a^3 x kappa a_1
    return t;
}

// --- cocycles on (R, h3 + R), omega = a^1^a^4 + a^2^a^3 ----------------------

// xi^1_{i,j} = s^1 x a^1 x (i a_3 + a_4) + s^1 x a^2 x j a_3 + s^1 x a^4 x a_3
inline CocycleTriple h3r_xi1(const Rat& gi = Rat(0), const Rat& gj = Rat(0)) {
    CocycleTriple t(1, h3r());
    t.gamma_at(0, 2, 0) = 1;  // s^1 x a^3 x s^1
    t.xi_at(0, 0, 2) = gi;
    t.xi_at(0, 0, 3) = 1;
    t.xi_at(0, 1, 2) = gj;
    t.xi_at(0, 3, 2) = 1;
    return t;
}

// (s^1 x (l+1)a^3 x s^1, 0, xi^1(l)); l = 0 takes gamma = s^1 x (y1 a^1 + a^3) x s^1
inline CocycleTriple h3r_xi1_l(const Rat& l, const Rat& y1 = Rat(0)) {
    CocycleTriple t(1, h3r());
    t.gamma_at(0, 2, 0) = l + 1;
    t.gamma_at(0, 0, 0) = y1;
    t.xi_at(0, 0, 3) = 1;  // a^1 x a_4
    t.xi_at(0, 1, 0) = 1;  // a^2 x a_1
    t.xi_at(0, 3, 2) = l;  // a^4 x l a_3
    return t;
}

// (s^1 x (y2 a^2 + y4 a^4) x s^1, 0, xi^{1,n})
inline CocycleTriple h3r_xi1n(int n, const Rat& y2, const Rat& y4) {
    CocycleTriple t(1, h3r());
    t.gamma_at(0, 1, 0) = y2;
    t.gamma_at(0, 3, 0) = y4;
    t.xi_at(0, 0, 1) = 1;  // a^1 x a_2
    t.xi_at(0, 1, 3) = n;  // a^2 x n a_4
    return t;
}

// --- cocycles on (R^3, 0) ----------------------------------------------------

inline CocycleTriple r3_eps(const Matrix& m_eps) { return eps_from_matrix(m_eps); }

inline Matrix m_eps_diag(const Rat& x, const Rat& y, const Rat& z) {
    Matrix m(3, 3);
    m(0, 0) = x;
    m(1, 1) = y;
    m(2, 2) = z;
    return m;
}

// --- cocycles on (R^2, R^2), omega_a = a^1^a^2 -------------------------------

// building blocks from the classification list; see make_catalog for the
// sampled instances
inline CocycleTriple r2r2_blank() { return CocycleTriple(2, r2()); }

// --- randomness helpers ------------------------------------------------------

inline Rat random_rat(std::mt19937_64& rng, long max_num = 3, long max_den = 2) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return rat(num(rng), den(rng));
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c,
                            long max_num = 3, long max_den = 2) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = random_rat(rng, max_num, max_den);
    return m;
}

inline Matrix random_invertible(std::mt19937_64& rng, std::size_t n, long max_num = 3) {
    while (true) {
        Matrix m = random_matrix(rng, n, n, max_num, 2);
        if (rank(m) == n) return m;
    }
}

// random element of Sp(2n, Q) for the block form omega, as a product of
// symplectic transvections x -> x + c omega(x, u) u
inline Matrix random_symplectic(std::mt19937_64& rng, const Matrix& omega, int factors = 6) {
    std::size_t n = omega.rows();
    Matrix u_mat = Matrix::identity(n);
    for (int f = 0; f < factors; ++f) {
        Vec u(n);
        bool nonzero = false;
        for (std::size_t i = 0; i < n; ++i) {
            u[i] = random_rat(rng, 2, 2);
            if (u[i] != 0) nonzero = true;
        }
        if (!nonzero) continue;
        Rat c = random_rat(rng, 2, 2);
        Matrix t = Matrix::identity(n);
        for (std::size_t j = 0; j < n; ++j) {
            Rat w = bilinear(omega, unit_vec(n, j), u);  // omega(e_j, u)
            for (std::size_t i = 0; i < n; ++i) t(i, j) += c * w * u[i];
        }
        u_mat = t * u_mat;
    }
    return u_mat;
}

// random symplectic Lie automorphism of h3 + R: the shear family
// U(x,p,q,k) composed with the diagonal family diag(f^-2, f, f^-1, f^2)
inline Matrix random_h3r_automorphism(std::mt19937_64& rng) {
    Rat x = random_rat(rng, 2, 2), p = random_rat(rng, 2, 2), q = random_rat(rng, 2, 2),
        k = random_rat(rng, 2, 2);
    Matrix u(4, 4);
    u(0, 0) = 1;
    u(0, 1) = x;
    u(1, 1) = 1;
    u(2, 0) = p;
    u(2, 1) = q;
    u(2, 2) = 1;
    u(2, 3) = -x;
    u(3, 0) = k;
    u(3, 1) = p + k * x;
    u(3, 3) = 1;
    std::uniform_int_distribution<long> fs(1, 3);
    Rat f = rat(fs(rng), fs(rng));
    Matrix d(4, 4);
    d(0, 0) = 1 / (f * f);
    d(1, 1) = f;
    d(2, 2) = 1 / f;
    d(3, 3) = f * f;
    return u * d;
}

}  // namespace fixtures
