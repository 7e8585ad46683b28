#pragma once

#include <utility>
#include <vector>

#include "action.hpp"
#include "cocycle.hpp"
#include "symplectic.hpp"

namespace sympla {

struct ExtractionResult {
    CocycleTriple triple;
    LinearMap phi;  // block map l^* + a + l -> g, certified symplectic iso
};

/// True iff phi is an isomorphism of symplectic Lie algebras from s1 onto s2.
inline bool check_symplectic_iso(const SymplecticLieAlgebra& s1, const SymplecticLieAlgebra& s2,
                                 const LinearMap& phi) {
    if (!check_iso(s1.g, s2.g, phi)) return false;
    return phi.transpose() * s2.omega * phi == s1.omega;
}

/// Reads a quadratic cocycle off a symplectic Lie algebra with degenerate
/// center. Complement choices are deterministic: the lexicographically first
/// standard vectors complete j^perp, then a skew Gram-Schmidt correction by
/// elements of j makes the complement isotropic; V_a is the orthogonal
/// complement of j + V_l inside j^perp. The returned block map is certified
/// as a symplectic isomorphism from the standard model onto the input.
inline ExtractionResult extract_cocycle(const SymplecticLieAlgebra& s) {
    ReductionResult red = reduce(s);
    if (red.j.dim() == 0)
        throw std::invalid_argument(
            "extract_cocycle: center is non-degenerate, nothing to extract");
    std::size_t m = red.l_dim, adim = red.a.dim(), n = s.dim();

    // greedy complement of j^perp (these project to the l-basis chosen by reduce)
    std::vector<Vec> w;
    for (const auto& lift : red.l_rep) w.push_back(lift);

    // skew Gram-Schmidt: v_i = w_i - j-correction so that span{v_i} is isotropic.
    // Solve omega(x_i, w_j) = omega(w_i, w_j) / 2 for x_i in j.
    Matrix pairing(m, m);  // pairing(k, j) = omega(j_k, w_j)
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t j = 0; j < m; ++j) pairing(k, j) = s.form(red.j.basis()[k], w[j]);
    Matrix pairing_t = pairing.transpose();
    std::vector<Vec> v;
    for (std::size_t i = 0; i < m; ++i) {
        Vec rhs(m);
        for (std::size_t j = 0; j < m; ++j) rhs[j] = s.form(w[i], w[j]) / 2;
        auto coeff = solve_unique(pairing_t, rhs);
        if (!coeff) throw std::logic_error("extract_cocycle: degenerate j x V_l pairing");
        Vec vi = w[i];
        for (std::size_t k = 0; k < m; ++k) vi = vi - (*coeff)[k] * red.j.basis()[k];
        v.push_back(vi);
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (s.form(v[i], v[j]) != 0) throw std::logic_error("extract_cocycle: V_l not isotropic");

    // V_a = perp(j + V_l) ∩ j^perp
    Subspace jvl = sum(red.j, Subspace::span(n, v));
    Subspace va = intersect(perp(jvl, s.omega), red.j_perp);
    if (va.dim() != adim) throw std::logic_error("extract_cocycle: V_a dimension mismatch");

    // t : a -> V_a, the V_a-component of the chosen lift of each a-basis vector
    Matrix frame(n, m + adim);  // [ j | V_a ]
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t r = 0; r < n; ++r) frame(r, k) = red.j.basis()[k][r];
    for (std::size_t k = 0; k < adim; ++k)
        for (std::size_t r = 0; r < n; ++r) frame(r, m + k) = va.basis()[k][r];
    auto split_jperp = [&](const Vec& x) -> std::pair<Vec, Vec> {
        auto coords = solve_unique(frame, x);
        if (!coords) throw std::logic_error("extract_cocycle: vector outside j + V_a");
        Vec jpart(n, Rat(0)), vapart(n, Rat(0));
        for (std::size_t k = 0; k < m; ++k) jpart = jpart + (*coords)[k] * red.j.basis()[k];
        for (std::size_t k = 0; k < adim; ++k)
            vapart = vapart + (*coords)[m + k] * va.basis()[k];
        return {jpart, vapart};
    };
    std::vector<Vec> t_of_a;
    for (std::size_t k = 0; k < adim; ++k) t_of_a.push_back(split_jperp(red.a_rep[k]).second);

    // p^* : l^* -> j via omega(p^* Z, s(L)) = Z(L)
    Matrix gram(m, m);  // gram(i, k) = omega(j_k, v_i)
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < m; ++k) gram(i, k) = s.form(red.j.basis()[k], v[i]);
    std::vector<Vec> p_star;
    for (std::size_t r = 0; r < m; ++r) {
        auto coeff = solve_unique(gram, unit_vec(m, r));
        if (!coeff) throw std::logic_error("extract_cocycle: p^* underdetermined");
        Vec y(n, Rat(0));
        for (std::size_t k = 0; k < m; ++k) y = y + (*coeff)[k] * red.j.basis()[k];
        p_star.push_back(y);
    }
    Matrix pstar_frame = Matrix::from_columns(n, p_star);
    Matrix ta_frame = Matrix::from_columns(n, t_of_a);

    CocycleTriple t(m, red.a);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t q = 0; q < adim; ++q) {
            Vec br = bracket(s.g, v[i], t_of_a[q]);
            auto [jpart, vapart] = split_jperp(br);
            auto acoords = solve_unique(ta_frame, vapart);
            auto zcoords = solve_unique(pstar_frame, jpart);
            if (!acoords || !zcoords) throw std::logic_error("extract_cocycle: bracket split failed");
            for (std::size_t r = 0; r < adim; ++r) t.xi_at(i, q, r) = (*acoords)[r];
            for (std::size_t k = 0; k < m; ++k) t.gamma_at(i, q, k) = (*zcoords)[k];
        }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            Vec br = bracket(s.g, v[i], v[j]);
            for (std::size_t k = 0; k < m; ++k) t.set_eps(i, j, k, s.form(br, v[k]));
        }

    // Phi : l^* + a + l -> g, columns p^*(Z_r), t(a_q), s(e_i)
    Matrix phi(n, n);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t row = 0; row < n; ++row) phi(row, r) = p_star[r][row];
    for (std::size_t q = 0; q < adim; ++q)
        for (std::size_t row = 0; row < n; ++row) phi(row, m + q) = t_of_a[q][row];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t row = 0; row < n; ++row) phi(row, m + adim + i) = v[i][row];

    SymplecticLieAlgebra model = build_standard_model(t);
    if (!check_symplectic_iso(model, s, phi))
        throw std::logic_error("extract_cocycle: certification failed");
    return {std::move(t), std::move(phi)};
}

}  // namespace sympla
