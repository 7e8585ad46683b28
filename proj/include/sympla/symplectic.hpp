#pragma once

#include <string>
#include <vector>

#include "lie.hpp"

namespace sympla {

/// A Lie algebra with a skew, non-degenerate, closed 2-form given as a matrix
/// in the same basis.
struct SymplecticLieAlgebra {
    LieAlgebra g;
    Matrix omega;

    SymplecticLieAlgebra() = default;
    SymplecticLieAlgebra(LieAlgebra lie, Matrix om) : g(std::move(lie)), omega(std::move(om)) {}

    std::size_t dim() const { return g.dim; }

    Rat form(const Vec& x, const Vec& y) const { return bilinear(omega, x, y); }

    bool operator==(const SymplecticLieAlgebra& o) const {
        return g == o.g && omega == o.omega;
    }
};

struct SymplecticDefect {
    std::size_t i, j, k;
    Rat value;  // d omega(b_i, b_j, b_k)
};

struct SymplecticReport {
    bool skew = true;
    bool nondegenerate = true;
    bool closed = true;
    std::vector<SymplecticDefect> closedness_defects;
    bool ok() const { return skew && nondegenerate && closed; }
};

inline Rat d_omega(const SymplecticLieAlgebra& s, const Vec& x, const Vec& y, const Vec& z) {
    return -s.form(bracket(s.g, x, y), z) + s.form(bracket(s.g, x, z), y) -
           s.form(bracket(s.g, y, z), x);
}

inline SymplecticReport validate_symplectic(const SymplecticLieAlgebra& s) {
    SymplecticReport rep;
    if (s.omega.rows() != s.dim() || s.omega.cols() != s.dim() || !s.omega.is_skew())
        rep.skew = false;
    if (rep.skew && rank(s.omega) != s.dim()) rep.nondegenerate = false;
    std::size_t n = s.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Rat v = d_omega(s, unit_vec(n, i), unit_vec(n, j), unit_vec(n, k));
                if (v != 0) {
                    rep.closed = false;
                    rep.closedness_defects.push_back({i, j, k, v});
                }
            }
    return rep;
}

/// j = z(g) intersected with its omega-orthogonal space. Zero exactly when
/// the center is non-degenerate.
inline Subspace canonical_isotropic_ideal(const SymplecticLieAlgebra& s) {
    Subspace z = center(s.g);
    return intersect(z, perp(z, s.omega));
}

struct ReductionResult {
    Subspace j;               // canonical isotropic ideal
    SymplecticLieAlgebra a;   // j^perp / j with the induced form
    std::size_t l_dim = 0;    // dim(g / j^perp)
    Subspace j_perp;
    std::vector<Vec> a_rep;   // lifts of the a-basis into g (inside j^perp)
    LinearMap l_proj;         // g -> l, quotient projection by j^perp
    std::vector<Vec> l_rep;   // lifts of the l-basis (lex-first complement of j^perp)

    ReductionResult() : j(0), j_perp(0) {}
};

/// Canonical symplectic reduction along j = z and z^perp. Internal consistency
/// failures throw; they cannot occur for validated input.
inline ReductionResult reduce(const SymplecticLieAlgebra& s) {
    ReductionResult r;
    r.j = canonical_isotropic_ideal(s);
    r.j_perp = perp(r.j, s.omega);
    if (!r.j_perp.contains(r.j)) throw std::logic_error("reduce: j not isotropic");
    if (!is_ideal(s.g, r.j) || !is_ideal(s.g, r.j_perp))
        throw std::logic_error("reduce: canonical spaces are not ideals");

    LieAlgebra sub = subalgebra_on(s.g, r.j_perp);
    Matrix sub_omega(r.j_perp.dim(), r.j_perp.dim());
    for (std::size_t x = 0; x < r.j_perp.dim(); ++x)
        for (std::size_t y = 0; y < r.j_perp.dim(); ++y)
            sub_omega(x, y) = s.form(r.j_perp.basis()[x], r.j_perp.basis()[y]);

    // j in subalgebra coordinates
    std::vector<Vec> j_in_sub;
    for (const auto& w : r.j.basis()) {
        auto coords = r.j_perp.coordinates(w);
        if (!coords) throw std::logic_error("reduce: j outside j^perp");
        j_in_sub.push_back(*coords);
    }
    Quotient q = quotient(sub, Subspace::span(r.j_perp.dim(), j_in_sub));

    std::size_t adim = q.algebra.dim;
    Matrix a_omega(adim, adim);
    for (std::size_t x = 0; x < adim; ++x) {
        Vec lift_x(s.dim(), Rat(0));
        for (std::size_t i = 0; i < r.j_perp.dim(); ++i)
            lift_x = lift_x + q.complement[x][i] * r.j_perp.basis()[i];
        r.a_rep.push_back(lift_x);
    }
    for (std::size_t x = 0; x < adim; ++x)
        for (std::size_t y = 0; y < adim; ++y) a_omega(x, y) = s.form(r.a_rep[x], r.a_rep[y]);
    r.a = SymplecticLieAlgebra(q.algebra, a_omega);

    r.l_dim = s.dim() - r.j_perp.dim();
    Quotient lq = quotient(s.g, r.j_perp);
    r.l_proj = lq.projection;
    r.l_rep = lq.complement;
    for (std::size_t i = 0; i < lq.algebra.dim; ++i)
        for (std::size_t jj = 0; jj < lq.algebra.dim; ++jj)
            for (std::size_t k = 0; k < lq.algebra.dim; ++k)
                if (lq.algebra.at(i, jj, k) != 0)
                    throw std::logic_error("reduce: g / j^perp is not abelian");
    return r;
}

}  // namespace sympla
