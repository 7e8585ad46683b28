#pragma once

#include <string>
#include <utility>
#include <vector>

#include "linalg.hpp"

namespace sympla {

/// A Lie algebra as antisymmetric structure constants: c[i][j][k] is the
/// coefficient of basis vector k in [b_i, b_j]. Values may be constructed
/// unvalidated; validate_lie decides antisymmetry and Jacobi exactly.
struct LieAlgebra {
    std::size_t dim = 0;
    std::vector<Rat> c;  // flat [i][j][k]

    LieAlgebra() = default;
    explicit LieAlgebra(std::size_t n) : dim(n), c(n * n * n, Rat(0)) {}

    const Rat& at(std::size_t i, std::size_t j, std::size_t k) const {
        return c[(i * dim + j) * dim + k];
    }

    /// Sets [b_i, b_j] = sum_k v_k b_k together with the antisymmetric mirror.
    void set_bracket(std::size_t i, std::size_t j, const Vec& v) {
        for (std::size_t k = 0; k < dim; ++k) {
            c[(i * dim + j) * dim + k] = v[k];
            c[(j * dim + i) * dim + k] = -v[k];
        }
    }

    void add_bracket_term(std::size_t i, std::size_t j, std::size_t k, const Rat& x) {
        c[(i * dim + j) * dim + k] += x;
        c[(j * dim + i) * dim + k] -= x;
    }

    static LieAlgebra abelian(std::size_t n) { return LieAlgebra(n); }

    bool operator==(const LieAlgebra& o) const { return dim == o.dim && c == o.c; }
};

inline Vec bracket(const LieAlgebra& g, const Vec& x, const Vec& y) {
    if (x.size() != g.dim || y.size() != g.dim)
        throw std::invalid_argument("bracket: vector length mismatch");
    Vec z(g.dim, Rat(0));
    for (std::size_t i = 0; i < g.dim; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < g.dim; ++j) {
            if (y[j] == 0) continue;
            Rat f = x[i] * y[j];
            for (std::size_t k = 0; k < g.dim; ++k) z[k] += f * g.at(i, j, k);
        }
    }
    return z;
}

/// Matrix of ad_x: y -> [x, y].
inline Matrix ad_matrix(const LieAlgebra& g, const Vec& x) {
    Matrix m(g.dim, g.dim);
    for (std::size_t j = 0; j < g.dim; ++j) {
        Vec col = bracket(g, x, unit_vec(g.dim, j));
        for (std::size_t k = 0; k < g.dim; ++k) m(k, j) = col[k];
    }
    return m;
}

struct LieDefect {
    std::size_t i, j, k;
    Vec defect;       // Jac(b_i,b_j,b_k) or antisymmetry residue of (i,j)
    bool jacobi;      // false: antisymmetry violation
};

struct LieReport {
    bool ok = true;
    std::vector<LieDefect> defects;
};

inline LieReport validate_lie(const LieAlgebra& g) {
    LieReport rep;
    for (std::size_t i = 0; i < g.dim; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            Vec r(g.dim);
            bool bad = false;
            for (std::size_t k = 0; k < g.dim; ++k) {
                r[k] = g.at(i, j, k) + g.at(j, i, k);
                if (r[k] != 0) bad = true;
            }
            if (bad) {
                rep.ok = false;
                rep.defects.push_back({i, j, 0, r, false});
            }
        }
    for (std::size_t i = 0; i < g.dim; ++i)
        for (std::size_t j = i + 1; j < g.dim; ++j)
            for (std::size_t k = j + 1; k < g.dim; ++k) {
                Vec ei = unit_vec(g.dim, i), ej = unit_vec(g.dim, j), ek = unit_vec(g.dim, k);
                Vec jac = bracket(g, bracket(g, ei, ej), ek) +
                          bracket(g, bracket(g, ej, ek), ei) +
                          bracket(g, bracket(g, ek, ei), ej);
                if (!is_zero(jac)) {
                    rep.ok = false;
                    rep.defects.push_back({i, j, k, jac, true});
                }
            }
    return rep;
}

/// {x : [x, y] = 0 for all y}, the kernel of the stacked ad-matrix.
inline Subspace center(const LieAlgebra& g) {
    Matrix stacked(g.dim * g.dim, g.dim);
    for (std::size_t j = 0; j < g.dim; ++j) {
        Matrix adj = ad_matrix(g, unit_vec(g.dim, j));
        // row block: [x, b_j] components, linear in x; [x,b_j] = -ad_{b_j} x
        for (std::size_t k = 0; k < g.dim; ++k)
            for (std::size_t i = 0; i < g.dim; ++i) stacked(j * g.dim + k, i) = adj(k, i);
    }
    return kernel_subspace(stacked);
}

inline Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
    std::vector<Vec> gens;
    for (const auto& x : a.basis())
        for (const auto& y : b.basis()) gens.push_back(bracket(g, x, y));
    return Subspace::span(g.dim, gens);
}

/// g^1 = g, g^{k+1} = [g, g^k], until stabilization.
inline std::vector<Subspace> lower_central_series(const LieAlgebra& g) {
    std::vector<Subspace> series;
    series.push_back(Subspace::full(g.dim));
    while (true) {
        Subspace next = bracket_span(g, series.front(), series.back());
        if (next.dim() == series.back().dim()) break;
        series.push_back(next);
        if (next.dim() == 0) break;
    }
    return series;
}

struct NilpotencyResult {
    bool nilpotent;
    std::size_t lie_class;  // number of nonzero terms of the series when nilpotent
};

inline NilpotencyResult is_nilpotent(const LieAlgebra& g) {
    std::vector<Subspace> s = lower_central_series(g);
    if (s.back().dim() != 0) return {false, 0};
    return {true, s.size() - 1};
}

inline bool is_derivation(const LieAlgebra& g, const LinearMap& d) {
    if (d.rows() != g.dim || d.cols() != g.dim)
        throw std::invalid_argument("is_derivation: shape mismatch");
    for (std::size_t i = 0; i < g.dim; ++i)
        for (std::size_t j = i + 1; j < g.dim; ++j) {
            Vec x = unit_vec(g.dim, i), y = unit_vec(g.dim, j);
            Vec lhs = d * bracket(g, x, y);
            Vec rhs = bracket(g, d * x, y) + bracket(g, x, d * y);
            if (lhs != rhs) return false;
        }
    return true;
}

inline bool is_ideal(const LieAlgebra& g, const Subspace& j) {
    for (std::size_t i = 0; i < g.dim; ++i)
        for (const auto& w : j.basis())
            if (!j.contains(bracket(g, unit_vec(g.dim, i), w))) return false;
    return true;
}

/// Deterministic complement: the lexicographically first standard basis
/// vectors completing j.
inline std::vector<std::size_t> lex_complement_indices(const Subspace& j) {
    std::vector<std::size_t> idx;
    Subspace cur = j;
    for (std::size_t i = 0; i < j.ambient_dim() && cur.dim() < j.ambient_dim(); ++i) {
        Vec e = unit_vec(j.ambient_dim(), i);
        if (!cur.contains(e)) {
            idx.push_back(i);
            cur = sum(cur, Subspace::span(j.ambient_dim(), {e}));
        }
    }
    return idx;
}

struct Quotient {
    LieAlgebra algebra;
    LinearMap projection;  // (dim g - dim j) x dim g
    std::vector<Vec> complement;  // lifts of the quotient basis
};

inline Quotient quotient(const LieAlgebra& g, const Subspace& j) {
    if (j.ambient_dim() != g.dim) throw std::invalid_argument("quotient: ambient mismatch");
    if (!is_ideal(g, j)) throw std::invalid_argument("quotient: j is not an ideal");
    std::vector<std::size_t> comp = lex_complement_indices(j);
    std::size_t q = comp.size();
    // columns: j basis then complement vectors; coordinates in this frame give
    // the j-part and the quotient coordinates.
    Matrix frame(g.dim, j.dim() + q);
    for (std::size_t k = 0; k < j.dim(); ++k)
        for (std::size_t i = 0; i < g.dim; ++i) frame(i, k) = j.basis()[k][i];
    for (std::size_t k = 0; k < q; ++k) frame(comp[k], j.dim() + k) = 1;

    auto project = [&](const Vec& v) -> Vec {
        auto sol = solve_unique(frame, v);
        if (!sol) throw std::logic_error("quotient: frame is not a basis");
        return Vec(sol->begin() + j.dim(), sol->end());
    };

    Quotient result;
    result.algebra = LieAlgebra(q);
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = a + 1; b < q; ++b) {
            Vec br = bracket(g, unit_vec(g.dim, comp[a]), unit_vec(g.dim, comp[b]));
            result.algebra.set_bracket(a, b, project(br));
        }
    result.projection = Matrix(q, g.dim);
    for (std::size_t col = 0; col < g.dim; ++col) {
        Vec p = project(unit_vec(g.dim, col));
        for (std::size_t r = 0; r < q; ++r) result.projection(r, col) = p[r];
    }
    for (std::size_t k = 0; k < q; ++k) result.complement.push_back(unit_vec(g.dim, comp[k]));
    return result;
}

/// True iff Phi[x,y]_1 = [Phi x, Phi y]_2 on basis pairs. Throws on singular Phi.
inline bool check_iso(const LieAlgebra& g1, const LieAlgebra& g2, const LinearMap& phi) {
    if (g1.dim != g2.dim || phi.rows() != g1.dim || phi.cols() != g1.dim)
        throw std::invalid_argument("check_iso: shape mismatch");
    if (rank(phi) != g1.dim) throw std::invalid_argument("check_iso: singular map");
    for (std::size_t i = 0; i < g1.dim; ++i)
        for (std::size_t j = i + 1; j < g1.dim; ++j) {
            Vec lhs = phi * bracket(g1, unit_vec(g1.dim, i), unit_vec(g1.dim, j));
            Vec rhs = bracket(g2, phi.column(i), phi.column(j));
            if (lhs != rhs) return false;
        }
    return true;
}

/// Structure constants of a subalgebra on an explicit basis (the span must be
/// closed under the bracket).
inline LieAlgebra subalgebra_on(const LieAlgebra& g, const Subspace& h) {
    LieAlgebra sub(h.dim());
    for (std::size_t a = 0; a < h.dim(); ++a)
        for (std::size_t b = a + 1; b < h.dim(); ++b) {
            Vec br = bracket(g, h.basis()[a], h.basis()[b]);
            auto coords = h.coordinates(br);
            if (!coords) throw std::invalid_argument("subalgebra_on: span not bracket-closed");
            sub.set_bracket(a, b, *coords);
        }
    return sub;
}

}  // namespace sympla
