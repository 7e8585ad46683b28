#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "matrix.hpp"

namespace sympla {

/// Reduced row echelon form computed in place by exact Gaussian elimination
/// with first-nonzero pivoting. Returns the pivot column indices.
inline std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Rat inv = m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) /= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rat f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(const Matrix& m) {
    Matrix copy = m;
    return rref(copy).size();
}

/// Basis of {v : Mv = 0}, one column per free variable, with the free
/// variable set to 1. dim kernel = cols - rank.
inline std::vector<Vec> kernel(const Matrix& m) {
    Matrix r = m;
    std::vector<std::size_t> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols(), Rat(0));
        v[f] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

struct AffineSolution {
    Vec particular;
    std::vector<Vec> kernel_basis;
};

/// Full affine solution set of Mx = b, or nullopt when inconsistent. The
/// particular solution sets all free variables to zero.
inline std::optional<AffineSolution> solve(const Matrix& m, const Vec& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    std::vector<std::size_t> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    AffineSolution sol;
    sol.particular.assign(m.cols(), Rat(0));
    for (std::size_t k = 0; k < pivots.size(); ++k) sol.particular[pivots[k]] = aug(k, m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols(), Rat(0));
        v[f] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -aug(k, f);
        sol.kernel_basis.push_back(std::move(v));
    }
    return sol;
}

inline std::optional<Vec> solve_unique(const Matrix& m, const Vec& b) {
    auto sol = solve(m, b);
    if (!sol || !sol->kernel_basis.empty()) return std::nullopt;
    return sol->particular;
}

inline std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    std::size_t n = m.rows();
    if (n == 0) return Matrix(0, 0);
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    std::vector<std::size_t> pivots = rref(aug);
    if (pivots.size() != n || pivots.back() >= n) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

inline Rat determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    Matrix a = m;
    std::size_t n = a.rows();
    Rat det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0) ++p;
        if (p == n) return Rat(0);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        Rat inv = a(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c) == 0) continue;
            Rat f = a(i, c) / inv;
            for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    return det;
}

/// A linear subspace given by an independent basis. Bases are non-canonical;
/// equality is mutual containment, never basis comparison.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

    /// Reduces an arbitrary spanning set to an independent basis in column
    /// echelon form (deterministic for reproducible downstream choices).
    static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& vectors) {
        Subspace s(ambient_dim);
        if (vectors.empty()) return s;
        Matrix rows(vectors.size(), ambient_dim);
        for (std::size_t i = 0; i < vectors.size(); ++i) {
            if (vectors[i].size() != ambient_dim)
                throw std::invalid_argument("span: vector length mismatch");
            for (std::size_t j = 0; j < ambient_dim; ++j) rows(i, j) = vectors[i][j];
        }
        std::vector<std::size_t> pivots = rref(rows);
        for (std::size_t k = 0; k < pivots.size(); ++k) s.basis_.push_back(rows.row(k));
        return s;
    }

    static Subspace full(std::size_t ambient_dim) {
        std::vector<Vec> std_basis;
        for (std::size_t i = 0; i < ambient_dim; ++i) std_basis.push_back(unit_vec(ambient_dim, i));
        return span(ambient_dim, std_basis);
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }
    Matrix basis_matrix() const { return Matrix::from_columns(ambient_, basis_); }

    bool contains(const Vec& v) const {
        if (v.size() != ambient_) throw std::invalid_argument("contains: length mismatch");
        if (is_zero(v)) return true;
        if (basis_.empty()) return false;
        return solve(basis_matrix(), v).has_value();
    }

    bool contains(const Subspace& other) const {
        for (const auto& v : other.basis_)
            if (!contains(v)) return false;
        return true;
    }

    bool operator==(const Subspace& other) const {
        return ambient_ == other.ambient_ && dim() == other.dim() && contains(other);
    }
    bool operator!=(const Subspace& other) const { return !(*this == other); }

    /// Coordinates of v in this basis; nullopt if v is outside.
    std::optional<Vec> coordinates(const Vec& v) const {
        if (basis_.empty()) return is_zero(v) ? std::optional<Vec>(Vec{}) : std::nullopt;
        return solve_unique(basis_matrix(), v);
    }

private:
    std::size_t ambient_;
    std::vector<Vec> basis_;
};

inline Subspace kernel_subspace(const Matrix& m) {
    return Subspace::span(m.cols(), kernel(m));
}

inline Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("intersect: ambient dimension mismatch");
    if (a.dim() == 0 || b.dim() == 0) return Subspace(a.ambient_dim());
    // ker [A | -B] gives the pairs (x, y) with Ax = By; A x spans the intersection.
    Matrix joint(a.ambient_dim(), a.dim() + b.dim());
    Matrix am = a.basis_matrix(), bm = b.basis_matrix();
    for (std::size_t i = 0; i < a.ambient_dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) joint(i, j) = am(i, j);
        for (std::size_t j = 0; j < b.dim(); ++j) joint(i, a.dim() + j) = -bm(i, j);
    }
    std::vector<Vec> gens;
    for (const auto& k : kernel(joint)) {
        Vec x(k.begin(), k.begin() + a.dim());
        gens.push_back(am * x);
    }
    return Subspace::span(a.ambient_dim(), gens);
}

inline Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("sum: ambient dimension mismatch");
    std::vector<Vec> gens = a.basis();
    for (const auto& v : b.basis()) gens.push_back(v);
    return Subspace::span(a.ambient_dim(), gens);
}

/// {x : omega(x, w) = 0 for all w in W} for a skew form omega.
inline Subspace perp(const Subspace& w, const Matrix& omega) {
    if (omega.rows() != omega.cols() || omega.rows() != w.ambient_dim())
        throw std::invalid_argument("perp: omega shape mismatch");
    if (!omega.is_skew()) throw std::invalid_argument("perp: omega is not skew-symmetric");
    if (w.dim() == 0) return Subspace::full(w.ambient_dim());
    Matrix constraints(w.dim(), w.ambient_dim());
    for (std::size_t k = 0; k < w.dim(); ++k) {
        const Vec& wk = w.basis()[k];
        for (std::size_t j = 0; j < w.ambient_dim(); ++j) {
            Rat acc(0);
            for (std::size_t i = 0; i < w.ambient_dim(); ++i) acc += omega(j, i) * wk[i];
            constraints(k, j) = acc;
        }
    }
    return kernel_subspace(constraints);
}

}  // namespace sympla
