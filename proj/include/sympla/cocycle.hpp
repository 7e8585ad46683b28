#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "symplectic.hpp"

namespace sympla {

/// Candidate quadratic cocycle (gamma, epsilon, xi) on (l = R^m, a, omega_a).
/// Index conventions:
///   gamma[i][j][k]   = (gamma(e_i)(a_j))(e_k)
///   epsilon[i][j][k] = (epsilon(e_i, e_j))(e_k), antisymmetric in (i, j)
///   xi[i][j][k]      = coefficient of a_k in xi(e_i)(a_j)
/// Membership in Z^2, Z^2_sharp, Z^2_0 is not an invariant of the type; it is
/// decided by the predicates below.
struct CocycleTriple {
    std::size_t l_dim = 0;
    SymplecticLieAlgebra a;
    std::vector<Rat> gamma;    // m * 2n * m
    std::vector<Rat> epsilon;  // m * m * m
    std::vector<Rat> xi;       // m * 2n * 2n

    CocycleTriple() = default;
    CocycleTriple(std::size_t m, SymplecticLieAlgebra a_)
        : l_dim(m),
          a(std::move(a_)),
          gamma(m * a.dim() * m, Rat(0)),
          epsilon(m * m * m, Rat(0)),
          xi(m * a.dim() * a.dim(), Rat(0)) {}

    std::size_t a_dim() const { return a.dim(); }

    Rat& gamma_at(std::size_t i, std::size_t j, std::size_t k) {
        return gamma[(i * a_dim() + j) * l_dim + k];
    }
    const Rat& gamma_at(std::size_t i, std::size_t j, std::size_t k) const {
        return gamma[(i * a_dim() + j) * l_dim + k];
    }
    const Rat& eps_at(std::size_t i, std::size_t j, std::size_t k) const {
        return epsilon[(i * l_dim + j) * l_dim + k];
    }
    Rat& xi_at(std::size_t i, std::size_t j, std::size_t k) {
        return xi[(i * a_dim() + j) * a_dim() + k];
    }
    const Rat& xi_at(std::size_t i, std::size_t j, std::size_t k) const {
        return xi[(i * a_dim() + j) * a_dim() + k];
    }

    /// Sets (epsilon(e_i, e_j))(e_k) together with the antisymmetric mirror.
    void set_eps(std::size_t i, std::size_t j, std::size_t k, const Rat& v) {
        epsilon[(i * l_dim + j) * l_dim + k] = v;
        epsilon[(j * l_dim + i) * l_dim + k] = -v;
    }

    /// Matrix of xi(L) for L = sum coeffs[i] e_i.
    Matrix xi_of(const Vec& coeffs) const {
        Matrix m(a_dim(), a_dim());
        for (std::size_t i = 0; i < l_dim; ++i) {
            if (coeffs[i] == 0) continue;
            for (std::size_t j = 0; j < a_dim(); ++j)
                for (std::size_t k = 0; k < a_dim(); ++k)
                    m(k, j) += coeffs[i] * xi_at(i, j, k);
        }
        return m;
    }

    Matrix xi_of(std::size_t i) const { return xi_of(unit_vec(l_dim, i)); }

    /// gamma(e_i) as a map a -> l^*: entry (k, j) = gamma(e_i, a_j, e_k).
    Matrix gamma_of(std::size_t i) const {
        Matrix m(l_dim, a_dim());
        for (std::size_t j = 0; j < a_dim(); ++j)
            for (std::size_t k = 0; k < l_dim; ++k) m(k, j) = gamma_at(i, j, k);
        return m;
    }

    /// epsilon(e_i, e_j) in l^* coordinates.
    Vec eps_of(std::size_t i, std::size_t j) const {
        Vec v(l_dim);
        for (std::size_t k = 0; k < l_dim; ++k) v[k] = eps_at(i, j, k);
        return v;
    }

    bool operator==(const CocycleTriple& o) const {
        return l_dim == o.l_dim && a == o.a && gamma == o.gamma && epsilon == o.epsilon &&
               xi == o.xi;
    }
    bool operator!=(const CocycleTriple& o) const { return !(*this == o); }
};

/// The maps derived from a triple:
///   alpha(L1, L2) = (gamma(L1))* L2 - (gamma(L2))* L1        (values in a)
///   beta(A1, A2)  = -omega(xi(.)A1, A2) - omega(A1, xi(.)A2) (values in l^*)
/// with the duality (f(A))(L) = omega_a(f*(L), A).
struct DerivedMaps {
    std::size_t l_dim = 0, a_dim = 0;
    std::vector<Rat> alpha;  // [i][j][p]: coefficient of a_p in alpha(e_i, e_j)
    std::vector<Rat> beta;   // [p][q][k]: (beta(a_p, a_q))(e_k)

    const Rat& alpha_at(std::size_t i, std::size_t j, std::size_t p) const {
        return alpha[(i * l_dim + j) * a_dim + p];
    }
    const Rat& beta_at(std::size_t p, std::size_t q, std::size_t k) const {
        return beta[(p * a_dim + q) * l_dim + k];
    }

    Vec alpha_of(std::size_t i, std::size_t j) const {
        Vec v(a_dim);
        for (std::size_t p = 0; p < a_dim; ++p) v[p] = alpha_at(i, j, p);
        return v;
    }

    Vec beta_of(const Vec& a1, const Vec& a2) const {
        Vec v(l_dim, Rat(0));
        for (std::size_t p = 0; p < a_dim; ++p) {
            if (a1[p] == 0) continue;
            for (std::size_t q = 0; q < a_dim; ++q) {
                if (a2[q] == 0) continue;
                for (std::size_t k = 0; k < l_dim; ++k) v[k] += a1[p] * a2[q] * beta_at(p, q, k);
            }
        }
        return v;
    }

    bool beta_zero() const {
        for (const auto& x : beta)
            if (x != 0) return false;
        return true;
    }
};

/// Solves omega_a(x, .) = f for x, i.e. the dual-map convention of the
/// cocycle calculus. f is given by its values on the a-basis.
inline Vec omega_dual(const Matrix& omega, const Vec& f) {
    Matrix m = omega.transpose();
    auto x = solve_unique(m, f);
    if (!x) throw std::invalid_argument("omega_dual: degenerate form");
    return *x;
}

inline DerivedMaps derived_maps(const CocycleTriple& t) {
    DerivedMaps d;
    d.l_dim = t.l_dim;
    d.a_dim = t.a_dim();
    d.alpha.assign(t.l_dim * t.l_dim * d.a_dim, Rat(0));
    d.beta.assign(d.a_dim * d.a_dim * t.l_dim, Rat(0));
    // (gamma(e_i))* e_k: omega(x, a_j) = gamma(e_i, a_j, e_k) for all j
    std::vector<std::vector<Vec>> gdual(t.l_dim, std::vector<Vec>(t.l_dim));
    for (std::size_t i = 0; i < t.l_dim; ++i)
        for (std::size_t k = 0; k < t.l_dim; ++k) {
            Vec f(d.a_dim);
            for (std::size_t j = 0; j < d.a_dim; ++j) f[j] = t.gamma_at(i, j, k);
            gdual[i][k] = omega_dual(t.a.omega, f);
        }
    for (std::size_t i = 0; i < t.l_dim; ++i)
        for (std::size_t j = 0; j < t.l_dim; ++j) {
            Vec v = gdual[i][j] - gdual[j][i];
            for (std::size_t p = 0; p < d.a_dim; ++p)
                d.alpha[(i * t.l_dim + j) * d.a_dim + p] = v[p];
        }
    for (std::size_t k = 0; k < t.l_dim; ++k) {
        Matrix xk = t.xi_of(k);
        for (std::size_t p = 0; p < d.a_dim; ++p) {
            Vec xp = xk.column(p);
            for (std::size_t q = 0; q < d.a_dim; ++q) {
                Vec xq = xk.column(q);
                d.beta[(p * d.a_dim + q) * t.l_dim + k] =
                    -bilinear(t.a.omega, xp, unit_vec(d.a_dim, q)) -
                    bilinear(t.a.omega, unit_vec(d.a_dim, p), xq);
            }
        }
    }
    return d;
}

// ---------------------------------------------------------------------------
// Cochains C^p(l, U) for abelian l = R^m and the wedge/differential calculus.

enum class ValueSpace { Reals, A, LStar, HomALStar };

inline std::size_t value_len(ValueSpace s, std::size_t m, std::size_t adim) {
    switch (s) {
        case ValueSpace::Reals: return 1;
        case ValueSpace::A: return adim;
        case ValueSpace::LStar: return m;
        case ValueSpace::HomALStar: return adim * m;
    }
    return 0;
}

/// Alternating p-cochain on l = R^m with values in a fixed coefficient space.
/// Coefficients are stored on strictly increasing index tuples.
struct Cochain {
    std::size_t degree = 0;
    std::size_t l_dim = 0;
    ValueSpace space = ValueSpace::Reals;
    std::size_t vlen = 0;
    std::map<std::vector<std::size_t>, Vec> coeffs;

    Cochain() = default;
    Cochain(std::size_t p, std::size_t m, ValueSpace s, std::size_t value_length)
        : degree(p), l_dim(m), space(s), vlen(value_length) {}

    void set(std::vector<std::size_t> idx, Vec v) {
        if (idx.size() != degree || v.size() != vlen)
            throw std::invalid_argument("cochain set: shape mismatch");
        coeffs[std::move(idx)] = std::move(v);
    }

    /// Value on basis vectors e_{idx[0]}, ..., with the alternating sign.
    Vec eval(std::vector<std::size_t> idx) const {
        if (idx.size() != degree) throw std::invalid_argument("cochain eval: arity mismatch");
        int sgn = 1;
        for (std::size_t i = 0; i + 1 < idx.size(); ++i)
            for (std::size_t j = 0; j + 1 < idx.size() - i; ++j)
                if (idx[j] > idx[j + 1]) {
                    std::swap(idx[j], idx[j + 1]);
                    sgn = -sgn;
                }
        for (std::size_t i = 0; i + 1 < idx.size(); ++i)
            if (idx[i] == idx[i + 1]) return Vec(vlen, Rat(0));
        auto it = coeffs.find(idx);
        if (it == coeffs.end()) return Vec(vlen, Rat(0));
        Vec v = it->second;
        if (sgn < 0)
            for (auto& x : v) x = -x;
        return v;
    }

    bool is_zero_cochain() const {
        for (const auto& [k, v] : coeffs)
            if (!is_zero(v)) return false;
        return true;
    }
};

/// An l-equivariant bilinear pairing m : U x V -> W between coefficient
/// spaces, used by the shuffle product.
struct Pairing {
    ValueSpace lhs, rhs, out;
    std::function<Vec(const Vec&, const Vec&)> apply;
};

/// ev(f, A) = f(A) for f in Hom(a, l^*).
inline Pairing ev_pairing(std::size_t m, std::size_t adim) {
    return {ValueSpace::HomALStar, ValueSpace::A, ValueSpace::LStar,
            [m, adim](const Vec& f, const Vec& a) {
                Vec out(m, Rat(0));
                for (std::size_t j = 0; j < adim; ++j) {
                    if (a[j] == 0) continue;
                    for (std::size_t k = 0; k < m; ++k) out[k] += a[j] * f[j * m + k];
                }
                return out;
            }};
}

inline Pairing omega_pairing(const Matrix& omega) {
    return {ValueSpace::A, ValueSpace::A, ValueSpace::Reals,
            [omega](const Vec& x, const Vec& y) { return Vec{bilinear(omega, x, y)}; }};
}

inline Pairing bracket_pairing(const LieAlgebra& a) {
    return {ValueSpace::A, ValueSpace::A, ValueSpace::A,
            [a](const Vec& x, const Vec& y) { return bracket(a, x, y); }};
}

/// beta as a pairing a x a -> l^* for a fixed derived beta tensor.
inline Pairing beta_pairing(const DerivedMaps& d) {
    return {ValueSpace::A, ValueSpace::A, ValueSpace::LStar,
            [d](const Vec& x, const Vec& y) { return d.beta_of(x, y); }};
}

namespace detail {
inline void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

inline int shuffle_sign(const std::vector<std::size_t>& first_positions, std::size_t total) {
    // sign of the permutation that puts the chosen positions first, keeping
    // relative order inside both blocks
    std::vector<bool> chosen(total, false);
    for (auto p : first_positions) chosen[p] = true;
    int sgn = 1;
    std::size_t seen_unchosen = 0;
    for (std::size_t i = 0; i < total; ++i) {
        if (!chosen[i])
            ++seen_unchosen;
        else if (seen_unchosen % 2 == 1)
            sgn = -sgn;
    }
    return sgn;
}
}  // namespace detail

/// Shuffle product m(u ^ v): degree p+q alternating cochain,
/// sum over S_{p+q} / (S_p x S_q) of sgn * m(u(...), v(...)).
inline Cochain wedge(const Pairing& m, const Cochain& u, const Cochain& v) {
    if (u.space != m.lhs || v.space != m.rhs)
        throw std::invalid_argument("wedge: incompatible value spaces for pairing");
    if (u.l_dim != v.l_dim) throw std::invalid_argument("wedge: l dimension mismatch");
    std::size_t p = u.degree, q = v.degree, mdim = u.l_dim;
    std::size_t out_len = 0;
    switch (m.out) {
        case ValueSpace::Reals: out_len = 1; break;
        case ValueSpace::A: out_len = 0; break;       // resolved below
        case ValueSpace::LStar: out_len = mdim; break;
        case ValueSpace::HomALStar: out_len = 0; break;
    }
    // probe the pairing once for output length when it depends on a
    if (out_len == 0) out_len = m.apply(Vec(u.vlen, Rat(0)), Vec(v.vlen, Rat(0))).size();
    Cochain w(p + q, mdim, m.out, out_len);
    std::vector<std::vector<std::size_t>> tuples;
    detail::subsets(mdim, p + q, tuples);
    std::vector<std::vector<std::size_t>> splits;
    detail::subsets(p + q, p, splits);
    for (const auto& idx : tuples) {
        Vec acc(out_len, Rat(0));
        for (const auto& first : splits) {
            std::vector<bool> in_first(p + q, false);
            for (auto pos : first) in_first[pos] = true;
            std::vector<std::size_t> uidx, vidx;
            for (std::size_t i = 0; i < p + q; ++i)
                (in_first[i] ? uidx : vidx).push_back(idx[i]);
            Vec term = m.apply(u.eval(uidx), v.eval(vidx));
            int sgn = detail::shuffle_sign(first, p + q);
            for (std::size_t i = 0; i < out_len; ++i)
                acc[i] += (sgn > 0 ? term[i] : -term[i]);
        }
        if (!is_zero(acc)) w.set(idx, acc);
    }
    return w;
}

/// Covariant differential for a-valued cochains over abelian l:
/// (d_xi u)(L_1..L_{p+1}) = sum_i (-1)^{i+1} xi(L_i) u(.. L_i omitted ..).
/// Only the abelian case is implemented; the ordinary differential term
/// vanishes there.
inline Cochain d_xi(const CocycleTriple& t, const Cochain& u) {
    if (u.space != ValueSpace::A) throw std::invalid_argument("d_xi: cochain must be a-valued");
    if (u.l_dim != t.l_dim) throw std::invalid_argument("d_xi: l dimension mismatch");
    Cochain w(u.degree + 1, u.l_dim, ValueSpace::A, t.a_dim());
    std::vector<Matrix> xi_mats;
    for (std::size_t i = 0; i < t.l_dim; ++i) xi_mats.push_back(t.xi_of(i));
    std::vector<std::vector<std::size_t>> tuples;
    detail::subsets(u.l_dim, u.degree + 1, tuples);
    for (const auto& idx : tuples) {
        Vec acc(t.a_dim(), Rat(0));
        for (std::size_t i = 0; i < idx.size(); ++i) {
            std::vector<std::size_t> rest;
            for (std::size_t j = 0; j < idx.size(); ++j)
                if (j != i) rest.push_back(idx[j]);
            Vec term = xi_mats[idx[i]] * u.eval(rest);
            if (i % 2 == 0)
                acc = acc + term;
            else
                acc = acc - term;
        }
        if (!is_zero(acc)) w.set(idx, acc);
    }
    return w;
}

// ---------------------------------------------------------------------------
// Predicates

struct ConditionReport {
    bool ok = true;
    // violated condition numbers (1..5) with a short witness description
    std::vector<std::pair<int, std::string>> violations;

    void fail(int cond, std::string what) {
        ok = false;
        violations.emplace_back(cond, std::move(what));
    }
    bool violated(int cond) const {
        for (const auto& [c, w] : violations)
            if (c == cond) return true;
        return false;
    }
};

/// Factor-system conditions for (xi, alpha): Im xi in der(a),
/// (1/2)[xi ^ xi] = ad o alpha and d_xi alpha = 0 (abelian l).
inline ConditionReport is_factor_system(const CocycleTriple& t, const DerivedMaps& d) {
    ConditionReport rep;
    std::vector<Matrix> xi_mats;
    for (std::size_t i = 0; i < t.l_dim; ++i) xi_mats.push_back(t.xi_of(i));
    for (std::size_t i = 0; i < t.l_dim; ++i)
        if (!is_derivation(t.a.g, xi_mats[i]))
            rep.fail(1, "xi(e_" + std::to_string(i + 1) + ") is not a derivation");
    for (std::size_t i = 0; i < t.l_dim; ++i)
        for (std::size_t j = i + 1; j < t.l_dim; ++j) {
            Matrix comm = xi_mats[i] * xi_mats[j] - xi_mats[j] * xi_mats[i];
            Matrix ad_alpha = ad_matrix(t.a.g, d.alpha_of(i, j));
            if (comm != ad_alpha)
                rep.fail(1, "[xi(e_" + std::to_string(i + 1) + "),xi(e_" + std::to_string(j + 1) +
                                 ")] != ad(alpha)");
        }
    for (std::size_t i = 0; i < t.l_dim; ++i)
        for (std::size_t j = i + 1; j < t.l_dim; ++j)
            for (std::size_t k = j + 1; k < t.l_dim; ++k) {
                Vec v = xi_mats[i] * d.alpha_of(j, k) - xi_mats[j] * d.alpha_of(i, k) +
                        xi_mats[k] * d.alpha_of(i, j);
                if (!is_zero(v))
                    rep.fail(1, "d_xi alpha != 0 at (" + std::to_string(i + 1) + "," +
                                     std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
            }
    return rep;
}

inline ConditionReport is_factor_system(const CocycleTriple& t) {
    return is_factor_system(t, derived_maps(t));
}

/// The five quadratic-cocycle conditions. Exact; the report lists violated
/// condition numbers with witnesses.
inline ConditionReport is_cocycle(const CocycleTriple& t) {
    DerivedMaps d = derived_maps(t);
    ConditionReport rep = is_factor_system(t, d);
    std::size_t m = t.l_dim, adim = t.a_dim();
    std::vector<Matrix> xi_mats;
    for (std::size_t i = 0; i < m; ++i) xi_mats.push_back(t.xi_of(i));

    // (2) beta(xi(L)A1, A2) + beta(A1, xi(L)A2) = gamma(L)[A1, A2]_a
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t p = 0; p < adim; ++p)
            for (std::size_t q = p + 1; q < adim; ++q) {
                Vec lhs = d.beta_of(xi_mats[i].column(p), unit_vec(adim, q)) +
                          d.beta_of(unit_vec(adim, p), xi_mats[i].column(q));
                Vec br = bracket(t.a.g, unit_vec(adim, p), unit_vec(adim, q));
                Vec rhs(m, Rat(0));
                for (std::size_t r = 0; r < adim; ++r) {
                    if (br[r] == 0) continue;
                    for (std::size_t k = 0; k < m; ++k) rhs[k] += br[r] * t.gamma_at(i, r, k);
                }
                if (lhs != rhs)
                    rep.fail(2, "at L=e_" + std::to_string(i + 1) + ", (a_" + std::to_string(p + 1) +
                                     ",a_" + std::to_string(q + 1) + ")");
            }

    // (3) d_{xi-hat} gamma + beta_0 o alpha = 0:
    // gamma(L2)(xi(L1)A) - gamma(L1)(xi(L2)A) + beta(alpha(L1,L2), A) = 0
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t q = 0; q < adim; ++q) {
                Vec xa1 = xi_mats[i].column(q), xa2 = xi_mats[j].column(q);
                Vec val(m, Rat(0));
                for (std::size_t r = 0; r < adim; ++r)
                    for (std::size_t k = 0; k < m; ++k)
                        val[k] += xa1[r] * t.gamma_at(j, r, k) - xa2[r] * t.gamma_at(i, r, k);
                val = val + d.beta_of(d.alpha_of(i, j), unit_vec(adim, q));
                if (!is_zero(val))
                    rep.fail(3, "at (e_" + std::to_string(i + 1) + ",e_" + std::to_string(j + 1) +
                                     "), a_" + std::to_string(q + 1));
            }

    // (4) ev(gamma ^ alpha) = 0:
    // gamma(L1)alpha(L2,L3) - gamma(L2)alpha(L1,L3) + gamma(L3)alpha(L1,L2) = 0
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t k = j + 1; k < m; ++k) {
                Vec val(m, Rat(0));
                auto add = [&](std::size_t li, const Vec& av, int sgn) {
                    for (std::size_t r = 0; r < adim; ++r) {
                        if (av[r] == 0) continue;
                        for (std::size_t s = 0; s < m; ++s)
                            val[s] += Rat(sgn) * av[r] * t.gamma_at(li, r, s);
                    }
                };
                add(i, d.alpha_of(j, k), 1);
                add(j, d.alpha_of(i, k), -1);
                add(k, d.alpha_of(i, j), 1);
                if (!is_zero(val))
                    rep.fail(4, "at (e_" + std::to_string(i + 1) + ",e_" + std::to_string(j + 1) +
                                     ",e_" + std::to_string(k + 1) + ")");
            }

    // (5) cyclic sum epsilon(L1,L2)L3 + epsilon(L2,L3)L1 + epsilon(L3,L1)L2 = 0
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t k = j + 1; k < m; ++k) {
                Rat v = t.eps_at(i, j, k) + t.eps_at(j, k, i) + t.eps_at(k, i, j);
                if (v != 0)
                    rep.fail(5, "cyclic sum at (e_" + std::to_string(i + 1) + ",e_" +
                                     std::to_string(j + 1) + ",e_" + std::to_string(k + 1) +
                                     ") = " + to_string(v));
            }
    return rep;
}

struct BalancedReport {
    bool ok = true;
    bool condition_a = true;
    bool condition_b = true;
    Subspace offending_l;  // L-projection of the joint kernel when (a) fails
    Subspace b_space;      // z(a) ∩ ker beta_0 ∩ a^l_xi ∩ ker gamma_0

    BalancedReport() : offending_l(0), b_space(0) {}
};

/// Balanced conditions (a) and (b). Condition (a) is one joint kernel
/// computation in l + a; condition (b) is a rank test of omega_a restricted
/// to z(a) ∩ ker beta_0 ∩ a^l_xi ∩ ker gamma_0.
inline BalancedReport is_balanced(const CocycleTriple& t) {
    BalancedReport rep;
    DerivedMaps d = derived_maps(t);
    std::size_t m = t.l_dim, adim = t.a_dim(), nvar = m + adim;
    std::vector<Matrix> xi_mats, ad_mats;
    for (std::size_t i = 0; i < m; ++i) xi_mats.push_back(t.xi_of(i));
    for (std::size_t p = 0; p < adim; ++p)
        ad_mats.push_back(ad_matrix(t.a.g, unit_vec(adim, p)));

    // unknowns: (L_0..L_{m-1}, A_0..A_{adim-1})
    std::vector<Vec> rows;
    auto new_row = [&]() -> Vec { return Vec(nvar, Rat(0)); };
    // (a.1)  [A, a_q] + xi(L) a_q = 0, each component r
    for (std::size_t q = 0; q < adim; ++q)
        for (std::size_t r = 0; r < adim; ++r) {
            Vec row = new_row();
            for (std::size_t i = 0; i < m; ++i) row[i] += xi_mats[i](r, q);
            for (std::size_t p = 0; p < adim; ++p) row[m + p] += ad_mats[p](r, q);
            rows.push_back(row);
        }
    // (a.2)  gamma(L)(a_q)(e_k) + beta(A, a_q)(e_k) = 0
    for (std::size_t q = 0; q < adim; ++q)
        for (std::size_t k = 0; k < m; ++k) {
            Vec row = new_row();
            for (std::size_t i = 0; i < m; ++i) row[i] += t.gamma_at(i, q, k);
            for (std::size_t p = 0; p < adim; ++p) row[m + p] += d.beta_at(p, q, k);
            rows.push_back(row);
        }
    // (a.3)  alpha(L, e_j) - xi(e_j) A = 0, each component r
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t r = 0; r < adim; ++r) {
            Vec row = new_row();
            for (std::size_t i = 0; i < m; ++i) row[i] += d.alpha_at(i, j, r);
            for (std::size_t p = 0; p < adim; ++p) row[m + p] -= xi_mats[j](r, p);
            rows.push_back(row);
        }
    // (a.4)  epsilon(L, e_j)(e_k) - gamma(e_j)(A)(e_k) = 0
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k) {
            Vec row = new_row();
            for (std::size_t i = 0; i < m; ++i) row[i] += t.eps_at(i, j, k);
            for (std::size_t p = 0; p < adim; ++p) row[m + p] -= t.gamma_at(j, p, k);
            rows.push_back(row);
        }
    Matrix system(rows.size(), nvar);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t ccol = 0; ccol < nvar; ++ccol) system(r, ccol) = rows[r][ccol];
    std::vector<Vec> l_parts;
    for (const auto& kvec : kernel(system))
        l_parts.push_back(Vec(kvec.begin(), kvec.begin() + m));
    rep.offending_l = Subspace::span(m, l_parts);
    rep.condition_a = rep.offending_l.dim() == 0;

    // condition (b)
    Subspace w = center(t.a.g);
    {
        // ker beta_0
        Matrix bm(adim * m, adim);
        for (std::size_t q = 0; q < adim; ++q)
            for (std::size_t k = 0; k < m; ++k)
                for (std::size_t p = 0; p < adim; ++p) bm(q * m + k, p) = d.beta_at(p, q, k);
        w = intersect(w, kernel_subspace(bm));
    }
    {
        // a^l_xi = ker xi_0
        Matrix xm(m * adim, adim);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t r = 0; r < adim; ++r)
                for (std::size_t p = 0; p < adim; ++p) xm(i * adim + r, p) = xi_mats[i](r, p);
        w = intersect(w, kernel_subspace(xm));
    }
    {
        // ker gamma_0
        Matrix gm(m * m, adim);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t k = 0; k < m; ++k)
                for (std::size_t p = 0; p < adim; ++p) gm(i * m + k, p) = t.gamma_at(i, p, k);
        w = intersect(w, kernel_subspace(gm));
    }
    rep.b_space = w;
    Matrix gram(w.dim(), w.dim());
    for (std::size_t x = 0; x < w.dim(); ++x)
        for (std::size_t y = 0; y < w.dim(); ++y)
            gram(x, y) = bilinear(t.a.omega, w.basis()[x], w.basis()[y]);
    rep.condition_b = rank(gram) == w.dim();
    rep.ok = rep.condition_a && rep.condition_b;
    return rep;
}

struct NilpotentCocycleReport {
    bool ok = true;
    bool a_nilpotent = true;
    bool xi_family_nilpotent = true;
};

/// Nilpotency of the xi-family: the associative algebra generated by the
/// xi(e_i) (span-closure under multiplication) must have a vanishing power.
inline bool xi_family_nilpotent(const CocycleTriple& t) {
    std::size_t adim = t.a_dim();
    if (adim == 0 || t.l_dim == 0) return true;
    auto flatten = [adim](const Matrix& mm) {
        Vec v(adim * adim);
        for (std::size_t i = 0; i < adim; ++i)
            for (std::size_t j = 0; j < adim; ++j) v[i * adim + j] = mm(i, j);
        return v;
    };
    auto unflatten = [adim](const Vec& v) {
        Matrix mm(adim, adim);
        for (std::size_t i = 0; i < adim; ++i)
            for (std::size_t j = 0; j < adim; ++j) mm(i, j) = v[i * adim + j];
        return mm;
    };
    std::vector<Matrix> gens;
    for (std::size_t i = 0; i < t.l_dim; ++i) gens.push_back(t.xi_of(i));
    // span-closure under multiplication
    std::vector<Vec> span_vecs;
    for (const auto& g : gens) span_vecs.push_back(flatten(g));
    Subspace algebra = Subspace::span(adim * adim, span_vecs);
    while (true) {
        std::vector<Vec> next = algebra.basis();
        bool grew = false;
        for (const auto& x : algebra.basis())
            for (const auto& g : gens) {
                Vec prod = flatten(unflatten(x) * g);
                if (!algebra.contains(prod)) {
                    next.push_back(prod);
                    grew = true;
                }
            }
        if (!grew) break;
        algebra = Subspace::span(adim * adim, next);
    }
    // descending chain of powers
    Subspace power = algebra;
    while (power.dim() > 0) {
        std::vector<Vec> prods;
        for (const auto& x : algebra.basis())
            for (const auto& y : power.basis())
                prods.push_back(flatten(unflatten(x) * unflatten(y)));
        Subspace next = Subspace::span(adim * adim, prods);
        if (next.dim() == power.dim()) return false;
        power = next;
    }
    return true;
}

inline NilpotentCocycleReport is_nilpotent_cocycle(const CocycleTriple& t) {
    NilpotentCocycleReport rep;
    rep.a_nilpotent = is_nilpotent(t.a.g).nilpotent;
    rep.xi_family_nilpotent = xi_family_nilpotent(t);
    rep.ok = rep.a_nilpotent && rep.xi_family_nilpotent;
    return rep;
}

// ---------------------------------------------------------------------------
// Standard model

/// The symplectic Lie algebra on l^* + a + l built from a triple. Basis order:
/// Z-block (l^*), A-block (a), L-block (l). Never rejects: an invalid triple
/// produces an algebra that fails validation, so the iff of the model theorem
/// stays empirically testable.
inline SymplecticLieAlgebra build_standard_model(const CocycleTriple& t) {
    DerivedMaps d = derived_maps(t);
    std::size_t m = t.l_dim, adim = t.a_dim(), n = 2 * m + adim;
    const std::size_t zoff = 0, aoff = m, loff = m + adim;
    LieAlgebra g(n);
    // [A_p, A_q] = beta(a_p, a_q) + [a_p, a_q]_a
    for (std::size_t p = 0; p < adim; ++p)
        for (std::size_t q = p + 1; q < adim; ++q) {
            Vec v(n, Rat(0));
            for (std::size_t k = 0; k < m; ++k) v[zoff + k] = d.beta_at(p, q, k);
            Vec br = bracket(t.a.g, unit_vec(adim, p), unit_vec(adim, q));
            for (std::size_t r = 0; r < adim; ++r) v[aoff + r] = br[r];
            g.set_bracket(aoff + p, aoff + q, v);
        }
    // [L_i, A_q] = gamma(e_i)a_q + xi(e_i)a_q
    for (std::size_t i = 0; i < m; ++i) {
        Matrix xi_i = t.xi_of(i);
        for (std::size_t q = 0; q < adim; ++q) {
            Vec v(n, Rat(0));
            for (std::size_t k = 0; k < m; ++k) v[zoff + k] = t.gamma_at(i, q, k);
            for (std::size_t r = 0; r < adim; ++r) v[aoff + r] = xi_i(r, q);
            g.set_bracket(loff + i, aoff + q, v);
        }
    }
    // [L_i, L_j] = epsilon(e_i,e_j) + alpha(e_i,e_j)
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            Vec v(n, Rat(0));
            for (std::size_t k = 0; k < m; ++k) v[zoff + k] = t.eps_at(i, j, k);
            for (std::size_t r = 0; r < adim; ++r) v[aoff + r] = d.alpha_at(i, j, r);
            g.set_bracket(loff + i, loff + j, v);
        }
    Matrix omega(n, n);
    for (std::size_t k = 0; k < m; ++k) {
        omega(zoff + k, loff + k) = 1;
        omega(loff + k, zoff + k) = -1;
    }
    for (std::size_t p = 0; p < adim; ++p)
        for (std::size_t q = 0; q < adim; ++q) omega(aoff + p, aoff + q) = t.a.omega(p, q);
    return SymplecticLieAlgebra(std::move(g), std::move(omega));
}

/// The l^* block of the standard model as a subspace of it.
inline Subspace lstar_block(const CocycleTriple& t) {
    std::size_t n = 2 * t.l_dim + t.a_dim();
    std::vector<Vec> basis;
    for (std::size_t k = 0; k < t.l_dim; ++k) basis.push_back(unit_vec(n, k));
    return Subspace::span(n, basis);
}

// ---------------------------------------------------------------------------
// The M_epsilon convention for l = R^3, a = 0:
// (M)_{ij} = epsilon(v_j)(e_i) with v_1 = e_2^e_3, v_2 = e_3^e_1, v_3 = e_1^e_2.

inline Matrix eps_to_matrix(const CocycleTriple& t) {
    if (t.l_dim != 3) throw std::invalid_argument("eps_to_matrix: l must be 3-dimensional");
    Matrix m(3, 3);
    const std::size_t pair_first[3] = {1, 2, 0};
    const std::size_t pair_second[3] = {2, 0, 1};
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t i = 0; i < 3; ++i) m(i, j) = t.eps_at(pair_first[j], pair_second[j], i);
    return m;
}

inline CocycleTriple eps_from_matrix(const Matrix& m) {
    if (m.rows() != 3 || m.cols() != 3) throw std::invalid_argument("eps_from_matrix: need 3x3");
    CocycleTriple t(3, SymplecticLieAlgebra(LieAlgebra::abelian(0), Matrix(0, 0)));
    const std::size_t pair_first[3] = {1, 2, 0};
    const std::size_t pair_second[3] = {2, 0, 1};
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t i = 0; i < 3; ++i)
            t.set_eps(pair_first[j], pair_second[j], i, m(i, j));
    return t;
}

}  // namespace sympla
