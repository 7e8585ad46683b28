#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cocycle.hpp"

namespace sympla {

/// The C^1(l, a) shift: tau as a (2n x m) matrix, columns tau(e_i), plus an
/// optional selfadjoint sigma_bar: l -> l^* parametrizing the equivalence
/// isomorphism (it does not change the shifted cocycle).
struct TauShift {
    Matrix tau;
    std::optional<Matrix> sigma_bar;

    TauShift() = default;
    explicit TauShift(Matrix t) : tau(std::move(t)) {}
    TauShift(Matrix t, Matrix sigma) : tau(std::move(t)), sigma_bar(std::move(sigma)) {
        if (!sigma_bar->is_symmetric())
            throw std::invalid_argument("TauShift: sigma_bar must be selfadjoint");
    }
};

/// tau^*(a_q)(e_k) = omega_a(tau e_k, a_q), as an (m x 2n) matrix.
inline Matrix tau_star(const Matrix& omega_a, const Matrix& tau) {
    std::size_t adim = omega_a.rows(), m = tau.cols();
    Matrix ts(m, adim);
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t q = 0; q < adim; ++q)
            ts(k, q) = bilinear(omega_a, tau.column(k), unit_vec(adim, q));
    return ts;
}

/// The shifted triple (gamma, epsilon, xi) tau. sigma_bar is ignored here.
inline CocycleTriple act_tau(const CocycleTriple& t, const TauShift& s) {
    std::size_t m = t.l_dim, adim = t.a_dim();
    if (s.tau.rows() != adim || s.tau.cols() != m)
        throw std::invalid_argument("act_tau: tau shape mismatch");
    DerivedMaps d = derived_maps(t);
    Matrix ts = tau_star(t.a.omega, s.tau);
    std::vector<Matrix> xi_mats;
    for (std::size_t i = 0; i < m; ++i) xi_mats.push_back(t.xi_of(i));
    auto tau_of = [&](std::size_t i) { return s.tau.column(i); };
    auto tstar = [&](const Vec& a) {  // tau^*(a) in l^* coordinates
        Vec v(m, Rat(0));
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t q = 0; q < adim; ++q) v[k] += ts(k, q) * a[q];
        return v;
    };

    CocycleTriple out(m, t.a);
    // xi' = xi - ad_a o tau
    for (std::size_t i = 0; i < m; ++i) {
        Matrix ad_tau = ad_matrix(t.a.g, tau_of(i));
        for (std::size_t q = 0; q < adim; ++q)
            for (std::size_t r = 0; r < adim; ++r)
                out.xi_at(i, q, r) = xi_mats[i](r, q) - ad_tau(r, q);
    }
    // gamma' = gamma + tau~* o xi - tau~* o ad_a o tau - beta_0 o tau
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t q = 0; q < adim; ++q) {
            Vec xa = xi_mats[i].column(q);
            Vec ad_ta = bracket(t.a.g, tau_of(i), unit_vec(adim, q));
            Vec corr = tstar(xa) - tstar(ad_ta) - d.beta_of(tau_of(i), unit_vec(adim, q));
            for (std::size_t k = 0; k < m; ++k)
                out.gamma_at(i, q, k) = t.gamma_at(i, q, k) + corr[k];
        }
    }
    // epsilon' = epsilon + tau^* alpha - ev(gamma ^ tau) - tau^* o d_xi tau
    //            + (1/2) beta(tau ^ tau)
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            Vec ti = tau_of(i), tj = tau_of(j);
            Vec v(m, Rat(0));
            v = v + tstar(d.alpha_of(i, j));
            // ev(gamma ^ tau)(e_i, e_j) = gamma(e_i) tau(e_j) - gamma(e_j) tau(e_i)
            for (std::size_t q = 0; q < adim; ++q)
                for (std::size_t k = 0; k < m; ++k)
                    v[k] -= tj[q] * t.gamma_at(i, q, k) - ti[q] * t.gamma_at(j, q, k);
            // d_xi tau(e_i, e_j) = xi(e_i) tau(e_j) - xi(e_j) tau(e_i)
            Vec dxt = xi_mats[i] * tj - xi_mats[j] * ti;
            v = v - tstar(dxt);
            v = v + d.beta_of(ti, tj);
            for (std::size_t k = 0; k < m; ++k)
                out.set_eps(i, j, k, t.eps_at(i, j, k) + v[k]);
        }
    return out;
}

/// The block-upper-triangular phi_{tau, sigma_bar} on l^* + a + l:
///   ( id  tau^*  sigma_bar + (1/2) tau^* tau )
///   ( 0   id     tau                         )
///   ( 0   0      id                          )
/// It certifies the equivalence from the model of t to the model of
/// act_tau(t, s): an honest isomorphism of symplectic Lie algebras.
inline LinearMap equivalence_iso(const CocycleTriple& t, const TauShift& s) {
    std::size_t m = t.l_dim, adim = t.a_dim(), n = 2 * m + adim;
    Matrix ts = tau_star(t.a.omega, s.tau);
    Matrix phi = Matrix::identity(n);
    const std::size_t zoff = 0, aoff = m, loff = m + adim;
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t q = 0; q < adim; ++q) phi(zoff + k, aoff + q) = ts(k, q);
    for (std::size_t q = 0; q < adim; ++q)
        for (std::size_t i = 0; i < m; ++i) phi(aoff + q, loff + i) = s.tau(q, i);
    // b = sigma_bar + (1/2) tau^* tau, with (tau^* tau)(e_i)(e_k) =
    // omega(tau e_k, tau e_i)
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < m; ++k) {
            Rat b = bilinear(t.a.omega, s.tau.column(k), s.tau.column(i)) / 2;
            if (s.sigma_bar) b += (*s.sigma_bar)(k, i);
            phi(zoff + k, loff + i) = b;
        }
    return phi;
}

/// Pair morphism (S, U): S forward on l, U backward on a (from the target's
/// coefficient algebra to the source's). Validation is a hard precondition:
/// U must be a Lie algebra isomorphism matching the symplectic forms.
struct PairIso {
    Matrix S;
    Matrix U;
    Matrix S_inv;
    Matrix U_inv;
    SymplecticLieAlgebra a_target;  // the pullback's coefficient algebra
};

inline PairIso make_pair_iso(const SymplecticLieAlgebra& a_target,
                             const SymplecticLieAlgebra& a_source, Matrix S, Matrix U) {
    PairIso p;
    auto s_inv = inverse(S);
    auto u_inv = inverse(U);
    if (!s_inv) throw std::invalid_argument("pair iso: S is singular");
    if (!u_inv) throw std::invalid_argument("pair iso: U is singular");
    if (U.rows() != a_target.dim() || U.cols() != a_source.dim())
        throw std::invalid_argument("pair iso: U shape mismatch");
    if (!check_iso(a_source.g, a_target.g, U))
        throw std::invalid_argument("pair iso: U is not a Lie algebra isomorphism");
    if (U.transpose() * a_target.omega * U != a_source.omega)
        throw std::invalid_argument("pair iso: U does not match the symplectic forms");
    p.S = std::move(S);
    p.U = std::move(U);
    p.S_inv = *s_inv;
    p.U_inv = *u_inv;
    p.a_target = a_target;
    return p;
}

/// Group element for a fixed (l, a): S any automorphism of l, U a symplectic
/// Lie automorphism of a.
inline PairIso make_group_element(const SymplecticLieAlgebra& a, Matrix S, Matrix U) {
    return make_pair_iso(a, a, std::move(S), std::move(U));
}

/// (S,U)^* (gamma, epsilon, xi):
///   ((S,U)^*gamma(L))(A) = S^*(gamma(SL)(U^{-1}A))
///   (S,U)^*epsilon(L1,L2) = S^*(epsilon(SL1, SL2))
///   (S,U)^*xi(L)A = U(xi(SL)(U^{-1}A))
inline CocycleTriple pullback(const CocycleTriple& t, const PairIso& p) {
    std::size_t m = t.l_dim, adim = t.a_dim();
    if (p.S.rows() != m || p.U.cols() != adim)
        throw std::invalid_argument("pullback: shape mismatch");
    CocycleTriple out(m, p.a_target);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t q = 0; q < adim; ++q)
            for (std::size_t k = 0; k < m; ++k) {
                Rat acc_g(0);
                for (std::size_t i2 = 0; i2 < m; ++i2) {
                    if (p.S(i2, i) == 0) continue;
                    for (std::size_t q2 = 0; q2 < adim; ++q2) {
                        if (p.U_inv(q2, q) == 0) continue;
                        for (std::size_t k2 = 0; k2 < m; ++k2)
                            acc_g += p.S(i2, i) * p.U_inv(q2, q) * p.S(k2, k) *
                                     t.gamma_at(i2, q2, k2);
                    }
                }
                out.gamma_at(i, q, k) = acc_g;
            }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) {
                Rat acc(0);
                for (std::size_t i2 = 0; i2 < m; ++i2)
                    for (std::size_t j2 = 0; j2 < m; ++j2) {
                        if (p.S(i2, i) == 0 || p.S(j2, j) == 0) continue;
                        for (std::size_t k2 = 0; k2 < m; ++k2)
                            acc += p.S(i2, i) * p.S(j2, j) * p.S(k2, k) * t.eps_at(i2, j2, k2);
                    }
                out.set_eps(i, j, k, acc);
            }
    for (std::size_t i = 0; i < m; ++i) {
        Matrix xs(adim, adim);
        for (std::size_t i2 = 0; i2 < m; ++i2) {
            if (p.S(i2, i) == 0) continue;
            Matrix xi2 = t.xi_of(i2);
            for (std::size_t r = 0; r < adim; ++r)
                for (std::size_t c = 0; c < adim; ++c) xs(r, c) += p.S(i2, i) * xi2(r, c);
        }
        Matrix conj = p.U * xs * p.U_inv;
        for (std::size_t q = 0; q < adim; ++q)
            for (std::size_t r = 0; r < adim; ++r) out.xi_at(i, q, r) = conj(r, q);
    }
    return out;
}

/// (S,U)^* tau = U o tau o S for a 1-cochain valued in a.
inline Matrix pullback_tau(const Matrix& tau, const PairIso& p) { return p.U * tau * p.S; }

// ---------------------------------------------------------------------------
// Equivalence solving

enum class EquivalenceKind { Witness, NotEquivalent, Unknown };

struct EquivalenceVerdict {
    EquivalenceKind kind = EquivalenceKind::Unknown;
    std::optional<Matrix> tau;  // certified witness when kind == Witness
};

/// Decides tau-equivalence of two triples over the same (l, a, omega_a).
/// The xi- and gamma-equations are jointly linear in tau (after substituting
/// ad o tau = xi1 - xi2); the quadratic epsilon-equation is then evaluated at
/// the particular solution and at particular + each kernel basis vector.
/// Sound but deliberately partial: "unknown" when the sampled candidates all
/// fail.
inline EquivalenceVerdict are_equivalent(const CocycleTriple& t1, const CocycleTriple& t2) {
    if (t1.l_dim != t2.l_dim || !(t1.a == t2.a))
        throw std::invalid_argument("are_equivalent: mismatched (l, a)");
    std::size_t m = t1.l_dim, adim = t1.a_dim(), nvar = adim * m;
    DerivedMaps d1 = derived_maps(t1);
    std::vector<Matrix> xi1, ad_mats;
    for (std::size_t i = 0; i < m; ++i) xi1.push_back(t1.xi_of(i));
    for (std::size_t p = 0; p < adim; ++p) ad_mats.push_back(ad_matrix(t1.a.g, unit_vec(adim, p)));
    // unknown tau(p, i), flat index p * m + i
    std::vector<Vec> rows;
    Vec rhs;
    // xi2(e_i) = xi1(e_i) - ad(tau(e_i))
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t q = 0; q < adim; ++q)
            for (std::size_t r = 0; r < adim; ++r) {
                Vec row(nvar, Rat(0));
                for (std::size_t p = 0; p < adim; ++p) row[p * m + i] = ad_mats[p](r, q);
                rows.push_back(row);
                rhs.push_back(t1.xi_at(i, q, r) - t2.xi_at(i, q, r));
            }
    // gamma2(e_i)(a_q)(e_k) = gamma1(...) + tau^*( (xi1 - (xi1 - xi2))(e_i) a_q )
    //                        - beta1(tau(e_i), a_q)(e_k)
    // i.e. gamma2 - gamma1 = tau^*(xi2(e_i) a_q)(e_k) - beta1(tau e_i, a_q)(e_k),
    // using ad o tau = xi1 - xi2 on the solution set.
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t q = 0; q < adim; ++q) {
            Vec x2aq(adim);
            for (std::size_t r = 0; r < adim; ++r) x2aq[r] = t2.xi_at(i, q, r);
            for (std::size_t k = 0; k < m; ++k) {
                Vec row(nvar, Rat(0));
                // tau^*(x2aq)(e_k) = omega(tau e_k, x2aq) = sum_p tau(p,k) (Omega x2aq)_p
                for (std::size_t p = 0; p < adim; ++p) {
                    Rat coef(0);
                    for (std::size_t r = 0; r < adim; ++r) coef += t1.a.omega(p, r) * x2aq[r];
                    row[p * m + k] += coef;
                }
                // -beta1(tau e_i, a_q)(e_k)
                for (std::size_t p = 0; p < adim; ++p) row[p * m + i] -= d1.beta_at(p, q, k);
                rows.push_back(row);
                rhs.push_back(t2.gamma_at(i, q, k) - t1.gamma_at(i, q, k));
            }
        }
    Matrix system(rows.size(), nvar);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t ccol = 0; ccol < nvar; ++ccol) system(r, ccol) = rows[r][ccol];
    auto sol = solve(system, rhs);
    if (!sol) return {EquivalenceKind::NotEquivalent, std::nullopt};

    auto unflatten = [&](const Vec& v) {
        Matrix tau(adim, m);
        for (std::size_t p = 0; p < adim; ++p)
            for (std::size_t i = 0; i < m; ++i) tau(p, i) = v[p * m + i];
        return tau;
    };
    std::vector<Vec> candidates;
    candidates.push_back(sol->particular);
    for (const auto& k : sol->kernel_basis) candidates.push_back(sol->particular + k);
    for (const auto& cand : candidates) {
        Matrix tau = unflatten(cand);
        if (act_tau(t1, TauShift(tau)) == t2) return {EquivalenceKind::Witness, tau};
    }
    return {EquivalenceKind::Unknown, std::nullopt};
}

// ---------------------------------------------------------------------------
// Orbit invariants

struct InvariantValue {
    std::optional<Rat> value;
    std::string reason;  // set when the invariant does not apply

    bool defined() const { return value.has_value(); }
};

namespace detail {
/// Test vectors for well-definedness re-verification: the a-basis and all
/// pairwise sums and differences.
inline std::vector<Vec> probe_vectors(std::size_t adim) {
    std::vector<Vec> vs;
    for (std::size_t i = 0; i < adim; ++i) vs.push_back(unit_vec(adim, i));
    for (std::size_t i = 0; i < adim; ++i)
        for (std::size_t j = i + 1; j < adim; ++j) {
            vs.push_back(unit_vec(adim, i) + unit_vec(adim, j));
            vs.push_back(unit_vec(adim, i) - unit_vec(adim, j));
        }
    return vs;
}

/// Sums of principal k x k minors e_k via Newton's identities on the power
/// sums p_j = tr(N^j): k e_k = sum_{j=1}^{k} (-1)^{j-1} e_{k-j} p_j.
inline std::vector<Rat> principal_minor_sums(const Matrix& n) {
    std::size_t dim = n.rows();
    std::vector<Rat> p(dim + 1, Rat(0));
    Matrix acc = Matrix::identity(dim);
    for (std::size_t j = 1; j <= dim; ++j) {
        acc = acc * n;
        for (std::size_t i = 0; i < dim; ++i) p[j] += acc(i, i);
    }
    std::vector<Rat> e(dim + 1, Rat(0));
    e[0] = 1;
    for (std::size_t k = 1; k <= dim; ++k) {
        Rat s(0);
        for (std::size_t j = 1; j <= k; ++j)
            s += (j % 2 ? Rat(1) : Rat(-1)) * e[k - j] * p[j];
        e[k] = s / Rat((long)k);
    }
    return e;
}

/// A rational symmetric matrix is positive semidefinite iff every sum of
/// principal minors is non-negative (all eigenvalues are real).
inline bool is_psd(const Matrix& n) {
    for (const auto& ek : principal_minor_sums(n))
        if (ek < 0) return false;
    return true;
}
}  // namespace detail

/// Sign of omega_a(xi(e_1)^2 v, v) over v with xi^2 v != 0 (zero when
/// xi^2 = 0). The value is a well-defined invariant exactly when the
/// quadratic form Q(v) = omega(xi^2 v, v) is semidefinite and vanishes only
/// where xi^2 does; that stratum condition is decided exactly rather than
/// assumed.
inline InvariantValue invariant_sign_xi2(const CocycleTriple& t) {
    if (t.l_dim != 1) return {std::nullopt, "l is not one-dimensional"};
    std::size_t adim = t.a_dim();
    Matrix xi = t.xi_of(std::size_t{0});
    Matrix xi2 = xi * xi;
    if (xi2.is_zero()) return {Rat(0), ""};
    // Q(v) = v^T N v with N the symmetric part of (xi^2)^T Omega
    Matrix raw = xi2.transpose() * t.a.omega;
    Matrix n(adim, adim);
    for (std::size_t i = 0; i < adim; ++i)
        for (std::size_t j = 0; j < adim; ++j) n(i, j) = (raw(i, j) + raw(j, i)) / 2;
    int s;
    if (detail::is_psd(n))
        s = 1;
    else if (detail::is_psd(Rat(-1) * n))
        s = -1;
    else
        return {std::nullopt, "sign not constant over admissible vectors"};
    // semidefinite: Q(v) = 0 iff Nv = 0; need that to force xi^2 v = 0
    for (const auto& kv : kernel(n))
        if (!is_zero(xi2 * kv))
            return {std::nullopt, "omega(xi^2 v, v) vanishes at an admissible vector"};
    return {Rat(s), ""};
}

/// kappa^7 = omega(xi^2 v, v)^7 * gamma(L, xi^3 v, L)^2 / omega(xi^3 v, v)^8.
/// The 7th power keeps the invariant rational; the odd power preserves order
/// and equality, so kappa itself never needs real roots.
inline InvariantValue invariant_kappa7(const CocycleTriple& t) {
    if (t.l_dim != 1) return {std::nullopt, "l is not one-dimensional"};
    Matrix xi = t.xi_of(std::size_t{0});
    Matrix xi2 = xi * xi;
    Matrix xi3 = xi2 * xi;
    if (xi3.is_zero()) return {std::nullopt, "xi^3 = 0"};
    std::optional<Rat> val;
    for (const auto& v : detail::probe_vectors(t.a_dim())) {
        Vec w3 = xi3 * v;
        if (is_zero(w3)) continue;
        Rat den = bilinear(t.a.omega, w3, v);
        if (den == 0) return {std::nullopt, "omega(xi^3 v, v) = 0 at an admissible vector"};
        Rat num1 = bilinear(t.a.omega, xi2 * v, v);
        Rat g(0);
        for (std::size_t r = 0; r < t.a_dim(); ++r)
            if (w3[r] != 0) g += w3[r] * t.gamma_at(0, r, 0);
        Rat value = rat_pow(num1, 7) * g * g / rat_pow(den, 8);
        if (!val) val = value;
        if (*val != value) return {std::nullopt, "value not constant over admissible vectors"};
    }
    if (!val) return {std::nullopt, "no admissible probe vector"};
    return {*val, ""};
}

/// omega_a(v, xi^3 v) / omega_a(xi v, xi^2 v), re-verified v-independent.
inline InvariantValue invariant_l(const CocycleTriple& t) {
    if (t.l_dim != 1) return {std::nullopt, "l is not one-dimensional"};
    Matrix xi = t.xi_of(std::size_t{0});
    Matrix xi2 = xi * xi;
    Matrix xi3 = xi2 * xi;
    if (xi3.is_zero()) return {std::nullopt, "xi^3 = 0"};
    std::optional<Rat> val;
    for (const auto& v : detail::probe_vectors(t.a_dim())) {
        Vec w3 = xi3 * v;
        if (is_zero(w3)) continue;
        Rat den = bilinear(t.a.omega, xi * v, xi2 * v);
        if (den == 0) return {std::nullopt, "omega(xi v, xi^2 v) = 0 at an admissible vector"};
        Rat value = bilinear(t.a.omega, v, w3) / den;
        if (!val) val = value;
        if (*val != value) return {std::nullopt, "value not constant over admissible vectors"};
    }
    if (!val) return {std::nullopt, "no admissible probe vector"};
    return {*val, ""};
}

// ---------------------------------------------------------------------------
// Scalar-conjugacy key for traceless 3x3 matrices of rank >= 2

/// Canonical key for the orbit of M under M -> c P M P^{-1}, c != 0. Built
/// from the characteristic polynomial x^3 + p2 x + p3: the pair (p2^3 : p3^2)
/// up to positive scaling, refined by a Jordan fingerprint exactly where the
/// polynomial has a repeated root (there the root is rational: r, r, -2r).
struct EpsOrbitKey {
    enum class Kind { Finite, Infinite, Nilpotent } kind = Kind::Nilpotent;
    Rat ratio;                       // Finite: p2^3 / p3^2
    int inf_sign = 0;                // Infinite: sign of p2
    std::vector<std::size_t> fingerprint;  // ranks of (M - rI)^k at the repeated root

    bool operator==(const EpsOrbitKey& o) const {
        return kind == o.kind && ratio == o.ratio && inf_sign == o.inf_sign &&
               fingerprint == o.fingerprint;
    }
    bool operator!=(const EpsOrbitKey& o) const { return !(*this == o); }

    std::string to_string() const {
        std::string s;
        switch (kind) {
            case Kind::Finite: s = "ratio " + sympla::to_string(ratio); break;
            case Kind::Infinite: s = inf_sign > 0 ? "inf+" : "inf-"; break;
            case Kind::Nilpotent: s = "nilpotent"; break;
        }
        for (auto r : fingerprint) s += " r" + std::to_string(r);
        return s;
    }
};

inline void char_poly_3x3(const Matrix& m, Rat& p2, Rat& p3) {
    // x^3 - tr x^2 + e2 x - det; tr = 0 is a precondition of the key
    p2 = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) + m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0) +
         m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
    p3 = -determinant(m);
}

inline EpsOrbitKey eps_orbit_key(const Matrix& m) {
    if (m.rows() != 3 || m.cols() != 3) throw std::invalid_argument("eps_orbit_key: need 3x3");
    Rat tr = m(0, 0) + m(1, 1) + m(2, 2);
    if (tr != 0) throw std::invalid_argument("eps_orbit_key: trace must vanish");
    if (rank(m) < 2) throw std::invalid_argument("eps_orbit_key: rank must be at least 2");
    Rat p2, p3;
    char_poly_3x3(m, p2, p3);
    EpsOrbitKey key;
    if (p2 == 0 && p3 == 0) {
        key.kind = EpsOrbitKey::Kind::Nilpotent;
        key.fingerprint = {rank(m), rank(m * m)};
    } else if (p3 == 0) {
        key.kind = EpsOrbitKey::Kind::Infinite;
        key.inf_sign = sign(p2);
    } else {
        key.kind = EpsOrbitKey::Kind::Finite;
        key.ratio = rat_pow(p2, 3) / rat_pow(p3, 2);
        // repeated root stratum: 4 p2^3 + 27 p3^2 = 0, double root r = -3 p3 / (2 p2)
        if (Rat(4) * rat_pow(p2, 3) + Rat(27) * rat_pow(p3, 2) == 0) {
            Rat r = Rat(-3) * p3 / (Rat(2) * p2);
            Matrix shifted = m - r * Matrix::identity(3);
            key.fingerprint = {rank(shifted)};
        }
    }
    return key;
}

namespace detail {
inline std::optional<Rat> rat_root(const Rat& q, unsigned long k) {
    if (q == 0) return Rat(0);
    if (k % 2 == 0 && q < 0) return std::nullopt;
    mpz_class num = q.get_num(), den = q.get_den();
    mpz_class rn, rd;
    bool negative = num < 0;
    mpz_class num_abs = abs(num);
    if (mpz_root(rn.get_mpz_t(), num_abs.get_mpz_t(), k) == 0) return std::nullopt;
    if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), k) == 0) return std::nullopt;
    Rat r(negative ? -rn : rn, rd);
    r.canonicalize();
    return r;
}
}  // namespace detail

struct ConjugationCertificate {
    Rat c;
    Matrix p;
};

/// Best-effort exact certificate M2 = c P M1 P^{-1}. The scalar is read off
/// the characteristic polynomials; P comes from the kernel of the Sylvester
/// system M2 P = c P M1. May fail when the real scalar is irrational.
inline std::optional<ConjugationCertificate> certify_eps_conjugation(const Matrix& m1,
                                                                     const Matrix& m2) {
    Rat p2a, p3a, p2b, p3b;
    char_poly_3x3(m1, p2a, p3a);
    char_poly_3x3(m2, p2b, p3b);
    Rat c;
    if (p2a == 0 && p3a == 0) {
        if (p2b != 0 || p3b != 0) return std::nullopt;
        c = 1;
    } else if (p3a == 0) {
        if (p3b != 0 || p2a == 0 || p2b == 0) return std::nullopt;
        auto root = detail::rat_root(p2b / p2a, 2);
        if (!root) return std::nullopt;
        c = *root;
    } else if (p2a == 0) {
        if (p2b != 0 || p3b == 0) return std::nullopt;
        auto root = detail::rat_root(p3b / p3a, 3);
        if (!root) return std::nullopt;
        c = *root;
    } else {
        if (p2b == 0 || p3b == 0) return std::nullopt;
        c = (p2a * p3b) / (p2b * p3a);
    }
    if (c * c * p2a != p2b || c * c * c * p3a != p3b) return std::nullopt;
    // Sylvester system M2 P - c P M1 = 0, unknowns P(r, s) flat 3r + s
    Matrix sys(9, 9);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            std::size_t row = 3 * i + j;
            for (std::size_t k = 0; k < 3; ++k) {
                sys(row, 3 * k + j) += m2(i, k);
                sys(row, 3 * i + k) -= c * m1(k, j);
            }
        }
    std::vector<Vec> ker = kernel(sys);
    auto unflatten = [](const Vec& v) {
        Matrix p(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) p(i, j) = v[3 * i + j];
        return p;
    };
    std::vector<Vec> tries = ker;
    for (std::size_t i = 0; i < ker.size(); ++i)
        for (std::size_t j = i + 1; j < ker.size(); ++j) {
            tries.push_back(ker[i] + ker[j]);
            tries.push_back(ker[i] - ker[j]);
            tries.push_back(ker[i] + Rat(2) * ker[j]);
        }
    if (ker.size() >= 3)
        for (long w = 1; w <= 3; ++w) {
            Vec v = ker[0];
            for (std::size_t j = 1; j < ker.size(); ++j) v = v + Rat(w * (long)j + 1) * ker[j];
            tries.push_back(v);
        }
    for (const auto& v : tries) {
        Matrix p = unflatten(v);
        auto p_inv = inverse(p);
        if (!p_inv) continue;
        if (m2 == c * (p * m1 * *p_inv)) return ConjugationCertificate{c, p};
    }
    return std::nullopt;
}

}  // namespace sympla
