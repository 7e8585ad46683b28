// Acceptance suite: runs every acceptance criterion at its stated tolerance
// (all checks are exact) and prints one pass/fail line per criterion.
// Exit code 0 iff everything passes.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <sympla/catalog.hpp>
#include <sympla/extraction.hpp>

#ifndef SYMPLA_DATA_DIR
#define SYMPLA_DATA_DIR "data"
#endif

using namespace sympla;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& name, const std::function<bool(std::string&)>& run) {
    std::string detail;
    auto start = Clock::now();
    bool ok = false;
    try {
        ok = run(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << " [" << secs << "s]\n";
    if (!ok) ++g_failures;
}

const std::string kDim4 = std::string(SYMPLA_DATA_DIR) + "/dim4.json";
const std::string kDim6 = std::string(SYMPLA_DATA_DIR) + "/dim6.json";

Rat random_rat(std::mt19937_64& rng, long max_num = 3, long max_den = 2) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return rat(num(rng), den(rng));
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = random_rat(rng);
    return m;
}

Matrix random_invertible(std::mt19937_64& rng, std::size_t n) {
    while (true) {
        Matrix m = random_matrix(rng, n, n);
        if (rank(m) == n) return m;
    }
}

Matrix random_symplectic(std::mt19937_64& rng, const Matrix& omega) {
    std::size_t n = omega.rows();
    Matrix u_mat = Matrix::identity(n);
    for (int f = 0; f < 6; ++f) {
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
            Rat w = bilinear(omega, unit_vec(n, j), u);
            for (std::size_t i = 0; i < n; ++i) t(i, j) += c * w * u[i];
        }
        u_mat = t * u_mat;
    }
    return u_mat;
}

Matrix h3r_automorphism(std::mt19937_64& rng) {
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

bool is_h3r(const SymplecticLieAlgebra& a) {
    return a.dim() == 4 && !(a.g == LieAlgebra::abelian(4));
}

Matrix random_automorphism(std::mt19937_64& rng, const SymplecticLieAlgebra& a) {
    if (a.dim() == 0) return Matrix(0, 0);
    if (is_h3r(a)) return h3r_automorphism(rng);
    return random_symplectic(rng, a.omega);
}

SymplecticLieAlgebra n4() {
    LieAlgebra g(4);
    g.set_bracket(3, 0, Vec{Rat(0), Rat(1), Rat(0), Rat(0)});
    g.set_bracket(3, 1, Vec{Rat(0), Rat(0), Rat(1), Rat(0)});
    Matrix om(4, 4);
    om(0, 1) = 1;
    om(1, 0) = -1;
    om(2, 3) = 1;
    om(3, 2) = -1;
    return {std::move(g), std::move(om)};
}

// a nilpotent derivation of n4: a4 -> p1 a1 + p2 a2 + p3 a3, a1 -> q2 a2 + q3 a3,
// a2 -> q2 a3, a3 -> 0
Matrix nilpotent_n4_derivation(std::mt19937_64& rng) {
    Matrix d(4, 4);
    Rat p1 = random_rat(rng), p2 = random_rat(rng), p3 = random_rat(rng);
    Rat q2 = random_rat(rng), q3 = random_rat(rng);
    d(0, 3) = p1;
    d(1, 3) = p2;
    d(2, 3) = p3;
    d(1, 0) = q2;
    d(2, 0) = q3;
    d(2, 1) = q2;
    return d;
}

}  // namespace

int main() {
    std::vector<CatalogEntry> catalog = load_catalog(kDim6);

    criterion(1, "dimension-4 list validates and separates", [&](std::string& detail) {
        auto start = Clock::now();
        std::vector<Dim4Entry> entries = load_dim4(kDim4);
        if (entries.size() != 3) {
            detail = "expected 3 entries";
            return false;
        }
        Dim4Report rep = verify_dim4(entries);
        if (!rep.all_ok) {
            detail = rep.failures.empty() ? "failed" : rep.failures[0];
            return false;
        }
        std::set<std::pair<std::size_t, std::size_t>> sigs(rep.signatures.begin(),
                                                           rep.signatures.end());
        if (sigs != std::set<std::pair<std::size_t, std::size_t>>{{4, 1}, {1, 3}, {2, 2}}) {
            detail = "wrong (center, class) signatures";
            return false;
        }
        double secs = std::chrono::duration<double>(Clock::now() - start).count();
        if (secs >= 1.0) {
            detail = "took " + std::to_string(secs) + "s, budget 1s";
            return false;
        }
        detail = "3 algebras, signatures (4,1) (1,3) (2,2)";
        return true;
    });

    criterion(2, "dimension-6 catalog certifies", [&](std::string& detail) {
        auto start = Clock::now();
        if (catalog.size() < 40) {
            detail = "fewer than 40 entries";
            return false;
        }
        for (const auto& e : catalog) {
            if (!is_cocycle(e.cocycle).ok || !is_balanced(e.cocycle).ok ||
                !is_nilpotent_cocycle(e.cocycle).ok) {
                detail = e.id + " fails a predicate";
                return false;
            }
            SymplecticLieAlgebra model = build_standard_model(e.cocycle);
            if (model.dim() != 6 || !validate_lie(model.g).ok ||
                !validate_symplectic(model).ok() || !is_nilpotent(model.g).nilpotent) {
                detail = e.id + " model fails";
                return false;
            }
        }
        double secs = std::chrono::duration<double>(Clock::now() - start).count();
        if (secs >= 10.0) {
            detail = "took " + std::to_string(secs) + "s, budget 10s";
            return false;
        }
        detail = std::to_string(catalog.size()) + " entries";
        return true;
    });

    criterion(3, "single-condition violations break the model", [&](std::string& detail) {
        std::mt19937_64 rng(90001);
        int accepted = 0, false_passes = 0, attempts = 0;
        while (accepted < 100 && attempts < 20000) {
            ++attempts;
            CocycleTriple t = catalog[rng() % catalog.size()].cocycle;
            Rat bump = random_rat(rng);
            if (bump == 0) bump = 1;
            switch (rng() % 3) {
                case 0: {
                    if (t.gamma.empty()) continue;
                    t.gamma[rng() % t.gamma.size()] += bump;
                    break;
                }
                case 1: {
                    if (t.xi.empty()) continue;
                    t.xi[rng() % t.xi.size()] += bump;
                    break;
                }
                default: {
                    if (t.l_dim < 2) continue;
                    std::size_t i = rng() % t.l_dim, j = rng() % t.l_dim, k = rng() % t.l_dim;
                    if (i == j) continue;
                    t.set_eps(std::min(i, j), std::max(i, j), k,
                              t.eps_at(std::min(i, j), std::max(i, j), k) + bump);
                    break;
                }
            }
            ConditionReport rep = is_cocycle(t);
            SymplecticLieAlgebra model = build_standard_model(t);
            bool model_ok = validate_lie(model.g).ok && validate_symplectic(model).ok();
            if (rep.ok) {
                // forward direction of the model theorem: still a cocycle,
                // so the model must stay valid
                if (!model_ok) {
                    detail = "valid cocycle produced an invalid model";
                    return false;
                }
                continue;
            }
            std::set<int> conds;
            for (const auto& [c, w] : rep.violations) conds.insert(c);
            if (conds.size() != 1) continue;
            ++accepted;
            if (model_ok) ++false_passes;
        }
        detail = std::to_string(accepted) + " violations, " + std::to_string(false_passes) +
                 " false passes";
        return accepted >= 100 && false_passes == 0;
    });

    criterion(4, "canonical ideal matches the l* block iff balanced", [&](std::string& detail) {
        for (const auto& e : catalog) {
            SymplecticLieAlgebra model = build_standard_model(e.cocycle);
            if (!(canonical_isotropic_ideal(model) == lstar_block(e.cocycle))) {
                detail = e.id + ": ideal differs from the l* block";
                return false;
            }
        }
        // deliberately unbalanced cocycles
        std::vector<CocycleTriple> unbalanced;
        SymplecticLieAlgebra r4{LieAlgebra::abelian(4), catalog[8].cocycle.a.omega};
        SymplecticLieAlgebra h3r;
        for (const auto& e : catalog)
            if (is_h3r(e.cocycle.a)) h3r = e.cocycle.a;
        Matrix om2(2, 2);
        om2(0, 1) = 1;
        om2(1, 0) = -1;
        SymplecticLieAlgebra r2{LieAlgebra::abelian(2), om2};
        unbalanced.emplace_back(1, r4);
        unbalanced.emplace_back(1, h3r);
        unbalanced.emplace_back(1, n4());
        unbalanced.emplace_back(2, r2);
        unbalanced.emplace_back(3, SymplecticLieAlgebra{LieAlgebra::abelian(0), Matrix(0, 0)});
        for (std::size_t jcol = 0; jcol < 4; ++jcol) {
            // (gamma, 0, 0) on (R, R^4) with gamma = s1 x a^{j+1} x s1: the
            // kernel of gamma_0 is 3-dimensional, hence degenerate
            CocycleTriple t(1, r4);
            t.gamma_at(0, jcol, 0) = 1;
            unbalanced.push_back(t);
        }
        // rank-1 traceless M_eps via orthogonal outer products u v^T, u.v = 0
        std::vector<std::pair<Vec, Vec>> uv = {
            {{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}},
            {{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(0), Rat(1)}},
            {{Rat(0), Rat(1), Rat(0)}, {Rat(1), Rat(0), Rat(0)}},
            {{Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}},
            {{Rat(0), Rat(0), Rat(1)}, {Rat(1), Rat(0), Rat(0)}},
            {{Rat(0), Rat(0), Rat(1)}, {Rat(0), Rat(1), Rat(0)}},
            {{Rat(1), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}},
            {{Rat(1), Rat(0), Rat(1)}, {Rat(0), Rat(1), Rat(0)}},
            {{Rat(0), Rat(1), Rat(1)}, {Rat(1), Rat(0), Rat(0)}},
            {{Rat(1), Rat(1), Rat(1)}, {Rat(1), Rat(-1), Rat(0)}},
            {{Rat(1), Rat(-1), Rat(0)}, {Rat(1), Rat(1), Rat(0)}},
            {{Rat(2), Rat(1), Rat(0)}, {Rat(1), Rat(-2), Rat(3)}},
        };
        for (const auto& [u, v] : uv) {
            Matrix m(3, 3);
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) m(i, j) = u[i] * v[j];
            unbalanced.push_back(eps_from_matrix(m));
        }
        if (unbalanced.size() < 20) {
            detail = "fewer than 20 unbalanced candidates";
            return false;
        }
        for (const auto& t : unbalanced) {
            if (!is_cocycle(t).ok) {
                detail = "an unbalanced candidate is not a cocycle";
                return false;
            }
            if (is_balanced(t).ok) {
                detail = "a candidate was unexpectedly balanced";
                return false;
            }
            SymplecticLieAlgebra model = build_standard_model(t);
            if (canonical_isotropic_ideal(model) == lstar_block(t)) {
                detail = "unbalanced cocycle still matched the l* block";
                return false;
            }
        }
        detail = std::to_string(catalog.size()) + " balanced + " +
                 std::to_string(unbalanced.size()) + " unbalanced";
        return true;
    });

    criterion(5, "group-action laws hold exactly", [&](std::string& detail) {
        std::mt19937_64 rng(90005);
        int done = 0;
        while (done < 100) {
            const CatalogEntry& e = catalog[rng() % catalog.size()];
            const CocycleTriple& t = e.cocycle;
            std::size_t adim = t.a_dim(), m = t.l_dim;
            Matrix tau1 = random_matrix(rng, adim, m), tau2 = random_matrix(rng, adim, m);
            if (act_tau(act_tau(t, TauShift(tau1)), TauShift(tau2)) !=
                act_tau(t, TauShift(tau1 + tau2))) {
                detail = "additivity failed on " + e.id;
                return false;
            }
            Matrix s = random_invertible(rng, m);
            Matrix u = random_automorphism(rng, t.a);
            PairIso p = make_group_element(t.a, s, u);
            if (pullback(act_tau(t, TauShift(tau1)), p) !=
                act_tau(pullback(t, p), TauShift(pullback_tau(tau1, p)))) {
                detail = "pullback compatibility failed on " + e.id;
                return false;
            }
            Matrix sym = random_matrix(rng, m, m);
            Matrix sigma(m, m);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) sigma(i, j) = sym(i, j) + sym(j, i);
            TauShift shift(tau1, sigma);
            LinearMap phi = equivalence_iso(t, shift);
            if (!check_symplectic_iso(build_standard_model(t),
                                      build_standard_model(act_tau(t, shift)), phi)) {
                detail = "equivalence_iso failed certification on " + e.id;
                return false;
            }
            ++done;
        }
        detail = "100 instances";
        return true;
    });

    criterion(6, "the worked tau-shift instance is exact", [&](std::string& detail) {
        // (s1 x a3 x s1, 0, xi^1) shifted by tau = s1 x a_1 on h3 + R
        SymplecticLieAlgebra h3r;
        for (const auto& e : catalog)
            if (is_h3r(e.cocycle.a)) h3r = e.cocycle.a;
        CocycleTriple t(1, h3r);
        t.gamma_at(0, 2, 0) = 1;
        t.xi_at(0, 0, 3) = 1;
        t.xi_at(0, 3, 2) = 1;
        Matrix tau(4, 1);
        tau(0, 0) = 1;
        CocycleTriple shifted = act_tau(t, TauShift(tau));
        CocycleTriple expected(1, h3r);
        expected.gamma_at(0, 0, 0) = 1;  // s1 x (a1 + a3) x s1
        expected.gamma_at(0, 2, 0) = 1;
        expected.xi_at(0, 0, 3) = 1;  // xi^1_{0,-1}
        expected.xi_at(0, 1, 2) = -1;
        expected.xi_at(0, 3, 2) = 1;
        if (!(shifted == expected)) {
            detail = "shifted triple differs";
            return false;
        }
        return true;
    });

    criterion(7, "invariant values and their stability", [&](std::string& detail) {
        std::mt19937_64 rng(90007);
        auto moved = [&](const CocycleTriple& t) {
            CocycleTriple out = act_tau(t, TauShift(random_matrix(rng, t.a_dim(), t.l_dim)));
            Matrix s = random_invertible(rng, t.l_dim);
            Matrix u = random_automorphism(rng, t.a);
            return pullback(out, make_group_element(t.a, s, u));
        };
        auto find = [&](const std::string& id) -> const CocycleTriple& {
            for (const auto& e : catalog)
                if (e.id == id) return e.cocycle;
            throw std::runtime_error("missing catalog entry " + id);
        };
        for (int sgn : {1, -1}) {
            const CocycleTriple& t = find(sgn > 0 ? "r4-xiplus" : "r4-ximinus");
            InvariantValue v0 = invariant_sign_xi2(t);
            if (!v0.defined() || *v0.value != sgn) {
                detail = "sign(xi_pm) wrong";
                return false;
            }
            for (int it = 0; it < 50; ++it) {
                InvariantValue v = invariant_sign_xi2(moved(t));
                if (!v.defined() || *v.value != *v0.value) {
                    detail = "sign not invariant";
                    return false;
                }
            }
        }
        for (const Rat& kappa : {rat(-1), rat(0), rat(1), rat(2)}) {
            const CocycleTriple& t = find("r4-xikappa-" + to_string(kappa));
            Rat expect = rat_pow(kappa, 7);
            InvariantValue v0 = invariant_kappa7(t);
            if (!v0.defined() || *v0.value != expect) {
                detail = "kappa7 wrong at kappa = " + to_string(kappa);
                return false;
            }
            for (int it = 0; it < 50; ++it) {
                InvariantValue v = invariant_kappa7(moved(t));
                if (!v.defined() || *v.value != expect) {
                    detail = "kappa7 not invariant";
                    return false;
                }
            }
        }
        for (const Rat& l : {rat(-2), rat(1, 2), rat(3)}) {
            const CocycleTriple& t = find("h3r-xi1l-" + to_string(l));
            InvariantValue v0 = invariant_l(t);
            if (!v0.defined() || *v0.value != l) {
                detail = "l wrong at l = " + to_string(l);
                return false;
            }
            for (int it = 0; it < 50; ++it) {
                InvariantValue v = invariant_l(moved(t));
                if (!v.defined() || *v.value != l) {
                    detail = "l not invariant";
                    return false;
                }
            }
        }
        detail = "values pinned, 50 perturbations each";
        return true;
    });

    criterion(8, "no balanced nilpotent cocycle over n4", [&](std::string& detail) {
        std::mt19937_64 rng(90008);
        SymplecticLieAlgebra a = n4();
        Subspace center_n4 = Subspace::span(4, {unit_vec(4, 2)});
        int produced = 0, attempts = 0;
        while (produced < 200 && attempts < 4000) {
            ++attempts;
            std::size_t m = (produced % 4 == 3) ? 2 : 1;
            std::vector<Matrix> xi_mats;
            Matrix d = nilpotent_n4_derivation(rng);
            xi_mats.push_back(d);
            if (m == 2) xi_mats.push_back(random_rat(rng) * d);
            CocycleTriple t(m, a);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t q = 0; q < 4; ++q)
                    for (std::size_t r = 0; r < 4; ++r) t.xi_at(i, q, r) = xi_mats[i](r, q);
            // solve the linear cocycle conditions for gamma
            std::size_t nvar = m * 4 * m;
            auto gidx = [&](std::size_t i, std::size_t q, std::size_t k) {
                return (i * 4 + q) * m + k;
            };
            DerivedMaps dm = derived_maps(t);  // beta from xi; alpha needs gamma, here 0
            std::vector<Vec> rows;
            Vec rhs;
            // condition (2): gamma(e_i)([a_p,a_q])(e_k) = beta(xi_i a_p, a_q)(e_k)
            //                + beta(a_p, xi_i a_q)(e_k)
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t p = 0; p < 4; ++p)
                    for (std::size_t q = p + 1; q < 4; ++q) {
                        Vec br = bracket(a.g, unit_vec(4, p), unit_vec(4, q));
                        Vec lhs = dm.beta_of(xi_mats[i].column(p), unit_vec(4, q)) +
                                  dm.beta_of(unit_vec(4, p), xi_mats[i].column(q));
                        for (std::size_t k = 0; k < m; ++k) {
                            Vec row(nvar, Rat(0));
                            for (std::size_t r = 0; r < 4; ++r)
                                if (br[r] != 0) row[gidx(i, r, k)] += br[r];
                            rows.push_back(row);
                            rhs.push_back(lhs[k]);
                        }
                    }
            if (m == 2) {
                // alpha(e_1, e_2) must be central (commuting xi's) and condition
                // (3) must hold; both are linear in gamma through the omega-dual
                Matrix om_t = a.omega.transpose();
                auto om_inv = inverse(om_t);
                if (!om_inv) continue;
                // alpha(e1,e2) = dual(gamma(e1)(.)(e2)) - dual(gamma(e2)(.)(e1)),
                // dual(f) = om_inv * f with f_q = gamma(i, a_q, k)
                auto alpha_row = [&](std::size_t comp) {
                    // coefficient row of alpha(e1,e2)_comp as a function of gamma
                    Vec row(nvar, Rat(0));
                    for (std::size_t q = 0; q < 4; ++q) {
                        row[gidx(0, q, 1)] += (*om_inv)(comp, q);
                        row[gidx(1, q, 0)] -= (*om_inv)(comp, q);
                    }
                    return row;
                };
                // centrality: components a_1, a_2, a_4 of alpha vanish
                for (std::size_t comp : {std::size_t{0}, std::size_t{1}, std::size_t{3}}) {
                    rows.push_back(alpha_row(comp));
                    rhs.push_back(Rat(0));
                }
                // condition (3): gamma(e2)(xi_1 a_q)(e_k) - gamma(e1)(xi_2 a_q)(e_k)
                //                + beta(alpha, a_q)(e_k) = 0
                for (std::size_t q = 0; q < 4; ++q)
                    for (std::size_t k = 0; k < m; ++k) {
                        Vec row(nvar, Rat(0));
                        for (std::size_t r = 0; r < 4; ++r) {
                            row[gidx(1, r, k)] += xi_mats[0](r, q);
                            row[gidx(0, r, k)] -= xi_mats[1](r, q);
                        }
                        for (std::size_t comp = 0; comp < 4; ++comp) {
                            Vec arow = alpha_row(comp);
                            Rat coef = dm.beta_at(comp, q, k);
                            if (coef != 0)
                                for (std::size_t v = 0; v < nvar; ++v)
                                    row[v] += coef * arow[v];
                        }
                        rows.push_back(row);
                        rhs.push_back(Rat(0));
                    }
            }
            Matrix system(rows.size(), nvar);
            for (std::size_t r = 0; r < rows.size(); ++r)
                for (std::size_t c = 0; c < nvar; ++c) system(r, c) = rows[r][c];
            auto sol = solve(system, rhs);
            if (!sol) continue;
            Vec gamma = sol->particular;
            for (const auto& kv : sol->kernel_basis) {
                Rat c = random_rat(rng);
                for (std::size_t v = 0; v < nvar; ++v) gamma[v] += c * kv[v];
            }
            for (std::size_t v = 0; v < nvar; ++v) t.gamma[v] = gamma[v];
            if (!is_cocycle(t).ok) {
                detail = "generator produced a non-cocycle";
                return false;
            }
            BalancedReport bal = is_balanced(t);
            if (bal.ok) {
                detail = "found a balanced nilpotent candidate over n4";
                return false;
            }
            if (!(bal.b_space == center_n4)) {
                detail = "condition (b) space is not span{a_3}";
                return false;
            }
            ++produced;
        }
        detail = std::to_string(produced) + " candidates, all unbalanced on span{a_3}";
        return produced >= 200;
    });

    criterion(9, "reduction round trip over the catalog", [&](std::string& detail) {
        for (const auto& e : catalog) {
            SymplecticLieAlgebra model = build_standard_model(e.cocycle);
            ExtractionResult ex = extract_cocycle(model);
            EquivalenceVerdict v = are_equivalent(e.cocycle, ex.triple);
            if (v.kind != EquivalenceKind::Witness) {
                detail = e.id + ": no certified witness";
                return false;
            }
            if (!check_symplectic_iso(build_standard_model(e.cocycle),
                                      build_standard_model(ex.triple),
                                      equivalence_iso(e.cocycle, TauShift(*v.tau)))) {
                detail = e.id + ": witness not certified by the model isomorphism";
                return false;
            }
        }
        detail = std::to_string(catalog.size()) + " round trips";
        return true;
    });

    criterion(10, "eps-orbit key is a scalar-conjugacy invariant", [&](std::string& detail) {
        std::mt19937_64 rng(90010);
        std::vector<Matrix> reps;
        for (const auto& e : catalog)
            if (e.family == "R3-zero") reps.push_back(eps_to_matrix(e.cocycle));
        int done = 0;
        for (int it = 0; it < 100; ++it) {
            const Matrix& m = reps[rng() % reps.size()];
            Matrix s = random_invertible(rng, 3);
            auto s_inv_t = inverse(s.transpose());
            if (!s_inv_t) continue;
            Matrix transformed = determinant(s) * (s.transpose() * m * *s_inv_t);
            if (!(eps_orbit_key(transformed) == eps_orbit_key(m))) {
                detail = "key changed under a det-weighted conjugation";
                return false;
            }
            ++done;
        }
        auto diag = [](const Rat& x, const Rat& y, const Rat& z) {
            Matrix m(3, 3);
            m(0, 0) = x;
            m(1, 1) = y;
            m(2, 2) = z;
            return m;
        };
        if (!(eps_orbit_key(diag(rat(1), rat(0), rat(-1))) ==
              eps_orbit_key(diag(rat(2), rat(0), rat(-2))))) {
            detail = "scaled diagonal pair not identified";
            return false;
        }
        auto cert = certify_eps_conjugation(diag(rat(1), rat(0), rat(-1)),
                                            diag(rat(2), rat(0), rat(-2)));
        if (!cert || cert->c != 2) {
            detail = "missing conjugation certificate (c = 2)";
            return false;
        }
        if (eps_orbit_key(diag(rat(1), rat(0), rat(-1))) ==
            eps_orbit_key(diag(rat(1), rat(1), rat(-2)))) {
            detail = "distinct diagonal pair identified";
            return false;
        }
        Matrix rot(3, 3), nil(3, 3);
        rot(0, 1) = 1;
        rot(1, 0) = -1;
        nil(0, 1) = 1;
        nil(1, 2) = 1;
        if (eps_orbit_key(rot) == eps_orbit_key(nil)) {
            detail = "rank-2 semisimple-free vs nilpotent not separated";
            return false;
        }
        detail = std::to_string(done) + " conjugations + 3 example pairs";
        return true;
    });

    std::cout << (g_failures == 0 ? "ACCEPTANCE: all criteria passed"
                                  : "ACCEPTANCE: " + std::to_string(g_failures) +
                                        " criterion(s) failed")
              << "\n";
    return g_failures == 0 ? 0 : 1;
}
