// Regenerates the bundled classification fixtures (data/dim4.json and
// data/dim6.json). The dimension-6 entries sample every family of the
// classification list at rational parameter points; the generic formulas are
// kept in the entries' free-text "formula" field.
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <sympla/catalog.hpp>

using namespace sympla;

namespace {

Matrix omega_1234() {
    Matrix om(4, 4);
    om(0, 1) = 1;
    om(1, 0) = -1;
    om(2, 3) = 1;
    om(3, 2) = -1;
    return om;
}

Matrix omega_1423() {
    Matrix om(4, 4);
    om(0, 3) = 1;
    om(3, 0) = -1;
    om(1, 2) = 1;
    om(2, 1) = -1;
    return om;
}

SymplecticLieAlgebra r4() { return {LieAlgebra::abelian(4), omega_1234()}; }

SymplecticLieAlgebra h3r() {
    LieAlgebra g(4);
    g.set_bracket(0, 1, Vec{Rat(0), Rat(0), Rat(1), Rat(0)});
    return {std::move(g), omega_1423()};
}

SymplecticLieAlgebra n4() {
    LieAlgebra g(4);
    g.set_bracket(3, 0, Vec{Rat(0), Rat(1), Rat(0), Rat(0)});
    g.set_bracket(3, 1, Vec{Rat(0), Rat(0), Rat(1), Rat(0)});
    return {std::move(g), omega_1234()};
}

SymplecticLieAlgebra r2() {
    Matrix om(2, 2);
    om(0, 1) = 1;
    om(1, 0) = -1;
    return {LieAlgebra::abelian(2), om};
}

CatalogEntry entry(std::string id, std::string family, CocycleTriple t,
                   std::map<std::string, Rat> params, std::map<std::string, Rat> invariants,
                   std::string formula, bool asserted = false) {
    CatalogEntry e;
    e.id = std::move(id);
    e.family = std::move(family);
    e.parameters = std::move(params);
    e.cocycle = std::move(t);
    e.expected.balanced = true;
    e.expected.nilpotent = true;
    e.expected.model_dim = 2 * e.cocycle.l_dim + e.cocycle.a_dim();
    e.expected.invariants = std::move(invariants);
    e.formula = std::move(formula);
    e.separation_asserted = asserted;
    return e;
}

// --- family R3-zero ----------------------------------------------------------

std::vector<CatalogEntry> family_r3() {
    std::vector<CatalogEntry> out;
    auto add = [&](const std::string& id, const Matrix& m,
                   std::map<std::string, Rat> params, const std::string& formula) {
        out.push_back(entry(id, "R3-zero", eps_from_matrix(m), std::move(params), {}, formula));
    };
    for (const Rat& b : {rat(0), rat(1, 2), rat(1)}) {
        Matrix m(3, 3);
        m(0, 0) = 1;
        m(1, 1) = b;
        m(2, 2) = -1 - b;
        add("r3-diag-b" + to_string(b), m, {{"b", b}}, "M_eps = diag(1, b, -1-b), b in [0,1]");
    }
    {
        Matrix m(3, 3);
        m(0, 0) = 1;
        m(0, 1) = 1;
        m(1, 1) = 1;
        m(2, 2) = -2;
        add("r3-jordan", m, {}, "M_eps = [[1,1,0],[0,1,0],[0,0,-2]]");
    }
    for (const Rat& z : {rat(1), rat(2)}) {
        Matrix m(3, 3);
        m(0, 0) = 1;
        m(0, 1) = z;
        m(1, 0) = -z;
        m(1, 1) = 1;
        m(2, 2) = -2;
        add("r3-complex-z" + to_string(z), m, {{"z", z}},
            "M_eps = [[1,z,0],[-z,1,0],[0,0,-2]], z > 0");
    }
    {
        Matrix m(3, 3);
        m(0, 1) = 1;
        m(1, 0) = -1;
        add("r3-rot", m, {}, "M_eps = [[0,1,0],[-1,0,0],[0,0,0]]");
    }
    {
        Matrix m(3, 3);
        m(0, 1) = 1;
        m(1, 2) = 1;
        add("r3-nil", m, {}, "M_eps = [[0,1,0],[0,0,1],[0,0,0]]");
    }
    return out;
}

// --- family R-R4 --------------------------------------------------------------

std::vector<CatalogEntry> family_r4() {
    std::vector<CatalogEntry> out;
    {
        CocycleTriple t(1, r4());
        t.gamma_at(0, 0, 0) = 1;
        t.xi_at(0, 1, 0) = 1;
        out.push_back(entry("r4-xi1", "R-R4", t, {}, {{"sign_xi2", rat(0)}},
                            "(gamma0, 0, xi_1), gamma0 = s1 x a1 x s1, xi_1 = s1 x a2 x a_1"));
    }
    for (int sgn : {1, -1}) {
        CocycleTriple t(1, r4());
        t.gamma_at(0, 0, 0) = 1;
        t.xi_at(0, 2, 0) = 1;
        t.xi_at(0, 1, 2) = sgn;
        out.push_back(entry(sgn > 0 ? "r4-xiplus" : "r4-ximinus", "R-R4", t,
                            {{"sign", rat(sgn)}}, {{"sign_xi2", rat(sgn)}},
                            "(gamma0, 0, xi_pm), xi_pm = s1 x a3 x a_1 pm s1 x a2 x a_3"));
    }
    for (const Rat& kappa : {rat(-1), rat(0), rat(1), rat(2)}) {
        CocycleTriple t(1, r4());
        t.gamma_at(0, 0, 0) = 1;
        t.xi_at(0, 3, 0) = 1;
        t.xi_at(0, 1, 2) = 1;
        t.xi_at(0, 2, 3) = 1;
        t.xi_at(0, 2, 0) = kappa;
        out.push_back(entry("r4-xikappa-" + to_string(kappa), "R-R4", t, {{"kappa", kappa}},
                            {{"kappa7", rat_pow(kappa, 7)}, {"l", rat(-1)}},
                            "(gamma0, 0, xi^kappa), xi^kappa = s1 x (a4 x a_1 + a2 x a_3 + a3 "
                            "x a_4 + kappa a3 x a_1)"));
    }
    return out;
}

// --- family R-h3R --------------------------------------------------------------

std::vector<CatalogEntry> family_h3r() {
    std::vector<CatalogEntry> out;
    {
        CocycleTriple t(1, h3r());
        t.gamma_at(0, 2, 0) = 1;
        t.xi_at(0, 0, 3) = 1;
        t.xi_at(0, 3, 2) = 1;
        out.push_back(entry("h3r-xi1", "R-h3R", t, {}, {},
                            "(s1 x a3 x s1, 0, xi^1), xi^1 = s1 x (a1 x a_4 + a4 x a_3)", true));
    }
    for (const Rat& l : {rat(-2), rat(1, 2), rat(3)}) {
        CocycleTriple t(1, h3r());
        t.gamma_at(0, 2, 0) = l + 1;
        t.xi_at(0, 0, 3) = 1;
        t.xi_at(0, 1, 0) = 1;
        t.xi_at(0, 3, 2) = l;
        out.push_back(entry("h3r-xi1l-" + to_string(l), "R-h3R", t, {{"l", l}}, {{"l", l}},
                            "(s1 x (l+1)a3 x s1, 0, xi^1(l)), l not in {0,-1}"));
    }
    for (const Rat& y1 : {rat(-1), rat(1), rat(2)}) {
        CocycleTriple t(1, h3r());
        t.gamma_at(0, 0, 0) = y1;
        t.gamma_at(0, 2, 0) = 1;
        t.xi_at(0, 0, 3) = 1;
        t.xi_at(0, 1, 0) = 1;
        out.push_back(entry("h3r-xi1l0-y1-" + to_string(y1), "R-h3R", t, {{"y1", y1}}, {},
                            "(s1 x (y1 a1 + a3) x s1, 0, xi^1(0))", true));
    }
    auto xi1n = [&](int n, const Rat& y2, const Rat& y4) {
        CocycleTriple t(1, h3r());
        t.gamma_at(0, 1, 0) = y2;
        t.gamma_at(0, 3, 0) = y4;
        t.xi_at(0, 0, 1) = 1;
        t.xi_at(0, 1, 3) = n;
        return t;
    };
    struct NSample {
        int n;
        Rat y2, y4;
    };
    for (const NSample& s : {NSample{1, rat(1), rat(1)}, NSample{1, rat(2), rat(-1)},
                             NSample{-1, rat(1), rat(1)}, NSample{-1, rat(0), rat(2)}}) {
        out.push_back(entry("h3r-xi1n" + std::to_string(s.n) + "-y2-" + to_string(s.y2) +
                                "-y4-" + to_string(s.y4),
                            "R-h3R", xi1n(s.n, s.y2, s.y4),
                            {{"n", rat(s.n)}, {"y2", s.y2}, {"y4", s.y4}},
                            {{"sign_xi2", rat(-s.n)}},
                            "(s1 x (y2 a2 + y4 a4) x s1, 0, xi^{1,n}), y2 >= 0, y4 != 0", true));
    }
    struct ZSample {
        Rat y2;
        int sgn;
    };
    for (const ZSample& s : {ZSample{rat(1), 1}, ZSample{rat(0), -1}, ZSample{rat(2), 1}}) {
        out.push_back(entry("h3r-xi1n0-y2-" + to_string(s.y2) + (s.sgn > 0 ? "-p" : "-m"),
                            "R-h3R", xi1n(0, s.y2, rat(s.sgn)),
                            {{"y2", s.y2}, {"y4", rat(s.sgn)}}, {{"sign_xi2", rat(0)}},
                            "(s1 x (y2 a2 pm a4) x s1, 0, xi^{1,0}), y2 >= 0", true));
    }
    return out;
}

// --- family R2-R2 --------------------------------------------------------------

std::vector<CatalogEntry> family_r2r2() {
    std::vector<CatalogEntry> out;
    auto blank = [&]() { return CocycleTriple(2, r2()); };
    auto with_xi0 = [&](CocycleTriple t) {
        t.xi_at(0, 1, 0) = 1;  // xi^0 = s1 x a2 x a_1
        return t;
    };
    auto add = [&](const std::string& id, CocycleTriple t, std::map<std::string, Rat> params,
                   const std::string& formula) {
        out.push_back(entry(id, "R2-R2", std::move(t), std::move(params), {}, formula, true));
    };

    // gamma_{1,x,y} = s1 x a1 x s2 + x s2 x a2 x s1 + y s2 x a2 x s2
    auto gamma_1xy = [&](const Rat& x, const Rat& y) {
        CocycleTriple t = blank();
        t.gamma_at(0, 0, 1) = 1;
        t.gamma_at(1, 1, 0) = x;
        t.gamma_at(1, 1, 1) = y;
        return with_xi0(t);
    };
    for (const Rat& t : {rat(0), rat(1)})
        add("r2r2-gamma1t1-t-" + to_string(t), gamma_1xy(t, rat(1)), {{"t", t}},
            "(gamma_{1,t,1}, 0, xi^0)");
    add("r2r2-gamma1p10", gamma_1xy(rat(1), rat(0)), {}, "(gamma_{1,1,0}, 0, xi^0)");
    add("r2r2-gamma1m10", gamma_1xy(rat(-1), rat(0)), {}, "(gamma_{1,-1,0}, 0, xi^0)");
    add("r2r2-gamma100", gamma_1xy(rat(0), rat(0)), {}, "(gamma_{1,0,0}, 0, xi^0)");

    // gamma^1_{x,y} = s1 x a1 x s1 + x s2 x a2 x s1 + y s2 x a2 x s2
    auto gamma1_xy = [&](const Rat& x, const Rat& y) {
        CocycleTriple t = blank();
        t.gamma_at(0, 0, 0) = 1;
        t.gamma_at(1, 1, 0) = x;
        t.gamma_at(1, 1, 1) = y;
        return with_xi0(t);
    };
    add("r2r2-gamma1-0p1", gamma1_xy(rat(0), rat(1)), {}, "(gamma^1_{0,1}, 0, xi^0)");
    add("r2r2-gamma1-0m1", gamma1_xy(rat(0), rat(-1)), {}, "(gamma^1_{0,-1}, 0, xi^0)");
    for (const Rat& t : {rat(-1), rat(0), rat(1)}) {
        CocycleTriple c = gamma1_xy(rat(1), rat(0));
        c.set_eps(0, 1, 1, t);
        add("r2r2-gamma1-10-t-" + to_string(t), c, {{"t", t}},
            "(gamma^1_{1,0}, t s1^s2 x s2, xi^0)");
    }
    for (int sgn : {1, -1}) {
        CocycleTriple c = gamma1_xy(rat(0), rat(0));
        c.set_eps(0, 1, 1, rat(sgn));
        add(std::string("r2r2-gamma1-00-eps") + (sgn > 0 ? "p" : "m"), c,
            {{"eps", rat(sgn)}}, "(gamma^1_{0,0}, pm s1^s2 x s2, xi^0)");
    }

    // xi = 0 families
    auto gamma_a = [&](CocycleTriple& t, const Rat& scale) {
        t.gamma_at(0, 1, 1) += scale;
        t.gamma_at(1, 1, 0) -= scale;
    };
    for (const Rat& t1 : {rat(0), rat(2)}) {
        // gamma^1_t of the conformal family plus the antisymmetric block
        CocycleTriple c = blank();
        c.gamma_at(0, 0, 0) = 1;
        c.gamma_at(1, 0, 1) = 1;
        c.gamma_at(0, 1, 0) = t1;
        c.gamma_at(1, 1, 1) = -t1;
        gamma_a(c, rat(1));
        add("r2r2-conf-t-" + to_string(t1), c, {{"t", t1}}, "(gamma^1_t, 0, 0), t >= 0");
    }
    for (const Rat& t : {rat(-3), rat(0), rat(2)}) {
        CocycleTriple c = blank();
        c.gamma_at(0, 0, 0) = 1;
        c.gamma_at(0, 1, 1) = t;
        c.gamma_at(1, 1, 0) = t;
        gamma_a(c, rat(1));
        add("r2r2-iso-t-" + to_string(t), c, {{"t", t}}, "(gamma^0_t, 0, 0)");
    }
    {
        CocycleTriple c = blank();
        c.gamma_at(0, 0, 0) = 1;
        c.gamma_at(0, 1, 1) = -3;
        c.gamma_at(1, 1, 0) = -3;
        gamma_a(c, rat(1));
        c.set_eps(0, 1, 1, rat(1));
        add("r2r2-iso-m3-eps", c, {}, "(gamma^0_{-3}, s1^s2 x s2, 0)");
    }
    for (int sgn : {1, -1}) {
        CocycleTriple c = blank();
        c.gamma_at(0, 0, 0) = 1;
        c.gamma_at(1, 1, 1) = sgn;
        gamma_a(c, rat(1));
        add(std::string("r2r2-def-") + (sgn > 0 ? "p" : "m"), c, {{"sign", rat(sgn)}},
            "(gamma^0_pm, 0, 0)");
    }
    {
        CocycleTriple c = blank();
        c.gamma_at(0, 0, 0) = 1;
        c.gamma_at(1, 0, 1) = -1;
        gamma_a(c, rat(1));
        add("r2r2-sig-a", c, {}, "(gamma^{-1} + gamma_a, 0, 0)");
    }
    for (const Rat& kappa : {rat(1, 2), rat(1)}) {
        CocycleTriple c = blank();
        c.gamma_at(0, 0, 0) = 1;
        c.gamma_at(1, 0, 1) = -1;
        c.gamma_at(0, 1, 0) = 1;
        c.gamma_at(1, 1, 1) = 1;
        gamma_a(c, kappa);
        add("r2r2-sig-s1-k-" + to_string(kappa), c, {{"kappa", kappa}},
            "(gamma^{-1} + gamma_{s1} + kappa gamma_a, 0, 0), kappa > 0");
    }
    {
        CocycleTriple c = blank();
        c.gamma_at(0, 0, 0) = 1;
        c.gamma_at(1, 0, 1) = -1;
        c.gamma_at(0, 1, 1) = 1;
        c.gamma_at(1, 1, 0) = 1;
        gamma_a(c, rat(1));
        add("r2r2-sig-s2-k-1", c, {{"kappa", rat(1)}},
            "(gamma^{-1} + gamma_{s2} + kappa gamma_a, 0, 0), kappa > 0");
    }
    for (int sgn : {1, -1}) {
        CocycleTriple c = blank();
        c.gamma_at(0, 0, 0) = 1;
        c.gamma_at(1, 0, 1) = -1;
        c.gamma_at(0, 1, 0) = 1;
        c.gamma_at(1, 1, 1) = 1;
        c.gamma_at(0, 1, 1) += 1;
        c.gamma_at(1, 1, 0) += 1;
        gamma_a(c, rat(sgn));
        add(std::string("r2r2-sig-s1s2-") + (sgn > 0 ? "p" : "m"), c, {{"sign", rat(sgn)}},
            "(gamma^{-1} + gamma_{s1} + gamma_{s2} pm gamma_a, 0, 0)");
    }
    return out;
}

std::vector<Dim4Entry> dim4_entries() {
    return {{"r4-abelian", r4()}, {"n4", n4()}, {"h3-plus-r", h3r()}};
}

}  // namespace

int main(int argc, char** argv) {
    std::string out_dir = argc > 1 ? argv[1] : "data";
    std::vector<CatalogEntry> dim6;
    for (auto&& fam : {family_r3(), family_r4(), family_h3r(), family_r2r2()})
        for (auto&& e : fam) dim6.push_back(std::move(e));

    std::ofstream d6(out_dir + "/dim6.json");
    if (!d6) {
        std::cerr << "cannot write " << out_dir << "/dim6.json\n";
        return 1;
    }
    for (const auto& e : dim6) d6 << catalog_entry_to_json(e).dump() << "\n";

    std::ofstream d4(out_dir + "/dim4.json");
    if (!d4) {
        std::cerr << "cannot write " << out_dir << "/dim4.json\n";
        return 1;
    }
    for (const auto& e : dim4_entries()) d4 << dim4_entry_to_json(e).dump() << "\n";

    std::cout << "wrote " << dim6.size() << " dim-6 entries and 3 dim-4 entries to " << out_dir
              << "\n";
    return 0;
}
