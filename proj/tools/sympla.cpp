// Command-line front end: validation, reduction, model building, group
// actions, invariants, and catalog certification. Exit codes: 0 success,
// 1 verification failure, 2 usage or parse errors. All scalars print as
// exact rationals; --json emits machine-readable reports on stdout.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <sympla/catalog.hpp>
#include <sympla/extraction.hpp>
#include <sympla/serialization.hpp>

using namespace sympla;

namespace {

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return json::parse(buf.str());
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << j.dump() << "\n";
}

SymplecticLieAlgebra read_algebra(const std::string& path) {
    return symplectic_from_json(read_json_file(path), path);
}

CocycleTriple read_cocycle(const std::string& path) {
    return cocycle_from_json(read_json_file(path), path);
}

json lie_report_json(const LieReport& rep) {
    json defects = json::array();
    for (const auto& d : rep.defects)
        defects.push_back({{"kind", d.jacobi ? "jacobi" : "antisymmetry"},
                           {"indices", {d.i, d.j, d.k}},
                           {"defect", [&] {
                                json v = json::array();
                                for (const auto& x : d.defect) v.push_back(to_string(x));
                                return v;
                            }()}});
    return {{"ok", rep.ok}, {"defects", defects}};
}

json symplectic_report_json(const SymplecticReport& rep) {
    json defects = json::array();
    for (const auto& d : rep.closedness_defects)
        defects.push_back({{"indices", {d.i, d.j, d.k}}, {"value", to_string(d.value)}});
    return {{"ok", rep.ok()},
            {"skew", rep.skew},
            {"nondegenerate", rep.nondegenerate},
            {"closed", rep.closed},
            {"closedness_defects", defects}};
}

json basis_json(const std::vector<Vec>& basis) {
    json out = json::array();
    for (const auto& v : basis) {
        json row = json::array();
        for (const auto& x : v) row.push_back(to_string(x));
        out.push_back(row);
    }
    return out;
}

int cmd_validate(const std::string& path, bool as_json) {
    SymplecticLieAlgebra s = read_algebra(path);
    LieReport lie = validate_lie(s.g);
    SymplecticReport sym = validate_symplectic(s);
    bool ok = lie.ok && sym.ok();
    if (as_json) {
        std::cout << json{{"lie", lie_report_json(lie)},
                          {"symplectic", symplectic_report_json(sym)},
                          {"ok", ok}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "lie:        " << (lie.ok ? "ok" : "FAILED") << "\n";
        for (const auto& d : lie.defects)
            std::cout << "  " << (d.jacobi ? "Jacobi" : "antisymmetry") << " defect at ("
                      << d.i + 1 << "," << d.j + 1 << "," << d.k + 1
                      << "): " << to_string(d.defect) << "\n";
        std::cout << "symplectic: " << (sym.ok() ? "ok" : "FAILED") << "\n";
        if (!sym.skew) std::cout << "  form is not skew-symmetric\n";
        if (!sym.nondegenerate) std::cout << "  form is degenerate\n";
        for (const auto& d : sym.closedness_defects)
            std::cout << "  d omega(" << d.i + 1 << "," << d.j + 1 << "," << d.k + 1
                      << ") = " << to_string(d.value) << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_reduce(const std::string& path, const std::string& out_path, bool as_json) {
    SymplecticLieAlgebra s = read_algebra(path);
    if (!validate_lie(s.g).ok || !validate_symplectic(s).ok()) {
        std::cerr << "input is not a symplectic Lie algebra; run validate\n";
        return 1;
    }
    ReductionResult r = reduce(s);
    if (as_json) {
        std::cout << json{{"j_basis", basis_json(r.j.basis())},
                          {"j_dim", r.j.dim()},
                          {"l_dim", r.l_dim},
                          {"a", symplectic_to_json(r.a)}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "j (dim " << r.j.dim() << "):\n";
        for (const auto& v : r.j.basis()) std::cout << "  " << to_string(v) << "\n";
        std::cout << "a: dim " << r.a.dim() << "\n";
        std::cout << "l_dim: " << r.l_dim << "\n";
    }
    if (!out_path.empty()) write_json_file(out_path, symplectic_to_json(r.a));
    return 0;
}

int cmd_cocycle_check(const std::string& path, bool as_json) {
    CocycleTriple t = read_cocycle(path);
    ConditionReport coc = is_cocycle(t);
    bool balanced = false, nilpotent = false;
    if (coc.ok) {
        balanced = is_balanced(t).ok;
        if (balanced) nilpotent = is_nilpotent_cocycle(t).ok;
    }
    if (as_json) {
        json violations = json::array();
        for (const auto& [c, w] : coc.violations) violations.push_back({{"condition", c}, {"witness", w}});
        std::cout << json{{"cocycle", coc.ok},
                          {"balanced", balanced},
                          {"nilpotent", nilpotent},
                          {"violations", violations}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "Z^2 (cocycle):    " << (coc.ok ? "yes" : "no") << "\n";
        for (const auto& [c, w] : coc.violations)
            std::cout << "  condition " << c << ": " << w << "\n";
        std::cout << "Z^2_# (balanced): " << (balanced ? "yes" : "no") << "\n";
        std::cout << "Z^2_0 (nilpotent): " << (nilpotent ? "yes" : "no") << "\n";
    }
    return coc.ok ? 0 : 1;
}

int cmd_model_build(const std::string& path, const std::string& out_path, bool as_json) {
    CocycleTriple t = read_cocycle(path);
    SymplecticLieAlgebra model = build_standard_model(t);
    write_json_file(out_path, symplectic_to_json(model));
    if (as_json)
        std::cout << json{{"dim", model.dim()}, {"output", out_path}}.dump() << "\n";
    else
        std::cout << "model dim " << model.dim() << " written to " << out_path << "\n";
    return 0;
}

int cmd_act_tau(const std::string& path, const std::string& tau_path,
                const std::string& out_path, bool as_json) {
    CocycleTriple t = read_cocycle(path);
    TauShift s = tau_from_json(read_json_file(tau_path), t.l_dim, t.a_dim(), tau_path);
    CocycleTriple shifted = act_tau(t, s);
    LinearMap phi = equivalence_iso(t, s);
    bool certified = check_symplectic_iso(build_standard_model(t),
                                          build_standard_model(shifted), phi);
    if (!out_path.empty()) write_json_file(out_path, cocycle_to_json(shifted));
    if (as_json) {
        std::cout << json{{"shifted", cocycle_to_json(shifted)},
                          {"phi", matrix_to_json(phi)},
                          {"certified", certified}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "phi (certified: " << (certified ? "yes" : "no") << "):\n"
                  << to_string(phi);
        if (!out_path.empty()) std::cout << "shifted cocycle written to " << out_path << "\n";
    }
    return certified ? 0 : 1;
}

int cmd_pullback(const std::string& path, const std::string& pair_path,
                 const std::string& out_path, bool as_json) {
    CocycleTriple t = read_cocycle(path);
    PairIso p = pair_from_json(read_json_file(pair_path), t.a, pair_path);
    CocycleTriple back = pullback(t, p);
    if (!out_path.empty()) write_json_file(out_path, cocycle_to_json(back));
    if (as_json)
        std::cout << json{{"pullback", cocycle_to_json(back)}}.dump() << "\n";
    else if (out_path.empty())
        std::cout << cocycle_to_json(back).dump() << "\n";
    else
        std::cout << "pulled-back cocycle written to " << out_path << "\n";
    return 0;
}

int cmd_invariants(const std::string& path, bool as_json) {
    CocycleTriple t = read_cocycle(path);
    InvariantValue sign = invariant_sign_xi2(t);
    InvariantValue kappa = invariant_kappa7(t);
    InvariantValue l = invariant_l(t);
    std::string eps_key, eps_reason;
    if (t.l_dim == 3 && t.a_dim() == 0) {
        try {
            eps_key = eps_orbit_key(eps_to_matrix(t)).to_string();
        } catch (const std::invalid_argument& e) {
            eps_reason = e.what();
        }
    } else {
        eps_reason = "only defined for l = R^3, a = 0";
    }
    auto field = [&](const InvariantValue& v) -> json {
        if (v.defined()) return {{"value", to_string(*v.value)}};
        return {{"n/a", v.reason}};
    };
    if (as_json) {
        json out = {{"sign_xi2", field(sign)}, {"kappa7", field(kappa)}, {"l", field(l)}};
        out["eps_key"] = eps_key.empty() ? json{{"n/a", eps_reason}} : json{{"value", eps_key}};
        std::cout << out.dump() << "\n";
    } else {
        auto line = [&](const std::string& name, const InvariantValue& v) {
            std::cout << name << ": "
                      << (v.defined() ? to_string(*v.value) : "n/a (" + v.reason + ")") << "\n";
        };
        line("sign_xi2", sign);
        line("kappa7", kappa);
        line("l", l);
        std::cout << "eps_key: " << (eps_key.empty() ? "n/a (" + eps_reason + ")" : eps_key)
                  << "\n";
    }
    return 0;
}

int cmd_equiv(const std::string& p1, const std::string& p2, bool as_json) {
    CocycleTriple t1 = read_cocycle(p1), t2 = read_cocycle(p2);
    EquivalenceVerdict v = are_equivalent(t1, t2);
    std::string verdict = v.kind == EquivalenceKind::Witness        ? "witness"
                          : v.kind == EquivalenceKind::NotEquivalent ? "not-equivalent"
                                                                     : "unknown";
    if (as_json) {
        json out = {{"verdict", verdict}};
        if (v.tau) out["tau"] = tau_to_json(TauShift(*v.tau), t1.l_dim);
        std::cout << out.dump() << "\n";
    } else {
        std::cout << verdict << "\n";
        if (v.tau) std::cout << "tau:\n" << to_string(*v.tau);
    }
    return v.kind == EquivalenceKind::Witness ? 0 : 1;
}

int cmd_catalog_verify(const std::string& path, unsigned jobs, bool as_json) {
    std::vector<CatalogEntry> entries = load_catalog(path);
    CatalogReport rep = verify_catalog(entries, jobs);
    if (as_json) {
        json jentries = json::array();
        for (const auto& r : rep.entries) {
            json inv = json::object();
            for (const auto& [k, v] : r.invariant_outcomes) inv[k] = v;
            jentries.push_back(
                {{"id", r.id}, {"ok", r.ok}, {"failures", r.failures}, {"invariants", inv}});
        }
        json jpairs = json::array();
        for (const auto& p : rep.pairs) {
            std::string status = p.status == PairOutcome::Status::Separated ? "separated"
                                 : p.status == PairOutcome::Status::AssertedByPaper
                                     ? "asserted-by-paper"
                                     : "unseparated";
            if (p.status != PairOutcome::Status::Separated)
                jpairs.push_back({{"first", p.first}, {"second", p.second}, {"status", status}});
        }
        std::cout << json{{"entries", jentries},
                          {"pairs", jpairs},
                          {"all_ok", rep.all_ok},
                          {"separated_pairs", rep.separated_pairs},
                          {"asserted_pairs", rep.asserted_pairs},
                          {"unseparated_pairs", rep.unseparated_pairs}}
                         .dump()
                  << "\n";
    } else {
        std::size_t ok_count = 0;
        for (const auto& r : rep.entries) {
            if (r.ok) {
                ++ok_count;
                continue;
            }
            std::cout << "[FAIL] " << r.id << "\n";
            for (const auto& f : r.failures) std::cout << "  " << f << "\n";
        }
        for (const auto& p : rep.pairs) {
            if (p.status == PairOutcome::Status::Unseparated)
                std::cout << "[FAIL] unseparated pair: " << p.first << " / " << p.second << "\n";
            else if (p.status == PairOutcome::Status::AssertedByPaper)
                std::cout << "[note] distinctness asserted by the source classification: "
                          << p.first << " / " << p.second << "\n";
        }
        std::cout << ok_count << "/" << rep.entries.size() << " entries certified, "
                  << rep.separated_pairs << " pairs separated, " << rep.asserted_pairs
                  << " asserted, " << rep.unseparated_pairs << " unseparated\n";
        std::cout << (rep.all_ok ? "all green" : "FAILURES") << "\n";
    }
    return rep.all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for symplectic Lie algebras with degenerate center"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable report on stdout");

    std::string path, second_path, out_path, tau_path, pair_path;
    unsigned jobs = 1;

    auto* validate = app.add_subcommand("validate", "Lie + symplectic validation report");
    validate->fallthrough();
    validate->add_option("algebra", path)->required();

    auto* reduce_cmd = app.add_subcommand("reduce", "canonical symplectic reduction");
    reduce_cmd->fallthrough();
    reduce_cmd->add_option("algebra", path)->required();
    reduce_cmd->add_option("-o,--output", out_path, "write the reduced algebra");

    auto* cocycle = app.add_subcommand("cocycle", "cocycle predicates");
    cocycle->fallthrough();
    auto* cocycle_check = cocycle->add_subcommand("check", "Z^2 / balanced / nilpotent verdicts");
    cocycle_check->fallthrough();
    cocycle_check->add_option("cocycle", path)->required();

    auto* model = app.add_subcommand("model", "standard model");
    model->fallthrough();
    auto* model_build = model->add_subcommand("build", "build the standard model");
    model_build->fallthrough();
    model_build->add_option("cocycle", path)->required();
    model_build->add_option("-o,--output", out_path)->required();

    auto* act = app.add_subcommand("act", "group actions on cocycles");
    act->fallthrough();
    auto* act_tau_cmd = act->add_subcommand("tau", "shift by tau and certify");
    act_tau_cmd->fallthrough();
    act_tau_cmd->add_option("cocycle", path)->required();
    act_tau_cmd->add_option("--tau", tau_path)->required();
    act_tau_cmd->add_option("-o,--output", out_path, "write the shifted cocycle");

    auto* pull = app.add_subcommand("pullback", "pull back along a pair (S, U)");
    pull->fallthrough();
    pull->add_option("cocycle", path)->required();
    pull->add_option("--pair", pair_path)->required();
    pull->add_option("-o,--output", out_path, "write the pulled-back cocycle");

    auto* inv = app.add_subcommand("invariants", "orbit invariants with n/a reasons");
    inv->fallthrough();
    inv->add_option("cocycle", path)->required();

    auto* equiv = app.add_subcommand("equiv", "tau-equivalence of two cocycles");
    equiv->fallthrough();
    equiv->add_option("first", path)->required();
    equiv->add_option("second", second_path)->required();

    auto* catalog = app.add_subcommand("catalog", "catalog certification");
    catalog->fallthrough();
    auto* catalog_verify = catalog->add_subcommand("verify", "certify every entry");
    catalog_verify->fallthrough();
    catalog_verify->add_option("catalog", path)->required();
    catalog_verify->add_option("--jobs", jobs, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*validate) return cmd_validate(path, as_json);
        if (*reduce_cmd) return cmd_reduce(path, out_path, as_json);
        if (*cocycle_check) return cmd_cocycle_check(path, as_json);
        if (*model_build) return cmd_model_build(path, out_path, as_json);
        if (*act_tau_cmd) return cmd_act_tau(path, tau_path, out_path, as_json);
        if (*pull) return cmd_pullback(path, pair_path, out_path, as_json);
        if (*inv) return cmd_invariants(path, as_json);
        if (*equiv) return cmd_equiv(path, second_path, as_json);
        if (*catalog_verify) return cmd_catalog_verify(path, jobs, as_json);
        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
