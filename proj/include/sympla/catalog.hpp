#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "extraction.hpp"
#include "serialization.hpp"

namespace sympla {

struct ExpectedRecord {
    bool balanced = true;
    bool nilpotent = true;
    std::size_t model_dim = 0;
    std::map<std::string, Rat> invariants;  // names: sign_xi2, kappa7, l
};

struct CatalogEntry {
    std::string id;
    std::string family;  // R3-zero, R-R4, R-h3R, R2-R2
    std::map<std::string, Rat> parameters;
    CocycleTriple cocycle;
    ExpectedRecord expected;
    std::string formula;  // generic family formula, free text
    // Distinctness from same-signature family members rests on the source
    // classification, not on the implemented invariants; such pairs are
    // excluded from the distinctness matrix and listed in the report.
    bool separation_asserted = false;
};

struct Dim4Entry {
    std::string id;
    SymplecticLieAlgebra algebra;
};

inline const std::set<std::string>& known_families() {
    static const std::set<std::string> f = {"R3-zero", "R-R4", "R-h3R", "R2-R2"};
    return f;
}

inline CatalogEntry catalog_entry_from_json(const json& j, const std::string& what) {
    io::require_fields(j, {"id", "family", "parameters", "cocycle", "expected"},
                       {"formula", "separation"}, what);
    CatalogEntry e;
    if (!j["id"].is_string()) throw ParseError(what + ".id: expected a string");
    e.id = j["id"].get<std::string>();
    if (!j["family"].is_string() || !known_families().count(j["family"].get<std::string>()))
        throw ParseError(what + ".family: expected one of R3-zero, R-R4, R-h3R, R2-R2");
    e.family = j["family"].get<std::string>();
    if (!j["parameters"].is_object()) throw ParseError(what + ".parameters: expected an object");
    for (const auto& [k, v] : j["parameters"].items())
        e.parameters[k] = io::scalar(v, what + ".parameters." + k);
    e.cocycle = cocycle_from_json(j["cocycle"], what + ".cocycle");
    const json& ex = j["expected"];
    io::require_fields(ex, {"balanced", "nilpotent", "model_dim", "invariants"}, {},
                       what + ".expected");
    if (!ex["balanced"].is_boolean() || !ex["nilpotent"].is_boolean())
        throw ParseError(what + ".expected: balanced/nilpotent must be booleans");
    e.expected.balanced = ex["balanced"].get<bool>();
    e.expected.nilpotent = ex["nilpotent"].get<bool>();
    e.expected.model_dim = io::count(ex["model_dim"], what + ".expected.model_dim");
    if (!ex["invariants"].is_object())
        throw ParseError(what + ".expected.invariants: expected an object");
    for (const auto& [k, v] : ex["invariants"].items())
        e.expected.invariants[k] = io::scalar(v, what + ".expected.invariants." + k);
    if (j.contains("formula")) {
        if (!j["formula"].is_string()) throw ParseError(what + ".formula: expected a string");
        e.formula = j["formula"].get<std::string>();
    }
    if (j.contains("separation")) {
        if (!j["separation"].is_string() ||
            j["separation"].get<std::string>() != "asserted-by-paper")
            throw ParseError(what + ".separation: the only recognized value is "
                             "\"asserted-by-paper\"");
        e.separation_asserted = true;
    }
    return e;
}

inline json catalog_entry_to_json(const CatalogEntry& e) {
    json params = json::object();
    for (const auto& [k, v] : e.parameters) params[k] = to_string(v);
    json invs = json::object();
    for (const auto& [k, v] : e.expected.invariants) invs[k] = to_string(v);
    json out = {{"id", e.id},
                {"family", e.family},
                {"parameters", params},
                {"cocycle", cocycle_to_json(e.cocycle)},
                {"expected",
                 {{"balanced", e.expected.balanced},
                  {"nilpotent", e.expected.nilpotent},
                  {"model_dim", e.expected.model_dim},
                  {"invariants", invs}}}};
    if (!e.formula.empty()) out["formula"] = e.formula;
    if (e.separation_asserted) out["separation"] = "asserted-by-paper";
    return out;
}

inline Dim4Entry dim4_entry_from_json(const json& j, const std::string& what) {
    io::require_fields(j, {"id", "algebra"}, {}, what);
    if (!j["id"].is_string()) throw ParseError(what + ".id: expected a string");
    return {j["id"].get<std::string>(), symplectic_from_json(j["algebra"], what + ".algebra")};
}

inline json dim4_entry_to_json(const Dim4Entry& e) {
    return {{"id", e.id}, {"algebra", symplectic_to_json(e.algebra)}};
}

/// Catalog files are line-oriented: one JSON value per line, blank lines
/// ignored. Parse errors carry the line number.
template <class Entry, class FromJson>
inline std::vector<Entry> load_jsonl(const std::string& path, FromJson from_json) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::vector<Entry> entries;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (blank) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::parse_error& e) {
            throw ParseError(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
        try {
            entries.push_back(from_json(j, "entry"));
        } catch (const ParseError& e) {
            throw ParseError(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return entries;
}

inline std::vector<CatalogEntry> load_catalog(const std::string& path) {
    return load_jsonl<CatalogEntry>(path, catalog_entry_from_json);
}

inline std::vector<Dim4Entry> load_dim4(const std::string& path) {
    return load_jsonl<Dim4Entry>(path, dim4_entry_from_json);
}

// ---------------------------------------------------------------------------
// Certification

struct EntryResult {
    std::string id;
    bool ok = true;
    std::vector<std::string> failures;
    // outcome of each implemented invariant, value or "n/a (<reason>)"
    std::map<std::string, std::string> invariant_outcomes;

    void fail(std::string what) {
        ok = false;
        failures.push_back(std::move(what));
    }
};

struct PairOutcome {
    std::string first, second;
    enum class Status { Separated, AssertedByPaper, Unseparated } status;
};

struct CatalogReport {
    std::vector<EntryResult> entries;
    std::vector<PairOutcome> pairs;
    bool all_ok = true;
    std::size_t separated_pairs = 0, asserted_pairs = 0, unseparated_pairs = 0;
};

inline std::string invariant_outcome_string(const InvariantValue& v) {
    return v.defined() ? to_string(*v.value) : "n/a (" + v.reason + ")";
}

/// Certifies one entry: predicate chain, model checks, expected invariant
/// values, and the reduction round trip.
inline EntryResult verify_entry(const CatalogEntry& e) {
    EntryResult r;
    r.id = e.id;
    if (!validate_lie(e.cocycle.a.g).ok) r.fail("coefficient algebra fails validate_lie");
    if (!validate_symplectic(e.cocycle.a).ok())
        r.fail("coefficient algebra fails validate_symplectic");
    if (!r.ok) return r;

    ConditionReport coc = is_cocycle(e.cocycle);
    if (!coc.ok) {
        std::string what = "is_cocycle violated:";
        for (const auto& [c, w] : coc.violations)
            what += " (" + std::to_string(c) + ") " + w + ";";
        r.fail(what);
    }
    BalancedReport bal = is_balanced(e.cocycle);
    if (bal.ok != e.expected.balanced)
        r.fail(std::string("is_balanced = ") + (bal.ok ? "true" : "false") + ", expected " +
               (e.expected.balanced ? "true" : "false"));
    NilpotentCocycleReport nil = is_nilpotent_cocycle(e.cocycle);
    if (nil.ok != e.expected.nilpotent)
        r.fail(std::string("is_nilpotent_cocycle = ") + (nil.ok ? "true" : "false") +
               ", expected " + (e.expected.nilpotent ? "true" : "false"));

    SymplecticLieAlgebra model = build_standard_model(e.cocycle);
    if (model.dim() != e.expected.model_dim)
        r.fail("model dimension " + std::to_string(model.dim()) + ", expected " +
               std::to_string(e.expected.model_dim));
    bool model_lie_ok = validate_lie(model.g).ok;
    bool model_symp_ok = validate_symplectic(model).ok();
    if (model_lie_ok != coc.ok || model_symp_ok != coc.ok)
        r.fail("model validation disagrees with is_cocycle");
    if (coc.ok) {
        if ((canonical_isotropic_ideal(model) == lstar_block(e.cocycle)) != bal.ok)
            r.fail("canonical ideal vs l* block disagrees with is_balanced");
        if (bal.ok && is_nilpotent(model.g).nilpotent != nil.ok)
            r.fail("model nilpotency disagrees with is_nilpotent_cocycle");
    }

    InvariantValue sign = invariant_sign_xi2(e.cocycle);
    InvariantValue kappa = invariant_kappa7(e.cocycle);
    InvariantValue lval = invariant_l(e.cocycle);
    r.invariant_outcomes["sign_xi2"] = invariant_outcome_string(sign);
    r.invariant_outcomes["kappa7"] = invariant_outcome_string(kappa);
    r.invariant_outcomes["l"] = invariant_outcome_string(lval);
    if (e.family == "R3-zero") {
        try {
            r.invariant_outcomes["eps_key"] = eps_orbit_key(eps_to_matrix(e.cocycle)).to_string();
        } catch (const std::invalid_argument& ex) {
            r.invariant_outcomes["eps_key"] = std::string("n/a (") + ex.what() + ")";
        }
    }
    auto check_expected = [&](const std::string& name, const InvariantValue& v) {
        auto it = e.expected.invariants.find(name);
        if (it == e.expected.invariants.end()) return;
        if (!v.defined())
            r.fail("invariant " + name + " expected " + to_string(it->second) + " but is " +
                   invariant_outcome_string(v));
        else if (*v.value != it->second)
            r.fail("invariant " + name + " = " + to_string(*v.value) + ", expected " +
                   to_string(it->second));
    };
    check_expected("sign_xi2", sign);
    check_expected("kappa7", kappa);
    check_expected("l", lval);
    for (const auto& [name, _] : e.expected.invariants)
        if (name != "sign_xi2" && name != "kappa7" && name != "l")
            r.fail("unknown expected invariant '" + name + "'");

    // reduction round trip, only meaningful for valid balanced entries
    if (coc.ok && bal.ok) {
        try {
            ExtractionResult ex = extract_cocycle(model);
            EquivalenceVerdict v = are_equivalent(e.cocycle, ex.triple);
            if (v.kind != EquivalenceKind::Witness)
                r.fail("round trip: are_equivalent(t, extracted) found no witness");
            else if (!check_symplectic_iso(build_standard_model(e.cocycle),
                                           build_standard_model(ex.triple),
                                           equivalence_iso(e.cocycle, TauShift(*v.tau))))
                r.fail("round trip: witness failed the isomorphism certification");
        } catch (const std::exception& ex) {
            r.fail(std::string("round trip: ") + ex.what());
        }
    }
    return r;
}

/// Signature used by the pairwise distinctness matrix.
inline std::string separation_signature(const EntryResult& r) {
    std::string s;
    for (const auto& [k, v] : r.invariant_outcomes) s += k + "=" + v + ";";
    return s;
}

inline CatalogReport verify_catalog(const std::vector<CatalogEntry>& entries,
                                    unsigned jobs = 1) {
    CatalogReport report;
    report.entries.resize(entries.size());
    if (jobs <= 1 || entries.size() <= 1) {
        for (std::size_t i = 0; i < entries.size(); ++i)
            report.entries[i] = verify_entry(entries[i]);
    } else {
        std::vector<std::thread> workers;
        std::size_t next = 0;
        std::mutex mu;
        for (unsigned w = 0; w < jobs; ++w)
            workers.emplace_back([&]() {
                while (true) {
                    std::size_t i;
                    {
                        std::lock_guard<std::mutex> lock(mu);
                        if (next >= entries.size()) return;
                        i = next++;
                    }
                    report.entries[i] = verify_entry(entries[i]);
                }
            });
        for (auto& w : workers) w.join();
    }
    for (const auto& r : report.entries)
        if (!r.ok) report.all_ok = false;

    // duplicate ids are configuration errors
    std::map<std::string, std::size_t> ids;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (ids.count(entries[i].id)) {
            report.entries[i].fail("duplicate entry id");
            report.all_ok = false;
        }
        ids[entries[i].id] = i;
    }

    // pairwise distinctness within each family
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (std::size_t j = i + 1; j < entries.size(); ++j) {
            if (entries[i].family != entries[j].family) continue;
            PairOutcome p{entries[i].id, entries[j].id, PairOutcome::Status::Separated};
            if (separation_signature(report.entries[i]) !=
                separation_signature(report.entries[j])) {
                ++report.separated_pairs;
            } else if (entries[i].separation_asserted && entries[j].separation_asserted) {
                p.status = PairOutcome::Status::AssertedByPaper;
                ++report.asserted_pairs;
            } else {
                p.status = PairOutcome::Status::Unseparated;
                ++report.unseparated_pairs;
                report.all_ok = false;
            }
            report.pairs.push_back(p);
        }
    return report;
}

/// Dimension-4 list certification: every entry validates and the three are
/// pairwise separated by (center dimension, nilpotency class).
struct Dim4Report {
    bool all_ok = true;
    std::vector<std::string> failures;
    std::vector<std::pair<std::size_t, std::size_t>> signatures;  // (dim z, class)
};

inline Dim4Report verify_dim4(const std::vector<Dim4Entry>& entries) {
    Dim4Report rep;
    for (const auto& e : entries) {
        if (!validate_lie(e.algebra.g).ok) {
            rep.failures.push_back(e.id + ": fails validate_lie");
            rep.all_ok = false;
        }
        if (!validate_symplectic(e.algebra).ok()) {
            rep.failures.push_back(e.id + ": fails validate_symplectic");
            rep.all_ok = false;
        }
        auto [nilp, cls] = is_nilpotent(e.algebra.g);
        if (!nilp) {
            rep.failures.push_back(e.id + ": not nilpotent");
            rep.all_ok = false;
        }
        rep.signatures.emplace_back(center(e.algebra.g).dim(), cls);
    }
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (std::size_t j = i + 1; j < entries.size(); ++j)
            if (rep.signatures[i] == rep.signatures[j]) {
                rep.failures.push_back(entries[i].id + " / " + entries[j].id +
                                       ": identical (center dim, class) signature");
                rep.all_ok = false;
            }
    return rep;
}

}  // namespace sympla
