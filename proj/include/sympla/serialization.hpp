#pragma once

#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "action.hpp"
#include "cocycle.hpp"
#include "symplectic.hpp"

namespace sympla {

using json = nlohmann::json;

/// Raised on malformed input files; the message carries field context and,
/// for line-oriented files, the line number.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

namespace io {

inline void require_fields(const json& j, const std::set<std::string>& required,
                           const std::set<std::string>& optional, const std::string& what) {
    if (!j.is_object()) throw ParseError(what + ": expected a JSON object");
    for (const auto& [key, _] : j.items())
        if (!required.count(key) && !optional.count(key))
            throw ParseError(what + ": unknown field '" + key + "'");
    for (const auto& key : required)
        if (!j.contains(key)) throw ParseError(what + ": missing field '" + key + "'");
}

inline Rat scalar(const json& j, const std::string& what) {
    if (!j.is_string()) throw ParseError(what + ": scalar must be a string \"p\" or \"p/q\"");
    try {
        return parse_rat(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(what + ": " + e.what());
    }
}

inline std::size_t index(const json& j, std::size_t bound, const std::string& what) {
    if (!j.is_number_unsigned() || j.get<std::size_t>() >= bound)
        throw ParseError(what + ": index out of range");
    return j.get<std::size_t>();
}

inline std::size_t count(const json& j, const std::string& what) {
    if (!j.is_number_unsigned()) throw ParseError(what + ": expected a non-negative count");
    return j.get<std::size_t>();
}

/// Entry lists [[i, j, ..., scalar], ...]; the lead pair must be strictly
/// increasing where the format says i < j, and duplicate tuples are rejected.
inline void entry_list(const json& j, std::size_t arity, const std::string& what,
                       const std::function<void(const std::vector<std::size_t>&, const Rat&)>& sink,
                       const std::vector<std::size_t>& bounds, bool lead_pair_increasing) {
    if (!j.is_array()) throw ParseError(what + ": expected an array of entries");
    std::set<std::vector<std::size_t>> seen;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != arity + 1)
            throw ParseError(what + ": each entry needs " + std::to_string(arity) +
                             " indices and a scalar");
        std::vector<std::size_t> idx;
        for (std::size_t k = 0; k < arity; ++k) idx.push_back(index(e[k], bounds[k], what));
        if (lead_pair_increasing && !(idx[0] < idx[1]))
            throw ParseError(what + ": entries must have i < j");
        if (!seen.insert(idx).second) throw ParseError(what + ": duplicate index tuple");
        sink(idx, scalar(e[arity], what));
    }
}

}  // namespace io

// --- Lie algebra + symplectic form: { "dim", "brackets", "omega" } ----------

inline SymplecticLieAlgebra symplectic_from_json(const json& j, const std::string& what) {
    io::require_fields(j, {"dim", "brackets", "omega"}, {}, what);
    std::size_t n = io::count(j["dim"], what + ".dim");
    LieAlgebra g(n);
    io::entry_list(
        j["brackets"], 3, what + ".brackets",
        [&](const std::vector<std::size_t>& idx, const Rat& v) {
            g.add_bracket_term(idx[0], idx[1], idx[2], v);
        },
        {n, n, n}, true);
    Matrix omega(n, n);
    io::entry_list(
        j["omega"], 2, what + ".omega",
        [&](const std::vector<std::size_t>& idx, const Rat& v) {
            omega(idx[0], idx[1]) = v;
            omega(idx[1], idx[0]) = -v;
        },
        {n, n}, true);
    return {std::move(g), std::move(omega)};
}

inline json symplectic_to_json(const SymplecticLieAlgebra& s) {
    json brackets = json::array();
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = i + 1; j < s.dim(); ++j)
            for (std::size_t k = 0; k < s.dim(); ++k)
                if (s.g.at(i, j, k) != 0)
                    brackets.push_back({i, j, k, to_string(s.g.at(i, j, k))});
    json omega = json::array();
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = i + 1; j < s.dim(); ++j)
            if (s.omega(i, j) != 0) omega.push_back({i, j, to_string(s.omega(i, j))});
    return {{"dim", s.dim()}, {"brackets", brackets}, {"omega", omega}};
}

// --- Cocycle: { "l_dim", "a", "gamma", "epsilon", "xi" } --------------------

inline CocycleTriple cocycle_from_json(const json& j, const std::string& what) {
    io::require_fields(j, {"l_dim", "a", "gamma", "epsilon", "xi"}, {}, what);
    std::size_t m = io::count(j["l_dim"], what + ".l_dim");
    SymplecticLieAlgebra a = symplectic_from_json(j["a"], what + ".a");
    std::size_t adim = a.dim();
    CocycleTriple t(m, std::move(a));
    io::entry_list(
        j["gamma"], 3, what + ".gamma",
        [&](const std::vector<std::size_t>& idx, const Rat& v) {
            t.gamma_at(idx[0], idx[1], idx[2]) = v;
        },
        {m, adim, m}, false);
    io::entry_list(
        j["epsilon"], 3, what + ".epsilon",
        [&](const std::vector<std::size_t>& idx, const Rat& v) {
            t.set_eps(idx[0], idx[1], idx[2], v);
        },
        {m, m, m}, true);
    io::entry_list(
        j["xi"], 3, what + ".xi",
        [&](const std::vector<std::size_t>& idx, const Rat& v) {
            t.xi_at(idx[0], idx[1], idx[2]) = v;
        },
        {m, adim, adim}, false);
    return t;
}

inline json cocycle_to_json(const CocycleTriple& t) {
    json gamma = json::array(), epsilon = json::array(), xi = json::array();
    for (std::size_t i = 0; i < t.l_dim; ++i)
        for (std::size_t q = 0; q < t.a_dim(); ++q)
            for (std::size_t k = 0; k < t.l_dim; ++k)
                if (t.gamma_at(i, q, k) != 0)
                    gamma.push_back({i, q, k, to_string(t.gamma_at(i, q, k))});
    for (std::size_t i = 0; i < t.l_dim; ++i)
        for (std::size_t j = i + 1; j < t.l_dim; ++j)
            for (std::size_t k = 0; k < t.l_dim; ++k)
                if (t.eps_at(i, j, k) != 0) epsilon.push_back({i, j, k, to_string(t.eps_at(i, j, k))});
    for (std::size_t i = 0; i < t.l_dim; ++i)
        for (std::size_t q = 0; q < t.a_dim(); ++q)
            for (std::size_t r = 0; r < t.a_dim(); ++r)
                if (t.xi_at(i, q, r) != 0) xi.push_back({i, q, r, to_string(t.xi_at(i, q, r))});
    return {{"l_dim", t.l_dim},
            {"a", symplectic_to_json(t.a)},
            {"gamma", gamma},
            {"epsilon", epsilon},
            {"xi", xi}};
}

// --- Tau shift: { "tau": [[iL, jA, scalar], ...], "sigma_bar": [[i, j, scalar], ...] }

inline TauShift tau_from_json(const json& j, std::size_t m, std::size_t adim,
                              const std::string& what) {
    io::require_fields(j, {"tau"}, {"sigma_bar"}, what);
    Matrix tau(adim, m);
    io::entry_list(
        j["tau"], 2, what + ".tau",
        [&](const std::vector<std::size_t>& idx, const Rat& v) { tau(idx[1], idx[0]) = v; },
        {m, adim}, false);
    if (!j.contains("sigma_bar")) return TauShift(std::move(tau));
    Matrix sigma(m, m);
    io::entry_list(
        j["sigma_bar"], 2, what + ".sigma_bar",
        [&](const std::vector<std::size_t>& idx, const Rat& v) {
            if (idx[0] > idx[1])
                throw ParseError(what + ".sigma_bar: entries must have i <= j");
            sigma(idx[0], idx[1]) = v;
            sigma(idx[1], idx[0]) = v;
        },
        {m, m}, false);
    return TauShift(std::move(tau), std::move(sigma));
}

inline json tau_to_json(const TauShift& s, std::size_t m) {
    json tau = json::array();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t q = 0; q < s.tau.rows(); ++q)
            if (s.tau(q, i) != 0) tau.push_back({i, q, to_string(s.tau(q, i))});
    json out = {{"tau", tau}};
    if (s.sigma_bar) {
        json sb = json::array();
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i; j < m; ++j)
                if ((*s.sigma_bar)(i, j) != 0) sb.push_back({i, j, to_string((*s.sigma_bar)(i, j))});
        out["sigma_bar"] = sb;
    }
    return out;
}

// --- Dense matrices: [["1","0"],["0","1"]] ----------------------------------

inline Matrix matrix_from_json(const json& j, const std::string& what) {
    if (!j.is_array() || j.empty()) throw ParseError(what + ": expected a non-empty matrix");
    std::size_t rows = j.size(), cols = j[0].size();
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw ParseError(what + ": ragged matrix");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = io::scalar(j[i][c], what);
    }
    return m;
}

inline json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

// --- Pair file: { "S": <matrix>, "U": <matrix> } ----------------------------

inline PairIso pair_from_json(const json& j, const SymplecticLieAlgebra& a,
                              const std::string& what) {
    io::require_fields(j, {"S", "U"}, {}, what);
    return make_group_element(a, matrix_from_json(j["S"], what + ".S"),
                              matrix_from_json(j["U"], what + ".U"));
}

}  // namespace sympla
