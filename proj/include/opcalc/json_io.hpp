#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "opcalc/algebra.hpp"
#include "opcalc/checks.hpp"
#include "opcalc/hochschild.hpp"
#include "opcalc/homology.hpp"

namespace opcalc {

using nlohmann::json;

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("malformed JSON in " + path + ": " + e.what());
    }
}

inline Scalar scalar_from_json(const FieldSpec& f, const json& j) {
    if (j.is_number_integer()) return Scalar::from_int(f, j.get<long long>());
    if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
    throw InputError("scalar must be an integer or a string like \"num/den\"");
}

inline MultiIndex multi_index_from_key(const std::string& key, int expected_len, int dim) {
    MultiIndex mi;
    if (!key.empty()) {
        std::stringstream ss(key);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                mi.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw InputError("bad index tuple \"" + key + "\"");
            }
        }
    }
    if (static_cast<int>(mi.size()) != expected_len)
        throw InputError("index tuple \"" + key + "\" has length " + std::to_string(mi.size()) +
                         ", expected " + std::to_string(expected_len));
    for (int v : mi)
        if (v < 0 || v >= dim)
            throw InputError("index out of range in tuple \"" + key + "\"");
    return mi;
}

inline Algebra algebra_from_json(const json& j) {
    Algebra a;
    try {
        a.name = j.value("name", "unnamed");
        a.field = FieldSpec::parse(j.at("field").get<std::string>());
        a.dim = j.at("dim").get<int>();
        a.basis_names = j.value("basis_names", std::vector<std::string>{});
        if (a.basis_names.empty())
            for (int i = 0; i < a.dim; ++i) a.basis_names.push_back("b" + std::to_string(i));
        a.unit_index = j.value("unit_index", 0);
        const json& sc = j.at("structure_constants");
        if (!sc.is_array() || static_cast<int>(sc.size()) != a.dim)
            throw InputError("structure_constants must be a dim x dim array");
        for (int i = 0; i < a.dim; ++i) {
            if (!sc[i].is_array() || static_cast<int>(sc[i].size()) != a.dim)
                throw InputError("structure_constants row has wrong length");
            a.sc.emplace_back();
            for (int k = 0; k < a.dim; ++k) {
                const json& cell = sc[i][k];
                if (!cell.is_array() || static_cast<int>(cell.size()) != a.dim)
                    throw InputError("structure constant vectors must have length dim");
                Vec v;
                for (int s = 0; s < a.dim; ++s) v.push_back(scalar_from_json(a.field, cell[s]));
                a.sc.back().push_back(std::move(v));
            }
        }
    } catch (const json::exception& e) {
        throw InputError(std::string("bad algebra file: ") + e.what());
    }
    return a;
}

inline Algebra load_algebra(const std::string& path) {
    return algebra_from_json(load_json_file(path));
}

// Coefficient-pair file: {"V": <algebra>, "gamma": [column per V basis
// vector, each a length-dim-A scalar array]}.
inline std::pair<Algebra, std::vector<Vec>> pair_data_from_json(const FieldSpec& field,
                                                                int dim_a, const json& j) {
    try {
        Algebra v = algebra_from_json(j.at("V"));
        if (!(v.field == field)) throw InputError("coefficient algebra is over a different field");
        const json& g = j.at("gamma");
        if (!g.is_array() || static_cast<int>(g.size()) != v.dim)
            throw InputError("gamma must have one column per V basis vector");
        std::vector<Vec> cols;
        for (const auto& col : g) {
            if (!col.is_array() || static_cast<int>(col.size()) != dim_a)
                throw InputError("gamma columns must have length dim A");
            Vec c;
            for (const auto& s : col) c.push_back(scalar_from_json(field, s));
            cols.push_back(std::move(c));
        }
        return {std::move(v), std::move(cols)};
    } catch (const json::exception& e) {
        throw InputError(std::string("bad coefficient-pair file: ") + e.what());
    }
}

// Cochain file: {"arity": p, "codomain": "V"|"A", "values": {"i1,...,ip":
// [scalar per codomain basis vector]}}; arity 0 uses the key "".
inline Cochain cochain_from_json(const CoefficientPair& pair, const json& j) {
    try {
        Cochain c(j.at("arity").get<int>());
        if (c.arity < 0) throw InputError("negative arity");
        std::string codomain = j.value("codomain", "V");
        if (codomain != "V" && codomain != "A") throw InputError("codomain must be \"A\" or \"V\"");
        const bool in_a = codomain == "A";
        const int want = in_a ? pair.dim_a() : pair.dim_v();
        if (j.contains("values"))
            for (const auto& [key, val] : j.at("values").items()) {
                MultiIndex mi = multi_index_from_key(key, c.arity, pair.dim_a());
                if (!val.is_array() || static_cast<int>(val.size()) != want)
                    throw InputError("cochain value for \"" + key + "\" must have length " +
                                     std::to_string(want));
                Vec v;
                for (const auto& s : val) v.push_back(scalar_from_json(pair.field(), s));
                if (in_a) v = pair.eta(v);  // values land in V via the inverse of gamma
                c.add_value(mi, v);
            }
        return c;
    } catch (const json::exception& e) {
        throw InputError(std::string("bad cochain file: ") + e.what());
    }
}

inline Cochain load_cochain(const CoefficientPair& pair, const std::string& path) {
    return cochain_from_json(pair, load_json_file(path));
}

// Chain file: {"degree": n, "terms": {"i0,...,in": scalar}}.
inline Chain chain_from_json(const CoefficientPair& pair, const json& j) {
    try {
        Chain c(j.at("degree").get<int>());
        if (c.degree < 0) throw InputError("negative degree");
        if (j.contains("terms"))
            for (const auto& [key, val] : j.at("terms").items())
                c.add_term(multi_index_from_key(key, c.degree + 1, pair.dim_a()),
                           scalar_from_json(pair.field(), val));
        return c;
    } catch (const json::exception& e) {
        throw InputError(std::string("bad chain file: ") + e.what());
    }
}

inline Chain load_chain(const CoefficientPair& pair, const std::string& path) {
    return chain_from_json(pair, load_json_file(path));
}

inline json chain_to_json(const Chain& c) {
    json terms = json::object();
    for (const auto& [k, v] : c.terms) terms[multi_index_str(k)] = v.str();
    return json{{"degree", c.degree}, {"terms", terms}};
}

inline json cochain_to_json(const Cochain& c) {
    json values = json::object();
    for (const auto& [k, v] : c.values) {
        json arr = json::array();
        for (const auto& s : v) arr.push_back(s.str());
        values[multi_index_str(k)] = arr;
    }
    return json{{"arity", c.arity}, {"codomain", "V"}, {"values", values}};
}

inline json validation_to_json(const ValidationReport& rep) {
    json issues = json::array();
    for (const auto& i : rep.issues)
        issues.push_back({{"check", i.check}, {"indices", i.indices}, {"detail", i.detail}});
    return json{{"ok", rep.ok}, {"issues", issues}};
}

inline json axiom_report_to_json(const AxiomReport& rep) {
    json fails = json::array();
    for (const auto& f : rep.failures)
        fails.push_back(
            {{"axiom", f.axiom}, {"indices", f.indices}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    return json{{"ok", rep.ok}, {"cases", rep.cases}, {"cyclic", rep.cyclic}, {"failures", fails}};
}

inline json check_report_to_json(const CheckReport& rep) {
    json ids = json::array();
    for (const auto& r : rep.identities) {
        json e = {{"identity", r.identity}, {"cases", r.cases}, {"failures", r.failures}};
        if (!r.witness.empty()) e["witness"] = r.witness;
        ids.push_back(e);
    }
    return json{{"suite", rep.suite}, {"ok", rep.ok()}, {"identities", ids}};
}

template <class Report>
inline json homology_report_to_json(const Report& rep, const std::string& what) {
    json rows = json::array();
    for (const auto& r : rep.rows)
        rows.push_back({{"degree", r.degree},
                        {"dim_space", r.dim_space},
                        {"dim_cycles", r.dim_cycles},
                        {"dim_boundaries", r.dim_boundaries},
                        {"dim", r.dim_homology}});
    return json{{"what", what}, {"rows", rows}};
}

// FNV-1a fingerprint of the instance data; keys the on-disk matrix cache.
inline std::string instance_fingerprint(const CoefficientPair& pair, const Cochain& mult,
                                        const Caps& caps) {
    std::string s = pair.field().str() + "#" + std::to_string(pair.dim_a()) + "#";
    for (const auto& row : pair.A.sc)
        for (const auto& cell : row)
            for (const auto& v : cell) s += v.str() + ",";
    s += "#";
    for (const auto& col : pair.gamma_cols)
        for (const auto& v : col) s += v.str() + ",";
    s += "#" + cochain_to_json(mult).dump();
    s += "#" + std::to_string(caps.max_chain_degree) + "," + std::to_string(caps.max_cochain_arity);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

template <class Report>
inline std::string homology_report_to_csv(const Report& rep) {
    std::string out = "degree,dim\n";
    for (const auto& r : rep.rows)
        out += std::to_string(r.degree) + "," + std::to_string(r.dim_homology) + "\n";
    return out;
}

}  // namespace opcalc
