#pragma once

#include <map>
#include <string>
#include <vector>

#include "opcalc/scalar.hpp"

namespace opcalc {

// Basis multi-index (i_1,...,i_k), entries in [0, dim).
using MultiIndex = std::vector<int>;

// Dense coordinate vector over a small algebra basis.
using Vec = std::vector<Scalar>;

inline Vec zero_vec(const FieldSpec& f, int d) { return Vec(d, Scalar::zero(f)); }

inline Vec unit_vec(const FieldSpec& f, int d, int i) {
    Vec v = zero_vec(f, d);
    v[i] = Scalar::one(f);
    return v;
}

inline bool is_zero_vec(const Vec& v) {
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

inline void add_scaled(Vec& dst, const Scalar& c, const Vec& src) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += c * src[i];
}

inline bool vec_eq(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

inline std::string multi_index_str(const MultiIndex& mi) {
    std::string s;
    for (std::size_t i = 0; i < mi.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(mi[i]);
    }
    return s;
}

// Element of the degree-n chain space: a sparse vector over the tensor basis
// of A^{⊗(n+1)}, keys of length n+1, no stored zero coefficients.
struct Chain {
    int degree = 0;
    std::map<MultiIndex, Scalar> terms;

    Chain() = default;
    explicit Chain(int n) : degree(n) {}

    bool is_zero() const { return terms.empty(); }

    void add_term(const MultiIndex& key, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = terms.find(key);
        if (it == terms.end()) {
            terms.emplace(key, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    Chain& operator+=(const Chain& o) {
        if (o.is_zero()) return *this;
        if (degree != o.degree) {
            if (!is_zero()) throw UsageError("chain degree mismatch in addition");
            degree = o.degree;  // zero chains are degree-agnostic
        }
        for (const auto& [k, c] : o.terms) add_term(k, c);
        return *this;
    }

    Chain operator+(const Chain& o) const {
        Chain r = *this;
        r += o;
        return r;
    }

    Chain operator-(const Chain& o) const { return *this + (-o); }

    Chain operator-() const {
        Chain r(degree);
        for (const auto& [k, c] : terms) r.terms.emplace(k, -c);
        return r;
    }

    Chain scaled(const Scalar& c) const {
        Chain r(degree);
        if (c.is_zero()) return r;
        for (const auto& [k, v] : terms) r.terms.emplace(k, c * v);
        return r;
    }

    bool operator==(const Chain& o) const {
        if (is_zero() && o.is_zero()) return true;
        return degree == o.degree && terms == o.terms;
    }

    static Chain basis(int n, const MultiIndex& key, const FieldSpec& f) {
        Chain c(n);
        c.terms.emplace(key, Scalar::one(f));
        return c;
    }

    // Compact text form for reports: "(0,1)*1 + (1,0)*-1/2".
    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (const auto& [k, c] : terms) {
            if (!s.empty()) s += " + ";
            s += "(" + multi_index_str(k) + ")*" + c.str();
        }
        return s;
    }
};

// Multilinear map A^{⊗p} → V stored sparsely by its values on basis p-tuples;
// value vectors are coordinates over the V basis and are never all zero.
// Arity 0 is a single element of V, stored under the empty key.
struct Cochain {
    int arity = 0;
    std::map<MultiIndex, Vec> values;

    Cochain() = default;
    explicit Cochain(int p) : arity(p) {}

    bool is_zero() const { return values.empty(); }

    void add_value(const MultiIndex& key, const Vec& v) {
        auto it = values.find(key);
        if (it == values.end()) {
            if (!is_zero_vec(v)) values.emplace(key, v);
        } else {
            for (std::size_t i = 0; i < v.size(); ++i) it->second[i] += v[i];
            if (is_zero_vec(it->second)) values.erase(it);
        }
    }

    void add_scaled_value(const MultiIndex& key, const Scalar& c, const Vec& v) {
        if (c.is_zero()) return;
        Vec w(v.size(), Scalar::zero(c.field()));
        add_scaled(w, c, v);
        add_value(key, w);
    }

    Cochain& operator+=(const Cochain& o) {
        if (o.is_zero()) return *this;
        if (arity != o.arity) {
            if (!is_zero()) throw UsageError("cochain arity mismatch in addition");
            arity = o.arity;  // zero cochains are arity-agnostic
        }
        for (const auto& [k, v] : o.values) add_value(k, v);
        return *this;
    }

    Cochain operator+(const Cochain& o) const {
        Cochain r = *this;
        r += o;
        return r;
    }

    Cochain operator-() const {
        Cochain r(arity);
        for (const auto& [k, v] : values) {
            Vec w;
            w.reserve(v.size());
            for (const auto& s : v) w.push_back(-s);
            r.values.emplace(k, std::move(w));
        }
        return r;
    }

    Cochain operator-(const Cochain& o) const { return *this + (-o); }

    Cochain scaled(const Scalar& c) const {
        Cochain r(arity);
        if (c.is_zero()) return r;
        for (const auto& [k, v] : values) {
            Vec w;
            w.reserve(v.size());
            for (const auto& s : v) w.push_back(c * s);
            r.values.emplace(k, std::move(w));
        }
        return r;
    }

    bool operator==(const Cochain& o) const {
        if (is_zero() && o.is_zero()) return true;
        if (arity != o.arity || values.size() != o.values.size()) return false;
        auto it = o.values.begin();
        for (const auto& [k, v] : values) {
            if (it->first != k || !vec_eq(it->second, v)) return false;
            ++it;
        }
        return true;
    }

    // Basis cochain: tuple `key` ↦ basis vector v_j of V, all other tuples ↦ 0.
    static Cochain basis(int p, const MultiIndex& key, int j, const FieldSpec& f, int dim_v) {
        Cochain c(p);
        c.values.emplace(key, unit_vec(f, dim_v, j));
        return c;
    }

    // Compact text form for reports: "(0,1)->[0,1]".
    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (const auto& [k, v] : values) {
            if (!s.empty()) s += " + ";
            s += "(" + multi_index_str(k) + ")->[";
            for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
            s += "]";
        }
        return s;
    }
};

}  // namespace opcalc
