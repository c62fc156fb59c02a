#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opcalc/tensor.hpp"

namespace opcalc {

struct ValidationIssue {
    std::string check;
    std::vector<int> indices;
    std::string detail;
};

struct ValidationReport {
    bool ok = true;
    std::vector<ValidationIssue> issues;

    void fail(std::string check, std::vector<int> indices, std::string detail = {}) {
        ok = false;
        issues.push_back({std::move(check), std::move(indices), std::move(detail)});
    }
};

// Finite-dimensional unital associative algebra over an exact field, given by
// structure constants on a chosen basis. The unit is required to be the basis
// vector at index 0, so the reduced basis (everything past the unit) is
// available as a plain index test.
struct Algebra {
    std::string name;
    FieldSpec field;
    int dim = 0;
    std::vector<std::string> basis_names;
    int unit_index = 0;
    // sc[i][j] = coordinates of b_i * b_j, a vector of length dim.
    std::vector<std::vector<Vec>> sc;

    Vec unit_vector() const { return unit_vec(field, dim, unit_index); }

    // Bilinear extension of the structure constants.
    Vec multiply(const Vec& u, const Vec& v) const {
        if (static_cast<int>(u.size()) != dim || static_cast<int>(v.size()) != dim)
            throw UsageError("dimension mismatch in algebra multiplication");
        Vec r = zero_vec(field, dim);
        for (int i = 0; i < dim; ++i) {
            if (u[i].is_zero()) continue;
            for (int j = 0; j < dim; ++j) {
                if (v[j].is_zero()) continue;
                add_scaled(r, u[i] * v[j], sc[i][j]);
            }
        }
        return r;
    }

    Vec basis_product(int i, int j) const { return sc[i][j]; }
};

// Checks well-formedness, the two-sided unit law at index 0, and associativity
// on all basis triples. Failures carry the first witnessing indices.
inline ValidationReport validate_algebra(const Algebra& a) {
    ValidationReport rep;
    if (a.dim <= 0) {
        rep.fail("dimensions", {}, "dim must be positive");
        return rep;
    }
    if (static_cast<int>(a.basis_names.size()) != a.dim)
        rep.fail("dimensions", {}, "basis_names length != dim");
    if (a.unit_index != 0)
        rep.fail("unit-index", {a.unit_index}, "the unit must be basis vector 0");
    if (static_cast<int>(a.sc.size()) != a.dim) {
        rep.fail("dimensions", {}, "structure_constants outer length != dim");
        return rep;
    }
    for (int i = 0; i < a.dim; ++i) {
        if (static_cast<int>(a.sc[i].size()) != a.dim) {
            rep.fail("dimensions", {i}, "structure_constants row length != dim");
            return rep;
        }
        for (int j = 0; j < a.dim; ++j)
            if (static_cast<int>(a.sc[i][j].size()) != a.dim) {
                rep.fail("dimensions", {i, j}, "structure constant vector length != dim");
                return rep;
            }
    }
    if (!rep.ok) return rep;

    const Vec unit = unit_vec(a.field, a.dim, 0);
    for (int j = 0; j < a.dim; ++j) {
        if (!vec_eq(a.sc[0][j], unit_vec(a.field, a.dim, j)))
            rep.fail("unit-law", {0, j}, "1*b_" + std::to_string(j) + " != b_" + std::to_string(j));
        if (!vec_eq(a.sc[j][0], unit_vec(a.field, a.dim, j)))
            rep.fail("unit-law", {j, 0}, "b_" + std::to_string(j) + "*1 != b_" + std::to_string(j));
    }

    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            for (int k = 0; k < a.dim; ++k) {
                Vec lhs = a.multiply(a.sc[i][j], unit_vec(a.field, a.dim, k));
                Vec rhs = a.multiply(unit_vec(a.field, a.dim, i), a.sc[j][k]);
                if (!vec_eq(lhs, rhs)) {
                    rep.fail("associativity", {i, j, k},
                             "(b_i b_j) b_k != b_i (b_j b_k)");
                    return rep;  // first violating triple is enough
                }
            }
    return rep;
}

// Exact inverse of a small dense matrix given by columns; nullopt if singular.
inline std::optional<std::vector<Vec>> invert_columns(const FieldSpec& f,
                                                      const std::vector<Vec>& cols) {
    const int n = static_cast<int>(cols.size());
    for (const auto& c : cols)
        if (static_cast<int>(c.size()) != n) return std::nullopt;
    // Augmented [M | I], rows indexed first.
    std::vector<Vec> m(n, zero_vec(f, 2 * n));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) m[r][c] = cols[c][r];
        m[r][n + r] = Scalar::one(f);
    }
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (!m[r][c].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) return std::nullopt;
        std::swap(m[c], m[piv]);
        Scalar inv = m[c][c].inverse();
        for (auto& s : m[c]) s *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == c || m[r][c].is_zero()) continue;
            Scalar factor = m[r][c];
            for (int k = 0; k < 2 * n; ++k) m[r][k] -= factor * m[c][k];
        }
    }
    std::vector<Vec> inv_cols(n, zero_vec(f, n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv_cols[c][r] = m[r][n + c];
    return inv_cols;
}

// Coefficient pair (V, γ): V is an algebra over the same field and γ: V → A a
// linear map stored column-per-V-basis-vector. The compatibility identities
// force γ to be bijective, with inverse η; the A-actions on V used by the
// operators are a·v = η(a)·v and v·a = v·η(a).
struct CoefficientPair {
    Algebra A;
    Algebra V;
    std::vector<Vec> gamma_cols;  // size dim_V, entries in A
    std::vector<Vec> eta_cols;    // size dim_A, entries in V (inverse of gamma)

    int dim_a() const { return A.dim; }
    int dim_v() const { return V.dim; }
    const FieldSpec& field() const { return A.field; }

    Vec gamma(const Vec& v) const {
        Vec r = zero_vec(A.field, A.dim);
        for (int j = 0; j < V.dim; ++j)
            if (!v[j].is_zero()) add_scaled(r, v[j], gamma_cols[j]);
        return r;
    }

    Vec eta(const Vec& a) const {
        Vec r = zero_vec(A.field, V.dim);
        for (int j = 0; j < A.dim; ++j)
            if (!a[j].is_zero()) add_scaled(r, a[j], eta_cols[j]);
        return r;
    }
};

inline ValidationReport validate_coefficient_pair(const Algebra& a, const Algebra& v,
                                                  const std::vector<Vec>& gamma_cols) {
    ValidationReport rep;
    if (!(a.field == v.field)) {
        rep.fail("field", {}, "V must live over the same field as A");
        return rep;
    }
    if (static_cast<int>(gamma_cols.size()) != v.dim) {
        rep.fail("gamma-shape", {}, "gamma must have one column per V basis vector");
        return rep;
    }
    for (const auto& c : gamma_cols)
        if (static_cast<int>(c.size()) != a.dim) {
            rep.fail("gamma-shape", {}, "gamma columns must have length dim A");
            return rep;
        }
    ValidationReport va = validate_algebra(v);
    if (!va.ok) {
        for (auto& i : va.issues) rep.fail("V-" + i.check, i.indices, i.detail);
        return rep;
    }

    CoefficientPair p{a, v, gamma_cols, {}};
    // gamma(1_V) = 1_A
    if (!vec_eq(p.gamma(v.unit_vector()), a.unit_vector()))
        rep.fail("gamma-unit", {}, "gamma(1_V) != 1_A");
    // gamma is an algebra map on basis pairs
    for (int i = 0; i < v.dim; ++i)
        for (int j = 0; j < v.dim; ++j) {
            Vec lhs = a.multiply(gamma_cols[i], gamma_cols[j]);
            Vec rhs = p.gamma(v.sc[i][j]);
            if (!vec_eq(lhs, rhs)) {
                rep.fail("gamma-multiplicative", {i, j},
                         "gamma(v_i)gamma(v_j) != gamma(v_i v_j)");
                return rep;
            }
        }
    // The action compatibility gamma(v)v' = v v' = v gamma(v') pins the
    // A-action of gamma(v) to multiplication by v; together with unitality it
    // forces gamma to be invertible.
    auto inv = invert_columns(a.field, gamma_cols);
    if (a.dim != v.dim || !inv) {
        rep.fail("gamma-invertible", {},
                 "no A-action on V satisfies gamma(v)v' = v*v' = v gamma(v') unless "
                 "gamma is bijective");
        return rep;
    }
    if (!rep.ok) return rep;
    p.eta_cols = *inv;
    // With eta = gamma^{-1}, spell the compatibility out on basis pairs.
    for (int i = 0; i < v.dim; ++i)
        for (int j = 0; j < v.dim; ++j) {
            Vec prod = v.sc[i][j];
            Vec left = v.multiply(p.eta(p.gamma(unit_vec(a.field, v.dim, i))),
                                  unit_vec(a.field, v.dim, j));
            Vec right = v.multiply(unit_vec(a.field, v.dim, i),
                                   p.eta(p.gamma(unit_vec(a.field, v.dim, j))));
            if (!vec_eq(left, prod) || !vec_eq(right, prod)) {
                rep.fail("action-compatibility", {i, j},
                         "gamma(v)v' = v*v' = v gamma(v') fails");
                return rep;
            }
        }
    return rep;
}

// Builds a validated pair; throws InputError when validation fails.
inline CoefficientPair make_coefficient_pair(const Algebra& a, const Algebra& v,
                                             const std::vector<Vec>& gamma_cols) {
    ValidationReport rep = validate_coefficient_pair(a, v, gamma_cols);
    if (!rep.ok)
        throw InputError("invalid coefficient pair: " + rep.issues.front().check +
                         (rep.issues.front().detail.empty() ? "" : " (" + rep.issues.front().detail + ")"));
    CoefficientPair p{a, v, gamma_cols, *invert_columns(a.field, gamma_cols)};
    return p;
}

// Default coefficients: V = A, gamma = identity.
inline CoefficientPair default_pair(const Algebra& a) {
    std::vector<Vec> id_cols;
    id_cols.reserve(a.dim);
    for (int i = 0; i < a.dim; ++i) id_cols.push_back(unit_vec(a.field, a.dim, i));
    return CoefficientPair{a, a, id_cols, id_cols};
}

// Multilinear extension of a cochain's stored values; args are coordinate
// vectors over the A basis, one per arity slot. Result is in V coordinates.
inline Vec evaluate_cochain(const CoefficientPair& p, const Cochain& phi,
                            const std::vector<Vec>& args) {
    if (static_cast<int>(args.size()) != phi.arity)
        throw UsageError("cochain arity mismatch: expected " + std::to_string(phi.arity) +
                         " arguments, got " + std::to_string(args.size()));
    Vec out = zero_vec(p.field(), p.dim_v());
    for (const auto& [key, val] : phi.values) {
        Scalar c = Scalar::one(p.field());
        bool dead = false;
        for (int s = 0; s < phi.arity; ++s) {
            const Scalar& comp = args[s][key[s]];
            if (comp.is_zero()) {
                dead = true;
                break;
            }
            c *= comp;
        }
        if (!dead) add_scaled(out, c, val);
    }
    return out;
}

// Convenience lookup on a basis tuple.
inline Vec evaluate_cochain(const CoefficientPair& p, const Cochain& phi,
                            const MultiIndex& tuple) {
    if (static_cast<int>(tuple.size()) != phi.arity)
        throw UsageError("cochain arity mismatch");
    auto it = phi.values.find(tuple);
    if (it == phi.values.end()) return zero_vec(p.field(), p.dim_v());
    return it->second;
}

}  // namespace opcalc
