#pragma once

#include <string>
#include <vector>

#include "opcalc/algebra.hpp"
#include "opcalc/tensor.hpp"

namespace opcalc {

inline bool odd(long long e) { return ((e % 2) + 2) % 2 == 1; }

// Applies (-1)^e.
inline Chain signed_term(long long e, Chain c) { return odd(e) ? -c : c; }
inline Cochain signed_term(long long e, Cochain c) { return odd(e) ? -c : c; }

// Non-symmetric operad with multiplication: a graded family O(p) of
// finite-dimensional spaces with partial composition maps, an identity
// element in O(1), a multiplication in O(2) and a unit in O(0). Elements are
// represented as sparse Cochains over the instance's chosen bases.
class Operad {
  public:
    virtual ~Operad() = default;

    virtual const FieldSpec& field() const = 0;
    virtual int max_arity() const = 0;
    virtual long dim(int p) const = 0;
    virtual Cochain basis_element(int p, long k) const = 0;

    // Partial composition, assuming 1 <= i <= p and p >= 1; callers go
    // through comp() which applies the vanishing conventions.
    virtual Cochain comp_raw(const Cochain& phi, int i, const Cochain& psi) const = 0;

    virtual const Cochain& mult() const = 0;      // in O(2)
    virtual const Cochain& id_element() const = 0;  // in O(1)
    virtual const Cochain& unit() const = 0;      // in O(0)

    // Projection onto the normalized cochain complex.
    virtual Cochain project_normalized(const Cochain& phi) const = 0;
};

// Partial composition with the declared conventions: zero when the slot index
// leaves [1, p] or when the left factor has arity 0.
inline Cochain comp(const Operad& o, const Cochain& phi, int i, const Cochain& psi) {
    const int p = phi.arity, q = psi.arity;
    if (p == 0 || i < 1 || i > p) return Cochain(std::max(p + q - 1, 0));
    if (p + q - 1 > o.max_arity())
        throw CapacityError("composition would exceed the arity cap (" +
                            std::to_string(p + q - 1) + " > " +
                            std::to_string(o.max_arity()) + ")");
    if (phi.is_zero() || psi.is_zero()) return Cochain(p + q - 1);
    return o.comp_raw(phi, i, psi);
}

// φ ∘̄ ψ = Σ_{i=1}^{p} (-1)^{(q-1)(i-1)} φ∘_i ψ; empty sum for arity 0.
inline Cochain pre_lie(const Operad& o, const Cochain& phi, const Cochain& psi) {
    const int p = phi.arity, q = psi.arity;
    Cochain r(std::max(p + q - 1, 0));
    for (int i = 1; i <= p; ++i)
        r += signed_term(static_cast<long long>(q - 1) * (i - 1), comp(o, phi, i, psi));
    return r;
}

// {φ, ψ} = φ∘̄ψ - (-1)^{(p-1)(q-1)} ψ∘̄φ.
inline Cochain bracket(const Operad& o, const Cochain& phi, const Cochain& psi) {
    const int p = phi.arity, q = psi.arity;
    return pre_lie(o, phi, psi) -
           signed_term(static_cast<long long>(p - 1) * (q - 1), pre_lie(o, psi, phi));
}

// φ ⌣ ψ = (μ∘₂φ)∘₁ψ, of arity p+q.
inline Cochain cup(const Operad& o, const Cochain& phi, const Cochain& psi) {
    return comp(o, comp(o, o.mult(), 2, phi), 1, psi);
}

// δφ = {μ, φ}.
inline Cochain coboundary(const Operad& o, const Cochain& phi) {
    return bracket(o, o.mult(), phi);
}

// σ_j(φ) = φ ∘_{j+1} e for j = 0..p-1.
inline Cochain codegeneracy(const Operad& o, const Cochain& phi, int j) {
    if (phi.arity < 1 || j < 0 || j >= phi.arity)
        throw UsageError("codegeneracy index out of range");
    return comp(o, phi, j + 1, o.unit());
}

// Normalized cochains are exactly the common kernel of the codegeneracies.
inline bool is_normalized_cochain(const Operad& o, const Cochain& phi) {
    for (int j = 0; j < phi.arity; ++j)
        if (!codegeneracy(o, phi, j).is_zero()) return false;
    return true;
}

struct AxiomFailure {
    std::string axiom;
    std::vector<int> indices;
    std::string lhs;
    std::string rhs;

    std::string str() const {
        std::string s = axiom + " at (";
        for (std::size_t i = 0; i < indices.size(); ++i)
            s += (i ? "," : "") + std::to_string(indices[i]);
        s += ")";
        if (!lhs.empty() || !rhs.empty()) s += ": " + lhs + " != " + rhs;
        return s;
    }
};

struct AxiomReport {
    bool ok = true;
    long cases = 0;
    bool cyclic = true;  // used by the comp-module checker
    std::vector<AxiomFailure> failures;

    void fail(const std::string& axiom, std::vector<int> indices, std::string lhs = {},
              std::string rhs = {}) {
        ok = false;
        if (failures.size() < 32)
            failures.push_back({axiom, std::move(indices), std::move(lhs), std::move(rhs)});
    }
};

// Exhaustive exact verification of the operad axioms on basis elements with
// arities p,q,r up to `arity_cap`: vanishing conventions, the three-case
// associativity, unitality of the identity element, and the relations of the
// multiplication and unit. Requires o.max_arity() >= 3*arity_cap - 2.
inline AxiomReport check_operad_axioms(const Operad& o, int arity_cap) {
    if (o.max_arity() < 3 * arity_cap - 2)
        throw CapacityError("operad axiom sweep needs arity cap >= " +
                            std::to_string(3 * arity_cap - 2));
    AxiomReport rep;
    const auto elems = [&](int p) {
        std::vector<Cochain> v;
        for (long k = 0; k < o.dim(p); ++k) v.push_back(o.basis_element(p, k));
        return v;
    };
    std::vector<std::vector<Cochain>> basis;
    for (int p = 0; p <= arity_cap; ++p) basis.push_back(elems(p));

    // mu o1 mu = mu o2 mu ; mu o1 e = mu o2 e = 1
    ++rep.cases;
    {
        Cochain lhs = comp(o, o.mult(), 1, o.mult()), rhs = comp(o, o.mult(), 2, o.mult());
        if (!(lhs == rhs)) rep.fail("mult-associativity", {}, lhs.str(), rhs.str());
    }
    ++rep.cases;
    if (!(comp(o, o.mult(), 1, o.unit()) == o.id_element()) ||
        !(comp(o, o.mult(), 2, o.unit()) == o.id_element()))
        rep.fail("mult-unit", {}, comp(o, o.mult(), 1, o.unit()).str(), o.id_element().str());

    for (int p = 0; p <= arity_cap; ++p) {
        long kp = 0;
        for (const auto& phi : basis[p]) {
            // unitality
            for (int i = 1; i <= p; ++i) {
                ++rep.cases;
                Cochain lhs = comp(o, phi, i, o.id_element());
                if (!(lhs == phi))
                    rep.fail("unitality", {p, static_cast<int>(kp), i}, lhs.str(), phi.str());
            }
            ++rep.cases;
            if (!(comp(o, o.id_element(), 1, phi) == phi))
                rep.fail("unitality", {p, static_cast<int>(kp)},
                         comp(o, o.id_element(), 1, phi).str(), phi.str());
            // declared vanishing
            ++rep.cases;
            if (!comp(o, phi, p + 1, o.id_element()).is_zero())
                rep.fail("vanishing", {p, static_cast<int>(kp)},
                         comp(o, phi, p + 1, o.id_element()).str(), "0");
            if (p == 0) {
                ++rep.cases;
                if (!comp(o, phi, 1, o.id_element()).is_zero())
                    rep.fail("vanishing", {p, static_cast<int>(kp)},
                             comp(o, phi, 1, o.id_element()).str(), "0");
            }
            ++kp;
        }
    }

    // Three-case associativity of the partial compositions.
    for (int p = 1; p <= arity_cap; ++p)
        for (int q = 0; q <= arity_cap; ++q)
            for (int r = 0; r <= arity_cap; ++r)
                for (const auto& phi : basis[p])
                    for (const auto& psi : basis[q])
                        for (const auto& chi : basis[r])
                            for (int i = 1; i <= p; ++i) {
                                Cochain inner = comp(o, phi, i, psi);
                                for (int j = 1; j <= p + q - 1; ++j) {
                                    Cochain lhs = comp(o, inner, j, chi);
                                    Cochain rhs;
                                    const char* which;
                                    if (j < i) {
                                        rhs = comp(o, comp(o, phi, j, chi), i + r - 1, psi);
                                        which = "assoc-disjoint-left";
                                    } else if (j < q + i) {
                                        rhs = comp(o, phi, i, comp(o, psi, j - i + 1, chi));
                                        which = "assoc-nested";
                                    } else {
                                        rhs = comp(o, comp(o, phi, j - q + 1, chi), i, psi);
                                        which = "assoc-disjoint-right";
                                    }
                                    ++rep.cases;
                                    if (!(lhs == rhs))
                                        rep.fail(which, {p, q, r, i, j}, lhs.str(), rhs.str());
                                }
                            }
    return rep;
}

}  // namespace opcalc
