#pragma once

#include <string>
#include <vector>

#include "opcalc/operad.hpp"

namespace opcalc {

// (Para-)cyclic unital comp module over an operad with multiplication: a
// graded family M(n) with actions •_i of O(p) lowering degree by p-1, an
// extra action •_0, and a degree-preserving operator t. Elements are sparse
// Chains over the instance's bases.
class CompModule {
  public:
    virtual ~CompModule() = default;

    virtual const FieldSpec& field() const = 0;
    virtual int max_degree() const = 0;
    virtual long dim(int n) const = 0;
    virtual Chain basis_element(int n, long k) const = 0;

    // Comp module action, assuming the index is in the declared range;
    // callers go through bullet() for the vanishing conventions.
    virtual Chain bullet_raw(const Cochain& phi, int i, const Chain& x) const = 0;

    virtual Chain cyclic_t_raw(const Chain& x) const = 0;

    // Projection killing the degenerate subcomplex (images of degeneracies).
    virtual Chain project_normalized(const Chain& x) const = 0;
};

// φ •_i x with the declared ranges: for i >= 1 the action vanishes unless
// p <= n and i <= n-p+1; the extra action i = 0 vanishes unless p <= n+1.
inline Chain bullet(const CompModule& m, const Cochain& phi, int i, const Chain& x) {
    const int p = phi.arity, n = x.degree;
    const int out_deg = n - p + 1;
    if (i < 0) throw UsageError("negative comp module index");
    if (i == 0) {
        if (p > n + 1) return Chain(std::max(out_deg, 0));
    } else {
        if (p > n || i > n - p + 1) return Chain(std::max(out_deg, 0));
    }
    if (out_deg > m.max_degree())
        throw CapacityError("comp module action would exceed the degree cap");
    if (phi.is_zero() || x.is_zero()) return Chain(out_deg);
    return m.bullet_raw(phi, i, x);
}

inline Chain cyclic_t(const CompModule& m, const Chain& x) { return m.cyclic_t_raw(x); }

inline Chain cyclic_t_power(const CompModule& m, const Chain& x, int k) {
    Chain r = x;
    for (int i = 0; i < k; ++i) r = m.cyclic_t_raw(r);
    return r;
}

// Faces d_i(x) = μ•_i x for i < n and d_n(x) = μ•_0 t(x).
inline Chain face(const Operad& o, const CompModule& m, int i, const Chain& x) {
    const int n = x.degree;
    if (i < 0 || i > n) throw UsageError("face index out of range");
    if (i < n) return bullet(m, o.mult(), i, x);
    return bullet(m, o.mult(), 0, cyclic_t(m, x));
}

// Degeneracies s_j(x) = e•_{j+1} x for j = 0..n; j = -1 is the extra
// degeneracy e•_0 x.
inline Chain degeneracy(const Operad& o, const CompModule& m, int j, const Chain& x) {
    const int n = x.degree;
    if (j < -1 || j > n) throw UsageError("degeneracy index out of range");
    return bullet(m, o.unit(), j + 1, x);
}

// Simplicial boundary b = Σ_{i=0}^{n-1} (-1)^i μ•_i + (-1)^n μ•_0 t; zero in
// degree 0 (the final term vanishes there by the action conventions).
inline Chain boundary(const Operad& o, const CompModule& m, const Chain& x) {
    const int n = x.degree;
    Chain r(n - 1 >= 0 ? n - 1 : 0);
    for (int i = 0; i < n; ++i) r += signed_term(i, bullet(m, o.mult(), i, x));
    r += signed_term(n, bullet(m, o.mult(), 0, cyclic_t(m, x)));
    return r;
}

// Norm operator N = Σ_{i=0}^{n} (-1)^{in} t^i.
inline Chain norm_n(const CompModule& m, const Chain& x) {
    const int n = x.degree;
    Chain r(n);
    Chain rotated = x;
    for (int i = 0; i <= n; ++i) {
        r += signed_term(static_cast<long long>(i) * n, rotated);
        if (i < n) rotated = m.cyclic_t_raw(rotated);
    }
    return r;
}

// Extra degeneracy s_{-1} = t s_n = e•_0.
inline Chain extra_degeneracy(const Operad& o, const CompModule& m, const Chain& x) {
    return bullet(m, o.unit(), 0, x);
}

// Full cyclic differential B = (id - t_sign) s_{-1} N where t_sign is the
// cyclic operator with the simplicial sign (-1)^{n+1} built in on degree n+1;
// squares to zero on the whole complex.
inline Chain connes_b_full(const Operad& o, const CompModule& m, const Chain& x) {
    Chain s = extra_degeneracy(o, m, norm_n(m, x));
    return s - signed_term(s.degree, cyclic_t(m, s));
}

// B on the normalized complex: Σ_{i=0}^{n} (-1)^{in} e•_0 t^i(x).
inline Chain connes_b_normalized(const Operad& o, const CompModule& m, const Chain& x) {
    return extra_degeneracy(o, m, norm_n(m, x));
}

inline Chain normalize_chain(const CompModule& m, const Chain& x) {
    return m.project_normalized(x);
}

inline bool is_normalized_chain(const CompModule& m, const Chain& x) {
    return m.project_normalized(x) == x;
}

// Whether t^{n+1} = id holds on all basis elements up to the degree bound.
inline bool is_cyclic_instance(const CompModule& m, int max_n) {
    for (int n = 0; n <= max_n; ++n)
        for (long k = 0; k < m.dim(n); ++k) {
            Chain x = m.basis_element(n, k);
            if (!(cyclic_t_power(m, x, n + 1) == x)) return false;
        }
    return true;
}

// Exhaustive exact verification of the comp-module relations (all three cases
// for p > 0 and both cases for p = 0, index 0 included), unitality,
// t-compatibility, and cyclicity, on basis elements.
inline AxiomReport check_comp_module_axioms(const Operad& o, const CompModule& m,
                                            int pmax, int qmax, int nmax) {
    AxiomReport rep;
    std::vector<std::vector<Cochain>> cbasis;
    for (int p = 0; p <= std::max(pmax, qmax); ++p) {
        cbasis.emplace_back();
        for (long k = 0; k < o.dim(p); ++k) cbasis.back().push_back(o.basis_element(p, k));
    }
    for (int n = 0; n <= nmax; ++n) {
        for (long kx = 0; kx < m.dim(n); ++kx) {
            const Chain x = m.basis_element(n, kx);

            // unitality for i = 0..n
            for (int i = 0; i <= n; ++i) {
                ++rep.cases;
                if (!(bullet(m, o.id_element(), i, x) == x))
                    rep.fail("unitality", {n, static_cast<int>(kx), i},
                             bullet(m, o.id_element(), i, x).str(), x.str());
            }
            // cyclicity
            ++rep.cases;
            if (!(cyclic_t_power(m, x, n + 1) == x)) {
                rep.cyclic = false;
            }

            for (int p = 0; p <= pmax; ++p) {
                for (const auto& phi : cbasis[p]) {
                    // t-compatibility for i = 0..n-p
                    for (int i = 0; i + p <= n; ++i) {
                        ++rep.cases;
                        Chain lhs = cyclic_t(m, bullet(m, phi, i, x));
                        Chain rhs = bullet(m, phi, i + 1, cyclic_t(m, x));
                        if (!(lhs == rhs))
                            rep.fail("t-compatibility", {n, p, i}, lhs.str(), rhs.str());
                    }
                    for (int q = 0; q <= qmax; ++q) {
                        for (const auto& psi : cbasis[q]) {
                            for (int j = 0; j <= n - q + 1; ++j) {
                                Chain inner = bullet(m, psi, j, x);
                                const int n2 = n - q + 1;
                                for (int i = 0; i <= n2 - p + 1; ++i) {
                                    Chain lhs = bullet(m, phi, i, inner);
                                    Chain rhs;
                                    const char* which;
                                    if (j < i) {
                                        rhs = bullet(m, psi, j, bullet(m, phi, i + q - 1, x));
                                        which = "module-disjoint";
                                    } else if (p > 0 && j - p < i && i <= j) {
                                        rhs = bullet(m, comp(o, phi, j - i + 1, psi), i, x);
                                        which = "module-nested";
                                    } else if (p > 0) {  // 0 <= i <= j-p
                                        rhs = bullet(m, psi, j - p + 1, bullet(m, phi, i, x));
                                        which = "module-commute";
                                    } else {  // p == 0, 0 <= i <= j
                                        rhs = bullet(m, psi, j + 1, bullet(m, phi, i, x));
                                        which = "module-commute-arity0";
                                    }
                                    ++rep.cases;
                                    if (!(lhs == rhs))
                                        rep.fail(which, {n, p, q, i, j}, lhs.str(), rhs.str());
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    if (!rep.cyclic)
        rep.fail("cyclicity", {}, "t^{n+1}", "id (the instance is para-cyclic only)");
    return rep;
}

// The simplicial and cyclic-module identities that the derived faces,
// degeneracies and t satisfy on a cyclic instance, verified exactly on basis
// elements up to the degree bound.
inline AxiomReport check_simplicial_cyclic(const Operad& o, const CompModule& m, int nmax) {
    AxiomReport rep;
    auto eq = [&](const Chain& a, const Chain& b, const char* which, int n, int i, int j) {
        ++rep.cases;
        if (!(a == b)) rep.fail(which, {n, i, j}, a.str(), b.str());
    };
    for (int n = 0; n <= nmax; ++n) {
        for (long kx = 0; kx < m.dim(n); ++kx) {
            const Chain x = m.basis_element(n, kx);
            // d_i d_j = d_{j-1} d_i for i < j
            if (n >= 2)
                for (int j = 1; j <= n; ++j)
                    for (int i = 0; i < j; ++i)
                        eq(face(o, m, i, face(o, m, j, x)), face(o, m, j - 1, face(o, m, i, x)),
                           "simplicial-dd", n, i, j);
            // s_i s_j = s_{j+1} s_i for i <= j
            for (int j = 0; j <= n; ++j)
                for (int i = 0; i <= j; ++i)
                    eq(degeneracy(o, m, i, degeneracy(o, m, j, x)),
                       degeneracy(o, m, j + 1, degeneracy(o, m, i, x)), "simplicial-ss", n, i, j);
            // d_i s_j relations
            for (int j = 0; j <= n; ++j)
                for (int i = 0; i <= n + 1; ++i) {
                    Chain lhs = face(o, m, i, degeneracy(o, m, j, x));
                    if (i < j)
                        eq(lhs, degeneracy(o, m, j - 1, face(o, m, i, x)), "simplicial-ds", n, i, j);
                    else if (i == j || i == j + 1)
                        eq(lhs, x, "simplicial-ds-identity", n, i, j);
                    else if (n >= 1)
                        eq(lhs, degeneracy(o, m, j, face(o, m, i - 1, x)), "simplicial-ds", n, i, j);
                }
            if (n >= 1) {
                // d_i t = t d_{i-1} for 1 <= i <= n, d_0 t = d_n
                for (int i = 1; i <= n; ++i)
                    eq(face(o, m, i, cyclic_t(m, x)), cyclic_t(m, face(o, m, i - 1, x)),
                       "cyclic-dt", n, i, -1);
                eq(face(o, m, 0, cyclic_t(m, x)), face(o, m, n, x), "cyclic-d0t", n, 0, -1);
            }
            // s_i t = t s_{i-1} for 1 <= i <= n, s_0 t = t^2 s_n
            for (int i = 1; i <= n; ++i)
                eq(degeneracy(o, m, i, cyclic_t(m, x)), cyclic_t(m, degeneracy(o, m, i - 1, x)),
                   "cyclic-st", n, i, -1);
            eq(degeneracy(o, m, 0, cyclic_t(m, x)),
               cyclic_t(m, cyclic_t(m, degeneracy(o, m, n, x))), "cyclic-s0t", n, 0, -1);
            // t^{n+1} = id
            eq(cyclic_t_power(m, x, n + 1), x, "cyclic-order", n, -1, -1);
            // e bullet_0 x = t s_n x
            eq(extra_degeneracy(o, m, x), cyclic_t(m, degeneracy(o, m, n, x)),
               "extra-degeneracy", n, -1, -1);
        }
    }
    return rep;
}

}  // namespace opcalc
