#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "opcalc/comp_module.hpp"
#include "opcalc/operad.hpp"

namespace opcalc {

// Test hook: flips the sign of one summand (counted in emission order) inside
// a named operator. op is one of "b", "B", "iota", "lie", "S".
struct Mutation {
    std::string op;
    int term = 0;
};

// The operator calculus on a cyclic comp module: cap product, Lie derivative,
// cyclic correction, boundary and cyclic differential, all as exact sparse
// operations. Degree bookkeeping: ι_φ lowers degree by p, 𝓛_φ by p-1, S_φ by
// p-2; b lowers by 1 and B raises by 1.
class Calculus {
  public:
    Calculus(const Operad& o, const CompModule& m, std::optional<Mutation> mut = std::nullopt)
        : o_(o), m_(m), mut_(std::move(mut)) {}

    const Operad& operad() const { return o_; }
    const CompModule& comp_module() const { return m_; }

    // ι_φ x = (μ ∘₂ φ) •₀ x.
    Chain cap(const Cochain& phi, const Chain& x) const {
        Chain r = bullet(m_, comp(o_, o_.mult(), 2, phi), 0, x);
        if (flips("iota", 0)) r = -r;
        return r;
    }

    // 𝓛_φ x = Σ_{i=1}^{n-p+1} (-1)^{(p-1)(i-1)} φ•_i x
    //        + Σ_{i=1}^{p} (-1)^{n(i-1)+p-1} φ•_0 t^{i-1}(x).
    // The edge cases (arity 0, p = n+1, p > n+1) are exactly the vanishing
    // conventions of the actions.
    Chain lie(const Cochain& phi, const Chain& x) const {
        const int p = phi.arity, n = x.degree;
        Chain r(n - p + 1 >= 0 ? n - p + 1 : 0);
        int term = 0;
        for (int i = 1; i <= n - p + 1; ++i, ++term) {
            Chain t = signed_term(static_cast<long long>(p - 1) * (i - 1),
                                  bullet(m_, phi, i, x));
            r += flips("lie", term) ? -t : t;
        }
        Chain rotated = x;
        for (int i = 1; i <= p; ++i, ++term) {
            Chain t = signed_term(static_cast<long long>(n) * (i - 1) + p - 1,
                                  bullet(m_, phi, 0, rotated));
            r += flips("lie", term) ? -t : t;
            if (i < p) rotated = cyclic_t(m_, rotated);
        }
        return r;
    }

    // S_φ x = Σ_{j=1}^{n-p+1} Σ_{i=j}^{n-p+1} (-1)^{n(j-1)+(p-1)(i-1)}
    //          e •₀ (φ •_i t^{j-1}(x));   zero for p > n.
    Chain cyclic_correction(const Cochain& phi, const Chain& x) const {
        const int p = phi.arity, n = x.degree;
        Chain r(n - p + 2 >= 0 ? n - p + 2 : 0);
        int term = 0;
        Chain rotated = x;
        for (int j = 1; j <= n - p + 1; ++j) {
            for (int i = j; i <= n - p + 1; ++i, ++term) {
                Chain t = signed_term(static_cast<long long>(n) * (j - 1) +
                                          static_cast<long long>(p - 1) * (i - 1),
                                      extra_degeneracy(o_, m_, bullet(m_, phi, i, rotated)));
                r += flips("S", term) ? -t : t;
            }
            if (j <= n - p) rotated = cyclic_t(m_, rotated);
        }
        return r;
    }

    // b = Σ_{i=0}^{n-1} (-1)^i μ•_i + (-1)^n μ•_0 t.
    Chain boundary(const Chain& x) const {
        const int n = x.degree;
        Chain r(n - 1 >= 0 ? n - 1 : 0);
        for (int i = 0; i < n; ++i) {
            Chain t = signed_term(i, bullet(m_, o_.mult(), i, x));
            r += flips("b", i) ? -t : t;
        }
        Chain t = signed_term(n, bullet(m_, o_.mult(), 0, cyclic_t(m_, x)));
        r += flips("b", n) ? -t : t;
        return r;
    }

    // B on the normalized complex: Σ_{i=0}^{n} (-1)^{in} e•_0 t^i(x).
    Chain connes_b(const Chain& x) const {
        const int n = x.degree;
        Chain r(n + 1);
        Chain rotated = x;
        for (int i = 0; i <= n; ++i) {
            Chain t = signed_term(static_cast<long long>(i) * n,
                                  extra_degeneracy(o_, m_, rotated));
            r += flips("B", i) ? -t : t;
            if (i < n) rotated = cyclic_t(m_, rotated);
        }
        return r;
    }

    Chain nrm(const Chain& x) const { return m_.project_normalized(x); }

    // Operators induced on the normalized complex (project after applying).
    Chain nboundary(const Chain& x) const { return nrm(boundary(x)); }
    Chain nconnes_b(const Chain& x) const { return nrm(connes_b(x)); }
    Chain ncap(const Cochain& phi, const Chain& x) const { return nrm(cap(phi, x)); }
    Chain nlie(const Cochain& phi, const Chain& x) const { return nrm(lie(phi, x)); }
    Chain ncyclic_correction(const Cochain& phi, const Chain& x) const {
        return nrm(cyclic_correction(phi, x));
    }

  private:
    bool flips(const char* op, int term) const {
        return mut_ && mut_->op == op && mut_->term == term;
    }

    const Operad& o_;
    const CompModule& m_;
    std::optional<Mutation> mut_;
};

// Graded operator on chains: a degree used in commutator signs plus the
// action. ι_φ and S_φ carry degree p, 𝓛_φ carries p-1, b and B carry 1.
struct GradedOperator {
    int degree = 0;
    std::function<Chain(const Chain&)> apply;
};

// [F, G] = FG - (-1)^{|F||G|} GF.
inline GradedOperator graded_commutator(const GradedOperator& f, const GradedOperator& g) {
    const long long sign = static_cast<long long>(f.degree) * g.degree;
    return GradedOperator{
        f.degree + g.degree, [f, g, sign](const Chain& x) {
            return f.apply(g.apply(x)) - signed_term(sign, g.apply(f.apply(x)));
        }};
}

inline GradedOperator op_cap(const Calculus& c, const Cochain& phi) {
    return {phi.arity, [&c, phi](const Chain& x) { return c.cap(phi, x); }};
}
inline GradedOperator op_lie(const Calculus& c, const Cochain& phi) {
    return {phi.arity - 1, [&c, phi](const Chain& x) { return c.lie(phi, x); }};
}
inline GradedOperator op_s(const Calculus& c, const Cochain& phi) {
    return {phi.arity, [&c, phi](const Chain& x) { return c.cyclic_correction(phi, x); }};
}
inline GradedOperator op_boundary(const Calculus& c) {
    return {1, [&c](const Chain& x) { return c.boundary(x); }};
}
inline GradedOperator op_connes_b(const Calculus& c) {
    return {1, [&c](const Chain& x) { return c.connes_b(x); }};
}

// ----- pointwise identity checks; each returns true when the identity holds
// exactly on the given inputs -----

// ι_φ ι_ψ = ι_{φ⌣ψ}
inline bool holds_cap_composition(const Calculus& c, const Cochain& phi, const Cochain& psi,
                                  const Chain& x) {
    return c.cap(phi, c.cap(psi, x)) == c.cap(cup(c.operad(), phi, psi), x);
}

// [b, ι_φ] = ι_{δφ}
inline bool holds_cap_boundary(const Calculus& c, const Cochain& phi, const Chain& x) {
    Chain lhs = graded_commutator(op_boundary(c), op_cap(c, phi)).apply(x);
    return lhs == c.cap(coboundary(c.operad(), phi), x);
}

// [𝓛_φ, 𝓛_ψ] = 𝓛_{{φ,ψ}}
inline bool holds_lie_bracket(const Calculus& c, const Cochain& phi, const Cochain& psi,
                              const Chain& x) {
    Chain lhs = graded_commutator(op_lie(c, phi), op_lie(c, psi)).apply(x);
    return lhs == c.lie(bracket(c.operad(), phi, psi), x);
}

// b = -𝓛_μ
inline bool holds_boundary_is_lie_mult(const Calculus& c, const Chain& x) {
    return c.boundary(x) == -c.lie(c.operad().mult(), x);
}

// [b, 𝓛_φ] + 𝓛_{δφ} = 0
inline bool holds_lie_boundary(const Calculus& c, const Cochain& phi, const Chain& x) {
    Chain lhs = graded_commutator(op_boundary(c), op_lie(c, phi)).apply(x);
    return (lhs + c.lie(coboundary(c.operad(), phi), x)).is_zero();
}

// [B, S_φ] = 0 on the normalized complex (normalized φ).
inline bool holds_b_s_commute(const Calculus& c, const Cochain& phi, const Chain& x) {
    Chain nx = c.nrm(x);
    Chain bs = c.nconnes_b(c.ncyclic_correction(phi, nx));
    Chain sb = c.ncyclic_correction(phi, c.nconnes_b(nx));
    return (bs - signed_term(phi.arity, sb)).is_zero();
}

// 𝓛_φ = [B+b, ι_φ+S_φ] - ι_{δφ} - S_{δφ} on the normalized complex. The
// left-hand side acts on the direct sum over degrees; the identity is checked
// per homogeneous component: the middle component carries 𝓛 and S_{δφ}, the
// bottom one ι_{δφ}, and the top one vanishes on its own.
inline bool holds_homotopy_formula(const Calculus& c, const Cochain& phi, const Chain& x) {
    const int p = phi.arity;
    Chain nx = c.nrm(x);
    if (nx.is_zero()) return true;
    Cochain dphi = coboundary(c.operad(), phi);
    // middle (degree n-p+1): Bι - (-1)^p ιB + bS - (-1)^p Sb - S_{δφ} = 𝓛
    Chain middle = c.nconnes_b(c.ncap(phi, nx)) -
                   signed_term(p, c.ncap(phi, c.nconnes_b(nx))) +
                   c.nboundary(c.ncyclic_correction(phi, nx)) -
                   signed_term(p, c.ncyclic_correction(phi, c.nboundary(nx))) -
                   c.ncyclic_correction(dphi, nx);
    if (!(middle == c.nlie(phi, nx))) return false;
    // bottom (degree n-p-1): bι - (-1)^p ιb = ι_{δφ}
    Chain bottom = c.nboundary(c.ncap(phi, nx)) -
                   signed_term(p, c.ncap(phi, c.nboundary(nx))) - c.ncap(dphi, nx);
    if (!bottom.is_zero()) return false;
    // top (degree n-p+3): BS - (-1)^p SB = 0
    Chain top = c.nconnes_b(c.ncyclic_correction(phi, nx)) -
                signed_term(p, c.ncyclic_correction(phi, c.nconnes_b(nx)));
    return top.is_zero();
}

// [𝓛_φ, B] = 0 on the normalized complex.
inline bool holds_lie_b_commute(const Calculus& c, const Cochain& phi, const Chain& x) {
    const int p = phi.arity;
    Chain nx = c.nrm(x);
    Chain lb = c.nlie(phi, c.nconnes_b(nx));
    Chain bl = c.nconnes_b(c.nlie(phi, nx));
    return (bl - signed_term(p - 1, lb)).is_zero();
}

}  // namespace opcalc
