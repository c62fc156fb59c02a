#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opcalc/comp_module.hpp"
#include "opcalc/operad.hpp"

namespace opcalc {

struct Caps {
    int max_chain_degree = 6;
    int max_cochain_arity = 6;
};

// The operad of multilinear maps A^{⊗p} → V together with the chain spaces
// A^{⊗(n+1)} as a cyclic unital comp module over it. Compositions substitute
// γ(ψ(...)) into an argument slot; the module actions substitute γ(φ(...))
// into a block of tensor slots; t rotates tensors to the right.
//
// The distinguished multiplication defaults to μ(a,b) = η(ab); passing a
// different 2-cochain (a Poisson structure) reuses the whole calculus with
// that multiplication instead.
class HochschildInstance {
  public:
    HochschildInstance(CoefficientPair pair, Caps caps,
                       std::optional<Cochain> mult = std::nullopt)
        : pair_(std::move(pair)), caps_(caps), op_(this), mod_(this) {
        const FieldSpec& f = pair_.field();
        const int da = pair_.dim_a();

        if (mult) {
            if (mult->arity != 2) throw UsageError("operad multiplication must have arity 2");
            mu_ = *mult;
        } else {
            mu_ = Cochain(2);
            for (int i = 0; i < da; ++i)
                for (int j = 0; j < da; ++j)
                    mu_.add_value({i, j}, pair_.eta(pair_.A.basis_product(i, j)));
        }
        one_ = Cochain(1);
        for (int i = 0; i < da; ++i) one_.add_value({i}, pair_.eta(unit_vec(f, da, i)));
        e_ = Cochain(0);
        e_.add_value({}, pair_.V.unit_vector());
    }

    HochschildInstance(const HochschildInstance&) = delete;
    HochschildInstance& operator=(const HochschildInstance&) = delete;

    const CoefficientPair& pair() const { return pair_; }
    const Algebra& algebra() const { return pair_.A; }
    const Caps& caps() const { return caps_; }
    const FieldSpec& field() const { return pair_.field(); }

    const Operad& operad() const { return op_; }
    const CompModule& module() const { return mod_; }

    long cochain_dim(int p) const {
        long d = pair_.dim_v();
        for (int i = 0; i < p; ++i) d *= pair_.dim_a();
        return d;
    }

    long chain_dim(int n) const {
        long d = 1;
        for (int i = 0; i <= n; ++i) d *= pair_.dim_a();
        return d;
    }

    Cochain cochain_basis(int p, long k) const {
        const int da = pair_.dim_a(), dv = pair_.dim_v();
        int j = static_cast<int>(k % dv);
        long t = k / dv;
        MultiIndex key(p, 0);
        for (int s = p - 1; s >= 0; --s) {
            key[s] = static_cast<int>(t % da);
            t /= da;
        }
        return Cochain::basis(p, key, j, field(), dv);
    }

    Chain chain_basis(int n, long k) const {
        const int da = pair_.dim_a();
        MultiIndex key(n + 1, 0);
        long t = k;
        for (int s = n; s >= 0; --s) {
            key[s] = static_cast<int>(t % da);
            t /= da;
        }
        return Chain::basis(n, key, field());
    }

    // (φ ∘_i ψ)(a_1,...,a_{p+q-1}) = φ(..., γ(ψ(a_i,...,a_{i+q-1})), ...).
    Cochain comp_impl(const Cochain& phi, int i, const Cochain& psi) const {
        const int p = phi.arity, q = psi.arity;
        Cochain r(p + q - 1);
        for (const auto& [kpsi, vpsi] : psi.values) {
            const Vec g = pair_.gamma(vpsi);
            for (const auto& [kphi, vphi] : phi.values) {
                const Scalar& c = g[kphi[i - 1]];
                if (c.is_zero()) continue;
                MultiIndex key;
                key.reserve(p + q - 1);
                key.insert(key.end(), kphi.begin(), kphi.begin() + (i - 1));
                key.insert(key.end(), kpsi.begin(), kpsi.end());
                key.insert(key.end(), kphi.begin() + i, kphi.end());
                r.add_scaled_value(key, c, vphi);
            }
        }
        return r;
    }

    // φ •_i (a_0,...,a_n): for i >= 1 replaces (a_i,...,a_{i+p-1}) by
    // γ(φ(...)); i = 0 replaces the leading block (a_0,...,a_{p-1}).
    Chain bullet_impl(const Cochain& phi, int i, const Chain& x) const {
        const int p = phi.arity, n = x.degree;
        Chain r(n - p + 1);
        for (const auto& [key, c] : x.terms) {
            const MultiIndex tuple(key.begin() + i, key.begin() + i + p);
            auto it = phi.values.find(tuple);
            if (it == phi.values.end()) continue;
            const Vec g = pair_.gamma(it->second);
            for (int mcoord = 0; mcoord < pair_.dim_a(); ++mcoord) {
                if (g[mcoord].is_zero()) continue;
                MultiIndex nk;
                nk.reserve(n - p + 2);
                nk.insert(nk.end(), key.begin(), key.begin() + i);
                nk.push_back(mcoord);
                nk.insert(nk.end(), key.begin() + i + p, key.end());
                r.add_term(nk, c * g[mcoord]);
            }
        }
        return r;
    }

    Chain cyclic_t_impl(const Chain& x) const {
        Chain r(x.degree);
        for (const auto& [key, c] : x.terms) {
            MultiIndex nk;
            nk.reserve(key.size());
            nk.push_back(key.back());
            nk.insert(nk.end(), key.begin(), key.end() - 1);
            r.add_term(nk, c);
        }
        return r;
    }

    // Kills tensors with the unit in any slot past the zeroth.
    Chain project_normalized_chain(const Chain& x) const {
        Chain r(x.degree);
        for (const auto& [key, c] : x.terms) {
            bool degenerate = false;
            for (std::size_t s = 1; s < key.size(); ++s)
                if (key[s] == 0) {
                    degenerate = true;
                    break;
                }
            if (!degenerate) r.terms.emplace(key, c);
        }
        return r;
    }

    // Kills values on tuples containing the unit index.
    Cochain project_normalized_cochain(const Cochain& phi) const {
        Cochain r(phi.arity);
        for (const auto& [key, v] : phi.values) {
            bool degenerate = false;
            for (int s : key)
                if (s == 0) {
                    degenerate = true;
                    break;
                }
            if (!degenerate) r.values.emplace(key, v);
        }
        return r;
    }

    // ----- closed forms, written by direct index arithmetic -----

    // ι_φ(a_0,...,a_n) = (a_0 γ(φ(a_1,...,a_p)), a_{p+1}, ..., a_n).
    Chain cap_closed(const Cochain& phi, const Chain& x) const {
        const int p = phi.arity, n = x.degree;
        Chain r(std::max(n - p, 0));
        if (p > n) return r;
        for (const auto& [key, c] : x.terms) {
            const MultiIndex tuple(key.begin() + 1, key.begin() + 1 + p);
            auto it = phi.values.find(tuple);
            if (it == phi.values.end()) continue;
            const Vec head =
                pair_.A.multiply(unit_vec(field(), pair_.dim_a(), key[0]), pair_.gamma(it->second));
            for (int mcoord = 0; mcoord < pair_.dim_a(); ++mcoord) {
                if (head[mcoord].is_zero()) continue;
                MultiIndex nk;
                nk.reserve(n - p + 1);
                nk.push_back(mcoord);
                nk.insert(nk.end(), key.begin() + 1 + p, key.end());
                r.add_term(nk, c * head[mcoord]);
            }
        }
        return r;
    }

    // Both sums of the Lie derivative, written against rotated index blocks.
    Chain lie_closed(const Cochain& phi, const Chain& x) const {
        const int p = phi.arity, n = x.degree;
        if (p > n + 1) return Chain(0);
        Chain r(n - p + 1);
        for (const auto& [key, c] : x.terms) {
            for (int i = 1; i <= n - p + 1; ++i) {
                const MultiIndex tuple(key.begin() + i, key.begin() + i + p);
                auto it = phi.values.find(tuple);
                if (it == phi.values.end()) continue;
                const Vec g = pair_.gamma(it->second);
                for (int mc = 0; mc < pair_.dim_a(); ++mc) {
                    if (g[mc].is_zero()) continue;
                    MultiIndex nk;
                    nk.insert(nk.end(), key.begin(), key.begin() + i);
                    nk.push_back(mc);
                    nk.insert(nk.end(), key.begin() + i + p, key.end());
                    r.add_term(nk, signed_sc(static_cast<long long>(p - 1) * (i - 1), c * g[mc]));
                }
            }
            for (int i = 1; i <= p; ++i) {
                // φ consumes p cyclically consecutive entries starting at
                // a_{n-i+2}; the remainder follows in cyclic order.
                MultiIndex tuple(p);
                for (int s = 0; s < p; ++s) tuple[s] = key[(n - i + 2 + s) % (n + 1)];
                auto it = phi.values.find(tuple);
                if (it == phi.values.end()) continue;
                const Vec g = pair_.gamma(it->second);
                for (int mc = 0; mc < pair_.dim_a(); ++mc) {
                    if (g[mc].is_zero()) continue;
                    MultiIndex nk;
                    nk.push_back(mc);
                    for (int s = p; s <= n; ++s) nk.push_back(key[(n - i + 2 + s) % (n + 1)]);
                    r.add_term(nk, signed_sc(static_cast<long long>(n) * (i - 1) + p - 1,
                                             c * g[mc]));
                }
            }
        }
        return r;
    }

    // S_φ: for each pair j <= i the rotated tensor gets φ applied at block i
    // and the unit prepended.
    Chain s_closed(const Cochain& phi, const Chain& x) const {
        const int p = phi.arity, n = x.degree;
        if (p > n) return Chain(std::max(n - p + 2, 0));
        Chain r(n - p + 2);
        for (const auto& [key, c] : x.terms) {
            for (int j = 1; j <= n - p + 1; ++j) {
                MultiIndex rot(n + 1);
                for (int s = 0; s <= n; ++s) rot[s] = key[(s - (j - 1) + (n + 1)) % (n + 1)];
                for (int i = j; i <= n - p + 1; ++i) {
                    const MultiIndex tuple(rot.begin() + i, rot.begin() + i + p);
                    auto it = phi.values.find(tuple);
                    if (it == phi.values.end()) continue;
                    const Vec g = pair_.gamma(it->second);
                    for (int mc = 0; mc < pair_.dim_a(); ++mc) {
                        if (g[mc].is_zero()) continue;
                        MultiIndex nk;
                        nk.reserve(n - p + 3);
                        nk.push_back(0);  // unit slot
                        nk.insert(nk.end(), rot.begin(), rot.begin() + i);
                        nk.push_back(mc);
                        nk.insert(nk.end(), rot.begin() + i + p, rot.end());
                        r.add_term(nk, signed_sc(static_cast<long long>(n) * (j - 1) +
                                                     static_cast<long long>(p - 1) * (i - 1),
                                                 c * g[mc]));
                    }
                }
            }
        }
        return r;
    }

    // Textbook Hochschild coboundary with the bimodule actions a·v = η(a)v,
    // v·a = v η(a); the operadic coboundary is (-1)^{p+1} times this.
    Cochain coboundary_standard(const Cochain& phi) const {
        const int p = phi.arity;
        const int da = pair_.dim_a();
        Cochain r(p + 1);
        MultiIndex tuple(p + 1, 0);
        while (true) {
            Vec val = zero_vec(field(), pair_.dim_v());
            {
                MultiIndex rest(tuple.begin() + 1, tuple.end());
                auto it = phi.values.find(rest);
                if (it != phi.values.end())
                    add_scaled(val, Scalar::one(field()),
                               pair_.V.multiply(pair_.eta(unit_vec(field(), da, tuple[0])),
                                                it->second));
            }
            for (int i = 1; i <= p; ++i) {
                const Vec prod = pair_.A.basis_product(tuple[i - 1], tuple[i]);
                for (int mc = 0; mc < da; ++mc) {
                    if (prod[mc].is_zero()) continue;
                    MultiIndex merged;
                    merged.reserve(p);
                    merged.insert(merged.end(), tuple.begin(), tuple.begin() + (i - 1));
                    merged.push_back(mc);
                    merged.insert(merged.end(), tuple.begin() + i + 1, tuple.end());
                    auto it = phi.values.find(merged);
                    if (it == phi.values.end()) continue;
                    Vec term = zero_vec(field(), pair_.dim_v());
                    add_scaled(term, prod[mc], it->second);
                    add_scaled(val, signed_sc(i, Scalar::one(field())), term);
                }
            }
            {
                MultiIndex rest(tuple.begin(), tuple.end() - 1);
                auto it = phi.values.find(rest);
                if (it != phi.values.end()) {
                    Vec term = pair_.V.multiply(it->second,
                                                pair_.eta(unit_vec(field(), da, tuple[p])));
                    add_scaled(val, signed_sc(p + 1, Scalar::one(field())), term);
                }
            }
            if (!is_zero_vec(val)) r.add_value(tuple, val);
            int s = p;
            while (s >= 0 && tuple[s] == da - 1) tuple[s--] = 0;
            if (s < 0) break;
            ++tuple[s];
        }
        return r;
    }

    // (φ ⌣ ψ)(first q args, last p args) = ψ(first) ·_V φ(last).
    Cochain cup_closed(const Cochain& phi, const Cochain& psi) const {
        Cochain r(phi.arity + psi.arity);
        for (const auto& [kpsi, vpsi] : psi.values)
            for (const auto& [kphi, vphi] : phi.values) {
                MultiIndex key;
                key.reserve(phi.arity + psi.arity);
                key.insert(key.end(), kpsi.begin(), kpsi.end());
                key.insert(key.end(), kphi.begin(), kphi.end());
                r.add_value(key, pair_.V.multiply(vpsi, vphi));
            }
        return r;
    }

    static Scalar signed_sc(long long e, Scalar c) { return odd(e) ? -c : c; }

  private:
    class Op final : public Operad {
      public:
        explicit Op(const HochschildInstance* h) : h_(h) {}
        const FieldSpec& field() const override { return h_->field(); }
        int max_arity() const override { return h_->caps_.max_cochain_arity; }
        long dim(int p) const override { return h_->cochain_dim(p); }
        Cochain basis_element(int p, long k) const override { return h_->cochain_basis(p, k); }
        Cochain comp_raw(const Cochain& phi, int i, const Cochain& psi) const override {
            return h_->comp_impl(phi, i, psi);
        }
        const Cochain& mult() const override { return h_->mu_; }
        const Cochain& id_element() const override { return h_->one_; }
        const Cochain& unit() const override { return h_->e_; }
        Cochain project_normalized(const Cochain& phi) const override {
            return h_->project_normalized_cochain(phi);
        }

      private:
        const HochschildInstance* h_;
    };

    class Mod final : public CompModule {
      public:
        explicit Mod(const HochschildInstance* h) : h_(h) {}
        const FieldSpec& field() const override { return h_->field(); }
        int max_degree() const override { return h_->caps_.max_chain_degree; }
        long dim(int n) const override { return h_->chain_dim(n); }
        Chain basis_element(int n, long k) const override { return h_->chain_basis(n, k); }
        Chain bullet_raw(const Cochain& phi, int i, const Chain& x) const override {
            return h_->bullet_impl(phi, i, x);
        }
        Chain cyclic_t_raw(const Chain& x) const override { return h_->cyclic_t_impl(x); }
        Chain project_normalized(const Chain& x) const override {
            return h_->project_normalized_chain(x);
        }

      private:
        const HochschildInstance* h_;
    };

    CoefficientPair pair_;
    Caps caps_;
    Cochain mu_, one_, e_;
    Op op_;
    Mod mod_;
};

// Builds the instance for a validated algebra with default coefficients.
inline HochschildInstance build_hochschild(const Algebra& a, Caps caps = {}) {
    return HochschildInstance(default_pair(a), caps);
}

inline HochschildInstance build_hochschild(const CoefficientPair& pair, Caps caps = {}) {
    return HochschildInstance(pair, caps);
}

}  // namespace opcalc
