#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "opcalc/calculus.hpp"
#include "opcalc/hochschild.hpp"

namespace opcalc {

// A 2-cochain π with π∘₁π = π∘₂π and π(1,1) = 1_V replaces the operad
// multiplication and turns the same cochain/chain spaces into a different
// operad with multiplication; the boundary it induces is the Poisson
// (Brylinski-type) boundary and the coboundary the Koszul-Lichnerowicz one.
struct PoissonValidation {
    ValidationReport report;
    bool hochschild_cocycle = false;  // informational: δ_μ(π) = 0?
};

inline PoissonValidation validate_poisson(const HochschildInstance& base, const Cochain& pi) {
    PoissonValidation out;
    if (pi.arity != 2) {
        out.report.fail("arity", {}, "a Poisson structure must be a 2-cochain");
        return out;
    }
    const Operad& o = base.operad();
    Cochain lhs = comp(o, pi, 1, pi);
    Cochain rhs = comp(o, pi, 2, pi);
    if (!(lhs == rhs)) {
        // find a witnessing basis triple
        Cochain diff = lhs - rhs;
        const MultiIndex& key = diff.values.begin()->first;
        out.report.fail("self-compatibility", {key[0], key[1], key[2]},
                        "pi o1 pi != pi o2 pi at basis triple (" + multi_index_str(key) + ")");
    }
    auto it = pi.values.find(MultiIndex{0, 0});
    Vec unit_v = base.pair().V.unit_vector();
    if (it == pi.values.end() || !vec_eq(it->second, unit_v))
        out.report.fail("unitality", {0, 0}, "pi(1,1) != 1_V");
    out.hochschild_cocycle = coboundary(o, pi).is_zero();
    return out;
}

// Instance with the multiplication replaced by π; the whole calculus (ι, 𝓛,
// S, B, homology) runs against it unchanged.
inline std::unique_ptr<HochschildInstance> build_poisson_instance(const CoefficientPair& pair,
                                                                  const Cochain& pi, Caps caps) {
    HochschildInstance base(pair, caps);
    PoissonValidation v = validate_poisson(base, pi);
    if (!v.report.ok)
        throw InputError("invalid Poisson structure: " + v.report.issues.front().check);
    return std::make_unique<HochschildInstance>(pair, caps, pi);
}

// b^π written out directly: faces substitute γ(π(a_i, a_{i+1})), the last one
// wraps around.
inline Chain poisson_boundary_display(const CoefficientPair& pair, const Cochain& pi,
                                      const Chain& x) {
    const int n = x.degree;
    Chain r(n - 1 >= 0 ? n - 1 : 0);
    if (n == 0) return r;
    const int da = pair.dim_a();
    for (const auto& [key, c] : x.terms) {
        for (int i = 0; i + 1 <= n; ++i) {
            auto it = pi.values.find(MultiIndex{key[i], key[i + 1]});
            if (it == pi.values.end()) continue;
            const Vec g = pair.gamma(it->second);
            for (int mc = 0; mc < da; ++mc) {
                if (g[mc].is_zero()) continue;
                MultiIndex nk;
                nk.insert(nk.end(), key.begin(), key.begin() + i);
                nk.push_back(mc);
                nk.insert(nk.end(), key.begin() + i + 2, key.end());
                r.add_term(nk, HochschildInstance::signed_sc(i, c * g[mc]));
            }
        }
        auto it = pi.values.find(MultiIndex{key[n], key[0]});
        if (it != pi.values.end()) {
            const Vec g = pair.gamma(it->second);
            for (int mc = 0; mc < da; ++mc) {
                if (g[mc].is_zero()) continue;
                MultiIndex nk;
                nk.push_back(mc);
                nk.insert(nk.end(), key.begin() + 1, key.end() - 1);
                r.add_term(nk, HochschildInstance::signed_sc(n, c * g[mc]));
            }
        }
    }
    return r;
}

// (δ^π φ)(a_1,...,a_{p+1}) = π(γφ(a_1..a_p), a_{p+1})
//   + (-1)^{p-1} π(a_1, γφ(a_2..a_{p+1}))
//   + Σ_{i=1}^{p} (-1)^{i+p-1} φ(a_1,...,γπ(a_i,a_{i+1}),...,a_{p+1}).
inline Cochain poisson_coboundary_display(const CoefficientPair& pair, const Cochain& pi,
                                          const Cochain& phi) {
    const int p = phi.arity;
    const int da = pair.dim_a();
    const FieldSpec& f = pair.field();
    Cochain r(p + 1);
    MultiIndex tuple(p + 1, 0);
    auto unit_arg = [&](int idx) { return unit_vec(f, da, idx); };
    while (true) {
        Vec val = zero_vec(f, pair.dim_v());
        {
            MultiIndex head(tuple.begin(), tuple.end() - 1);
            auto it = phi.values.find(head);
            if (it != phi.values.end())
                add_scaled(val, Scalar::one(f),
                           evaluate_cochain(pair, pi,
                                            std::vector<Vec>{pair.gamma(it->second),
                                                             unit_arg(tuple[p])}));
        }
        {
            MultiIndex tail(tuple.begin() + 1, tuple.end());
            auto it = phi.values.find(tail);
            if (it != phi.values.end()) {
                Vec term = evaluate_cochain(
                    pair, pi, std::vector<Vec>{unit_arg(tuple[0]), pair.gamma(it->second)});
                add_scaled(val, HochschildInstance::signed_sc(p - 1, Scalar::one(f)), term);
            }
        }
        for (int i = 1; i <= p; ++i) {
            auto pit = pi.values.find(MultiIndex{tuple[i - 1], tuple[i]});
            if (pit == pi.values.end()) continue;
            const Vec g = pair.gamma(pit->second);
            for (int mc = 0; mc < da; ++mc) {
                if (g[mc].is_zero()) continue;
                MultiIndex merged;
                merged.insert(merged.end(), tuple.begin(), tuple.begin() + (i - 1));
                merged.push_back(mc);
                merged.insert(merged.end(), tuple.begin() + i + 1, tuple.end());
                auto it = phi.values.find(merged);
                if (it == phi.values.end()) continue;
                Vec term = zero_vec(f, pair.dim_v());
                add_scaled(term, g[mc], it->second);
                add_scaled(val, HochschildInstance::signed_sc(i + p - 1, Scalar::one(f)), term);
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

// (φ ⌣_π ψ)(a-blocks) = π(γψ(first q), γφ(last p)).
inline Cochain poisson_cup_display(const CoefficientPair& pair, const Cochain& pi,
                                   const Cochain& phi, const Cochain& psi) {
    Cochain r(phi.arity + psi.arity);
    for (const auto& [kpsi, vpsi] : psi.values)
        for (const auto& [kphi, vphi] : phi.values) {
            MultiIndex key;
            key.insert(key.end(), kpsi.begin(), kpsi.end());
            key.insert(key.end(), kphi.begin(), kphi.end());
            Vec val = evaluate_cochain(pair, pi,
                                       std::vector<Vec>{pair.gamma(vpsi), pair.gamma(vphi)});
            r.add_value(key, val);
        }
    return r;
}

// φ ⌢_π (a_0,...,a_n) = (γπ(a_0, γφ(a_1..a_p)), a_{p+1},...,a_n).
inline Chain poisson_cap_display(const CoefficientPair& pair, const Cochain& pi,
                                 const Cochain& phi, const Chain& x) {
    const int p = phi.arity, n = x.degree;
    Chain r(std::max(n - p, 0));
    if (p > n) return r;
    const int da = pair.dim_a();
    const FieldSpec& f = pair.field();
    for (const auto& [key, c] : x.terms) {
        const MultiIndex tuple(key.begin() + 1, key.begin() + 1 + p);
        auto it = phi.values.find(tuple);
        if (it == phi.values.end()) continue;
        Vec head = pair.gamma(evaluate_cochain(
            pair, pi, std::vector<Vec>{unit_vec(f, da, key[0]), pair.gamma(it->second)}));
        for (int mc = 0; mc < da; ++mc) {
            if (head[mc].is_zero()) continue;
            MultiIndex nk;
            nk.push_back(mc);
            nk.insert(nk.end(), key.begin() + 1 + p, key.end());
            r.add_term(nk, c * head[mc]);
        }
    }
    return r;
}

// b^π = -𝓛^π_π, the boundary-as-Lie-derivative identity in the π-operad.
inline bool holds_poisson_homotopy(const HochschildInstance& pinst, const Chain& x) {
    Calculus calc(pinst.operad(), pinst.module());
    return calc.boundary(x) == -calc.lie(pinst.operad().mult(), x);
}

// Brute-force enumeration of Poisson structures on a small algebra with
// integer coefficient values in [-range, range]; π(1,·) and π(·,1) entries
// are pinned by unitality up front to cut the search space. Exploration
// utility, not a classification.
inline std::vector<Cochain> poisson_search(const HochschildInstance& base, int range = 1,
                                           std::size_t limit = 64) {
    const CoefficientPair& pair = base.pair();
    const int da = pair.dim_a(), dv = pair.dim_v();
    const FieldSpec& f = pair.field();
    if (da > 2) throw UsageError("poisson search is restricted to 2-dimensional algebras");
    // free values: pi(b_i, b_j) for (i,j) != (0,0), each a V-vector
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j)
            if (!(i == 0 && j == 0)) slots.emplace_back(i, j);
    const int ncoef = static_cast<int>(slots.size()) * dv;
    const long base_count = 2L * range + 1;
    long total = 1;
    for (int i = 0; i < ncoef; ++i) total *= base_count;
    std::vector<Cochain> found;
    for (long code = 0; code < total && found.size() < limit; ++code) {
        Cochain pi(2);
        pi.add_value({0, 0}, pair.V.unit_vector());
        long c = code;
        for (std::size_t s = 0; s < slots.size(); ++s) {
            Vec v = zero_vec(f, dv);
            for (int k = 0; k < dv; ++k) {
                long digit = c % base_count;
                c /= base_count;
                v[k] = Scalar::from_int(f, digit - range);
            }
            if (!is_zero_vec(v)) pi.add_value({slots[s].first, slots[s].second}, v);
        }
        if (validate_poisson(base, pi).report.ok) found.push_back(std::move(pi));
    }
    return found;
}

}  // namespace opcalc
