#pragma once

#include <functional>
#include <string>
#include <vector>

#include "opcalc/calculus.hpp"
#include "opcalc/homology.hpp"
#include "opcalc/rand.hpp"

namespace opcalc {

struct IdentityResult {
    std::string identity;
    long cases = 0;
    long failures = 0;
    std::string witness;  // first failing input, if any
};

struct CheckReport {
    std::string suite;
    std::vector<IdentityResult> identities;

    bool ok() const {
        for (const auto& r : identities)
            if (r.failures) return false;
        return true;
    }

    IdentityResult& entry(const std::string& name) {
        for (auto& r : identities)
            if (r.identity == name) return r;
        identities.push_back({name, 0, 0, ""});
        return identities.back();
    }

    void record(const std::string& name, bool pass, const std::string& witness) {
        IdentityResult& r = entry(name);
        ++r.cases;
        if (!pass) {
            ++r.failures;
            if (r.witness.empty()) r.witness = witness;
        }
    }
};

inline Cochain random_cochain(Rng& rng, const Operad& o, int p) {
    Cochain r(p);
    for (long k = 0; k < o.dim(p); ++k)
        if (rng.raw() % 2 == 0) r += o.basis_element(p, k).scaled(rng.scalar(o.field()));
    return r;
}

inline Chain random_chain(Rng& rng, const CompModule& m, int n) {
    Chain r(n);
    for (long k = 0; k < m.dim(n); ++k)
        if (rng.raw() % 2 == 0) r += m.basis_element(n, k).scaled(rng.scalar(m.field()));
    return r;
}

inline CheckReport from_axiom_report(const std::string& suite, const AxiomReport& rep) {
    CheckReport out;
    out.suite = suite;
    IdentityResult all;
    all.identity = suite + " axioms";
    all.cases = rep.cases;
    all.failures = static_cast<long>(rep.failures.size());
    if (!rep.failures.empty()) all.witness = rep.failures.front().str();
    out.identities.push_back(all);
    return out;
}

inline CheckReport run_operad_suite(const Operad& o, int arity_cap) {
    return from_axiom_report("operad", check_operad_axioms(o, arity_cap));
}

inline CheckReport run_comp_module_suite(const Operad& o, const CompModule& m, int pmax,
                                         int qmax, int nmax) {
    CheckReport rep =
        from_axiom_report("compmodule", check_comp_module_axioms(o, m, pmax, qmax, nmax));
    rep.suite = "compmodule";
    return rep;
}

inline CheckReport run_simplicial_suite(const Operad& o, const CompModule& m, int nmax) {
    return from_axiom_report("simplicial", check_simplicial_cyclic(o, m, nmax));
}

// All chain-level identity suites of the calculus: the dg module and dg Lie
// identities, the normalized-complex suites (which need cyclicity), the
// cochain-level Leibniz/Jacobi/commutativity-defect identities, and the
// differential properties of b and B. Exhaustive over basis cochains of
// arity <= pmax and basis chains of degree <= nmax, plus seeded random
// trials. Refuses para-cyclic instances.
inline CheckReport run_calculus_suite(const Operad& o, const CompModule& m,
                                      std::optional<Mutation> mutation, int pmax, int nmax,
                                      std::uint64_t seed, int trials) {
    if (!is_cyclic_instance(m, nmax))
        throw UsageError(
            "calculus suite requires a cyclic instance (t^{n+1} = id); this one is para-cyclic");
    Calculus calc(o, m, mutation);
    CheckReport rep;
    rep.suite = "calculus";

    auto witness = [&](const Cochain& phi, const Chain& x) {
        return "phi arity " + std::to_string(phi.arity) + ", chain degree " +
               std::to_string(x.degree);
    };
    auto witness2 = [&](const Cochain& phi, const Cochain& psi) {
        return "arities " + std::to_string(phi.arity) + "," + std::to_string(psi.arity);
    };

    auto run_chain_cases = [&](const Cochain& phi, const Cochain& psi, const Chain& x) {
        const std::string w = witness(phi, x);
        rep.record("iota(phi)iota(psi) = iota(cup(phi,psi))",
                   holds_cap_composition(calc, phi, psi, x), w);
        rep.record("[L(phi),L(psi)] = L({phi,psi})", holds_lie_bracket(calc, phi, psi, x), w);
    };
    auto run_single_cases = [&](const Cochain& phi, const Chain& x) {
        const std::string w = witness(phi, x);
        rep.record("[b,iota(phi)] = iota(delta(phi))", holds_cap_boundary(calc, phi, x), w);
        rep.record("[b,L(phi)] + L(delta(phi)) = 0", holds_lie_boundary(calc, phi, x), w);
        if (is_normalized_cochain(o, phi) && !phi.is_zero()) {
            rep.record("[B,S(phi)] = 0 on normalized chains", holds_b_s_commute(calc, phi, x), w);
            rep.record("L(phi) = [B+b, iota(phi)+S(phi)] - iota(delta phi) - S(delta phi)",
                       holds_homotopy_formula(calc, phi, x), w);
            rep.record("[L(phi),B] = 0 on normalized chains", holds_lie_b_commute(calc, phi, x),
                       w);
        }
    };
    auto run_diff_cases = [&](const Chain& x) {
        const std::string w = "chain degree " + std::to_string(x.degree);
        rep.record("b = -L(mu)", holds_boundary_is_lie_mult(calc, x), w);
        rep.record("b(b(x)) = 0", calc.boundary(calc.boundary(x)).is_zero(), w);
        Chain nx = calc.nrm(x);
        rep.record("B(B(x)) = 0 on normalized chains",
                   calc.nconnes_b(calc.nconnes_b(nx)).is_zero(), w);
        rep.record("bB + Bb = 0 on normalized chains",
                   (calc.nboundary(calc.nconnes_b(nx)) + calc.nconnes_b(calc.nboundary(nx)))
                       .is_zero(),
                   w);
    };
    auto run_cochain_cases = [&](const Cochain& phi, const Cochain& psi) {
        const int p = phi.arity, q = psi.arity;
        const std::string w = witness2(phi, psi);
        Cochain t1 = pre_lie(o, phi, coboundary(o, psi));
        Cochain t2 = coboundary(o, pre_lie(o, phi, psi));
        Cochain t3 = pre_lie(o, coboundary(o, phi), psi);
        Cochain rhs =
            cup(o, phi, psi) - signed_term(static_cast<long long>(p) * q, cup(o, psi, phi));
        rep.record("phi.delta(psi) + (-1)^p[delta(phi.psi) - delta(phi).psi] = cup defect",
                   (t1 + signed_term(p, t2) - signed_term(p, t3)) == rhs, w);
        rep.record("delta(cup(phi,psi)) = cup(delta phi,psi) + (-1)^p cup(phi,delta psi)",
                   coboundary(o, cup(o, phi, psi)) ==
                       cup(o, coboundary(o, phi), psi) +
                           signed_term(p, cup(o, phi, coboundary(o, psi))),
                   w);
        rep.record("delta(delta(phi)) = 0", coboundary(o, coboundary(o, phi)).is_zero(), w);
        if (is_normalized_cochain(o, phi) && is_normalized_cochain(o, psi)) {
            rep.record("normalized cochains closed under delta, cup, bracket",
                       is_normalized_cochain(o, coboundary(o, phi)) &&
                           is_normalized_cochain(o, cup(o, phi, psi)) &&
                           is_normalized_cochain(o, bracket(o, phi, psi)),
                       w);
        }
    };
    auto run_jacobi = [&](const Cochain& a, const Cochain& b, const Cochain& c) {
        rep.record("{a,{b,c}} = {{a,b},c} + (-1)^{(p-1)(q-1)}{b,{a,c}}",
                   bracket(o, a, bracket(o, b, c)) ==
                       bracket(o, bracket(o, a, b), c) +
                           signed_term(static_cast<long long>(a.arity - 1) * (b.arity - 1),
                                       bracket(o, b, bracket(o, a, c))),
                   "arities " + std::to_string(a.arity) + "," + std::to_string(b.arity) + "," +
                       std::to_string(c.arity));
    };

    // exhaustive over basis elements
    for (int n = 0; n <= nmax; ++n)
        for (long kx = 0; kx < m.dim(n); ++kx) run_diff_cases(m.basis_element(n, kx));
    for (int p = 0; p <= pmax; ++p)
        for (long kp = 0; kp < o.dim(p); ++kp) {
            Cochain phi = o.basis_element(p, kp);
            for (int n = 0; n <= nmax; ++n)
                for (long kx = 0; kx < m.dim(n); ++kx) {
                    Chain x = m.basis_element(n, kx);
                    run_single_cases(phi, x);
                    for (int q = 0; q <= pmax; ++q)
                        for (long kq = 0; kq < o.dim(q); ++kq)
                            run_chain_cases(phi, o.basis_element(q, kq), x);
                }
            for (int q = 0; q <= pmax; ++q)
                for (long kq = 0; kq < o.dim(q); ++kq)
                    run_cochain_cases(phi, o.basis_element(q, kq));
        }

    // seeded random trials
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        int p = static_cast<int>(rng.pick(pmax + 1));
        int q = static_cast<int>(rng.pick(pmax + 1));
        int n = static_cast<int>(rng.pick(nmax + 1));
        int r = static_cast<int>(rng.pick(pmax + 1));
        Cochain phi = random_cochain(rng, o, p);
        Cochain psi = random_cochain(rng, o, q);
        Cochain chi = random_cochain(rng, o, r);
        Chain x = random_chain(rng, m, n);
        run_diff_cases(x);
        run_single_cases(phi, x);
        run_chain_cases(phi, psi, x);
        run_cochain_cases(phi, psi);
        run_jacobi(phi, psi, chi);
        run_single_cases(o.project_normalized(phi), x);
    }

    // Jacobi exhaustively on a small triple set
    for (int p = 0; p <= std::min(pmax, 2); ++p)
        for (int q = 0; q <= std::min(pmax, 2); ++q)
            for (int r = 0; r <= std::min(pmax, 2); ++r)
                for (long kp = 0; kp < std::min(o.dim(p), 4L); ++kp)
                    for (long kq = 0; kq < std::min(o.dim(q), 4L); ++kq)
                        for (long kr = 0; kr < std::min(o.dim(r), 4L); ++kr)
                            run_jacobi(o.basis_element(p, kp), o.basis_element(q, kq),
                                       o.basis_element(r, kr));
    return rep;
}

// Homology-level statements for cocycles: the mixed Leibniz defect and the
// Cartan defect are boundaries of the normalized complex (with verified
// certificates), and [L,B] = 0 holds exactly. Quantified over all normalized
// basis cocycles of arity <= pmax and a cycle basis of each degree <= nmax.
// Precondition failures surface as the "cocycle preconditions" entry.
inline CheckReport run_homology_level_suite(const HomologyEngine& eng, const Operad& o,
                                            const CompModule& m, int pmax, int nmax) {
    if (!is_cyclic_instance(m, nmax + 1))
        throw UsageError("homology-level suite requires a cyclic instance");
    Calculus calc(o, m);
    CheckReport rep;
    rep.suite = "homology-level";

    std::vector<Cochain> cocycles;
    for (int p = 0; p <= pmax; ++p)
        for (long k = 0; k < o.dim(p); ++k) {
            Cochain phi = o.project_normalized(o.basis_element(p, k));
            if (phi.is_zero()) continue;
            rep.record("cocycle precondition delta(phi) = 0", true,
                       "arity " + std::to_string(p));
            if (!eng.is_cocycle(phi)) continue;
            cocycles.push_back(phi);
        }

    for (int n = 0; n <= nmax; ++n) {
        const ChainFrame& fr = eng.frame(n, true);
        std::vector<std::vector<Scalar>> zbasis;
        if (n == 0) {
            for (int i = 0; i < fr.dim(); ++i) {
                std::vector<Scalar> e(fr.dim(), Scalar::zero(eng.field()));
                e[i] = Scalar::one(eng.field());
                zbasis.push_back(std::move(e));
            }
        } else {
            zbasis = eng.boundary_matrix(n, true).kernel_basis();
        }
        for (const auto& zc : zbasis) {
            Chain z = fr.chain(zc);
            for (const auto& phi : cocycles) {
                for (const auto& psi : cocycles) {
                    Chain w =
                        calc.nrm(
                            graded_commutator(op_cap(calc, psi), op_lie(calc, phi)).apply(z)) -
                        calc.ncap(bracket(o, psi, phi), z);
                    bool isb = w.is_zero() || eng.is_boundary(w, true).first;
                    rep.record("([iota(psi),L(phi)] - iota({psi,phi}))(z) is a boundary", isb,
                               "n=" + std::to_string(n));
                }
                Chain v =
                    calc.nlie(phi, z) -
                    calc.nrm(graded_commutator(op_connes_b(calc), op_cap(calc, phi)).apply(z));
                bool isb = v.is_zero() || eng.is_boundary(v, true).first;
                rep.record("(L(phi) - [B,iota(phi)])(z) is a boundary", isb,
                           "n=" + std::to_string(n));
            }
        }
        for (const auto& phi : cocycles)
            for (long kx = 0; kx < m.dim(n); ++kx)
                rep.record("[L(phi),B] = 0 on normalized chains",
                           holds_lie_b_commute(calc, phi, m.basis_element(n, kx)),
                           "n=" + std::to_string(n));
    }
    return rep;
}

}  // namespace opcalc
