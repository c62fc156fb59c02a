// Command-line surface: validation, identity-check suites, homology tables,
// and single operator evaluations, all over exact arithmetic.

#include <CLI11.hpp>

#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "opcalc/opcalc.hpp"

namespace {

using namespace opcalc;

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitInputError = 2;

struct CommonOpts {
    std::string algebra_path;
    std::string coefficients_path;
    std::string pi_path;
    std::string field_override;
    int max_degree = 4;
    int max_arity = 2;
    int sweep_arity = 3;
    int trials = 20;
    std::uint64_t seed = 12345;
    std::string format = "json";
    std::string out_path;
    std::string cache_dir;
    std::string mutate;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool need_pi = false) {
    cmd->add_option("--algebra", o.algebra_path, "algebra JSON file")->required();
    cmd->add_option("--coefficients", o.coefficients_path, "coefficient-pair JSON file");
    if (need_pi)
        cmd->add_option("--pi", o.pi_path, "2-cochain JSON file with the Poisson structure");
    cmd->add_option("--field", o.field_override, "expected field (\"Q\" or \"Fp:<p>\")");
    cmd->add_option("--max-degree", o.max_degree, "maximum chain degree");
    cmd->add_option("--max-arity", o.max_arity, "maximum cochain arity for sweeps");
    cmd->add_option("--trials", o.trials, "number of seeded random trials");
    cmd->add_option("--seed", o.seed, "random seed");
    cmd->add_option("--format", o.format, "output format: json or csv");
    cmd->add_option("--out", o.out_path, "write the report to this file");
    cmd->add_option("--cache-dir", o.cache_dir, "matrix cache directory");
}

void emit(const CommonOpts& o, const std::string& text) {
    std::string payload = text;
    if (payload.empty() || payload.back() != '\n') payload += '\n';
    if (o.out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream f(o.out_path);
        if (!f) throw InputError("cannot write " + o.out_path);
        f << payload;
    }
}

Algebra load_checked_algebra(const CommonOpts& o) {
    Algebra a = load_algebra(o.algebra_path);
    if (!o.field_override.empty() && !(FieldSpec::parse(o.field_override) == a.field))
        throw InputError("algebra file is over " + a.field.str() + ", expected " +
                         o.field_override);
    return a;
}

CoefficientPair load_pair(const CommonOpts& o, const Algebra& a) {
    if (o.coefficients_path.empty()) return default_pair(a);
    auto [v, gamma] = pair_data_from_json(a.field, a.dim, load_json_file(o.coefficients_path));
    return make_coefficient_pair(a, v, gamma);
}

std::optional<Mutation> parse_mutation(const std::string& spec) {
    if (spec.empty()) return std::nullopt;
    // flip-sign:<op>[:<term>]
    const std::string prefix = "flip-sign:";
    if (spec.rfind(prefix, 0) != 0)
        throw InputError("bad --mutate spec (expected flip-sign:<op>[:<term>])");
    std::string rest = spec.substr(prefix.size());
    Mutation m;
    auto colon = rest.find(':');
    if (colon == std::string::npos) {
        m.op = rest;
    } else {
        m.op = rest.substr(0, colon);
        try {
            m.term = std::stoi(rest.substr(colon + 1));
        } catch (const std::exception&) {
            throw InputError("bad --mutate term index");
        }
    }
    if (m.op != "b" && m.op != "B" && m.op != "iota" && m.op != "lie" && m.op != "S")
        throw InputError("--mutate operator must be one of b, B, iota, lie, S");
    return m;
}

int cmd_validate(const CommonOpts& o) {
    json out;
    Algebra a = load_checked_algebra(o);
    ValidationReport arep = validate_algebra(a);
    out["algebra"] = validation_to_json(arep);
    bool ok = arep.ok;
    std::unique_ptr<HochschildInstance> inst;
    if (ok) {
        CoefficientPair pair = default_pair(a);
        if (!o.coefficients_path.empty()) {
            auto [v, gamma] =
                pair_data_from_json(a.field, a.dim, load_json_file(o.coefficients_path));
            ValidationReport prep = validate_coefficient_pair(a, v, gamma);
            out["coefficients"] = validation_to_json(prep);
            ok = ok && prep.ok;
            if (prep.ok) pair = make_coefficient_pair(a, v, gamma);
        }
        if (ok && !o.pi_path.empty()) {
            inst = std::make_unique<HochschildInstance>(pair, Caps{4, 6});
            Cochain pi = load_cochain(pair, o.pi_path);
            PoissonValidation pv = validate_poisson(*inst, pi);
            json pj = validation_to_json(pv.report);
            pj["hochschild_cocycle"] = pv.hochschild_cocycle;
            out["poisson"] = pj;
            ok = ok && pv.report.ok;
        }
    }
    out["ok"] = ok;
    emit(o, out.dump(2));
    return ok ? kExitOk : kExitMathFailure;
}

int cmd_check(const CommonOpts& o, const std::string& suite) {
    Algebra a = load_checked_algebra(o);
    if (!validate_algebra(a).ok) throw InputError("algebra fails validation; run `validate`");
    CoefficientPair pair = load_pair(o, a);
    Caps caps;
    caps.max_chain_degree = o.max_degree + 4;
    caps.max_cochain_arity = std::max({3 * o.sweep_arity - 2, o.max_arity + 4, 6});
    HochschildInstance inst(pair, caps);
    std::optional<Mutation> mut = parse_mutation(o.mutate);

    std::vector<CheckReport> reports;
    auto want = [&](const char* name) { return suite == name || suite == "all"; };
    if (want("operad")) reports.push_back(run_operad_suite(inst.operad(), o.sweep_arity));
    if (want("compmodule"))
        reports.push_back(run_comp_module_suite(inst.operad(), inst.module(), o.max_arity,
                                                o.max_arity, o.max_degree));
    if (want("simplicial"))
        reports.push_back(run_simplicial_suite(inst.operad(), inst.module(), o.max_degree));
    if (want("calculus"))
        reports.push_back(run_calculus_suite(inst.operad(), inst.module(), mut, o.max_arity,
                                             o.max_degree, o.seed, o.trials));
    if (want("homology-level")) {
        MatrixCache cache(o.cache_dir, instance_fingerprint(pair, inst.operad().mult(), caps));
        HomologyEngine eng(inst.operad(), inst.module(), cache);
        reports.push_back(
            run_homology_level_suite(eng, inst.operad(), inst.module(), o.max_arity,
                                     std::min(o.max_degree, 3)));
    }
    if (reports.empty())
        throw InputError("unknown suite: " + suite +
                         " (expected operad|compmodule|simplicial|calculus|homology-level|all)");

    bool ok = true;
    json arr = json::array();
    for (const auto& r : reports) {
        ok = ok && r.ok();
        arr.push_back(check_report_to_json(r));
    }
    json out = {{"ok", ok}, {"seed", o.seed}, {"suites", arr}};
    emit(o, out.dump(2));
    return ok ? kExitOk : kExitMathFailure;
}

int cmd_compute_homology(const CommonOpts& o, const std::string& what, bool full_complex) {
    Algebra a = load_checked_algebra(o);
    if (!validate_algebra(a).ok) throw InputError("algebra fails validation; run `validate`");
    CoefficientPair pair = load_pair(o, a);
    Caps caps{o.max_degree + 2, std::max(o.max_arity, o.max_degree) + 3};
    HochschildInstance inst(pair, caps);
    MatrixCache cache(o.cache_dir, instance_fingerprint(pair, inst.operad().mult(), caps));
    HomologyEngine eng(inst.operad(), inst.module(), cache);

    json out;
    std::string csv;
    if (what == "hh") {
        HomologyReport rep = eng.homology(o.max_degree, !full_complex);
        out = homology_report_to_json(rep, "simplicial homology");
        csv = homology_report_to_csv(rep);
    } else if (what == "hcoh") {
        CohomologyReport rep = eng.cohomology(o.max_degree);
        out = homology_report_to_json(rep, "cohomology");
        csv = homology_report_to_csv(rep);
    } else {  // hc
        HomologyReport rep = eng.connes_cyclic_homology(o.max_degree);
        out = homology_report_to_json(rep, "cyclic homology");
        csv = homology_report_to_csv(rep);
    }
    emit(o, o.format == "csv" ? csv : out.dump(2));
    return kExitOk;
}

int cmd_compute_op(const CommonOpts& o, const std::string& opname, const std::string& phi_path,
                   const std::string& psi_path, const std::string& chain_path) {
    Algebra a = load_checked_algebra(o);
    if (!validate_algebra(a).ok) throw InputError("algebra fails validation; run `validate`");
    CoefficientPair pair = load_pair(o, a);
    Caps caps{o.max_degree + 4, std::max(o.max_arity, 4) + 4};
    HochschildInstance inst(pair, caps);
    Calculus calc(inst.operad(), inst.module());

    auto need = [&](const std::string& path, const char* what) {
        if (path.empty()) throw InputError(std::string("operator ") + opname + " needs " + what);
    };
    json out;
    if (opname == "cup" || opname == "bracket") {
        need(phi_path, "--phi");
        need(psi_path, "--psi");
        Cochain phi = load_cochain(pair, phi_path), psi = load_cochain(pair, psi_path);
        Cochain r = opname == "cup" ? cup(inst.operad(), phi, psi)
                                    : bracket(inst.operad(), phi, psi);
        out = cochain_to_json(r);
    } else if (opname == "delta") {
        need(phi_path, "--phi");
        out = cochain_to_json(coboundary(inst.operad(), load_cochain(pair, phi_path)));
    } else if (opname == "cap" || opname == "lie" || opname == "S") {
        need(phi_path, "--phi");
        need(chain_path, "--chain");
        Cochain phi = load_cochain(pair, phi_path);
        Chain x = load_chain(pair, chain_path);
        Chain r = opname == "cap" ? calc.cap(phi, x)
                  : opname == "lie" ? calc.lie(phi, x)
                                    : calc.cyclic_correction(phi, x);
        out = chain_to_json(r);
    } else if (opname == "b" || opname == "B" || opname == "t") {
        need(chain_path, "--chain");
        Chain x = load_chain(pair, chain_path);
        Chain r = opname == "b" ? calc.boundary(x)
                  : opname == "B" ? calc.connes_b(x)
                                  : cyclic_t(inst.module(), x);
        out = chain_to_json(r);
    } else {
        throw InputError("unknown operator: " + opname +
                         " (expected cup|cap|lie|bracket|delta|b|B|t|S)");
    }
    emit(o, out.dump(2));
    return kExitOk;
}

int cmd_poisson(const CommonOpts& o, const std::string& action, int search_range,
                std::size_t search_limit) {
    Algebra a = load_checked_algebra(o);
    if (!validate_algebra(a).ok) throw InputError("algebra fails validation; run `validate`");
    CoefficientPair pair = load_pair(o, a);
    Caps caps{o.max_degree + 2, std::max(o.max_arity, o.max_degree) + 3};
    HochschildInstance base(pair, caps);

    if (action == "search") {
        auto found = poisson_search(base, search_range, search_limit);
        json arr = json::array();
        for (const auto& pi : found) arr.push_back(cochain_to_json(pi));
        emit(o, json{{"count", found.size()}, {"structures", arr}}.dump(2));
        return kExitOk;
    }

    if (o.pi_path.empty()) throw InputError("poisson commands need --pi");
    Cochain pi = load_cochain(pair, o.pi_path);
    PoissonValidation pv = validate_poisson(base, pi);
    if (action == "validate") {
        json out = validation_to_json(pv.report);
        out["hochschild_cocycle"] = pv.hochschild_cocycle;
        emit(o, out.dump(2));
        return pv.report.ok ? kExitOk : kExitMathFailure;
    }
    if (!pv.report.ok) throw InputError("invalid Poisson structure; run `poisson validate`");
    HochschildInstance pinst(pair, caps, pi);
    MatrixCache cache(o.cache_dir, instance_fingerprint(pair, pi, caps));
    HomologyEngine eng(pinst.operad(), pinst.module(), cache);

    if (action == "hh") {
        HomologyReport rep = eng.homology(o.max_degree, true);
        emit(o, o.format == "csv" ? homology_report_to_csv(rep)
                                  : homology_report_to_json(rep, "poisson homology").dump(2));
        return kExitOk;
    }
    if (action == "hcoh") {
        CohomologyReport rep = eng.cohomology(o.max_degree);
        emit(o, o.format == "csv" ? homology_report_to_csv(rep)
                                  : homology_report_to_json(rep, "poisson cohomology").dump(2));
        return kExitOk;
    }
    if (action == "check") {
        CheckReport rep;
        rep.suite = "poisson";
        Calculus pcalc(pinst.operad(), pinst.module());
        const CompModule& pm = pinst.module();
        for (int n = 0; n <= o.max_degree; ++n)
            for (long k = 0; k < pm.dim(n); ++k) {
                Chain x = pm.basis_element(n, k);
                const std::string w = "degree " + std::to_string(n);
                rep.record("b_pi(b_pi(x)) = 0", pcalc.boundary(pcalc.boundary(x)).is_zero(), w);
                rep.record("b_pi agrees with the direct face formula",
                           pcalc.boundary(x) == poisson_boundary_display(pair, pi, x), w);
                rep.record("b_pi = -L_pi in the pi-operad", holds_poisson_homotopy(pinst, x), w);
                rep.record("cap_pi agrees with the direct formula",
                           pcalc.cap(pinst.operad().id_element(), x) ==
                               poisson_cap_display(pair, pi, pinst.operad().id_element(), x),
                           w);
            }
        Rng rng(o.seed);
        for (int t = 0; t < o.trials; ++t) {
            int p = static_cast<int>(rng.pick(3));
            int q = static_cast<int>(rng.pick(3));
            Cochain phi = random_cochain(rng, pinst.operad(), p);
            Cochain psi = random_cochain(rng, pinst.operad(), q);
            const std::string w = "arities " + std::to_string(p) + "," + std::to_string(q);
            rep.record("delta_pi agrees with the direct coboundary formula",
                       coboundary(pinst.operad(), phi) ==
                           poisson_coboundary_display(pair, pi, phi),
                       w);
            rep.record("delta_pi(delta_pi(phi)) = 0",
                       coboundary(pinst.operad(), coboundary(pinst.operad(), phi)).is_zero(), w);
            rep.record("cup_pi agrees with the direct formula",
                       cup(pinst.operad(), phi, psi) == poisson_cup_display(pair, pi, phi, psi),
                       w);
            Chain x = random_chain(rng, pm, static_cast<int>(rng.pick(o.max_degree + 1)));
            rep.record("cap_pi agrees with the direct formula",
                       pcalc.cap(phi, x) == poisson_cap_display(pair, pi, phi, x), w);
        }
        // reduction to the base multiplication: the instance built on mu
        // itself must reproduce b and delta
        Calculus bcalc(base.operad(), base.module());
        HochschildInstance mu_inst(pair, caps, base.operad().mult());
        Calculus mcalc(mu_inst.operad(), mu_inst.module());
        Rng rng2(o.seed + 1);
        for (int t = 0; t < std::max(o.trials, 5); ++t) {
            int n = static_cast<int>(rng2.pick(o.max_degree + 1));
            Chain x = random_chain(rng2, base.module(), n);
            rep.record("b with pi = mu equals b", mcalc.boundary(x) == bcalc.boundary(x),
                       "degree " + std::to_string(n));
            Cochain phi = random_cochain(rng2, base.operad(), static_cast<int>(rng2.pick(3)));
            rep.record("delta with pi = mu equals delta",
                       coboundary(mu_inst.operad(), phi) == coboundary(base.operad(), phi),
                       "cochain");
        }
        bool ok = rep.ok();
        json out = {{"ok", ok},
                    {"hochschild_cocycle", pv.hochschild_cocycle},
                    {"suites", json::array({check_report_to_json(rep)})}};
        emit(o, out.dump(2));
        return ok ? kExitOk : kExitMathFailure;
    }
    throw InputError("unknown poisson action: " + action);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact operadic calculus on Hochschild chains: validation, identity suites, "
                 "homology"};
    app.require_subcommand(1);

    CommonOpts vo, co, ho, oo, po;
    std::string suite = "all";
    std::string compute_what;
    std::string opname, phi_path, psi_path, chain_path;
    bool full_complex = false;
    std::string poisson_action;
    int search_range = 1;
    std::size_t search_limit = 64;

    CLI::App* validate = app.add_subcommand("validate", "validate inputs");
    add_common(validate, vo, true);

    CLI::App* check = app.add_subcommand("check", "run identity-check suites");
    add_common(check, co);
    check->add_option("--suite", suite,
                      "operad|compmodule|simplicial|calculus|homology-level|all");
    check->add_option("--sweep-arity", co.sweep_arity, "arity bound for the operad axiom sweep");
    check->add_option("--mutate", co.mutate, "test hook: flip-sign:<op>[:<term>]");

    CLI::App* compute = app.add_subcommand("compute", "compute homology tables or operators");
    compute->require_subcommand(1);
    CLI::App* hh = compute->add_subcommand("hh", "simplicial homology dimensions");
    add_common(hh, ho);
    hh->add_flag("--full", full_complex, "use the full (unnormalized) complex");
    CLI::App* hcoh = compute->add_subcommand("hcoh", "cohomology dimensions");
    add_common(hcoh, ho);
    CLI::App* hc = compute->add_subcommand("hc", "cyclic homology dimensions");
    add_common(hc, ho);
    CLI::App* opc = compute->add_subcommand("op", "evaluate one operator");
    add_common(opc, oo);
    opc->add_option("name", opname, "cup|cap|lie|bracket|delta|b|B|t|S")->required();
    opc->add_option("--phi", phi_path, "cochain file");
    opc->add_option("--psi", psi_path, "second cochain file");
    opc->add_option("--chain", chain_path, "chain file");

    CLI::App* poisson = app.add_subcommand("poisson", "Poisson-structure commands");
    poisson->require_subcommand(1);
    for (const char* act : {"validate", "hh", "hcoh", "check", "search"}) {
        CLI::App* sub = poisson->add_subcommand(act, "");
        add_common(sub, po, true);
        if (std::string(act) == "search") {
            sub->add_option("--range", search_range, "coefficient range for the search");
            sub->add_option("--limit", search_limit, "maximum number of reported structures");
        }
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(vo);
        if (check->parsed()) return cmd_check(co, suite);
        if (compute->parsed()) {
            if (hh->parsed()) return cmd_compute_homology(ho, "hh", full_complex);
            if (hcoh->parsed()) return cmd_compute_homology(ho, "hcoh", false);
            if (hc->parsed()) return cmd_compute_homology(ho, "hc", false);
            if (opc->parsed()) return cmd_compute_op(oo, opname, phi_path, psi_path, chain_path);
        }
        if (poisson->parsed()) {
            for (auto* sub : poisson->get_subcommands())
                return cmd_poisson(po, sub->get_name(), search_range, search_limit);
        }
        std::cerr << "no subcommand\n";
        return kExitInputError;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMathFailure;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return kExitInputError;
    }
}
