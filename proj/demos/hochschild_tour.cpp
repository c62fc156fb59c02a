// A short tour: build the dual numbers, sweep the structural axioms, apply a
// few operators, and print the homology table.

#include <iostream>

#include "opcalc/opcalc.hpp"

using namespace opcalc;

int main() {
    Algebra d;
    d.name = "dual_numbers";
    d.field = FieldSpec::rationals();
    d.dim = 2;
    d.basis_names = {"1", "x"};
    d.unit_index = 0;
    d.sc = {{unit_vec(d.field, 2, 0), unit_vec(d.field, 2, 1)},
            {unit_vec(d.field, 2, 1), zero_vec(d.field, 2)}};

    std::cout << "validate: " << (validate_algebra(d).ok ? "ok" : "FAILED") << "\n";

    HochschildInstance inst(default_pair(d), Caps{8, 8});
    const Operad& o = inst.operad();
    const CompModule& m = inst.module();

    std::cout << "operad axioms: " << (check_operad_axioms(o, 2).ok ? "ok" : "FAILED") << "\n";
    std::cout << "module axioms: "
              << (check_comp_module_axioms(o, m, 2, 2, 3).ok ? "ok" : "FAILED") << "\n";

    Calculus calc(o, m);
    Cochain euler = Cochain::basis(1, {1}, 1, d.field, 2);  // x -> x, 1 -> 0
    Chain c = Chain::basis(1, {0, 1}, d.field);          // the tensor (1, x)
    Chain lie_c = calc.lie(euler, c);
    std::cout << "Lie derivative along the Euler derivation fixes (1,x): "
              << (lie_c == c ? "yes" : "no") << "\n";

    HomologyEngine eng(o, m);
    HomologyReport hh = eng.homology(4);
    std::cout << "simplicial homology dims:";
    for (long v : hh.dims()) std::cout << " " << v;
    std::cout << "\ncyclic homology dims:";
    for (long v : eng.connes_cyclic_homology(4).dims()) std::cout << " " << v;
    std::cout << "\n";
    return 0;
}
