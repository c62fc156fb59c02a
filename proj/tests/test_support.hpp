#pragma once

#include <string>

#include "opcalc/opcalc.hpp"

namespace opcalc::testing {

inline std::string data_path(const std::string& name) {
    return std::string(OPCALC_TEST_DATA) + "/" + name;
}

// Q[x]/(x^2)
inline Algebra dual_numbers(const FieldSpec& f = FieldSpec::rationals()) {
    Algebra a;
    a.name = "dual_numbers";
    a.field = f;
    a.dim = 2;
    a.basis_names = {"1", "x"};
    a.unit_index = 0;
    a.sc = {{unit_vec(f, 2, 0), unit_vec(f, 2, 1)}, {unit_vec(f, 2, 1), zero_vec(f, 2)}};
    return a;
}

// Q[x]/(x^2 - 1)
inline Algebra group_algebra(const FieldSpec& f = FieldSpec::rationals()) {
    Algebra a;
    a.name = "group_algebra_z2";
    a.field = f;
    a.dim = 2;
    a.basis_names = {"1", "x"};
    a.unit_index = 0;
    a.sc = {{unit_vec(f, 2, 0), unit_vec(f, 2, 1)}, {unit_vec(f, 2, 1), unit_vec(f, 2, 0)}};
    return a;
}

// 2x2 matrices over Q, basis {1, e12, e21, e11}
inline Algebra m2q() {
    Algebra a;
    a.name = "m2q";
    a.field = FieldSpec::rationals();
    a.dim = 4;
    a.basis_names = {"1", "e12", "e21", "e11"};
    a.unit_index = 0;
    auto u = [&](int i) { return unit_vec(a.field, 4, i); };
    Vec zero = zero_vec(a.field, 4);
    Vec e22 = u(0);
    e22[3] = -Scalar::one(a.field);
    a.sc.assign(4, std::vector<Vec>(4, zero));
    for (int i = 0; i < 4; ++i) {
        a.sc[0][i] = u(i);
        a.sc[i][0] = u(i);
    }
    a.sc[1][2] = u(3);   // e12 e21 = e11
    a.sc[2][1] = e22;    // e21 e12 = e22
    a.sc[2][3] = u(2);   // e21 e11 = e21
    a.sc[3][1] = u(1);   // e11 e12 = e12
    a.sc[3][3] = u(3);
    return a;
}

inline Algebra rationals_algebra() {
    Algebra a;
    a.name = "rationals";
    a.field = FieldSpec::rationals();
    a.dim = 1;
    a.basis_names = {"1"};
    a.unit_index = 0;
    a.sc = {{unit_vec(a.field, 1, 0)}};
    return a;
}

// The Euler derivation on the dual numbers: 1 -> 0, x -> x.
inline Cochain euler_derivation(const FieldSpec& f = FieldSpec::rationals()) {
    return Cochain::basis(1, {1}, 1, f, 2);
}

// pi' on the dual numbers: the multiplication of Q[x]/(x^2-1).
inline Cochain pi_prime(const FieldSpec& f = FieldSpec::rationals()) {
    Cochain pi(2);
    pi.add_value({0, 0}, unit_vec(f, 2, 0));
    pi.add_value({0, 1}, unit_vec(f, 2, 1));
    pi.add_value({1, 0}, unit_vec(f, 2, 1));
    pi.add_value({1, 1}, unit_vec(f, 2, 0));
    return pi;
}

}  // namespace opcalc::testing
