#pragma once

// Independent oracles used to pin expected homology dimensions. They avoid
// the operadic action machinery entirely: boundaries are written out on
// tensor tuples from the structure constants, and vanishing is certified by
// explicit contracting homotopies.

#include <vector>

#include "opcalc/matrix.hpp"
#include "opcalc/opcalc.hpp"

namespace opcalc::oracle {

// Hochschild boundary on basis tuples, straight from the textbook formula.
inline Matrix textbook_boundary(const Algebra& a, int n) {
    const int d = a.dim;
    long dim_n = 1, dim_m = 1;
    for (int i = 0; i <= n; ++i) dim_n *= d;
    for (int i = 0; i < n; ++i) dim_m *= d;
    auto decode = [&](long code, int len) {
        MultiIndex key(len, 0);
        for (int s = len - 1; s >= 0; --s) {
            key[s] = static_cast<int>(code % d);
            code /= d;
        }
        return key;
    };
    auto encode = [&](const MultiIndex& key) {
        long code = 0;
        for (int v : key) code = code * d + v;
        return code;
    };
    Matrix mat(a.field, static_cast<int>(dim_m), static_cast<int>(dim_n));
    for (long col = 0; col < dim_n; ++col) {
        MultiIndex key = decode(col, n + 1);
        for (int i = 0; i <= n; ++i) {
            // face i multiplies slots i and i+1 (wrapping at the end)
            Vec prod = i < n ? a.basis_product(key[i], key[i + 1])
                             : a.basis_product(key[n], key[0]);
            MultiIndex rest;
            if (i < n) {
                rest.insert(rest.end(), key.begin(), key.begin() + i);
                rest.insert(rest.end(), key.begin() + i + 2, key.end());
            } else {
                rest.insert(rest.end(), key.begin() + 1, key.end() - 1);
            }
            for (int mc = 0; mc < d; ++mc) {
                if (prod[mc].is_zero()) continue;
                MultiIndex target;
                if (i < n) {
                    target.insert(target.end(), key.begin(), key.begin() + i);
                    target.push_back(mc);
                    target.insert(target.end(), key.begin() + i + 2, key.end());
                } else {
                    target.push_back(mc);
                    target.insert(target.end(), key.begin() + 1, key.end() - 1);
                }
                Scalar c = odd(i) ? -prod[mc] : prod[mc];
                mat.at(static_cast<int>(encode(target)), static_cast<int>(col)) += c;
            }
        }
    }
    return mat;
}

// dim A/[A,A]: commutator span removed from degree zero.
inline long hh0(const Algebra& a) {
    std::vector<std::vector<Scalar>> comms;
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            Vec c = a.basis_product(i, j);
            const Vec& rev = a.basis_product(j, i);
            Vec diff = zero_vec(a.field, a.dim);
            for (int s = 0; s < a.dim; ++s) diff[s] = c[s] - rev[s];
            if (!is_zero_vec(diff)) comms.push_back(diff);
        }
    if (comms.empty()) return a.dim;
    Matrix m = Matrix::from_columns(a.field, a.dim, comms);
    return a.dim - m.rank();
}

// Separability certificate: tensors (u_i, v_i) with Σ u_i v_i = 1 and
// Σ a u_i ⊗ v_i = Σ u_i ⊗ v_i a. The induced homotopy
//   h(a_0,...,a_n) = Σ_i (a_0 u_i, v_i, a_1, ..., a_n)
// satisfies b h + h b = id in degrees >= 1, which forces the homology there
// to vanish. Returns the dimensions (hh0, 0, ..., 0) after verifying both
// the certificate and the homotopy identity as exact matrices.
struct SeparabilityOracle {
    std::vector<std::pair<Vec, Vec>> idempotent;

    std::vector<long> homology_dims(const Algebra& a, int max_degree) const {
        const int d = a.dim;
        // certificate checks
        Vec total = zero_vec(a.field, d);
        for (const auto& [u, v] : idempotent) add_scaled(total, Scalar::one(a.field), a.multiply(u, v));
        if (!vec_eq(total, unit_vec(a.field, d, 0)))
            throw Error("separability oracle: mu(e) != 1");
        for (int bi = 0; bi < d; ++bi) {
            // Σ (b u_i) ⊗ v_i - Σ u_i ⊗ (v_i b) = 0 in A ⊗ A
            std::vector<Scalar> diff(static_cast<std::size_t>(d) * d, Scalar::zero(a.field));
            for (const auto& [u, v] : idempotent) {
                Vec bu = a.multiply(unit_vec(a.field, d, bi), u);
                Vec vb = a.multiply(v, unit_vec(a.field, d, bi));
                for (int s = 0; s < d; ++s)
                    for (int t = 0; t < d; ++t) {
                        diff[static_cast<std::size_t>(s) * d + t] += bu[s] * v[t];
                        diff[static_cast<std::size_t>(s) * d + t] -= u[s] * vb[t];
                    }
            }
            for (const auto& s : diff)
                if (!s.is_zero()) throw Error("separability oracle: e is not a bimodule element");
        }

        std::vector<long> dims;
        dims.push_back(hh0(a));
        for (int n = 1; n <= max_degree; ++n) {
            long dim_n = 1;
            for (int i = 0; i <= n; ++i) dim_n *= d;
            // h: C_n -> C_{n+1} on basis tuples
            auto decode = [&](long code, int len) {
                MultiIndex key(len, 0);
                for (int s = len - 1; s >= 0; --s) {
                    key[s] = static_cast<int>(code % d);
                    code /= d;
                }
                return key;
            };
            auto encode = [&](const MultiIndex& key) {
                long code = 0;
                for (int x : key) code = code * d + x;
                return code;
            };
            auto homotopy = [&](int deg) {
                long src = 1, dst = 1;
                for (int i = 0; i <= deg; ++i) src *= d;
                dst = src * d;
                Matrix h(a.field, static_cast<int>(dst), static_cast<int>(src));
                for (long col = 0; col < src; ++col) {
                    MultiIndex key = decode(col, deg + 1);
                    for (const auto& [u, v] : idempotent) {
                        Vec head = a.multiply(unit_vec(a.field, d, key[0]), u);
                        for (int hcidx = 0; hcidx < d; ++hcidx) {
                            if (head[hcidx].is_zero()) continue;
                            for (int vc = 0; vc < d; ++vc) {
                                if (v[vc].is_zero()) continue;
                                MultiIndex target;
                                target.push_back(hcidx);
                                target.push_back(vc);
                                target.insert(target.end(), key.begin() + 1, key.end());
                                h.at(static_cast<int>(encode(target)), static_cast<int>(col)) +=
                                    head[hcidx] * v[vc];
                            }
                        }
                    }
                }
                return h;
            };
            Matrix bh = textbook_boundary(a, n + 1).times(homotopy(n));
            Matrix hb = homotopy(n - 1).times(textbook_boundary(a, n));
            Matrix id = Matrix::identity(a.field, static_cast<int>(dim_n));
            for (int r = 0; r < id.rows(); ++r)
                for (int c = 0; c < id.cols(); ++c)
                    if (!(bh.at(r, c) + hb.at(r, c) == id.at(r, c)))
                        throw Error("separability oracle: bh + hb != id in degree " +
                                    std::to_string(n));
            dims.push_back(0);
        }
        return dims;
    }
};

inline SeparabilityOracle m2q_separability(const Algebra& a) {
    // e = e11 ⊗ e11 + e21 ⊗ e12 in the basis {1, e12, e21, e11}
    SeparabilityOracle o;
    o.idempotent = {{unit_vec(a.field, 4, 3), unit_vec(a.field, 4, 3)},
                    {unit_vec(a.field, 4, 2), unit_vec(a.field, 4, 1)}};
    return o;
}

inline SeparabilityOracle group_algebra_separability(const Algebra& a) {
    // e = (1 ⊗ 1 + x ⊗ x) / 2
    SeparabilityOracle o;
    Scalar half = Scalar::one(a.field) / Scalar::from_int(a.field, 2);
    Vec h0 = zero_vec(a.field, 2), h1 = zero_vec(a.field, 2);
    h0[0] = half;
    h1[1] = half;
    o.idempotent = {{h0, unit_vec(a.field, 2, 0)}, {h1, unit_vec(a.field, 2, 1)}};
    return o;
}

// The 2-periodic free bimodule resolution of the dual numbers: after
// tensoring down, the complex alternates the zero map and multiplication by
// 2x on the algebra itself.
inline std::vector<long> dual_numbers_resolution_dims(const Algebra& a, int max_degree) {
    const FieldSpec& f = a.field;
    Matrix zero(f, 2, 2);
    Matrix two_x(f, 2, 2);
    two_x.at(1, 0) = Scalar::from_int(f, 2);  // 2x * 1 = 2x, 2x * x = 0
    auto map_at = [&](int k) { return (k % 2 == 0 && k >= 2) ? two_x : zero; };
    std::vector<long> dims;
    for (int n = 0; n <= max_degree; ++n) {
        Matrix mn = map_at(n), mn1 = map_at(n + 1);
        long cycles = n == 0 ? 2 : static_cast<long>(mn.kernel_basis().size());
        dims.push_back(cycles - mn1.rank());
    }
    return dims;
}

// Cyclic homology of the ground field: the quotient complex has a copy of k
// in each even degree and zero differentials.
inline std::vector<long> ground_field_cyclic_dims(int max_degree) {
    std::vector<long> dims;
    for (int n = 0; n <= max_degree; ++n) dims.push_back(n % 2 == 0 ? 1 : 0);
    return dims;
}

}  // namespace opcalc::oracle
