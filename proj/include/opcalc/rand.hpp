#pragma once

#include <random>

#include "opcalc/algebra.hpp"

namespace opcalc {

// Deterministic generator for trial inputs. Raw engine draws are used
// directly (modulo small ranges) so sequences are identical across platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    long pick(long n) { return static_cast<long>(eng_() % static_cast<std::uint64_t>(n)); }

    // Small scalars: integers in [-3, 3] over Q, uniform residues over F_p.
    Scalar scalar(const FieldSpec& f) {
        if (f.kind == FieldKind::Rationals)
            return Scalar::from_int(f, static_cast<long long>(eng_() % 7) - 3);
        return Scalar::from_int(f, static_cast<long long>(eng_() % f.p));
    }

    Chain chain(const FieldSpec& f, int dim_a, int degree) {
        Chain x(degree);
        MultiIndex key(degree + 1, 0);
        while (true) {
            if (eng_() % 2 == 0) x.add_term(key, scalar(f));
            int s = degree;
            while (s >= 0 && key[s] == dim_a - 1) key[s--] = 0;
            if (s < 0) break;
            ++key[s];
        }
        return x;
    }

    Cochain cochain(const CoefficientPair& pair, int arity) {
        Cochain phi(arity);
        const FieldSpec& f = pair.field();
        MultiIndex key(arity, 0);
        while (true) {
            if (eng_() % 2 == 0) {
                Vec v = zero_vec(f, pair.dim_v());
                for (auto& s : v) s = scalar(f);
                phi.add_value(key, v);
            }
            int s = arity - 1;
            while (s >= 0 && key[s] == pair.dim_a() - 1) key[s--] = 0;
            if (s < 0) break;
            ++key[s];
        }
        return phi;
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace opcalc
