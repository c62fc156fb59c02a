#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "opcalc/errors.hpp"

namespace opcalc {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

enum class FieldKind { Rationals, PrimeField };

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

struct FieldSpec {
    FieldKind kind = FieldKind::Rationals;
    std::uint64_t p = 0;

    bool operator==(const FieldSpec&) const = default;

    static FieldSpec rationals() { return {FieldKind::Rationals, 0}; }

    static FieldSpec prime(std::uint64_t p) {
        if (p >= (1ull << 32))
            throw InputError("prime modulus too large (must fit in 32 bits): " + std::to_string(p));
        if (!is_prime_u64(p))
            throw InputError("modulus is not prime: " + std::to_string(p));
        return {FieldKind::PrimeField, p};
    }

    std::string str() const {
        return kind == FieldKind::Rationals ? "Q" : "Fp:" + std::to_string(p);
    }

    // Accepts "Q" or "Fp:<p>".
    static FieldSpec parse(const std::string& s) {
        if (s == "Q") return rationals();
        if (s.rfind("Fp:", 0) == 0) {
            std::uint64_t p = 0;
            try {
                p = std::stoull(s.substr(3));
            } catch (const std::exception&) {
                throw InputError("bad field spec: " + s);
            }
            return prime(p);
        }
        throw InputError("bad field spec: " + s + " (expected \"Q\" or \"Fp:<p>\")");
    }
};

// Exact element of the coefficient field: a reduced fraction over Q, or a
// residue in [0, p) over F_p. Immutable value type.
class Scalar {
  public:
    Scalar() : spec_(FieldSpec::rationals()), q_(0) {}

    static Scalar zero(const FieldSpec& f) { return from_int(f, 0); }
    static Scalar one(const FieldSpec& f) { return from_int(f, 1); }

    static Scalar from_int(const FieldSpec& f, long long v) {
        Scalar s;
        s.spec_ = f;
        if (f.kind == FieldKind::Rationals) {
            s.q_ = v;
        } else {
            long long m = v % static_cast<long long>(f.p);
            if (m < 0) m += static_cast<long long>(f.p);
            s.r_ = static_cast<std::uint64_t>(m);
        }
        return s;
    }

    static Scalar rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw ArithmeticError("zero denominator");
        Scalar s;
        s.spec_ = FieldSpec::rationals();
        s.q_ = BigRational(num, den);
        return s;
    }

    const FieldSpec& field() const { return spec_; }
    bool is_zero() const {
        return spec_.kind == FieldKind::Rationals ? q_ == 0 : r_ == 0;
    }
    bool is_one() const {
        return spec_.kind == FieldKind::Rationals ? q_ == 1 : r_ == 1;
    }

    Scalar operator+(const Scalar& o) const {
        check_same(o);
        Scalar s = *this;
        if (spec_.kind == FieldKind::Rationals)
            s.q_ += o.q_;
        else
            s.r_ = (r_ + o.r_) % spec_.p;
        return s;
    }

    Scalar operator-(const Scalar& o) const {
        check_same(o);
        Scalar s = *this;
        if (spec_.kind == FieldKind::Rationals)
            s.q_ -= o.q_;
        else
            s.r_ = (r_ + spec_.p - o.r_) % spec_.p;
        return s;
    }

    Scalar operator-() const {
        Scalar s = *this;
        if (spec_.kind == FieldKind::Rationals)
            s.q_ = -q_;
        else if (r_ != 0)
            s.r_ = spec_.p - r_;
        return s;
    }

    Scalar operator*(const Scalar& o) const {
        check_same(o);
        Scalar s = *this;
        if (spec_.kind == FieldKind::Rationals) {
            s.q_ *= o.q_;
        } else {
            unsigned __int128 prod = static_cast<unsigned __int128>(r_) * o.r_;
            s.r_ = static_cast<std::uint64_t>(prod % spec_.p);
        }
        return s;
    }

    Scalar inverse() const {
        if (is_zero()) throw ArithmeticError("division by zero");
        Scalar s = *this;
        if (spec_.kind == FieldKind::Rationals) {
            s.q_ = 1 / q_;
        } else {
            s.r_ = pow_mod(r_, spec_.p - 2, spec_.p);  // Fermat
        }
        return s;
    }

    Scalar operator/(const Scalar& o) const {
        check_same(o);
        return *this * o.inverse();
    }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const {
        check_same(o);
        return spec_.kind == FieldKind::Rationals ? q_ == o.q_ : r_ == o.r_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Pivot-selection weight: bit length of |num| + |den| over Q, 1 over F_p.
    std::size_t complexity() const {
        if (spec_.kind != FieldKind::Rationals) return 1;
        using boost::multiprecision::numerator;
        using boost::multiprecision::denominator;
        BigInt n = numerator(q_), d = denominator(q_);
        if (n < 0) n = -n;
        std::size_t bits = 0;
        while (n > 0) { n >>= 1; ++bits; }
        while (d > 1) { d >>= 1; ++bits; }
        return bits;
    }

    const BigRational& rational_value() const {
        if (spec_.kind != FieldKind::Rationals)
            throw UsageError("not a rational scalar");
        return q_;
    }
    std::uint64_t residue() const {
        if (spec_.kind != FieldKind::PrimeField)
            throw UsageError("not a prime-field scalar");
        return r_;
    }

    // Text form: "num/den" or "num" over Q, decimal residue over F_p.
    std::string str() const {
        if (spec_.kind == FieldKind::PrimeField) return std::to_string(r_);
        using boost::multiprecision::numerator;
        using boost::multiprecision::denominator;
        std::string s = numerator(q_).str();
        if (denominator(q_) != 1) s += "/" + denominator(q_).str();
        return s;
    }

    static Scalar parse(const FieldSpec& f, const std::string& text) {
        try {
            if (f.kind == FieldKind::PrimeField) {
                BigInt n(text);
                BigInt m = n % BigInt(f.p);
                if (m < 0) m += f.p;
                Scalar s;
                s.spec_ = f;
                s.r_ = m.convert_to<std::uint64_t>();
                return s;
            }
            auto slash = text.find('/');
            if (slash == std::string::npos) {
                Scalar s;
                s.spec_ = f;
                s.q_ = BigRational(BigInt(text));
                return s;
            }
            BigInt num(text.substr(0, slash));
            BigInt den(text.substr(slash + 1));
            if (den == 0) throw ArithmeticError("zero denominator in \"" + text + "\"");
            Scalar s;
            s.spec_ = f;
            s.q_ = BigRational(num, den);
            return s;
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            throw InputError("cannot parse scalar \"" + text + "\"");
        }
    }

  private:
    void check_same(const Scalar& o) const {
        if (!(spec_ == o.spec_))
            throw UsageError("mixed field operation: " + spec_.str() + " vs " + o.spec_.str());
    }

    static std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
        unsigned __int128 acc = 1, base = b % m;
        while (e) {
            if (e & 1) acc = acc * base % m;
            base = base * base % m;
            e >>= 1;
        }
        return static_cast<std::uint64_t>(acc);
    }

    FieldSpec spec_;
    BigRational q_;
    std::uint64_t r_ = 0;
};

}  // namespace opcalc
