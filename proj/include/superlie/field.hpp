#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace superlie {

/// Error raised on violated preconditions (ambient mismatch, bad field, ...).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

using Rational = boost::multiprecision::cpp_rational;

bool is_prime_u64(std::uint64_t n);

class Scalar;

/// Coefficient field: the rationals, or F_p for a prime p >= 5.
/// Characteristic 2 and 3 are rejected at construction.
class Field {
public:
    static Field rationals() { return Field(0); }
    static Field prime(std::uint64_t p);

    bool is_rational() const { return p_ == 0; }
    std::uint64_t modulus() const { return p_; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long long n) const;
    Scalar from_rational(const Rational& q) const;

    /// Parses "n", "-n" or "n/d" exactly.  In F_p the value is reduced
    /// mod p (the denominator, if present, must be invertible).
    Scalar parse(std::string_view text) const;

    bool operator==(const Field& other) const { return p_ == other.p_; }
    bool operator!=(const Field& other) const { return p_ != other.p_; }

    std::string describe() const;

private:
    friend class Scalar;
    explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_;  // 0 means Q
};

/// Exact field element; knows whether it lives in Q or in some F_p.
/// Mixing elements of different fields throws.
class Scalar {
public:
    Scalar() = default;  // rational zero

    bool is_rational() const { return mod_ == 0; }
    std::uint64_t modulus() const { return mod_; }
    Field field() const;

    bool is_zero() const { return mod_ == 0 ? rat_.is_zero() : res_ == 0; }
    bool is_one() const { return mod_ == 0 ? rat_ == 1 : res_ == 1; }

    const Rational& rational_value() const;
    std::uint64_t residue_value() const;

    Scalar operator-() const;
    Scalar inverse() const;  // throws on zero

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// "a/b" with positive denominator over Q, canonical residue in F_p.
    std::string str() const;

private:
    friend class Field;
    Rational rat_;
    std::uint64_t res_ = 0;
    std::uint64_t mod_ = 0;  // 0 means rational

    void check_compatible(const Scalar& o) const;
};

}  // namespace superlie
