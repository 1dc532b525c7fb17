#include "superlie/field.hpp"

namespace superlie {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw Error("division by zero in F_" + std::to_string(p));
    return powmod(a, p - 2, p);  // p prime
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    // deterministic Miller-Rabin for 64-bit inputs
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (p == 2 || p == 3) throw Error("unsupported field: characteristic of F ≠ 2,3 is required");
    if (!is_prime_u64(p)) throw Error("modulus " + std::to_string(p) + " is not prime");
    return Field(p);
}

Scalar Field::zero() const { return from_int(0); }

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long n) const {
    Scalar s;
    if (p_ == 0) {
        s.rat_ = n;
    } else {
        s.mod_ = p_;
        long long r = n % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        s.res_ = static_cast<std::uint64_t>(r);
    }
    return s;
}

Scalar Field::from_rational(const Rational& q) const {
    Scalar s;
    if (p_ == 0) {
        s.rat_ = q;
        return s;
    }
    using boost::multiprecision::cpp_int;
    cpp_int num = numerator(q) % p_;
    cpp_int den = denominator(q) % p_;
    if (num < 0) num += p_;
    std::uint64_t n = num.convert_to<std::uint64_t>();
    std::uint64_t d = den.convert_to<std::uint64_t>();
    s.mod_ = p_;
    s.res_ = mulmod(n, invmod(d, p_), p_);
    return s;
}

Scalar Field::parse(std::string_view text) const {
    auto parse_int = [](std::string_view t) -> Rational {
        if (t.empty()) throw Error("empty scalar");
        std::size_t i = 0;
        bool neg = false;
        if (t[0] == '+' || t[0] == '-') {
            neg = t[0] == '-';
            i = 1;
        }
        if (i == t.size()) throw Error("malformed scalar '" + std::string(t) + "'");
        boost::multiprecision::cpp_int v = 0;
        for (; i < t.size(); ++i) {
            if (t[i] < '0' || t[i] > '9') throw Error("malformed scalar '" + std::string(t) + "'");
            v = v * 10 + (t[i] - '0');
        }
        return Rational(neg ? -v : v);
    };
    auto slash = text.find('/');
    Rational value;
    if (slash == std::string_view::npos) {
        value = parse_int(text);
    } else {
        Rational num = parse_int(text.substr(0, slash));
        Rational den = parse_int(text.substr(slash + 1));
        if (den.is_zero()) throw Error("zero denominator in '" + std::string(text) + "'");
        value = num / den;
    }
    return from_rational(value);
}

std::string Field::describe() const {
    return p_ == 0 ? std::string("rational") : "F_" + std::to_string(p_);
}

Field Scalar::field() const {
    // The modulus was validated when the scalar was made; skip the
    // primality re-check that Field::prime would run.
    return mod_ == 0 ? Field::rationals() : Field(mod_);
}

const Rational& Scalar::rational_value() const {
    if (mod_ != 0) throw Error("scalar is not rational");
    return rat_;
}

std::uint64_t Scalar::residue_value() const {
    if (mod_ == 0) throw Error("scalar is not a residue");
    return res_;
}

void Scalar::check_compatible(const Scalar& o) const {
    if (mod_ != o.mod_) throw Error("scalars from different fields");
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (mod_ == 0)
        s.rat_ = -s.rat_;
    else
        s.res_ = s.res_ == 0 ? 0 : mod_ - s.res_;
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("inverse of zero");
    Scalar s = *this;
    if (mod_ == 0)
        s.rat_ = 1 / s.rat_;
    else
        s.res_ = invmod(s.res_, mod_);
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_compatible(o);
    if (mod_ == 0) {
        rat_ += o.rat_;
    } else {
        res_ += o.res_;
        if (res_ >= mod_) res_ -= mod_;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_compatible(o);
    if (mod_ == 0) {
        rat_ -= o.rat_;
    } else {
        res_ = res_ >= o.res_ ? res_ - o.res_ : res_ + mod_ - o.res_;
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_compatible(o);
    if (mod_ == 0)
        rat_ *= o.rat_;
    else
        res_ = mulmod(res_, o.res_, mod_);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check_compatible(o);
    return *this *= o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
    if (mod_ != o.mod_) return false;
    return mod_ == 0 ? rat_ == o.rat_ : res_ == o.res_;
}

std::string Scalar::str() const {
    if (mod_ != 0) return std::to_string(res_);
    std::string s = numerator(rat_).str();
    if (denominator(rat_) != 1) s += "/" + denominator(rat_).str();
    return s;
}

}  // namespace superlie
