#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

#include "sapp/errors.hpp"

namespace sapp {

// Exact rational scalar. mpq_class canonicalizes after every operation,
// so equality is structural.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long p, long q);
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    static Rational parse(const std::string& s);
    static constexpr const char* field_name() { return "q"; }

    std::string str() const;
    bool is_zero() const { return sgn(v_) == 0; }
    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class v_;
};

// Prime field F_p for small p.
template <unsigned P>
class Fp {
    static_assert(P == 2 || P == 3 || P == 5 || P == 7, "small primes only");

public:
    constexpr Fp() : v_(0) {}
    constexpr Fp(long n) : v_(static_cast<std::uint8_t>(((n % long(P)) + long(P)) % long(P))) {}

    static Fp parse(const std::string& s);
    static constexpr const char* field_name() {
        if constexpr (P == 2) return "f2";
        else if constexpr (P == 3) return "f3";
        else if constexpr (P == 5) return "f5";
        else return "f7";
    }
    static constexpr unsigned modulus() { return P; }

    std::string str() const { return std::to_string(v_); }
    constexpr bool is_zero() const { return v_ == 0; }
    constexpr unsigned value() const { return v_; }

    constexpr Fp operator-() const { return Fp(long(P) - long(v_)); }
    constexpr Fp& operator+=(Fp o) { v_ = static_cast<std::uint8_t>((v_ + o.v_) % P); return *this; }
    constexpr Fp& operator-=(Fp o) { v_ = static_cast<std::uint8_t>((v_ + P - o.v_) % P); return *this; }
    constexpr Fp& operator*=(Fp o) { v_ = static_cast<std::uint8_t>((v_ * o.v_) % P); return *this; }
    Fp& operator/=(Fp o) {
        if (o.v_ == 0) throw std::domain_error("division by zero in F_p");
        return *this *= o.inverse();
    }
    constexpr Fp inverse() const {
        unsigned r = 1;
        for (unsigned e = 0; e < P - 2; ++e) r = (r * v_) % P;
        Fp out;
        out.v_ = static_cast<std::uint8_t>(r);
        return out;
    }

    friend constexpr Fp operator+(Fp a, Fp b) { return a += b; }
    friend constexpr Fp operator-(Fp a, Fp b) { return a -= b; }
    friend constexpr Fp operator*(Fp a, Fp b) { return a *= b; }
    friend Fp operator/(Fp a, Fp b) { return a /= b; }
    friend constexpr bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
    friend constexpr bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }
    friend constexpr bool operator<(Fp a, Fp b) { return a.v_ < b.v_; }
    friend std::ostream& operator<<(std::ostream& os, Fp a) { return os << a.str(); }

private:
    std::uint8_t v_;
};

using F2 = Fp<2>;
using F3 = Fp<3>;
using F5 = Fp<5>;

template <unsigned P>
Fp<P> Fp<P>::parse(const std::string& s) {
    Rational r = Rational::parse(s);
    long num = mpz_class(r.num() % P).get_si();
    long den = mpz_class(r.den() % P).get_si();
    if (den == 0) throw ParseError("denominator of \"" + s + "\" vanishes mod p");
    return Fp(num) / Fp(den);
}

}  // namespace sapp
