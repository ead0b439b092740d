/*
 * Exact rational arithmetic for prymbn.
 *
 * Every coefficient in this project is a ratio of factorials and small
 * integers; nothing here may ever round. Rational wraps GMP's mpq_class
 * and maintains the canonical-form invariant: lowest terms, denominator
 * strictly positive. Equality is therefore plain value equality.
 */
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace prymbn {

// Arbitrary-precision integer, used for tableau counts and factorials.
using Int = mpz_class;

inline Int int_factorial(unsigned long n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

// 2^e for e >= 0.
inline Int int_pow2(unsigned long e) {
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, e);
    return p;
}

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}          // NOLINT: implicit by design
    Rational(const Int& n) : v_(n) {}    // NOLINT
    Rational(const Int& num, const Int& den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}

    static Rational factorial(unsigned long n) { return Rational(int_factorial(n)); }

    // 2^e, e of either sign.
    static Rational pow2(long e) {
        if (e >= 0) return Rational(int_pow2(static_cast<unsigned long>(e)));
        return Rational(Int(1), int_pow2(static_cast<unsigned long>(-e)));
    }

    Int numerator() const { return v_.get_num(); }
    Int denominator() const { return v_.get_den(); }
    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // Exact integer value; refuses non-integers.
    Int to_integer() const {
        if (!is_integer()) throw std::logic_error("Rational: " + str() + " is not an integer");
        return v_.get_num();
    }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.v_ == 0) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    // "p/q", or just "p" when the denominator is 1. This is also the wire
    // encoding used in all JSON output.
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    static Rational parse(std::string_view s) {
        if (s.empty()) throw std::invalid_argument("Rational: empty string");
        try {
            mpq_class v(std::string(s), 10);
            if (v.get_den() == 0) throw std::invalid_argument("zero denominator");
            v.canonicalize();
            return Rational(std::move(v));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("Rational: cannot parse \"" + std::string(s) + "\"");
        }
    }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}

    mpq_class v_;  // always canonical
};

}  // namespace prymbn
