#pragma once

// Exact arbitrary-precision rational scalar for dense Eigen types.
//
// Rational is a thin value wrapper around boost::multiprecision::cpp_rational:
// always gcd-reduced, denominator > 0, canonical zero is 0/1. Wrapping (rather
// than using the boost type directly) keeps the scalar free of template
// constructors that interfere with Eigen's overload resolution, and gives the
// project a single spot for formatting and parsing.

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

namespace jetmoduli {

using Int = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() = default;
    Rational(int v) : v_(v) {}
    Rational(long long v) : v_(v) {}
    Rational(Int num) : v_(std::move(num)) {}
    Rational(const Int& num, const Int& den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_ = boost::multiprecision::cpp_rational(num, den);
    }

    Int numerator() const { return boost::multiprecision::numerator(v_); }
    Int denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_.sign(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend Rational abs(const Rational& a) { return a.v_ < 0 ? -a : a; }

    /// Canonical "p/q" form, denominator always spelled out ("-3/1", "5/2").
    std::string fraction_string() const {
        return numerator().str() + "/" + denominator().str();
    }

    /// Human form: "p" when q = 1, else "p/q".
    std::string str() const {
        return is_integer() ? numerator().str() : fraction_string();
    }

    /// Parses "p", "p/q" or "-p/q"; inverse of fraction_string / str.
    static Rational parse(const std::string& s);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    boost::multiprecision::cpp_rational v_;
};

/// Exact conversion to Int; throws unless denominator is 1.
inline Int to_int(const Rational& r) {
    if (!r.is_integer()) throw std::domain_error("to_int: " + r.str() + " is not an integer");
    return r.numerator();
}

}  // namespace jetmoduli
