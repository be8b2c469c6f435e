#pragma once

// Multivariate polynomials with rational coefficients, truncated at a fixed
// total-degree bound. Terms above the bound are not representable; products
// discard them. Zero coefficients are never stored, so operator== is
// coefficientwise equality.

#include <jetmoduli/multi_index.hpp>
#include <jetmoduli/rational.hpp>

#include <map>

namespace jetmoduli {

class TruncatedPolynomial {
public:
    using TermMap = std::map<MultiIndex, Rational, GrlexLess>;

    TruncatedPolynomial(int n, int degree_bound);

    static TruncatedPolynomial constant(int n, const Rational& value, int degree_bound);
    /// The monomial c * x^m.
    static TruncatedPolynomial monomial(const MultiIndex& m, const Rational& c, int degree_bound);

    int vars() const { return n_; }
    int degree_bound() const { return bound_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const MultiIndex& m) const;
    /// Overwrites one coefficient; throws if deg(m) exceeds the bound.
    void set_coeff(const MultiIndex& m, const Rational& value);
    void add_coeff(const MultiIndex& m, const Rational& value);

    const TermMap& terms() const { return terms_; }

    /// d/dx^var; the bound drops by one (floor zero).
    TruncatedPolynomial derivative(int var) const;

    /// Same polynomial with terms above new_bound dropped.
    TruncatedPolynomial truncated(int new_bound) const;

    TruncatedPolynomial& operator+=(const TruncatedPolynomial& o);
    TruncatedPolynomial& operator-=(const TruncatedPolynomial& o);
    TruncatedPolynomial& operator*=(const Rational& c);

    friend TruncatedPolynomial operator+(TruncatedPolynomial a, const TruncatedPolynomial& b) {
        a += b;
        return a;
    }
    friend TruncatedPolynomial operator-(TruncatedPolynomial a, const TruncatedPolynomial& b) {
        a -= b;
        return a;
    }
    friend TruncatedPolynomial operator*(const Rational& c, TruncatedPolynomial p) {
        p *= c;
        return p;
    }
    friend TruncatedPolynomial operator-(const TruncatedPolynomial& p) { return Rational(-1) * p; }

    friend bool operator==(const TruncatedPolynomial& a, const TruncatedPolynomial& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const TruncatedPolynomial& a, const TruncatedPolynomial& b) {
        return !(a == b);
    }

private:
    void check_same_vars(const TruncatedPolynomial& o) const;

    int n_;
    int bound_;
    TermMap terms_;
};

/// p * q with every term of degree > bound discarded.
TruncatedPolynomial truncate_product(const TruncatedPolynomial& p, const TruncatedPolynomial& q,
                                     int bound);

}  // namespace jetmoduli
