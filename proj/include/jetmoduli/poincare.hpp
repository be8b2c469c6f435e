#pragma once

// Moduli dimensions of connection k-jets and their generating function.
//
// a_0 = dim M_0 and a_k = dim M_k - dim M_{k-1}; the same coefficients have a
// closed bracket form n [n^2 C(n+k-1, n-1) - C(n+k+1, n-1)] for k >= 1 (with
// a -2t correction when n = 2), an operator form applying
// D = n^2 C(n+Q-1, n-1) - C(n+Q+1, n-1), Q = t d/dt, to 1/(1-t), and a
// partial-fraction form with poles only at t = 1:
//
//   p(t) = d(1,n) + 2 d(2,n)(1-t) - n^2
//        + n ( (n^2-1)/(1-t)^n - 2/(1-t)^(n-1) - ... - n/(1-t) ).
//
// Everything here is exact; the three routes are compared coefficientwise in
// the test suites.

#include <jetmoduli/linalg.hpp>
#include <jetmoduli/stabilizer.hpp>

#include <vector>

namespace jetmoduli {

/// Coefficients a_0..a_K of a power series in t, exact rationals.
struct SeriesQ {
    std::vector<Rational> coeffs;

    int truncation() const { return static_cast<int>(coeffs.size()) - 1; }
    Rational at(int k) const { return coeffs[static_cast<size_t>(k)]; }

    friend bool operator==(const SeriesQ& a, const SeriesQ& b) { return a.coeffs == b.coeffs; }
};

/// polynomial_part[d] is the t^d coefficient of the polynomial summand;
/// pole_part[j-1] is the coefficient of 1/(1-t)^j.
struct RationalFunctionT {
    std::vector<Rational> polynomial_part;
    std::vector<Rational> pole_part;

    bool is_zero() const;
};

/// Product of factors (t d/dt + c) acting diagonally on series coefficients:
/// a_k picks up prefactor * prod_i (k + shifts[i]).
struct ThetaOperator {
    Rational prefactor{1};
    std::vector<Rational> shifts;
};

/// Jet-space dimension n^3 C(n+k, n).
Int dim_F(int n, int k);

/// Moduli dimension dim F_k minus the generic orbit dimension.
Int dim_M(int n, int k);

/// Series coefficient a_k, computed by both the difference definition and the
/// closed bracket form; a mismatch is a defect and throws logic_error.
Int a_coeff(int n, int k);

/// a_0..a_K as a series.
SeriesQ a_series(int n, int K);

/// 1/(1-t) through t^K.
SeriesQ geometric_series(int K);

SeriesQ apply_theta(const ThetaOperator& op, const SeriesQ& s);

/// t d/dt.
ThetaOperator theta();

/// C(N + t d/dt - 1, N - 1) = (1/(N-1)!) (Q+1)...(Q+N-1).
ThetaOperator rising_binomial_op(int N);

/// C(N + t d/dt + 1, N - 1) = (1/(N-1)!) (Q+3)...(Q+N+1).
ThetaOperator shifted_binomial_op(int N);

/// The operator route: n (n^2 C(n+Q-1,n-1) - C(n+Q+1,n-1)) applied to
/// 1/(1-t), with the constant and linear corrections.
SeriesQ series_by_operator_route(int n, int K);

/// Partial-fraction form of the series.
RationalFunctionT closed_form(int n);

/// Coefficients 0..K of the expansion; 1/(1-t)^j contributes C(j+k-1, j-1).
SeriesQ expand_rational(const RationalFunctionT& f, int K);

/// Numerator of f over the common denominator (1-t)^N, N = pole_part size.
std::vector<Rational> combined_numerator(const RationalFunctionT& f);

/// Verifies both operator identities through coefficient K:
/// C(N+Q-1, N-1) 1/(1-t) = 1/(1-t)^N and
/// C(N+Q+1, N-1) 1/(1-t) = sum_{k=1..N} k/(1-t)^(N-k+1). Requires N >= 2.
bool operator_lemma_check(int N, int K);

/// Power-basis coefficients (constant first) of the degree n-1 polynomial
/// matching a_coeff(n, k) for k >= 2; validated against k up to 3n and
/// against vanishing n-th finite differences. Requires n >= 2.
std::vector<Rational> fit_polynomial_in_k(int n);

/// Order-n pole coefficient of closed_form(n): n^3 - n, the asymptotic count
/// of functional invariants in n variables. Requires n >= 2.
Int functional_moduli_estimate(int n);

}  // namespace jetmoduli
