#include <jetmoduli/poincare.hpp>

#include <stdexcept>
#include <string>

namespace jetmoduli {

namespace {

void check_nk(int n, int k, const char* who) {
    if (n < 1 || k < 0) throw std::invalid_argument(std::string(who) + ": bad arguments");
}

Int factorial(int m) {
    Int f = 1;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
}

// Power-basis polynomial arithmetic for the short univariate computations.
using Poly = std::vector<Rational>;

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

Rational poly_eval(const Poly& p, const Rational& x) {
    Rational v(0);
    for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

}  // namespace

bool RationalFunctionT::is_zero() const {
    for (const auto& c : polynomial_part)
        if (!c.is_zero()) return false;
    for (const auto& c : pole_part)
        if (!c.is_zero()) return false;
    return true;
}

Int dim_F(int n, int k) {
    check_nk(n, k, "dim_F");
    return Int(n) * n * n * binomial(Int(n + k), Int(n));
}

Int dim_M(int n, int k) {
    check_nk(n, k, "dim_M");
    const Int d = dim_F(n, k) - orbit_dim_formula(n, k);
    if (d < 0) throw std::logic_error("dim_M: negative dimension");
    return d;
}

Int a_coeff(int n, int k) {
    check_nk(n, k, "a_coeff");
    const Int by_difference = (k == 0) ? dim_M(n, 0) : dim_M(n, k) - dim_M(n, k - 1);

    Int by_bracket;
    if (k == 0) {
        by_bracket = Int(n) * n * (n - 3) / 2 + (n == 1 ? 1 : 0) + (n == 2 ? 2 : 0);
    } else {
        by_bracket = Int(n) * (Int(n) * n * binomial(Int(n + k - 1), Int(n - 1)) -
                               binomial(Int(n + k + 1), Int(n - 1)));
        if (n == 2 && k == 1) by_bracket -= 2;
    }

    if (by_difference != by_bracket)
        throw std::logic_error("a_coeff: difference and bracket forms disagree at n=" +
                               std::to_string(n) + ", k=" + std::to_string(k));
    return by_difference;
}

SeriesQ a_series(int n, int K) {
    SeriesQ s;
    s.coeffs.reserve(static_cast<size_t>(K) + 1);
    for (int k = 0; k <= K; ++k) s.coeffs.emplace_back(a_coeff(n, k));
    return s;
}

SeriesQ geometric_series(int K) {
    SeriesQ s;
    s.coeffs.assign(static_cast<size_t>(K) + 1, Rational(1));
    return s;
}

SeriesQ apply_theta(const ThetaOperator& op, const SeriesQ& s) {
    SeriesQ out = s;
    for (size_t k = 0; k < out.coeffs.size(); ++k) {
        Rational factor = op.prefactor;
        for (const auto& c : op.shifts) factor *= (Rational(static_cast<long long>(k)) + c);
        out.coeffs[k] *= factor;
    }
    return out;
}

ThetaOperator theta() { return {Rational(1), {Rational(0)}}; }

ThetaOperator rising_binomial_op(int N) {
    if (N < 1) throw std::invalid_argument("rising_binomial_op: N must be >= 1");
    ThetaOperator op;
    op.prefactor = Rational(Int(1), factorial(N - 1));
    for (int c = 1; c <= N - 1; ++c) op.shifts.emplace_back(c);
    return op;
}

ThetaOperator shifted_binomial_op(int N) {
    if (N < 1) throw std::invalid_argument("shifted_binomial_op: N must be >= 1");
    ThetaOperator op;
    op.prefactor = Rational(Int(1), factorial(N - 1));
    for (int c = 3; c <= N + 1; ++c) op.shifts.emplace_back(c);
    return op;
}

SeriesQ series_by_operator_route(int n, int K) {
    check_nk(n, K, "series_by_operator_route");
    const SeriesQ base = geometric_series(K);
    const SeriesQ s1 = apply_theta(rising_binomial_op(n), base);
    const SeriesQ s2 = apply_theta(shifted_binomial_op(n), base);

    SeriesQ out;
    out.coeffs.resize(static_cast<size_t>(K) + 1, Rational(0));
    for (int k = 0; k <= K; ++k)
        out.coeffs[static_cast<size_t>(k)] =
            Rational(n) * (Rational(Int(n) * n) * s1.at(k) - s2.at(k));
    // The 0th term of the operator expression is n a_0 too many, and the n = 2
    // exceptional value enters the constant and linear coefficients.
    out.coeffs[0] += Rational((n == 1 ? 1 : 0) + (n == 2 ? 2 : 0) - n * n);
    if (K >= 1 && n == 2) out.coeffs[1] -= Rational(2);
    return out;
}

RationalFunctionT closed_form(int n) {
    if (n < 1) throw std::invalid_argument("closed_form: n must be >= 1");
    RationalFunctionT f;
    f.polynomial_part = {Rational((n == 1 ? 1 : 0) + (n == 2 ? 2 : 0) - n * n),
                         Rational(n == 2 ? -2 : 0)};
    trim(f.polynomial_part);
    f.pole_part.assign(static_cast<size_t>(n), Rational(0));
    for (int j = 1; j < n; ++j) f.pole_part[static_cast<size_t>(j - 1)] = Rational(-Int(n) * (n - j + 1));
    f.pole_part[static_cast<size_t>(n - 1)] = Rational(Int(n) * n * n - n);
    return f;
}

SeriesQ expand_rational(const RationalFunctionT& f, int K) {
    SeriesQ s;
    s.coeffs.resize(static_cast<size_t>(K) + 1, Rational(0));
    for (int k = 0; k <= K; ++k) {
        Rational c(0);
        if (static_cast<size_t>(k) < f.polynomial_part.size()) c += f.polynomial_part[static_cast<size_t>(k)];
        for (size_t j = 1; j <= f.pole_part.size(); ++j)
            c += f.pole_part[j - 1] *
                 Rational(binomial(Int(j) + k - 1, Int(j) - 1));
        s.coeffs[static_cast<size_t>(k)] = c;
    }
    return s;
}

std::vector<Rational> combined_numerator(const RationalFunctionT& f) {
    const size_t N = f.pole_part.size();
    const Poly one_minus_t = {Rational(1), Rational(-1)};

    // (1-t)^m for m = 0..N.
    std::vector<Poly> pw(N + 1);
    pw[0] = {Rational(1)};
    for (size_t m = 1; m <= N; ++m) pw[m] = poly_mul(pw[m - 1], one_minus_t);

    Poly num = poly_mul(f.polynomial_part.empty() ? Poly{Rational(0)} : f.polynomial_part, pw[N]);
    num.resize(std::max(num.size(), N + 1), Rational(0));
    for (size_t j = 1; j <= N; ++j) {
        const Poly term = pw[N - j];
        for (size_t d = 0; d < term.size(); ++d) num[d] += f.pole_part[j - 1] * term[d];
    }
    trim(num);
    return num;
}

bool operator_lemma_check(int N, int K) {
    if (N < 2) throw std::invalid_argument("operator_lemma_check: N must be >= 2");
    const SeriesQ base = geometric_series(K);

    // First identity: the rising binomial operator reproduces 1/(1-t)^N.
    const SeriesQ lhs1 = apply_theta(rising_binomial_op(N), base);
    RationalFunctionT pole_n;
    pole_n.pole_part.assign(static_cast<size_t>(N), Rational(0));
    pole_n.pole_part[static_cast<size_t>(N - 1)] = Rational(1);
    if (!(lhs1 == expand_rational(pole_n, K))) return false;

    // Second identity: the shifted operator spreads over all pole orders,
    // the order N-k+1 pole carrying coefficient k.
    const SeriesQ lhs2 = apply_theta(shifted_binomial_op(N), base);
    RationalFunctionT spread;
    spread.pole_part.assign(static_cast<size_t>(N), Rational(0));
    for (int k = 1; k <= N; ++k) spread.pole_part[static_cast<size_t>(N - k)] = Rational(k);
    return lhs2 == expand_rational(spread, K);
}

std::vector<Rational> fit_polynomial_in_k(int n) {
    if (n < 2) throw std::invalid_argument("fit_polynomial_in_k: n must be >= 2");
    const int k_max = 3 * n;

    std::vector<Rational> values;
    for (int k = 2; k <= k_max; ++k) values.emplace_back(a_coeff(n, k));

    // n-th finite differences of a polynomial of degree n-1 vanish; check the
    // whole sampled range before interpolating.
    std::vector<Rational> diffs = values;
    for (int round = 0; round < n; ++round)
        for (size_t i = 0; i + 1 < diffs.size(); ++i) diffs[i] = diffs[i + 1] - diffs[i];
    for (size_t i = 0; i + static_cast<size_t>(n) < values.size(); ++i)
        if (!diffs[i].is_zero())
            throw std::logic_error("fit_polynomial_in_k: finite differences do not vanish");

    // Newton forward form on nodes k = 2..n+1, expanded to the power basis:
    // p(k) = sum_j D^j a(2) C(k-2, j).
    std::vector<Rational> forward = values;
    Poly fit = {forward[0]};
    Poly basis = {Rational(1)};
    for (int j = 1; j < n; ++j) {
        for (size_t i = 0; i + 1 < forward.size(); ++i) forward[i] = forward[i + 1] - forward[i];
        basis = poly_mul(basis, {Rational(-(j + 1)), Rational(1)});  // (k - 2 - (j-1))
        const Rational scale = forward[0] / Rational(factorial(j));
        fit.resize(std::max(fit.size(), basis.size()), Rational(0));
        for (size_t d = 0; d < basis.size(); ++d) fit[d] += scale * basis[d];
    }
    fit.resize(static_cast<size_t>(n), Rational(0));

    for (int k = 2; k <= k_max; ++k)
        if (poly_eval(fit, Rational(k)) != Rational(a_coeff(n, k)))
            throw std::logic_error("fit_polynomial_in_k: interpolant misses a sampled value");
    return fit;
}

Int functional_moduli_estimate(int n) {
    if (n < 2) throw std::invalid_argument("functional_moduli_estimate: n must be >= 2");
    return to_int(closed_form(n).pole_part[static_cast<size_t>(n - 1)]);
}

}  // namespace jetmoduli
