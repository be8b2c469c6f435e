#include <jetmoduli/normal_coords.hpp>

#include <map>
#include <stdexcept>

namespace jetmoduli {

namespace {

// Lookup table from monomial to its position in the canonical degree-d list.
std::map<MultiIndex, int, GrlexLess> index_of(const std::vector<MultiIndex>& monomials) {
    std::map<MultiIndex, int, GrlexLess> pos;
    for (size_t i = 0; i < monomials.size(); ++i) pos.emplace(monomials[i], static_cast<int>(i));
    return pos;
}

// Shared assembly for the two conventions. Rows: (i, monomial of degree
// r + 2); slots: (i, j, k, monomial of degree r). with_multiplicity selects
// derivative-slot rows (each ordered pair of positions counted) versus
// monomial-coefficient rows (each valid ordered (j, k) counted once).
QMatrix assemble_constraints(int n, int r, bool with_multiplicity) {
    const auto alpha = multi_indices_of_degree(n, r);
    const auto mu = multi_indices_of_degree(n, r + 2);
    const auto alpha_pos = index_of(alpha);
    const int a_count = static_cast<int>(alpha.size());
    const Eigen::Index rows = static_cast<Eigen::Index>(n) * static_cast<Eigen::Index>(mu.size());
    const Eigen::Index cols =
        static_cast<Eigen::Index>(n) * n * n * static_cast<Eigen::Index>(a_count);
    QMatrix m = QMatrix::Zero(rows, cols);

    for (int i = 0; i < n; ++i)
        for (size_t mi = 0; mi < mu.size(); ++mi) {
            const Eigen::Index row = static_cast<Eigen::Index>(i) * static_cast<Eigen::Index>(mu.size()) +
                                     static_cast<Eigen::Index>(mi);
            const MultiIndex& exps = mu[mi];
            for (int j = 0; j < n; ++j) {
                if (exps[j] == 0) continue;
                const MultiIndex less_j = exps.minus(j);
                for (int k = 0; k < n; ++k) {
                    if (less_j[k] == 0) continue;
                    const int mult = with_multiplicity ? exps[j] * (j == k ? exps[j] - 1 : exps[k]) : 1;
                    if (mult == 0) continue;
                    const int a = alpha_pos.at(less_j.minus(k));
                    const Eigen::Index col =
                        ((static_cast<Eigen::Index>(i) * n + j) * n + k) * a_count + a;
                    m(row, col) += Rational(mult);
                }
            }
        }
    return m;
}

}  // namespace

NormalConstraintSystem normal_constraint_matrix(int n, int r) {
    if (n < 1 || r < 0) throw std::invalid_argument("normal_constraint_matrix: bad arguments");
    return {n, r, assemble_constraints(n, r, true)};
}

NormalConstraintSystem normal_monomial_constraint_matrix(int n, int r) {
    if (n < 1 || r < 0) throw std::invalid_argument("normal_monomial_constraint_matrix: bad arguments");
    return {n, r, assemble_constraints(n, r, false)};
}

bool is_normal_jet(const ConnectionJet& g) {
    const int n = g.vars();
    const int bound = g.order() + 2;
    for (int i = 0; i < n; ++i) {
        TruncatedPolynomial q(n, bound);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                MultiIndex xjxk(n);
                ++xjxk[j];
                ++xjxk[k];
                q += truncate_product(g.component(i, j, k),
                                      TruncatedPolynomial::monomial(xjxk, Rational(1), bound), bound);
            }
        if (!q.is_zero()) return false;
    }
    return true;
}

ConnectionJet sample_normal_jet(int n, int k, std::uint64_t seed, int coeff_range) {
    if (coeff_range < 1) throw std::invalid_argument("sample_normal_jet: coeff_range must be >= 1");
    ConnectionJet g(n, k);
    DeterministicRng rng(seed);
    for (int r = 0; r <= k; ++r) {
        const auto alpha = multi_indices_of_degree(n, r);
        const int a_count = static_cast<int>(alpha.size());
        const auto kernel = kernel_basis(normal_monomial_constraint_matrix(n, r).matrix);
        QVector combo = QVector::Zero(static_cast<Eigen::Index>(n) * n * n * a_count);
        for (const auto& basis_vec : kernel) {
            // Clear denominators so sampled jets keep integer coefficients.
            Int scale = 1;
            for (Eigen::Index t = 0; t < basis_vec.size(); ++t) {
                const Int den = basis_vec(t).denominator();
                scale = scale / boost::multiprecision::gcd(scale, den) * den;
            }
            const Rational weight = Rational(rng.uniform(-coeff_range, coeff_range)) * Rational(scale);
            if (weight.is_zero()) continue;
            combo += weight * basis_vec;
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int kk = 0; kk < n; ++kk)
                    for (int a = 0; a < a_count; ++a) {
                        const Eigen::Index slot = ((static_cast<Eigen::Index>(i) * n + j) * n + kk) * a_count + a;
                        if (!combo(slot).is_zero()) g.component(i, j, kk).set_coeff(alpha[static_cast<size_t>(a)], combo(slot));
                    }
    }
    return g;
}

ConnectionJet witness_gamma(int n) {
    if (n < 2) throw std::invalid_argument("witness_gamma: defined for n >= 2");
    ConnectionJet g(n, 0);
    const MultiIndex origin(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            const Rational v(a < b ? 1 : -1);
            g.component(a, a, b).set_coeff(origin, v);
            g.component(a, b, a).set_coeff(origin, -v);
        }
    return g;
}

ConnectionJet witness_n2_first_order() {
    const int n = 2;
    ConnectionJet g(n, 1);
    MultiIndex x1(n), x2(n);
    ++x1[0];
    ++x2[1];
    const MultiIndex xs[2] = {x1, x2};
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            g.component(i, 0, 1).set_coeff(xs[j], Rational(2));   // G^i_{12,j}
            g.component(i, 1, 0).set_coeff(xs[j], Rational(-1));  // G^i_{21,j}
        }
        g.component(i, 1, 1).set_coeff(xs[0], Rational(-1));  // G^i_{22,1}
        g.component(i, 0, 0).set_coeff(xs[1], Rational(-1));  // G^i_{11,2}
    }
    return g;
}

StabilizerSystem0 stabilizer_system_0jet(const ConnectionJet& g) {
    if (g.order() != 0) throw std::invalid_argument("stabilizer_system_0jet: expects an order-0 jet");
    if (!is_normal_jet(g))
        throw std::invalid_argument("stabilizer_system_0jet: jet is not in normal coordinates");
    const int n = g.vars();
    const MultiIndex origin(n);
    const auto gamma = [&](int l, int i, int j) { return g.component(l, i, j).coeff(origin); };
    const auto col = [n](int l, int k) { return static_cast<Eigen::Index>(l) * n + k; };

    const Eigen::Index rows = static_cast<Eigen::Index>(n) * (static_cast<Eigen::Index>(n) * (n - 1) / 2);
    QMatrix m = QMatrix::Zero(rows, static_cast<Eigen::Index>(n) * n);
    Eigen::Index row = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int l = 0; l < n; ++l, ++row)
                for (int k = 0; k < n; ++k) {
                    m(row, col(l, k)) += -gamma(k, i, j);
                    m(row, col(k, i)) += gamma(l, k, j);
                    m(row, col(k, j)) += gamma(l, i, k);
                }
    return {n, std::move(m)};
}

StabilizerSystem1 stabilizer_system_1jet(const ConnectionJet& g) {
    if (g.order() != 1) throw std::invalid_argument("stabilizer_system_1jet: expects an order-1 jet");
    if (!is_normal_jet(g))
        throw std::invalid_argument("stabilizer_system_1jet: jet is not in normal coordinates");
    const int n = g.vars();
    // First-order Taylor coefficient G^l_{ij,k}.
    const auto d1 = [&](int l, int i, int j, int k) {
        MultiIndex m(n);
        ++m[k];
        return g.component(l, i, j).coeff(m);
    };
    const auto col = [n](int l, int k) { return static_cast<Eigen::Index>(l) * n + k; };

    QMatrix m = QMatrix::Zero(static_cast<Eigen::Index>(n) * n * n * n, static_cast<Eigen::Index>(n) * n);
    Eigen::Index row = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l)
                for (int s = 0; s < n; ++s, ++row)
                    for (int k = 0; k < n; ++k) {
                        m(row, col(k, s)) += d1(l, i, j, k);
                        m(row, col(l, k)) += -d1(k, i, j, s);
                        m(row, col(k, i)) += d1(l, k, j, s);
                        m(row, col(k, j)) += d1(l, i, k, s);
                    }
    return {n, std::move(m)};
}

}  // namespace jetmoduli
