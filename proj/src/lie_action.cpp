#include <jetmoduli/lie_action.hpp>

#include <stdexcept>

namespace jetmoduli {

std::vector<TensorCoord> tensor_basis(int n, int k) {
    std::vector<TensorCoord> basis;
    const auto monomials = multi_indices_in_range(n, 0, k);
    for (int l = 0; l < n; ++l)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (const auto& m : monomials) basis.push_back({l, i, j, m});
    return basis;
}

std::vector<VfCoord> vf_basis(int n, int max_degree) {
    std::vector<VfCoord> basis;
    const auto monomials = multi_indices_in_range(n, 1, max_degree);
    for (int c = 0; c < n; ++c)
        for (const auto& m : monomials) basis.push_back({c, m});
    return basis;
}

QVector tensor_coords(const TensorJet& t) {
    const auto basis = tensor_basis(t.vars(), t.order());
    QVector out(static_cast<Eigen::Index>(basis.size()));
    for (size_t r = 0; r < basis.size(); ++r)
        out(static_cast<Eigen::Index>(r)) = t.component(basis[r].l, basis[r].i, basis[r].j).coeff(basis[r].m);
    return out;
}

QVector vf_coords(const VectorFieldJet& v) {
    const auto basis = vf_basis(v.vars(), v.max_degree());
    QVector out(static_cast<Eigen::Index>(basis.size()));
    for (size_t r = 0; r < basis.size(); ++r)
        out(static_cast<Eigen::Index>(r)) = v.component(basis[r].component).coeff(basis[r].m);
    return out;
}

VectorFieldJet vf_from_coords(int n, int max_degree, const QVector& coords) {
    const auto basis = vf_basis(n, max_degree);
    if (coords.size() != static_cast<Eigen::Index>(basis.size()))
        throw std::invalid_argument("vf_from_coords: coordinate length mismatch");
    VectorFieldJet v(n, max_degree);
    for (size_t r = 0; r < basis.size(); ++r)
        v.set_coeff(basis[r].component, basis[r].m, coords(static_cast<Eigen::Index>(r)));
    return v;
}

TensorJet lie_derivative(const VectorFieldJet& v, const ConnectionJet& g) {
    if (v.vars() != g.vars())
        throw std::invalid_argument("lie_derivative: mismatched variable count");
    const int k = g.order();
    if (v.max_degree() < k + 2)
        throw std::invalid_argument("lie_derivative: vector field must carry degrees up to order + 2");
    const int n = g.vars();

    // Precompute all partials of V once; they are reused across components.
    std::vector<std::vector<TruncatedPolynomial>> dV;  // dV[c][s] = d_s V^c
    dV.reserve(static_cast<size_t>(n));
    for (int c = 0; c < n; ++c) {
        std::vector<TruncatedPolynomial> row;
        row.reserve(static_cast<size_t>(n));
        for (int s = 0; s < n; ++s) row.push_back(v.component(c).derivative(s));
        dV.push_back(std::move(row));
    }

    TensorJet out(n, k);
    for (int l = 0; l < n; ++l)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                TruncatedPolynomial acc(n, k);
                for (int m = 0; m < n; ++m) {
                    acc += truncate_product(v.component(m), g.component(l, i, j).derivative(m), k);
                    acc -= truncate_product(g.component(m, i, j), dV[static_cast<size_t>(l)][static_cast<size_t>(m)], k);
                    acc += truncate_product(g.component(l, m, j), dV[static_cast<size_t>(m)][static_cast<size_t>(i)], k);
                    acc += truncate_product(g.component(l, i, m), dV[static_cast<size_t>(m)][static_cast<size_t>(j)], k);
                }
                acc += dV[static_cast<size_t>(l)][static_cast<size_t>(i)].derivative(j).truncated(k);
                out.component(l, i, j) = acc.truncated(k);
            }
    return out;
}

TensorJet tensor_lie_derivative(const VectorFieldJet& v, const TensorJet& t) {
    if (v.vars() != t.vars())
        throw std::invalid_argument("tensor_lie_derivative: mismatched variable count");
    const int k = t.order();
    if (v.max_degree() < k + 1)
        throw std::invalid_argument("tensor_lie_derivative: vector field must carry degrees up to order + 1");
    const int n = t.vars();

    std::vector<std::vector<TruncatedPolynomial>> dV;
    dV.reserve(static_cast<size_t>(n));
    for (int c = 0; c < n; ++c) {
        std::vector<TruncatedPolynomial> row;
        row.reserve(static_cast<size_t>(n));
        for (int s = 0; s < n; ++s) row.push_back(v.component(c).derivative(s));
        dV.push_back(std::move(row));
    }

    TensorJet out(n, k);
    for (int l = 0; l < n; ++l)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                TruncatedPolynomial acc(n, k);
                for (int m = 0; m < n; ++m) {
                    acc += truncate_product(v.component(m), t.component(l, i, j).derivative(m), k);
                    acc -= truncate_product(t.component(m, i, j), dV[static_cast<size_t>(l)][static_cast<size_t>(m)], k);
                    acc += truncate_product(t.component(l, m, j), dV[static_cast<size_t>(m)][static_cast<size_t>(i)], k);
                    acc += truncate_product(t.component(l, i, m), dV[static_cast<size_t>(m)][static_cast<size_t>(j)], k);
                }
                out.component(l, i, j) = acc.truncated(k);
            }
    return out;
}

VectorFieldJet vf_bracket(const VectorFieldJet& v, const VectorFieldJet& w, int bound) {
    if (v.vars() != w.vars())
        throw std::invalid_argument("vf_bracket: mismatched variable count");
    const int n = v.vars();
    VectorFieldJet out(n, bound);
    for (int i = 0; i < n; ++i) {
        TruncatedPolynomial acc(n, bound);
        for (int m = 0; m < n; ++m) {
            acc += truncate_product(v.component(m), w.component(i).derivative(m), bound);
            acc -= truncate_product(w.component(m), v.component(i).derivative(m), bound);
        }
        for (const auto& [mi, c] : acc.terms()) out.set_coeff(i, mi, c);
    }
    return out;
}

ActionMatrix action_matrix(const ConnectionJet& g) {
    const int n = g.vars();
    const int k = g.order();
    ActionMatrix am;
    am.n = n;
    am.k = k;
    am.row_basis = tensor_basis(n, k);
    am.col_basis = vf_basis(n, k + 2);
    am.base = QMatrix::Zero(static_cast<Eigen::Index>(am.row_basis.size()),
                            static_cast<Eigen::Index>(am.col_basis.size()));
    for (size_t c = 0; c < am.col_basis.size(); ++c) {
        VectorFieldJet e(n, k + 2);
        e.set_coeff(am.col_basis[c].component, am.col_basis[c].m, Rational(1));
        am.base.col(static_cast<Eigen::Index>(c)) = tensor_coords(lie_derivative(e, g));
    }
    return am;
}

}  // namespace jetmoduli
