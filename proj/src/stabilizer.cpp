#include <jetmoduli/stabilizer.hpp>

#include <stdexcept>

namespace jetmoduli {

int expected_stabilizer_dim(int n, int k) {
    if (n < 1 || k < 0) throw std::invalid_argument("expected_stabilizer_dim: bad arguments");
    return (n == 1 ? 1 : 0) + (n == 2 && k == 0 ? 2 : 0);
}

Int orbit_dim_formula(int n, int k) {
    if (n < 1 || k < 0) throw std::invalid_argument("orbit_dim_formula: bad arguments");
    Int dim_fields = 0;
    for (int m = 1; m <= k + 2; ++m) dim_fields += monomial_count(n, m);
    Int orbit = Int(n) * dim_fields;
    if (n == 1) orbit -= 1;
    if (n == 2 && k == 0) orbit -= 2;
    return orbit;
}

Eigen::Index stabilizer_dim_at(const ConnectionJet& g) {
    const ActionMatrix am = action_matrix(g);
    return am.base.cols() - rank(am.base);
}

Eigen::Index stabilizer_dim_generic(int n, int k, std::uint64_t seed, int coeff_range) {
    return stabilizer_dim_at(random_connection_jet(n, k, seed, coeff_range));
}

Eigen::Index stabilizer_dim_normal_linear(const ConnectionJet& g) {
    if (!is_normal_jet(g))
        throw std::invalid_argument("stabilizer_dim_normal_linear: jet is not in normal coordinates");
    const int n = g.vars();
    const Eigen::Index cols = static_cast<Eigen::Index>(n) * n;

    std::vector<QMatrix> blocks;
    blocks.push_back(stabilizer_system_0jet(project_jet(g, 0)).matrix);
    if (g.order() >= 1) blocks.push_back(stabilizer_system_1jet(homogeneous_part(g, 1)).matrix);
    for (int m = 2; m <= g.order(); ++m) {
        // Degree-preserving block: derivative of the degree-m part along each
        // basis linear field x^c d_a, read off in tensor coordinates.
        const ConnectionJet part = homogeneous_part(g, m);
        const auto rows_basis = tensor_basis(n, m);
        QMatrix block = QMatrix::Zero(static_cast<Eigen::Index>(rows_basis.size()), cols);
        for (int a = 0; a < n; ++a)
            for (int c = 0; c < n; ++c) {
                VectorFieldJet e(n, m + 2);
                MultiIndex xc(n);
                ++xc[c];
                e.set_coeff(a, xc, Rational(1));
                block.col(static_cast<Eigen::Index>(a) * n + c) = tensor_coords(lie_derivative(e, part));
            }
        blocks.push_back(std::move(block));
    }

    Eigen::Index total_rows = 0;
    for (const auto& b : blocks) total_rows += b.rows();
    QMatrix stacked = QMatrix::Zero(total_rows, cols);
    Eigen::Index at = 0;
    for (const auto& b : blocks) {
        stacked.middleRows(at, b.rows()) = b;
        at += b.rows();
    }
    return cols - rank(stacked);
}

StabilizerReport report(int n, int k, std::uint64_t seed, int coeff_range) {
    const ActionMatrix am = action_matrix(random_connection_jet(n, k, seed, coeff_range));
    const Eigen::Index r = rank(am.base);

    StabilizerReport rep;
    rep.n = n;
    rep.k = k;
    rep.seed = seed;
    rep.empirical_stab_dim = am.base.cols() - r;
    rep.expected_stab_dim = expected_stabilizer_dim(n, k);
    rep.empirical_orbit_dim = r;
    rep.formula_orbit_dim = orbit_dim_formula(n, k);
    rep.agree = Int(rep.empirical_orbit_dim) == rep.formula_orbit_dim &&
                rep.empirical_stab_dim == rep.expected_stab_dim;
    return rep;
}

std::optional<Eigen::Index> certified_stabilizer_dim(int n, int k, std::uint64_t base_seed,
                                                     int num_seeds, int coeff_range) {
    if (num_seeds < 1) throw std::invalid_argument("certified_stabilizer_dim: need at least one seed");
    std::optional<Eigen::Index> dim;
    for (int s = 0; s < num_seeds; ++s) {
        const Eigen::Index d = stabilizer_dim_generic(n, k, base_seed + static_cast<std::uint64_t>(s),
                                                      coeff_range);
        if (!dim) dim = d;
        else if (*dim != d) return std::nullopt;
    }
    return dim;
}

}  // namespace jetmoduli
