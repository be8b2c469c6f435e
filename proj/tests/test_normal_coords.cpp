#include <jetmoduli/lie_action.hpp>
#include <jetmoduli/normal_coords.hpp>

#include <doctest.h>

using namespace jetmoduli;

namespace {

MultiIndex unit(int n, int var) {
    MultiIndex m(n);
    ++m[var];
    return m;
}

Rational origin_value(const ConnectionJet& g, int l, int i, int j) {
    return g.component(l, i, j).coeff(MultiIndex(g.vars()));
}

// Derivative-slot vector of a jet's degree-r part: the slot for (i,j,k,alpha)
// is beta! times the monomial coefficient, beta the exponent vector of alpha.
QVector derivative_slots(const ConnectionJet& g, int r) {
    const int n = g.vars();
    const auto alpha = multi_indices_of_degree(n, r);
    QVector u = QVector::Zero(static_cast<Eigen::Index>(n) * n * n * static_cast<Eigen::Index>(alpha.size()));
    Eigen::Index slot = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (const auto& a : alpha) {
                    Int beta_factorial = 1;
                    for (int v = 0; v < n; ++v)
                        for (int e = 2; e <= a[v]; ++e) beta_factorial *= e;
                    u(slot++) = Rational(beta_factorial) * g.component(i, j, k).coeff(a);
                }
    return u;
}

bool is_zero_vector(const QVector& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (!v(i).is_zero()) return false;
    return true;
}

// Two spanning sets generate the same subspace iff adjoining either to the
// other does not raise the rank.
bool same_span(const std::vector<QVector>& a, const std::vector<QVector>& b, Eigen::Index dim) {
    if (a.size() != b.size()) return false;
    QMatrix all = QMatrix::Zero(static_cast<Eigen::Index>(a.size() + b.size()), dim);
    for (size_t i = 0; i < a.size(); ++i) all.row(static_cast<Eigen::Index>(i)) = a[i].transpose();
    for (size_t i = 0; i < b.size(); ++i)
        all.row(static_cast<Eigen::Index>(a.size() + i)) = b[i].transpose();
    return rank(all) == static_cast<Eigen::Index>(a.size());
}

}  // namespace

TEST_CASE("constraint kernels have the expected dimensions") {
    const auto s20 = normal_constraint_matrix(2, 0);
    CHECK(s20.matrix.cols() == 8);
    CHECK(s20.matrix.cols() - rank(s20.matrix) == 2);  // antisymmetric constants only

    const auto s21 = normal_constraint_matrix(2, 1);
    CHECK(s21.matrix.cols() == 16);
    CHECK(s21.matrix.cols() - rank(s21.matrix) == 8);

    for (int r = 0; r <= 3; ++r) {
        const auto s1 = normal_constraint_matrix(1, r);
        CHECK(s1.matrix.cols() - rank(s1.matrix) == 0);  // one function in one variable
    }

    // The derivative-slot and monomial-coefficient systems differ by an
    // invertible diagonal substitution, so kernel dimensions coincide.
    for (int n = 1; n <= 3; ++n)
        for (int r = 0; r <= 2; ++r) {
            const auto a = normal_constraint_matrix(n, r);
            const auto b = normal_monomial_constraint_matrix(n, r);
            CHECK(a.matrix.rows() == b.matrix.rows());
            CHECK(a.matrix.cols() == b.matrix.cols());
            CHECK(rank(a.matrix) == rank(b.matrix));
        }
}

TEST_CASE("each constraint row sums to (r+2)(r+1)") {
    for (int n = 1; n <= 3; ++n)
        for (int r = 0; r <= 3; ++r) {
            const auto sys = normal_constraint_matrix(n, r);
            for (Eigen::Index i = 0; i < sys.matrix.rows(); ++i) {
                Rational sum(0);
                for (Eigen::Index j = 0; j < sys.matrix.cols(); ++j) {
                    CHECK(sys.matrix(i, j) >= Rational(0));
                    sum += sys.matrix(i, j);
                }
                CHECK(sum == Rational((r + 2) * (r + 1)));
            }
        }
}

TEST_CASE("is_normal_jet on pinned examples") {
    SUBCASE("antisymmetric constants pass") {
        ConnectionJet g(2, 0);
        g.component(0, 0, 1).set_coeff(MultiIndex(2), Rational(3));
        g.component(0, 1, 0).set_coeff(MultiIndex(2), Rational(-3));
        g.component(1, 0, 1).set_coeff(MultiIndex(2), Rational(-7));
        g.component(1, 1, 0).set_coeff(MultiIndex(2), Rational(7));
        CHECK(is_normal_jet(g));
    }
    SUBCASE("a diagonal constant fails") {
        ConnectionJet g(2, 0);
        g.component(0, 0, 0).set_coeff(MultiIndex(2), Rational(1));
        CHECK(!is_normal_jet(g));
    }
}

TEST_CASE("sampled jets are normal and sit in the constraint kernels") {
    for (int t = 0; t < 8; ++t) {
        const int n = 1 + t % 3;
        const int k = t % 3;
        const auto g = sample_normal_jet(n, k, 2600 + static_cast<std::uint64_t>(t), 8);
        CHECK(is_normal_jet(g));
        for (int r = 0; r <= k; ++r)
            CHECK(is_zero_vector(normal_constraint_matrix(n, r).matrix * derivative_slots(g, r)));
    }

    // Determinism and the advertised special cases.
    CHECK(sample_normal_jet(2, 1, 5, 9) == sample_normal_jet(2, 1, 5, 9));
    const auto g30 = sample_normal_jet(3, 0, 12, 9);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int l = 0; l < 3; ++l)
                CHECK(origin_value(g30, l, i, j) == -origin_value(g30, l, j, i));
    for (int k = 0; k <= 2; ++k) {
        ConnectionJet zero(1, k);
        CHECK(sample_normal_jet(1, k, 9 + static_cast<std::uint64_t>(k), 9) == zero);
    }
}

TEST_CASE("single-coefficient violations break normality") {
    for (int t = 0; t < 8; ++t) {
        const int n = 1 + t % 3;
        const int k = t % 2;
        auto g = sample_normal_jet(n, k, 2700 + static_cast<std::uint64_t>(t), 8);
        DeterministicRng rng(2800 + static_cast<std::uint64_t>(t));
        const auto monomials = multi_indices_in_range(n, 0, k);
        const int l = static_cast<int>(rng.uniform(0, n - 1));
        const int i = static_cast<int>(rng.uniform(0, n - 1));
        const int j = static_cast<int>(rng.uniform(0, n - 1));
        g.component(l, i, j).add_coeff(
            monomials[static_cast<size_t>(rng.uniform(0, static_cast<long long>(monomials.size()) - 1))],
            Rational(1));
        CHECK(!is_normal_jet(g));
    }
}

TEST_CASE("constant witness entries") {
    SUBCASE("n = 3 matches the published values") {
        const auto g = witness_gamma(3);
        CHECK(origin_value(g, 0, 0, 1) == Rational(1));   // g^1_12
        CHECK(origin_value(g, 0, 0, 2) == Rational(1));   // g^1_13
        CHECK(origin_value(g, 1, 1, 2) == Rational(1));   // g^2_23
        CHECK(origin_value(g, 1, 1, 0) == Rational(-1));  // g^2_21
        CHECK(origin_value(g, 2, 2, 0) == Rational(-1));  // g^3_31
        CHECK(origin_value(g, 2, 2, 1) == Rational(-1));  // g^3_32
        // Mirrored entries carry the opposite sign; everything else vanishes.
        int nonzero = 0;
        for (int l = 0; l < 3; ++l)
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    const Rational v = origin_value(g, l, i, j);
                    CHECK(v == -origin_value(g, l, j, i));
                    if (l != i && l != j) CHECK(v.is_zero());
                    if (!v.is_zero()) ++nonzero;
                }
        CHECK(nonzero == 12);
    }
    SUBCASE("n = 2") {
        const auto g = witness_gamma(2);
        CHECK(origin_value(g, 0, 0, 1) == Rational(1));   // g^1_12
        CHECK(origin_value(g, 1, 1, 0) == Rational(-1));  // g^2_21
        CHECK(origin_value(g, 0, 1, 0) == Rational(-1));
        CHECK(origin_value(g, 1, 0, 1) == Rational(1));
    }
    SUBCASE("normal and antisymmetric for every n") {
        for (int n = 2; n <= 5; ++n) {
            const auto g = witness_gamma(n);
            CHECK(is_normal_jet(g));
            for (int l = 0; l < n; ++l)
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        CHECK(origin_value(g, l, i, j) == -origin_value(g, l, j, i));
        }
    }
    SUBCASE("rejected below n = 2") { CHECK_THROWS_AS(witness_gamma(1), std::invalid_argument); }
}

TEST_CASE("first-order witness satisfies the constraint rows") {
    const auto g = witness_n2_first_order();
    CHECK(g.order() == 1);
    CHECK(is_normal_jet(g));

    const auto d1 = [&](int l, int i, int j, int s) {
        return g.component(l, i, j).coeff(unit(2, s));
    };
    for (int i = 0; i < 2; ++i) {
        // G^i_{12,1} + G^i_{21,1} + G^i_{11,2} = 0 and the mirror relation.
        CHECK(d1(i, 0, 1, 0) + d1(i, 1, 0, 0) + d1(i, 0, 0, 1) == Rational(0));
        CHECK(d1(i, 0, 1, 1) + d1(i, 1, 0, 1) + d1(i, 1, 1, 0) == Rational(0));
        CHECK(d1(i, 0, 0, 0) == Rational(0));  // G^i_{11,1}
        CHECK(d1(i, 1, 1, 1) == Rational(0));  // G^i_{22,2}
        for (int j = 0; j < 2; ++j) {
            CHECK(d1(i, 0, 1, j) == Rational(2));
            CHECK(d1(i, 1, 0, j) == Rational(-1));
        }
    }
}

TEST_CASE("constant-part stabilizer system") {
    SUBCASE("generic antisymmetric 2x4 system has rank 2") {
        for (std::uint64_t s = 0; s < 5; ++s) {
            const auto g = sample_normal_jet(2, 0, 4400 + s, 9);
            const auto sys = stabilizer_system_0jet(g);
            REQUIRE(sys.matrix.rows() == 2);
            REQUIRE(sys.matrix.cols() == 4);
            CHECK(rank(sys.matrix) == 2);
        }
    }
    SUBCASE("the dimension-3 witness kills the kernel") {
        CHECK(kernel_basis(stabilizer_system_0jet(witness_gamma(3)).matrix).empty());
    }
    SUBCASE("the flat jet keeps all of gl(2)") {
        const ConnectionJet flat(2, 0);
        const auto sys = stabilizer_system_0jet(flat);
        CHECK(rank(sys.matrix) == 0);
        CHECK(kernel_basis(sys.matrix).size() == 4);
    }
    SUBCASE("non-normal input is rejected") {
        ConnectionJet bad(2, 0);
        bad.component(0, 0, 0).set_coeff(MultiIndex(2), Rational(1));
        CHECK_THROWS_AS(stabilizer_system_0jet(bad), std::invalid_argument);
        CHECK_THROWS_AS(stabilizer_system_0jet(random_connection_jet(2, 1, 1, 5)),
                        std::invalid_argument);
    }
}

TEST_CASE("first-order stabilizer system") {
    SUBCASE("witness gives a non-degenerate system") {
        const auto sys = stabilizer_system_1jet(witness_n2_first_order());
        CHECK(sys.matrix.rows() == 16);
        CHECK(sys.matrix.cols() == 4);
        CHECK(kernel_basis(sys.matrix).empty());
    }
    SUBCASE("zero first-order part gives the zero system") {
        // Antisymmetric constants, nothing in degree one.
        ConnectionJet g(2, 1);
        g.component(0, 0, 1).set_coeff(MultiIndex(2), Rational(2));
        g.component(0, 1, 0).set_coeff(MultiIndex(2), Rational(-2));
        const auto sys = stabilizer_system_1jet(g);
        CHECK(rank(sys.matrix) == 0);
        CHECK(kernel_basis(sys.matrix).size() == 4);
    }
    SUBCASE("generic first-order samples have trivial kernel") {
        for (std::uint64_t s = 0; s < 3; ++s)
            CHECK(kernel_basis(stabilizer_system_1jet(sample_normal_jet(2, 1, 4700 + s, 9)).matrix)
                      .empty());
    }
}

TEST_CASE("constant system matches the linear block of the action kernel") {
    // At a normal 0-jet the full action kernel has no quadratic part and its
    // linear part is exactly the kernel of the constant system.
    for (std::uint64_t s = 0; s < 3; ++s) {
        const auto g = sample_normal_jet(2, 0, 5200 + s, 9);
        const auto am = action_matrix(g);
        const auto full_kernel = kernel_basis(am.base);
        const auto stab_kernel = kernel_basis(stabilizer_system_0jet(g).matrix);
        REQUIRE(full_kernel.size() == stab_kernel.size());

        std::vector<Eigen::Index> linear_cols;
        for (size_t c = 0; c < am.col_basis.size(); ++c)
            if (am.col_basis[c].m.degree() == 1) linear_cols.push_back(static_cast<Eigen::Index>(c));

        std::vector<QVector> projected;
        for (const auto& v : full_kernel) {
            QVector lin(static_cast<Eigen::Index>(linear_cols.size()));
            for (size_t c = 0; c < am.col_basis.size(); ++c)
                if (am.col_basis[c].m.degree() > 1) CHECK(v(static_cast<Eigen::Index>(c)).is_zero());
            for (size_t i = 0; i < linear_cols.size(); ++i) lin(static_cast<Eigen::Index>(i)) = v(linear_cols[i]);
            projected.push_back(std::move(lin));
        }
        CHECK(same_span(projected, stab_kernel, 4));
    }
}
