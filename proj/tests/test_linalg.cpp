#include <jetmoduli/jets.hpp>
#include <jetmoduli/linalg.hpp>

#include <doctest.h>

#include <vector>

using namespace jetmoduli;

namespace {

QMatrix make(std::initializer_list<std::initializer_list<long long>> rows) {
    const Eigen::Index r = static_cast<Eigen::Index>(rows.size());
    const Eigen::Index c = r == 0 ? 0 : static_cast<Eigen::Index>(rows.begin()->size());
    QMatrix m = QMatrix::Zero(r, c);
    Eigen::Index i = 0;
    for (const auto& row : rows) {
        Eigen::Index j = 0;
        for (long long v : row) m(i, j++) = Rational(v);
        ++i;
    }
    return m;
}

// Independent oracle: plain rational Gauss elimination, no Bareiss, no pivot
// strategy shared with the implementation.
Eigen::Index rank_oracle(QMatrix m) {
    Eigen::Index r = 0;
    for (Eigen::Index col = 0; col < m.cols() && r < m.rows(); ++col) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = r; i < m.rows(); ++i)
            if (!m(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        m.row(piv).swap(m.row(r));
        for (Eigen::Index i = r + 1; i < m.rows(); ++i) {
            if (m(i, col).is_zero()) continue;
            const Rational f = m(i, col) / m(r, col);
            for (Eigen::Index j = col; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

QMatrix random_matrix(int rows, int cols, std::uint64_t seed, int lo = -9, int hi = 9) {
    DeterministicRng rng(seed);
    QMatrix m = QMatrix::Zero(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Rational(rng.uniform(lo, hi));
    return m;
}

bool is_zero_vector(const QVector& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (!v(i).is_zero()) return false;
    return true;
}

}  // namespace

TEST_CASE("rank on pinned examples") {
    CHECK(rank(make({{1, 2}, {2, 4}})) == 1);
    CHECK(rank(QMatrix(0, 0)) == 0);
    CHECK(rank(make({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 3);
    CHECK(rank(make({{0, 0}, {0, 0}})) == 0);
}

TEST_CASE("rank handles rational entries") {
    QMatrix m = QMatrix::Zero(2, 2);
    m(0, 0) = Rational(Int(1), Int(3));
    m(0, 1) = Rational(Int(1), Int(6));
    m(1, 0) = Rational(2);
    m(1, 1) = Rational(1);
    CHECK(rank(m) == 1);
}

TEST_CASE("kernel basis on pinned examples") {
    SUBCASE("one relation in two variables") {
        const auto basis = kernel_basis(make({{1, 1}}));
        REQUIRE(basis.size() == 1);
        CHECK(is_zero_vector(make({{1, 1}}) * basis[0]));
        CHECK(!basis[0](0).is_zero());
        // Up to scale the kernel vector is (1, -1).
        CHECK(basis[0](0) == -basis[0](1));
    }
    SUBCASE("trivial kernel") {
        CHECK(kernel_basis(make({{1, 0}, {0, 1}})).empty());
    }
    SUBCASE("proportional rows") {
        const QMatrix m = make({{1, 2}, {2, 4}});
        const auto basis = kernel_basis(m);
        REQUIRE(basis.size() == 1);
        CHECK(is_zero_vector(m * basis[0]));
        // Solving by hand: the kernel is spanned by (2, -1).
        CHECK(basis[0](0) * Rational(-1) == basis[0](1) * Rational(2));
    }
    SUBCASE("zero-row matrix has full kernel") {
        const auto basis = kernel_basis(QMatrix(0, 3));
        CHECK(basis.size() == 3);
    }
}

TEST_CASE("rank-nullity and exactness on random matrices") {
    for (int t = 0; t < 40; ++t) {
        const int rows = 1 + t % 6;
        const int cols = 1 + (t * 7) % 8;
        QMatrix m = random_matrix(rows, cols, 900 + static_cast<std::uint64_t>(t));
        if (t % 3 == 0 && rows > 1) m.row(rows - 1) = m.row(0);  // force rank deficiency
        const Eigen::Index r = rank(m);
        CHECK(r == rank_oracle(m));
        const auto basis = kernel_basis(m);
        CHECK(static_cast<Eigen::Index>(basis.size()) == m.cols() - r);
        for (const auto& v : basis) CHECK(is_zero_vector(m * v));
    }
}

TEST_CASE("rank invariant under row permutation and scaling") {
    for (int t = 0; t < 20; ++t) {
        QMatrix m = random_matrix(4, 5, 1700 + static_cast<std::uint64_t>(t));
        const Eigen::Index r = rank(m);

        QMatrix permuted = m;
        permuted.row(0).swap(permuted.row(3));
        permuted.row(1).swap(permuted.row(2));
        CHECK(rank(permuted) == r);

        QMatrix scaled = m;
        DeterministicRng rng(3400 + static_cast<std::uint64_t>(t));
        for (Eigen::Index i = 0; i < scaled.rows(); ++i) {
            const Rational c(Int(rng.uniform(1, 7)), Int(rng.uniform(1, 7)));
            const Rational sign(rng.uniform(0, 1) == 0 ? 1 : -1);
            scaled.row(i) *= c * sign;
        }
        CHECK(rank(scaled) == r);
    }
}

TEST_CASE("binomial values and Pascal identity") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(40, 20) == Int("137846528820"));

    DeterministicRng rng(77);
    for (int t = 0; t < 50; ++t) {
        const long long a = rng.uniform(1, 40);
        const long long b = rng.uniform(0, 45);
        CHECK(binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b));
    }
}
