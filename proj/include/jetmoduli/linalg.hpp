#pragma once

// Dense exact linear algebra over the rationals: rank, right kernel bases,
// and binomial coefficients.
//
// Elimination is fraction-free (Bareiss): rows are first scaled to integers,
// then reduced with division-deferred pivoting so intermediate entries stay
// minors of the scaled matrix. Rationals reappear only when a kernel basis
// is extracted. Pivot choice is deterministic, so ranks and kernel bases are
// reproducible run to run.

#include <jetmoduli/rational.hpp>

#include <Eigen/Dense>

#include <vector>

namespace Eigen {

template <>
struct NumTraits<jetmoduli::Rational> : GenericNumTraits<jetmoduli::Rational> {
    typedef jetmoduli::Rational Real;
    typedef jetmoduli::Rational NonInteger;
    typedef jetmoduli::Rational Nested;
    typedef jetmoduli::Rational Literal;

    static inline Real epsilon() { return jetmoduli::Rational(0); }
    static inline Real dummy_precision() { return jetmoduli::Rational(0); }
    static inline int digits10() { return 0; }

    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 100,
        MulCost = 100
    };
};

}  // namespace Eigen

namespace jetmoduli {

using QMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using QVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Exact rank over the rationals. Empty matrices have rank 0.
Eigen::Index rank(const QMatrix& m);

/// Basis of the right null space {v : m v = 0}, in reduced echelon
/// parametrization: one vector per free column, that free coordinate set
/// to 1, remaining free coordinates 0. Size equals cols − rank.
std::vector<QVector> kernel_basis(const QMatrix& m);

/// C(a, b); zero when b > a. Arguments must be non-negative.
Int binomial(const Int& a, const Int& b);
Int binomial(long long a, long long b);

}  // namespace jetmoduli
