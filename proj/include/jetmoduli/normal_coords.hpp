#pragma once

// Connections in their own normal coordinates.
//
// Coordinates are normal for G exactly when G^i_jk(x) x^j x^k vanishes
// identically. Taylor-coefficient consequences: the value at the origin is
// antisymmetric in the lower pair, and each derivative order r satisfies one
// linear identity per upper index and monomial, obtained by summing the
// coefficient slot over every ordered pair drawn from the multiset of its
// r + 2 lower indices (coincident summands merge with multiplicity). The
// converse holds as well, so the kernels of these systems parametrize the
// admissible Taylor coefficients exactly.
//
// Also here: the linear systems cutting out linear vector fields that fix the
// constant and first-order parts of a normal jet, and the two explicit
// witness connections that make those systems non-degenerate.

#include <jetmoduli/jets.hpp>
#include <jetmoduli/linalg.hpp>

namespace jetmoduli {

/// Constraint rows on derivative slots G^i_{jk,a1..ar} (a-block a sorted
/// multiset). Slot order: i, j, k outer, monomial block inner; row order:
/// i outer, degree-(r+2) monomial inner.
struct NormalConstraintSystem {
    int n = 0;
    int r = 0;
    QMatrix matrix;
};

NormalConstraintSystem normal_constraint_matrix(int n, int r);

/// Same constraints written on monomial coefficients of the component
/// polynomials instead of derivative values: every valid ordered pair
/// contributes 1. The two systems differ by a diagonal change of slot basis
/// (the multinomial factors), so their kernels have equal dimension.
NormalConstraintSystem normal_monomial_constraint_matrix(int n, int r);

/// True iff sum_jk G^i_jk(x) x^j x^k is the zero truncated polynomial
/// (through degree order + 2) for every upper index i.
bool is_normal_jet(const ConnectionJet& g);

/// Random jet that is normal in its own coordinates: integer combinations of
/// a kernel basis of the degree-r monomial constraint system, for each
/// r <= k. Deterministic in seed.
ConnectionJet sample_normal_jet(int n, int k, std::uint64_t seed, int coeff_range);

/// Constant-part witness (n >= 2): g^a_ab = +1 for a < b, -1 for a > b,
/// mirrored entries forced by antisymmetry, zero when the upper index
/// matches neither lower one. Makes the 0-jet stabilizer system
/// non-degenerate for n >= 3.
ConnectionJet witness_gamma(int n);

/// The n = 2 order-1 witness with zero constant part: G^i_{12,j} = 2,
/// G^i_{21,j} = -1, G^i_{kk,j} = -1 for k != j, G^i_{11,1} = G^i_{22,2} = 0.
/// Satisfies every first-order normality identity and makes the first-order
/// stabilizer system non-degenerate.
ConnectionJet witness_n2_first_order();

/// Linear system on the n^2 entries b^l_k of a linear field V^l = b^l_k x^k
/// fixing the constant part: rows (i, j, l) with i < j carry
/// -g^k_ij b^l_k + g^l_kj b^k_i + g^l_ik b^k_j = 0. Columns are (l, k),
/// l outer. Input must be an order-0 normal jet.
struct StabilizerSystem0 {
    int n = 0;
    QMatrix matrix;
};

StabilizerSystem0 stabilizer_system_0jet(const ConnectionJet& g);

/// First-order analogue on an order-1 normal jet: n^4 rows (i, j, l, s) carry
/// G^l_{ij,k} b^k_s - G^k_{ij,s} b^l_k + G^l_{kj,s} b^k_i + G^l_{ik,s} b^k_j = 0,
/// rows rendered identically zero by the normality identities included.
struct StabilizerSystem1 {
    int n = 0;
    QMatrix matrix;
};

StabilizerSystem1 stabilizer_system_1jet(const ConnectionJet& g);

}  // namespace jetmoduli
