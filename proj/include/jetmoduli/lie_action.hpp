#pragma once

// Infinitesimal action of origin-preserving vector fields on connection jets,
// and its linearization in fixed coordinate bases.
//
// Componentwise the derivative of a connection along V is
//
//   (L_V G)^l_ij = V^k d_k G^l_ij - G^k_ij d_k V^l
//                + G^l_kj d_i V^k + G^l_ik d_j V^k + d_i d_j V^l ,
//
// a (1,2)-tensor jet of the same order. An order-k result only reads the
// vector field through degree k+2, so column bases stop there: fields of
// lowest degree >= k+3 act trivially on order-k jets.

#include <jetmoduli/jets.hpp>
#include <jetmoduli/linalg.hpp>

#include <vector>

namespace jetmoduli {

/// Row coordinate of a TensorJet: component (l, i, j), monomial m.
struct TensorCoord {
    int l, i, j;
    MultiIndex m;
};

/// Column coordinate of a VectorFieldJet: component, monomial (degree >= 1).
struct VfCoord {
    int component;
    MultiIndex m;
};

/// Canonical row basis of order-k tensor jets: (l, i, j) outer, monomials of
/// degree 0..k inner. Size n^3 C(n+k, n).
std::vector<TensorCoord> tensor_basis(int n, int k);

/// Canonical column basis of vector field jets: component outer, monomials of
/// degree 1..max_degree inner. Size n (C(n+max_degree, n) - 1).
std::vector<VfCoord> vf_basis(int n, int max_degree);

QVector tensor_coords(const TensorJet& t);
QVector vf_coords(const VectorFieldJet& v);
VectorFieldJet vf_from_coords(int n, int max_degree, const QVector& coords);

/// L_V G for an order-k connection jet; requires v.max_degree >= k + 2 so no
/// silently truncated input can reach the order-k result.
TensorJet lie_derivative(const VectorFieldJet& v, const ConnectionJet& g);

/// Same derivative pattern on a (1,2)-tensor jet: the inhomogeneous second
/// derivative term does not appear. Requires v.max_degree >= order + 1.
TensorJet tensor_lie_derivative(const VectorFieldJet& v, const TensorJet& t);

/// Commutator [v, w]^i = v^k d_k w^i - w^k d_k v^i, truncated at bound.
VectorFieldJet vf_bracket(const VectorFieldJet& v, const VectorFieldJet& w, int bound);

/// The linear map v -> j^k(L_v g) in the canonical bases.
struct ActionMatrix {
    QMatrix base;
    int n = 0;
    int k = 0;
    std::vector<TensorCoord> row_basis;
    std::vector<VfCoord> col_basis;
};

ActionMatrix action_matrix(const ConnectionJet& g);

}  // namespace jetmoduli
