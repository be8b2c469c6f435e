#pragma once

// Stabilizer and orbit dimensions of generic connection k-jets, computed two
// independent ways: exact kernel dimension of the linearized action at random
// integer jets, and the closed dimension count. Generic values are only
// trusted when several seeds agree.
//
// The generic stabilizer is 1-dimensional for n = 1 (any k), 2-dimensional
// for n = 2 at k = 0, and trivial otherwise.

#include <jetmoduli/lie_action.hpp>
#include <jetmoduli/normal_coords.hpp>

#include <optional>

namespace jetmoduli {

/// d(1,n) + 2 d(2,n) d(0,k) with d the Kronecker symbol.
int expected_stabilizer_dim(int n, int k);

/// Dimension of a generic orbit in the space of k-jets:
/// n * sum_{m=1..k+2} C(n+m-1, n-1), minus 1 when n = 1, minus an additional
/// 2 when n = 2 and k = 0.
Int orbit_dim_formula(int n, int k);

/// Kernel dimension of the linearized action at a specific jet.
Eigen::Index stabilizer_dim_at(const ConnectionJet& g);

/// Kernel dimension at random_connection_jet(n, k, seed, coeff_range).
Eigen::Index stabilizer_dim_generic(int n, int k, std::uint64_t seed, int coeff_range = 10);

/// Kernel dimension of the stacked per-degree systems restricted to linear
/// fields: the 0-jet system in degree 0, the first-order system in degree 1,
/// and rows assembled from the derivative of each homogeneous part against
/// the n^2 basis linear fields beyond that. Input must be normal.
Eigen::Index stabilizer_dim_normal_linear(const ConnectionJet& g);

struct StabilizerReport {
    int n = 0;
    int k = 0;
    std::uint64_t seed = 0;
    Eigen::Index empirical_stab_dim = 0;
    int expected_stab_dim = 0;
    Eigen::Index empirical_orbit_dim = 0;
    Int formula_orbit_dim;
    bool agree = false;
};

StabilizerReport report(int n, int k, std::uint64_t seed, int coeff_range = 10);

/// Empirical stabilizer dimension accepted only when num_seeds independent
/// samples agree; nullopt flags a disagreement (some sample non-generic).
std::optional<Eigen::Index> certified_stabilizer_dim(int n, int k, std::uint64_t base_seed,
                                                     int num_seeds = 5, int coeff_range = 10);

}  // namespace jetmoduli
