#pragma once

// Monomial exponent vectors and the global graded-lexicographic order.
//
// Every basis enumeration in the project (jet coordinates, action matrices,
// constraint systems) walks monomials in the same canonical order: degree
// ascending, and inside a degree block lexicographically by exponent vector,
// largest first. n = 2, degree 2 enumerates as x1^2, x1 x2, x2^2.

#include <jetmoduli/linalg.hpp>

#include <cstddef>
#include <vector>

namespace jetmoduli {

class MultiIndex {
public:
    explicit MultiIndex(int n) : e_(static_cast<size_t>(check_vars(n)), 0) {}
    explicit MultiIndex(std::vector<int> exponents);

    int vars() const { return static_cast<int>(e_.size()); }
    int degree() const;

    int operator[](int var) const { return e_[static_cast<size_t>(var)]; }
    int& operator[](int var) { return e_[static_cast<size_t>(var)]; }

    /// Exponent bumped by one at var.
    MultiIndex plus(int var) const;
    /// Exponent lowered by one at var; throws if already zero.
    MultiIndex minus(int var) const;

    const std::vector<int>& exponents() const { return e_; }

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.e_ == b.e_; }
    friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return a.e_ != b.e_; }

private:
    static int check_vars(int n);
    std::vector<int> e_;
};

/// Strict weak order matching the canonical enumeration.
struct GrlexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// All multi-indices of degree exactly d in n variables, canonical order.
/// Size is C(n+d-1, n-1).
std::vector<MultiIndex> multi_indices_of_degree(int n, int d);

/// Degrees lo..hi concatenated in canonical order.
std::vector<MultiIndex> multi_indices_in_range(int n, int lo, int hi);

/// Count of degree-d monomials in n variables, C(n+d-1, n-1).
Int monomial_count(int n, int d);

}  // namespace jetmoduli
