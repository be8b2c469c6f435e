#pragma once

// Jet-level data: truncated Christoffel data of a connection, (1,2)-tensor
// jets of the same shape, and origin-vanishing vector field jets.
//
// A ConnectionJet of order k holds the n^3 component polynomials G^l_ij
// truncated at degree k; index order is (l, i, j) with l the upper index.
// TensorJet shares the representation but is a distinct type, since the two
// transform differently and must not mix silently.

#include <jetmoduli/polynomial.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace jetmoduli {

// mt19937_64 plus rejection sampling: bit-identical draws on every platform,
// unlike std::uniform_int_distribution.
class DeterministicRng {
public:
    explicit DeterministicRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    long long uniform(long long lo, long long hi);

private:
    std::mt19937_64 eng_;
};

namespace detail {
struct connection_tag;
struct tensor_tag;
}  // namespace detail

template <class Tag>
class ComponentJet {
public:
    ComponentJet(int n, int order)
        : n_(check(n, order)),
          order_(order),
          comp_(static_cast<size_t>(n) * n * n, TruncatedPolynomial(n, order)) {}

    int vars() const { return n_; }
    int order() const { return order_; }

    /// Component with upper index l and lower indices (i, j), all 0-based.
    const TruncatedPolynomial& component(int l, int i, int j) const {
        return comp_[flat(l, i, j)];
    }
    TruncatedPolynomial& component(int l, int i, int j) { return comp_[flat(l, i, j)]; }

    friend bool operator==(const ComponentJet& a, const ComponentJet& b) {
        return a.n_ == b.n_ && a.order_ == b.order_ && a.comp_ == b.comp_;
    }
    friend bool operator!=(const ComponentJet& a, const ComponentJet& b) { return !(a == b); }

    ComponentJet& operator+=(const ComponentJet& o) {
        check_compatible(o);
        for (size_t c = 0; c < comp_.size(); ++c) comp_[c] += o.comp_[c];
        return *this;
    }
    ComponentJet& operator-=(const ComponentJet& o) {
        check_compatible(o);
        for (size_t c = 0; c < comp_.size(); ++c) comp_[c] -= o.comp_[c];
        return *this;
    }
    friend ComponentJet operator+(ComponentJet a, const ComponentJet& b) { a += b; return a; }
    friend ComponentJet operator-(ComponentJet a, const ComponentJet& b) { a -= b; return a; }

    bool is_zero() const {
        for (const auto& p : comp_)
            if (!p.is_zero()) return false;
        return true;
    }

private:
    static int check(int n, int order) {
        if (n < 1) throw std::invalid_argument("jet: need at least one variable");
        if (order < 0) throw std::invalid_argument("jet: negative order");
        return n;
    }
    void check_compatible(const ComponentJet& o) const {
        if (n_ != o.n_ || order_ != o.order_)
            throw std::invalid_argument("jet arithmetic: mismatched shape");
    }
    size_t flat(int l, int i, int j) const {
        return (static_cast<size_t>(l) * n_ + static_cast<size_t>(i)) * n_ + static_cast<size_t>(j);
    }

    int n_;
    int order_;
    std::vector<TruncatedPolynomial> comp_;
};

using ConnectionJet = ComponentJet<detail::connection_tag>;
using TensorJet = ComponentJet<detail::tensor_tag>;

/// n component polynomials of an origin-preserving vector field, each with
/// zero constant term, truncated at max_degree.
class VectorFieldJet {
public:
    VectorFieldJet(int n, int max_degree);

    int vars() const { return n_; }
    int max_degree() const { return max_degree_; }

    const TruncatedPolynomial& component(int i) const { return comp_[static_cast<size_t>(i)]; }

    void set_coeff(int component, const MultiIndex& m, const Rational& value);
    void add_coeff(int component, const MultiIndex& m, const Rational& value);

    bool is_zero() const {
        for (const auto& p : comp_)
            if (!p.is_zero()) return false;
        return true;
    }

    /// Smallest degree with a nonzero coefficient in any component;
    /// max_degree + 1 for the zero field.
    int lowest_degree() const;

    friend bool operator==(const VectorFieldJet& a, const VectorFieldJet& b) {
        return a.n_ == b.n_ && a.max_degree_ == b.max_degree_ && a.comp_ == b.comp_;
    }

private:
    int n_;
    int max_degree_;
    std::vector<TruncatedPolynomial> comp_;
};

/// Dimension of the degree-d homogeneous polynomials in n variables,
/// C(n+d-1, n-1).
Int jet_dimension_count(int n, int d);

/// Connection jet with every coefficient an integer drawn uniformly from
/// [-coeff_range, coeff_range]; identical seeds give identical jets.
ConnectionJet random_connection_jet(int n, int k, std::uint64_t seed, int coeff_range);

/// Vector field jet with integer coefficients in degrees min_degree..max_degree.
VectorFieldJet random_vector_field(int n, int min_degree, int max_degree, std::uint64_t seed,
                                   int coeff_range);

/// Jet truncated to order new_order <= current order.
template <class Tag>
ComponentJet<Tag> project_jet(const ComponentJet<Tag>& g, int new_order) {
    if (new_order > g.order())
        throw std::invalid_argument("project_jet: target order exceeds jet order");
    ComponentJet<Tag> out(g.vars(), new_order);
    const int n = g.vars();
    for (int l = 0; l < n; ++l)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                out.component(l, i, j) = g.component(l, i, j).truncated(new_order);
    return out;
}

/// Jet re-embedded at a higher order (coefficients unchanged).
template <class Tag>
ComponentJet<Tag> embed_jet(const ComponentJet<Tag>& g, int new_order) {
    if (new_order < g.order())
        throw std::invalid_argument("embed_jet: target order below jet order");
    ComponentJet<Tag> out(g.vars(), new_order);
    const int n = g.vars();
    for (int l = 0; l < n; ++l)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (const auto& [m, c] : g.component(l, i, j).terms())
                    out.component(l, i, j).set_coeff(m, c);
    return out;
}

/// Degree-m homogeneous part, embedded as an order-m jet.
template <class Tag>
ComponentJet<Tag> homogeneous_part(const ComponentJet<Tag>& g, int degree) {
    if (degree > g.order())
        throw std::invalid_argument("homogeneous_part: degree exceeds jet order");
    ComponentJet<Tag> out(g.vars(), degree);
    const int n = g.vars();
    for (int l = 0; l < n; ++l)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (const auto& [m, c] : g.component(l, i, j).terms())
                    if (m.degree() == degree) out.component(l, i, j).set_coeff(m, c);
    return out;
}

}  // namespace jetmoduli
