#include <jetmoduli/jets.hpp>

#include <stdexcept>

namespace jetmoduli {

long long DeterministicRng::uniform(long long lo, long long hi) {
    if (lo > hi) throw std::invalid_argument("DeterministicRng::uniform: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<long long>(next());  // full 64-bit range
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span + 1) % span;
    std::uint64_t draw;
    do {
        draw = next();
    } while (draw > limit);
    return lo + static_cast<long long>(draw % span);
}

VectorFieldJet::VectorFieldJet(int n, int max_degree)
    : n_(n), max_degree_(max_degree), comp_(static_cast<size_t>(n), TruncatedPolynomial(n, max_degree)) {
    if (n < 1) throw std::invalid_argument("VectorFieldJet: need at least one variable");
    if (max_degree < 1) throw std::invalid_argument("VectorFieldJet: max_degree must be >= 1");
}

void VectorFieldJet::set_coeff(int component, const MultiIndex& m, const Rational& value) {
    if (m.degree() == 0 && !value.is_zero())
        throw std::invalid_argument("VectorFieldJet: field must vanish at the origin");
    comp_[static_cast<size_t>(component)].set_coeff(m, value);
}

void VectorFieldJet::add_coeff(int component, const MultiIndex& m, const Rational& value) {
    set_coeff(component, m, comp_[static_cast<size_t>(component)].coeff(m) + value);
}

int VectorFieldJet::lowest_degree() const {
    int lowest = max_degree_ + 1;
    for (const auto& p : comp_)
        for (const auto& [m, c] : p.terms())
            if (m.degree() < lowest) lowest = m.degree();
    return lowest;
}

Int jet_dimension_count(int n, int d) {
    if (n < 1 || d < 0) throw std::invalid_argument("jet_dimension_count: bad arguments");
    return monomial_count(n, d);
}

ConnectionJet random_connection_jet(int n, int k, std::uint64_t seed, int coeff_range) {
    if (coeff_range < 1) throw std::invalid_argument("random_connection_jet: coeff_range must be >= 1");
    ConnectionJet g(n, k);
    DeterministicRng rng(seed);
    const auto monomials = multi_indices_in_range(n, 0, k);
    for (int l = 0; l < n; ++l)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (const auto& m : monomials)
                    g.component(l, i, j).set_coeff(m, Rational(rng.uniform(-coeff_range, coeff_range)));
    return g;
}

VectorFieldJet random_vector_field(int n, int min_degree, int max_degree, std::uint64_t seed,
                                   int coeff_range) {
    if (min_degree < 1) throw std::invalid_argument("random_vector_field: min_degree must be >= 1");
    if (max_degree < min_degree)
        throw std::invalid_argument("random_vector_field: empty degree range");
    VectorFieldJet v(n, max_degree);
    DeterministicRng rng(seed);
    const auto monomials = multi_indices_in_range(n, min_degree, max_degree);
    for (int c = 0; c < n; ++c)
        for (const auto& m : monomials)
            v.set_coeff(c, m, Rational(rng.uniform(-coeff_range, coeff_range)));
    return v;
}

}  // namespace jetmoduli
