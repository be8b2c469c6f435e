#include <jetmoduli/jets.hpp>
#include <jetmoduli/json_io.hpp>
#include <jetmoduli/lie_action.hpp>
#include <jetmoduli/poincare.hpp>

#include <doctest.h>

using namespace jetmoduli;

TEST_CASE("random connection jets have the right slot count") {
    // Slot count n^3 C(n+k, n), cross-checked against the jet space dimension.
    CHECK(Int(tensor_basis(2, 0).size()) == dim_F(2, 0));
    CHECK(tensor_basis(2, 0).size() == 8);
    CHECK(Int(tensor_basis(3, 1).size()) == dim_F(3, 1));
    CHECK(tensor_basis(3, 1).size() == 108);

    // 27 components, 4 monomials each for n=3, k=1.
    const auto g = random_connection_jet(3, 1, 42, 5);
    int slots = 0;
    for (int l = 0; l < 3; ++l)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                CHECK(g.component(l, i, j).degree_bound() == 1);
                slots += static_cast<int>(multi_indices_in_range(3, 0, 1).size());
            }
    CHECK(slots == 108);
}

TEST_CASE("random connection jets are deterministic in the seed") {
    const auto a = random_connection_jet(2, 2, 7, 10);
    const auto b = random_connection_jet(2, 2, 7, 10);
    const auto c = random_connection_jet(2, 2, 8, 10);
    CHECK(a == b);
    CHECK(a != c);

    // Coefficients stay inside the advertised range.
    for (int l = 0; l < 2; ++l)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (const auto& [m, v] : a.component(l, i, j).terms()) {
                    CHECK(v.is_integer());
                    CHECK(abs(v) <= Rational(10));
                }
}

TEST_CASE("projection tower") {
    const auto g = random_connection_jet(2, 2, 11, 6);
    const auto g1 = project_jet(g, 1);
    CHECK(g1.order() == 1);
    for (int l = 0; l < 2; ++l)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (const auto& [m, v] : g1.component(l, i, j).terms()) {
                    CHECK(m.degree() <= 1);
                    CHECK(v == g.component(l, i, j).coeff(m));
                }

    CHECK(project_jet(g, 2) == g);                          // own order: identity
    CHECK(project_jet(g1, 0) == project_jet(g, 0));         // tower consistency
    CHECK_THROWS_AS(project_jet(g1, 2), std::invalid_argument);
}

TEST_CASE("vector field jets must vanish at the origin") {
    VectorFieldJet v(2, 2);
    CHECK_THROWS_AS(v.set_coeff(0, MultiIndex(2), Rational(1)), std::invalid_argument);
    v.set_coeff(0, MultiIndex(2), Rational(0));  // explicit zero is fine

    const auto w = random_vector_field(2, 2, 3, 5, 4);
    CHECK(w.lowest_degree() >= 2);
    CHECK_THROWS_AS(random_vector_field(2, 0, 2, 5, 4), std::invalid_argument);
}

TEST_CASE("degenerate variable count is rejected") {
    CHECK_THROWS_AS(ConnectionJet(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(TruncatedPolynomial(0, 1), std::invalid_argument);
}

TEST_CASE("jet json round trip") {
    for (int t = 0; t < 6; ++t) {
        const int n = 1 + t % 3;
        const int k = t % 2;
        const auto g = random_connection_jet(n, k, 910 + static_cast<std::uint64_t>(t), 9);
        CHECK(connection_jet_from_json(jet_to_json(g)) == g);
    }

    // Schema spot check: a one-term jet.
    ConnectionJet g(2, 1);
    MultiIndex x2(2);
    ++x2[1];
    g.component(0, 1, 1).set_coeff(x2, Rational(Int(-3), Int(2)));
    const Json j = jet_to_json(g);
    CHECK(j["n"] == 2);
    CHECK(j["order"] == 1);
    CHECK(j["components"]["1,2,2"]["0,1"] == "-3/2");
}
