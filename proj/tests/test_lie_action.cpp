#include <jetmoduli/lie_action.hpp>

#include <doctest.h>

using namespace jetmoduli;

namespace {

MultiIndex unit(int n, int var) {
    MultiIndex m(n);
    ++m[var];
    return m;
}

VectorFieldJet truncate_field(const VectorFieldJet& v, int bound) {
    VectorFieldJet out(v.vars(), bound);
    for (int c = 0; c < v.vars(); ++c)
        for (const auto& [m, val] : v.component(c).terms())
            if (m.degree() <= bound) out.set_coeff(c, m, val);
    return out;
}

}  // namespace

TEST_CASE("derivative of a constant 1d jet along x d/dx") {
    // Five terms evaluate to 0 - c + c + c + 0 = c.
    ConnectionJet g(1, 0);
    g.component(0, 0, 0).set_coeff(MultiIndex(1), Rational(5));
    VectorFieldJet v(1, 2);
    v.set_coeff(0, unit(1, 0), Rational(1));

    const TensorJet t = lie_derivative(v, g);
    CHECK(t.order() == 0);
    CHECK(t.component(0, 0, 0).coeff(MultiIndex(1)) == Rational(5));
}

TEST_CASE("derivative of the flat 1d jet along x^2 d/dx") {
    // Only the second-derivative term survives: d^2(x^2)/dx^2 = 2.
    ConnectionJet g(1, 0);
    VectorFieldJet v(1, 2);
    MultiIndex x2(1);
    x2[0] = 2;
    v.set_coeff(0, x2, Rational(1));

    const TensorJet t = lie_derivative(v, g);
    CHECK(t.component(0, 0, 0).coeff(MultiIndex(1)) == Rational(2));
}

TEST_CASE("identity linear field reproduces the constant part") {
    // For a 0-jet with constants and V = sum_s x^s d_s the value at the origin
    // is -g + g + g = g, componentwise.
    for (int n : {2, 3}) {
        const auto g = random_connection_jet(n, 0, 321, 7);
        VectorFieldJet v(n, 2);
        for (int s = 0; s < n; ++s) v.set_coeff(s, unit(n, s), Rational(1));
        const TensorJet t = lie_derivative(v, g);
        for (int l = 0; l < n; ++l)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    CHECK(t.component(l, i, j).coeff(MultiIndex(n)) ==
                          g.component(l, i, j).coeff(MultiIndex(n)));
    }
}

TEST_CASE("vector field brackets") {
    SUBCASE("[x d/dx, x^2 d/dx] = x^2 d/dx") {
        VectorFieldJet v(1, 3), w(1, 3);
        v.set_coeff(0, unit(1, 0), Rational(1));
        MultiIndex x2(1);
        x2[0] = 2;
        w.set_coeff(0, x2, Rational(1));
        const auto b = vf_bracket(v, w, 3);
        CHECK(b.component(0).coeff(x2) == Rational(1));
        CHECK(b.component(0).terms().size() == 1);
    }
    SUBCASE("[v, v] = 0") {
        const auto v = random_vector_field(2, 1, 3, 99, 6);
        CHECK(vf_bracket(v, v, 3).is_zero());
    }
    SUBCASE("[x1 d2, x2 d1] = x1 d1 - x2 d2") {
        VectorFieldJet v(2, 2), w(2, 2);
        v.set_coeff(1, unit(2, 0), Rational(1));
        w.set_coeff(0, unit(2, 1), Rational(1));
        const auto b = vf_bracket(v, w, 2);
        CHECK(b.component(0).coeff(unit(2, 0)) == Rational(1));
        CHECK(b.component(1).coeff(unit(2, 1)) == Rational(-1));
        CHECK(b.component(0).terms().size() == 1);
        CHECK(b.component(1).terms().size() == 1);
    }
    SUBCASE("mismatched dimension is rejected") {
        CHECK_THROWS_AS(vf_bracket(VectorFieldJet(1, 2), VectorFieldJet(2, 2), 2),
                        std::invalid_argument);
    }
}

TEST_CASE("action matrix shape") {
    const auto am2 = action_matrix(random_connection_jet(2, 0, 5, 9));
    CHECK(am2.base.rows() == 8);
    CHECK(am2.base.cols() == 10);

    const auto am3 = action_matrix(random_connection_jet(3, 1, 5, 9));
    CHECK(am3.base.rows() == 108);
    CHECK(am3.base.cols() == 57);

    // Invariant shape: rows n^3 C(n+k,n), cols n (C(n+k+2,n) - 1).
    CHECK(Int(am3.base.rows()) == Int(27) * binomial(4, 3));
    CHECK(Int(am3.base.cols()) == Int(3) * (binomial(6, 3) - 1));
}

TEST_CASE("action matrix reproduces the derivative on random pairs") {
    int trials = 0;
    for (int jt = 0; jt < 10; ++jt) {
        const int n = 1 + jt % 3;
        const int k = jt % 2;
        const auto g = random_connection_jet(n, k, 4000 + static_cast<std::uint64_t>(jt), 8);
        const auto am = action_matrix(g);
        for (int vt = 0; vt < 10; ++vt) {
            const auto v =
                random_vector_field(n, 1, k + 2, 4100 + static_cast<std::uint64_t>(10 * jt + vt), 8);
            const QVector lhs = am.base * vf_coords(v);
            const QVector rhs = tensor_coords(lie_derivative(v, g));
            CHECK(lhs == rhs);
            ++trials;
        }
    }
    CHECK(trials == 100);
}

TEST_CASE("projection commutes with the derivative") {
    for (int t = 0; t < 10; ++t) {
        const int n = 1 + t % 3;
        const int k = 1 + t % 2;
        const auto g = random_connection_jet(n, k, 6200 + static_cast<std::uint64_t>(t), 9);
        const auto v = random_vector_field(n, 1, k + 2, 6300 + static_cast<std::uint64_t>(t), 9);
        CHECK(project_jet(lie_derivative(v, g), k - 1) == lie_derivative(v, project_jet(g, k - 1)));
    }
}

TEST_CASE("fields of high lowest degree act trivially") {
    for (int t = 0; t < 10; ++t) {
        const int n = 1 + t % 3;
        const int k = t % 3;
        const auto g = random_connection_jet(n, k, 7000 + static_cast<std::uint64_t>(t), 9);
        const auto v = random_vector_field(n, k + 3, k + 4, 7100 + static_cast<std::uint64_t>(t), 9);
        CHECK(lie_derivative(v, g).is_zero());
    }
}

TEST_CASE("result reads the field only through degree order + 2") {
    const int n = 2, k = 1;
    const auto g = random_connection_jet(n, k, 8000, 9);
    const auto v = random_vector_field(n, 1, k + 3, 8100, 9);  // one degree beyond the cutoff
    CHECK(lie_derivative(v, g) == lie_derivative(truncate_field(v, k + 2), g));
}

TEST_CASE("bracket identity on random triples") {
    for (int t = 0; t < 8; ++t) {
        const int n = 1 + t % 3;
        const int k = t % 3;
        const auto g = random_connection_jet(n, k, 9000 + static_cast<std::uint64_t>(t), 6);
        const auto v = random_vector_field(n, 1, k + 2, 9100 + static_cast<std::uint64_t>(t), 6);
        const auto w = random_vector_field(n, 1, k + 2, 9200 + static_cast<std::uint64_t>(t), 6);
        const TensorJet lhs = lie_derivative(vf_bracket(v, w, k + 2), g);
        const TensorJet rhs = tensor_lie_derivative(v, lie_derivative(w, g)) -
                              tensor_lie_derivative(w, lie_derivative(v, g));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("insufficient field degree and mismatched dimension are rejected") {
    const auto g = random_connection_jet(2, 1, 1, 5);
    CHECK_THROWS_AS(lie_derivative(random_vector_field(2, 1, 2, 1, 5), g), std::invalid_argument);
    CHECK_THROWS_AS(lie_derivative(random_vector_field(3, 1, 3, 1, 5), g), std::invalid_argument);
}
