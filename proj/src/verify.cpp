#include <jetmoduli/verify.hpp>

#include <jetmoduli/lie_action.hpp>
#include <jetmoduli/normal_coords.hpp>
#include <jetmoduli/poincare.hpp>
#include <jetmoduli/stabilizer.hpp>

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <sstream>
#include <thread>

namespace jetmoduli {

namespace {

constexpr std::uint64_t kSeedBase = 20260801;
constexpr int kCoeffRange = 10;
constexpr int kSeedsPerCase = 5;

struct Failure {
    std::string what;
};

using CheckBody = std::function<std::string()>;  // returns detail, throws Failure

void fail(std::string msg) { throw Failure{std::move(msg)}; }

std::string case_tag(int n, int k) {
    return "(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")";
}

// Criterion 1: the difference definition, the partial-fraction expansion and
// the operator route produce identical coefficients.
std::string check_series_triple_agreement(bool) {
    const int K = 30;
    int compared = 0;
    for (int n = 1; n <= 6; ++n) {
        SeriesQ diff;
        for (int k = 0; k <= K; ++k) diff.coeffs.emplace_back(a_coeff(n, k));
        const SeriesQ expanded = expand_rational(closed_form(n), K);
        const SeriesQ operator_route = series_by_operator_route(n, K);
        for (int k = 0; k <= K; ++k) {
            if (diff.at(k) != expanded.at(k) || diff.at(k) != operator_route.at(k))
                fail("routes disagree at n=" + std::to_string(n) + ", k=" + std::to_string(k));
            if (!diff.at(k).is_integer()) fail("non-integer coefficient at n=" + std::to_string(n));
            if (n == 1 && !diff.at(k).is_zero()) fail("n=1 series is not identically zero");
            ++compared;
        }
    }
    return std::to_string(compared) + " coefficients, three routes each";
}

// Criterion 2: stabilizer dimensions at five random integer jets match the
// n/k table of the proposition.
std::string check_proposition_reproduction(bool deep) {
    std::vector<std::tuple<int, int, int>> table = {
        {1, 0, 1}, {1, 1, 1}, {1, 2, 1}, {1, 3, 1}, {2, 0, 2}, {2, 1, 0},
        {2, 2, 0}, {3, 0, 0}, {3, 1, 0}, {4, 0, 0},
    };
    if (deep) {
        table.emplace_back(4, 1, 0);
        table.emplace_back(4, 2, 0);
    }
    int cases = 0;
    for (const auto& [n, k, expected] : table) {
        for (int s = 0; s < kSeedsPerCase; ++s) {
            const auto dim = stabilizer_dim_generic(n, k, kSeedBase + static_cast<std::uint64_t>(100 * cases + s),
                                                    kCoeffRange);
            if (dim != expected)
                fail(case_tag(n, k) + " seed " + std::to_string(s) + ": stabilizer dim " +
                     std::to_string(dim) + ", proposition says " + std::to_string(expected));
        }
        ++cases;
    }
    return std::to_string(cases) + " (n,k) cases x " + std::to_string(kSeedsPerCase) + " seeds";
}

// Criterion 3: the witness connections make their stabilizer systems
// non-degenerate, and the generic n=2 constant system is the full-rank 2x4.
std::string check_witnesses(bool) {
    for (int n = 3; n <= 5; ++n) {
        const auto sys = stabilizer_system_0jet(witness_gamma(n));
        if (!kernel_basis(sys.matrix).empty())
            fail("constant witness in dimension " + std::to_string(n) + " has a nontrivial kernel");
    }
    const auto sys1 = stabilizer_system_1jet(witness_n2_first_order());
    if (!kernel_basis(sys1.matrix).empty()) fail("first-order n=2 witness has a nontrivial kernel");

    int full_rank = 0;
    for (int s = 0; s < kSeedsPerCase; ++s) {
        const auto g = sample_normal_jet(2, 0, kSeedBase + 31 + static_cast<std::uint64_t>(s), kCoeffRange);
        const auto sys0 = stabilizer_system_0jet(g);
        if (sys0.matrix.rows() != 2 || sys0.matrix.cols() != 4)
            fail("n=2 constant system is not 2x4");
        if (rank(sys0.matrix) == 2) ++full_rank;
    }
    if (full_rank < kSeedsPerCase)
        fail("generic n=2 constant system not of full rank 2 on all samples");
    return "witness kernels trivial (n=3..5 and first order), 2x4 system rank 2";
}

// Criterion 4: the exact rank of the action matrix reproduces the orbit
// dimension formula, and hence the published moduli dimensions.
std::string check_orbit_dimensions(bool deep) {
    std::vector<std::pair<int, int>> cases;
    for (int k = 0; k <= 2; ++k) cases.emplace_back(1, k);
    for (int k = 0; k <= 2; ++k) cases.emplace_back(2, k);
    for (int k = 0; k <= 2; ++k) cases.emplace_back(3, k);
    for (int k = 0; k <= (deep ? 2 : 1); ++k) cases.emplace_back(4, k);

    int idx = 0;
    for (const auto& [n, k] : cases) {
        const Int formula = orbit_dim_formula(n, k);
        for (int s = 0; s < kSeedsPerCase; ++s) {
            const auto g = random_connection_jet(n, k, kSeedBase + static_cast<std::uint64_t>(1000 + 50 * idx + s),
                                                 kCoeffRange);
            const Int empirical(rank(action_matrix(g).base));
            if (empirical != formula)
                fail(case_tag(n, k) + ": empirical orbit dim " + empirical.str() + " vs formula " +
                     formula.str());
            if (dim_F(n, k) - empirical != dim_M(n, k))
                fail(case_tag(n, k) + ": moduli dimension mismatch against empirical rank");
        }
        ++idx;
    }
    if (dim_M(3, 1) != 51) fail("dim M_1 in dimension 3 is not 51");
    if (dim_M(4, 0) != 8) fail("dim M_0 in dimension 4 is not 8");
    return std::to_string(cases.size()) + " (n,k) cases x " + std::to_string(kSeedsPerCase) +
           " seeds, moduli dims included";
}

// Criterion 5: fields of lowest degree >= k+3 act trivially on order-k jets.
std::string check_filtration_triviality(bool) {
    int done = 0;
    for (int t = 0; t < 50; ++t) {
        const int n = 1 + t % 3;
        const int k = (t / 3) % 3;
        const auto g = random_connection_jet(n, k, kSeedBase + 2000 + static_cast<std::uint64_t>(t), kCoeffRange);
        const auto v = random_vector_field(n, k + 3, k + 4, kSeedBase + 2100 + static_cast<std::uint64_t>(t),
                                           kCoeffRange);
        if (!lie_derivative(v, g).is_zero())
            fail("high-order field acts nontrivially at trial " + std::to_string(t));
        ++done;
    }
    return std::to_string(done) + " random (jet, field) pairs, derivative exactly zero";
}

// Criterion 6: jet projection commutes with the derivative.
std::string check_projection_commutes(bool) {
    int done = 0;
    for (int t = 0; t < 50; ++t) {
        const int n = 1 + t % 3;
        const int k = 1 + (t / 3) % 2;
        const auto g = random_connection_jet(n, k, kSeedBase + 3000 + static_cast<std::uint64_t>(t), kCoeffRange);
        const auto v = random_vector_field(n, 1, k + 2, kSeedBase + 3100 + static_cast<std::uint64_t>(t),
                                           kCoeffRange);
        if (project_jet(lie_derivative(v, g), k - 1) != lie_derivative(v, project_jet(g, k - 1)))
            fail("projection does not commute at trial " + std::to_string(t));
        ++done;
    }
    return std::to_string(done) + " random pairs across orders";
}

// Criterion 7: derivative along a commutator equals the commutator of
// derivatives (tensor pattern on the right).
std::string check_action_homomorphism(bool) {
    int done = 0;
    for (int t = 0; t < 25; ++t) {
        const int n = 1 + t % 3;
        const int k = (t / 3) % 3;
        const auto g = random_connection_jet(n, k, kSeedBase + 4000 + static_cast<std::uint64_t>(t), kCoeffRange);
        const auto v = random_vector_field(n, 1, k + 2, kSeedBase + 4100 + static_cast<std::uint64_t>(t),
                                           kCoeffRange);
        const auto w = random_vector_field(n, 1, k + 2, kSeedBase + 4200 + static_cast<std::uint64_t>(t),
                                           kCoeffRange);
        const TensorJet lhs = lie_derivative(vf_bracket(v, w, k + 2), g);
        const TensorJet rhs =
            tensor_lie_derivative(v, lie_derivative(w, g)) - tensor_lie_derivative(w, lie_derivative(v, g));
        if (lhs != rhs) fail("bracket identity fails at trial " + std::to_string(t));
        ++done;
    }
    return std::to_string(done) + " random triples, identity exact";
}

// Criterion 8: kernel-sampled jets are normal; any single constrained
// coefficient bumped off its value breaks normality.
std::string check_normal_equivalence(bool) {
    int passed = 0, broken = 0;
    for (int t = 0; t < 20; ++t) {
        const int n = 1 + t % 3;
        const int k = (t / 3) % 3;
        auto g = sample_normal_jet(n, k, kSeedBase + 5000 + static_cast<std::uint64_t>(t), kCoeffRange);
        if (!is_normal_jet(g)) fail("sampled jet is not normal at trial " + std::to_string(t));
        ++passed;

        DeterministicRng rng(kSeedBase + 5100 + static_cast<std::uint64_t>(t));
        const auto monomials = multi_indices_in_range(n, 0, k);
        const int l = static_cast<int>(rng.uniform(0, n - 1));
        const int i = static_cast<int>(rng.uniform(0, n - 1));
        const int j = static_cast<int>(rng.uniform(0, n - 1));
        const auto& m = monomials[static_cast<size_t>(rng.uniform(0, static_cast<long long>(monomials.size()) - 1))];
        g.component(l, i, j).add_coeff(m, Rational(1));
        if (is_normal_jet(g)) fail("single-coefficient violation went undetected at trial " + std::to_string(t));
        ++broken;
    }
    return std::to_string(passed) + " sampled jets normal, " + std::to_string(broken) +
           " perturbed jets rejected";
}

// Criterion 9: both operator identities through 40 coefficients, plus the
// phi_m recursion.
std::string check_operator_lemma(bool) {
    for (int N = 2; N <= 6; ++N)
        if (!operator_lemma_check(N, 40)) fail("operator identity fails for N=" + std::to_string(N));

    SeriesQ phi = geometric_series(40);
    for (int m = 1; m <= 6; ++m) {
        phi = apply_theta(theta(), phi);
        for (int k = 0; k <= 40; ++k) {
            Rational km(1);
            for (int p = 0; p < m; ++p) km *= Rational(k);
            if (phi.at(k) != km) fail("phi recursion wrong at m=" + std::to_string(m));
        }
    }

    for (int n = 2; n <= 5; ++n) {
        const SeriesQ op = series_by_operator_route(n, 30);
        for (int k = 0; k <= 30; ++k)
            if (op.at(k) != Rational(a_coeff(n, k)))
                fail("operator route misses a_k at n=" + std::to_string(n));
    }
    return "identities N=2..6 through t^40, phi_m for m<=6, operator route n=2..5";
}

// Criterion 10: coefficients are polynomial in k with the predicted leading
// coefficient, and the top pole carries n(n^2-1).
std::string check_polynomiality(bool) {
    for (int n = 2; n <= 6; ++n) {
        const auto fit = fit_polynomial_in_k(n);  // throws on nonvanishing differences
        Int fact = 1;
        for (int i = 2; i <= n - 1; ++i) fact *= i;
        const Rational expected_leading(Int(n) * (Int(n) * n - 1), fact);
        if (fit.back() != expected_leading)
            fail("leading coefficient wrong at n=" + std::to_string(n));
        if (functional_moduli_estimate(n) != Int(n) * n * n - n)
            fail("top pole coefficient wrong at n=" + std::to_string(n));
    }
    return "degree n-1 fits for n=2..6, leading and pole coefficients match";
}

struct CheckSpec {
    const char* id;
    const char* name;
    const char* paper_ref;
    std::string (*body)(bool deep);
};

constexpr CheckSpec kChecks[] = {
    {"C01", "series-triple-agreement", "Eq. (16); Eq. (18); Eq. (20)", check_series_triple_agreement},
    {"C02", "stabilizer-proposition", "§4 Proposition", check_proposition_reproduction},
    {"C03", "witness-systems", "Eq. (9); Eq. (11); Eq. (12)", check_witnesses},
    {"C04", "orbit-dimension-cross-check", "§5 orbit dimensions; Eq. (5)", check_orbit_dimensions},
    {"C05", "filtration-triviality", "§2 filtration G_k", check_filtration_triviality},
    {"C06", "projection-commutes", "§2 commuting diagram", check_projection_commutes},
    {"C07", "action-homomorphism", "Eq. (1); Eq. (3)", check_action_homomorphism},
    {"C08", "normal-coordinate-equivalence", "§3 Lemma; Eq. (6)-(8)", check_normal_equivalence},
    {"C09", "operator-lemma", "§5 Lemma; φ_m recursion", check_operator_lemma},
    {"C10", "polynomiality", "Theorem 1; Eq. (20) poles", check_polynomiality},
};

}  // namespace

int resolve_verify_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("JETMODULI_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::vector<CheckResult> run_acceptance_suite(const VerifyOptions& options) {
    const int total = static_cast<int>(std::size(kChecks));
    std::vector<CheckResult> results(static_cast<size_t>(total));
    const int threads = std::min(resolve_verify_threads(options.threads), total);

    std::atomic<int> next{0};
    const auto worker = [&]() {
        for (;;) {
            const int idx = next.fetch_add(1);
            if (idx >= total) return;
            const CheckSpec& spec = kChecks[idx];
            CheckResult r;
            r.id = spec.id;
            r.name = spec.name;
            r.paper_ref = spec.paper_ref;
            try {
                r.detail = spec.body(options.deep);
                r.pass = true;
            } catch (const Failure& f) {
                r.pass = false;
                r.detail = f.what;
            } catch (const std::exception& e) {
                r.pass = false;
                r.detail = std::string("unexpected error: ") + e.what();
            }
            results[static_cast<size_t>(idx)] = std::move(r);
        }
    };

    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(threads));
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return results;
}

}  // namespace jetmoduli
