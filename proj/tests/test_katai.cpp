#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ulab/katai.hpp"
#include "ulab/kernels.hpp"

using namespace ulab;

namespace {
cdouble e(double x) { return std::polar(1.0, 2.0 * std::numbers::pi * x); }
}  // namespace

TEST_CASE("prime-pair statistic pinned values") {
    const std::vector<cdouble> ones(1000, 1.0);
    const auto r1 = katai_statistic(ones, 1, 30);
    CHECK(std::abs(r1.pair_statistic - 1.0) < 1e-12);
    CHECK(r1.argmax_pair.first > 1);
    CHECK(r1.argmax_pair.first < r1.argmax_pair.second);
    CHECK(r1.argmax_pair.second < 30);
    CHECK_FALSE(r1.window_warning);

    // Completely multiplicative unimodular input: the pair average factors
    // exactly, so the statistic is 1.
    const auto vals = evaluate_range(MultiplicativeFunction::random_unimodular(5), 10000);
    const auto r2 = katai_statistic(vals, 1, 30);
    CHECK(std::abs(r2.pair_statistic - 1.0) < 1e-9);
}

TEST_CASE("linear phase at the golden ratio is nearly orthogonal across prime pairs") {
    const std::int64_t N = 100000;
    const double alpha = (std::sqrt(5.0) - 1.0) / 2.0;
    std::vector<cdouble> f(N);
    for (std::int64_t n = 1; n <= N; ++n) f[n - 1] = e(alpha * static_cast<double>(n));
    const auto r = katai_statistic(f, 1, 30);
    CHECK(r.pair_statistic < 0.05);

    // Empirical orthogonality implication: a tiny pair statistic should come
    // with small correlation against the multiplicative test family. A
    // violation is a reportable finding, not an assertion failure.
    if (r.pair_statistic < 0.01) {
        const double corr = chi_correlation(f, default_test_family(50, 1234));
        if (corr >= 0.2) {
            MESSAGE("finding: pair statistic " << r.pair_statistic << " but correlation " << corr);
        }
    }
}

TEST_CASE("prime-pair statistic input guards") {
    const std::vector<cdouble> ones(100, 1.0);
    CHECK_THROWS_AS(katai_statistic(ones, 24, 28), parameter_error);  // no primes in (24, 28)
    CHECK_THROWS_AS(katai_statistic(ones, 5, 3), parameter_error);
    CHECK_THROWS_AS(katai_statistic(std::vector<cdouble>(10, 2.0), 1, 10), input_error);
    const auto warn = katai_statistic(ones, 1, 30);  // 30^2 > 100
    CHECK(warn.window_warning);
}

TEST_CASE("correlation against a family containing the function itself is 1") {
    const auto chi = MultiplicativeFunction::character_like(3);
    const auto vals = evaluate_range(chi, 5000);
    const double corr = chi_correlation(vals, {MultiplicativeFunction::one(), chi});
    CHECK(std::abs(corr - 1.0) < 1e-12);
}

TEST_CASE("frequency scan of the constant function concentrates at step-1 frequencies") {
    const Modulus mod = select_modulus(100, 6);
    const auto chiN = truncate(MultiplicativeFunction::one(), mod);
    const auto hits = frequency_scan(chiN, 0.3, 8);
    REQUIRE_FALSE(hits.empty());
    CHECK(hits.front().xi == 0);
    CHECK(hits.front().best_Q == 1);
    CHECK(std::abs(hits.front().magnitude - 1.0) < 1e-9);
    for (std::size_t i = 0; i + 1 < hits.size(); ++i) CHECK(hits[i].magnitude >= hits[i + 1].magnitude);
    for (const auto& h : hits) {
        // All concentration sits inside the main lobe near xi = 0.
        const std::int64_t dist = std::min(h.xi, mod.ntilde - h.xi);
        CHECK(dist <= mod.ntilde / 50);
    }
}

TEST_CASE("frequency scan of the obstruction function finds the half-frequency peak") {
    const Modulus mod = select_modulus(2000, 6);
    const auto chiN = truncate(MultiplicativeFunction::minus_at_two(), mod);
    const auto hits = frequency_scan(chiN, 0.2, 8);
    bool found = false;
    for (const auto& h : hits) {
        // ntilde * ||2 xi / ntilde|| small <=> xi sits next to ntilde/2 or 0.
        std::int64_t two_xi = (2 * h.xi) % mod.ntilde;
        std::int64_t dist = std::min(two_xi, mod.ntilde - two_xi);
        if (dist <= 8 && h.magnitude >= 0.2 && std::min(h.xi, mod.ntilde - h.xi) > mod.ntilde / 4) {
            found = true;
        }
    }
    CHECK(found);

    CHECK(frequency_scan(chiN, 1.0, 8).empty());
}

TEST_CASE("quadratic phase correlation recovers an exact grid frequency") {
    const std::int64_t ntilde = 601, k = 17;
    std::vector<cdouble> g(ntilde);
    for (std::int64_t n = 0; n < ntilde; ++n) {
        g[n] = e(static_cast<double>((n * n % ntilde) * k % ntilde) / ntilde);
    }
    const auto r = quadratic_phase_correlation(CyclicSignal(ntilde, g), 4 * ntilde, false);
    CHECK(std::abs(r.value - 1.0) < 1e-9);
    const double expect = static_cast<double>(ntilde - k) / ntilde;  // conjugate frequency
    CHECK(std::abs(r.alpha - expect) < 1e-9);

    const auto zero = quadratic_phase_correlation(CyclicSignal(ntilde, std::vector<cdouble>(ntilde)),
                                                  4 * ntilde, true);
    CHECK(zero.value == 0.0);
}

TEST_CASE("correlation value never exceeds the sup-norm") {
    const std::int64_t ntilde = 601;
    std::vector<cdouble> g(ntilde);
    double sup = 0;
    for (std::int64_t n = 0; n < ntilde; ++n) {
        g[n] = cdouble(std::sin(0.1 * n), std::cos(0.37 * n)) * 0.5;
        sup = std::max(sup, std::abs(g[n]));
    }
    const auto r = quadratic_phase_correlation(CyclicSignal(ntilde, g), 2 * ntilde, true);
    CHECK(r.value <= sup + 1e-9);
    CHECK(r.alpha >= 0.0);
    CHECK(r.alpha < 1.0);
}

TEST_CASE("stripping the structured part lowers the quadratic correlation") {
    const Modulus mod = select_modulus(100, 6);  // ntilde = 6007
    const auto chiN = truncate(MultiplicativeFunction::minus_at_two(), mod);
    const auto dec = u2_decompose(chiN, 2, 2, 0.3);
    const auto whole = quadratic_phase_correlation(to_signal(chiN), 2 * mod.ntilde, false);
    const auto resid = quadratic_phase_correlation(dec.chi_u, 2 * mod.ntilde, false);
    CHECK(resid.value < whole.value);
}
