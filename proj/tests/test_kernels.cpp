#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ulab/gowers.hpp"
#include "ulab/kernels.hpp"

using namespace ulab;

namespace {

double u2_of(const CyclicSignal& f) { return u2_norm(f); }

CyclicSignal minus_mean(const CyclicSignal& f) {
    cdouble mean = 0;
    for (const auto& v : f.values()) mean += v;
    mean /= static_cast<double>(f.modulus());
    std::vector<cdouble> vals = f.values();
    for (auto& v : vals) v -= mean;
    return CyclicSignal(f.modulus(), std::move(vals));
}

void check_kernel_invariants(const Kernel& k) {
    double sum = 0;
    for (double v : k.values) {
        CHECK(v >= -1e-9);
        sum += v;
    }
    CHECK(std::abs(sum / static_cast<double>(k.modulus) - 1.0) < 1e-10);
}

}  // namespace

TEST_CASE("triangular-spectrum kernel pinned values") {
    const auto k = fejer_kernel(11, 2);
    check_kernel_invariants(k);
    CHECK(std::abs(k.values[0] - 2.0) < 1e-10);
    for (int x = 0; x < 11; ++x) {
        CHECK(std::abs(k.values[x] - (1.0 + std::cos(2.0 * std::numbers::pi * x / 11.0))) < 1e-10);
    }
    const auto hat = dft(std::vector<cdouble>(k.values.begin(), k.values.end()));
    CHECK(std::abs(hat[0] - 1.0) < 1e-10);
    CHECK(std::abs(hat[1] - 0.5) < 1e-10);
    CHECK(std::abs(hat[10] - 0.5) < 1e-10);
    for (int xi = 2; xi <= 9; ++xi) CHECK(std::abs(hat[xi]) < 1e-10);

    const auto flat = fejer_kernel(601, 1);
    for (double v : flat.values) CHECK(std::abs(v - 1.0) < 1e-10);

    check_kernel_invariants(fejer_kernel(601, 50));
    CHECK_THROWS_AS(fejer_kernel(11, 6), parameter_error);
}

TEST_CASE("uniformity kernel pinned spectrum at (11, 2, 1, 1)") {
    const auto k = uniformity_kernel(11, 2, 1, 1.0);
    check_kernel_invariants(k);
    REQUIRE(k.closed_form.has_value());
    CHECK(k.closed_form->fejer_width() == 2);

    auto xi_set = kernel_spectrum_set(*k.closed_form, 11);
    std::sort(xi_set.begin(), xi_set.end());
    CHECK(xi_set == std::vector<std::int64_t>{0, 5, 6});
    CHECK(std::abs(kernel_coefficient(*k.closed_form, 11, 0) - 1.0) < 1e-12);
    CHECK(std::abs(kernel_coefficient(*k.closed_form, 11, 5) - 0.5) < 1e-12);
    CHECK(std::abs(kernel_coefficient(*k.closed_form, 11, 6) - 0.5) < 1e-12);
    CHECK(kernel_coefficient(*k.closed_form, 11, 3) == 0.0);
}

TEST_CASE("degenerate parameters give the constant kernel") {
    const auto k = uniformity_kernel(601, 1, 1, 1.0);
    for (double v : k.values) CHECK(std::abs(v - 1.0) < 1e-10);
}

TEST_CASE("closed-form coefficients match the transform") {
    const auto k = uniformity_kernel(601, 6, 3, 0.7);
    check_kernel_invariants(k);
    const auto hat = dft(std::vector<cdouble>(k.values.begin(), k.values.end()));
    for (std::int64_t xi = 0; xi < 601; ++xi) {
        CHECK(std::abs(hat[xi] - kernel_coefficient(*k.closed_form, 601, xi)) < 1e-10);
    }
}

TEST_CASE("kernel guard and coprimality") {
    CHECK_THROWS_AS(uniformity_kernel(601, 6, 3, 0.4), parameter_error);  // 2m = 1440 > 601
    CHECK_THROWS_AS(uniformity_kernel(11, 11, 1, 1.0), parameter_error);  // gcd(Q, 11) != 1
}

TEST_CASE("spectrum cardinality is modulus-independent") {
    for (const auto& p : {KernelParams{2, 2, 0.8}, KernelParams{1, 1, 0.9}, KernelParams{6, 2, 0.7}}) {
        CHECK(kernel_spectrum_set(p, 601).size() == kernel_spectrum_set(p, 1201).size());
    }
}

TEST_CASE("kernel coefficient monotonicity along valid chains") {
    CHECK(kernel_monotonicity(601, {2, 1, 1.0}, {2, 1, 1.0}));
    CHECK(kernel_monotonicity(601, {2, 1, 1.0}, {2, 2, 0.5}));
    CHECK(kernel_monotonicity(601, {2, 1, 1.0}, {6, 2, 0.5}));
    CHECK_THROWS_AS(kernel_monotonicity(601, {2, 1, 0.5}, {2, 2, 1.0}), parameter_error);  // theta rises
    CHECK_THROWS_AS(kernel_monotonicity(601, {6, 1, 1.0}, {2, 2, 0.5}), parameter_error);  // Q not multiple
    CHECK_THROWS_AS(kernel_monotonicity(601, {2, 3, 1.0}, {2, 2, 0.5}), parameter_error);  // V shrinks
}

TEST_CASE("weak decomposition: constant-kernel limit and reconstruction") {
    const Modulus mod = select_modulus(100, 6);  // ntilde = 6007
    const auto chiN = truncate(MultiplicativeFunction::minus_at_two(), mod);
    const auto r = u2_decompose(chiN, 1, 1, 1.0);

    cdouble mean = 0;
    for (const auto& v : chiN.values) mean += v;
    mean /= static_cast<double>(mod.ntilde);
    cdouble u_mean = 0;
    for (std::int64_t n = 0; n < mod.ntilde; ++n) {
        CHECK(std::abs(r.chi_s.values()[n] - mean) < 1e-10);
        u_mean += r.chi_u.values()[n];
        const cdouble back = r.chi_s.values()[n] + r.chi_u.values()[n] + r.chi_e.values()[n];
        CHECK(std::abs(back - chiN.values[n]) < 1e-12);
        CHECK(std::abs(r.chi_e.values()[n]) == 0.0);
    }
    CHECK(std::abs(u_mean) / static_cast<double>(mod.ntilde) < 1e-12);
    CHECK(r.sup_chi_s <= 1.0 + 1e-9);
    CHECK(r.measured_lipschitz <= r.lipschitz_bound + 1e-9);
}

TEST_CASE("weak decomposition strips the alternating-frequency peak") {
    const Modulus mod = select_modulus(100, 6);
    const auto chiN = truncate(MultiplicativeFunction::minus_at_two(), mod);
    // (Q, V) = (2, 2): the kernel spectrum covers both the xi ~ 0 and the
    // xi ~ ntilde/2 clusters carrying the 1/3 and -2/3 correlations.
    const auto r = u2_decompose(chiN, 2, 2, 0.3);
    const double residual = u2_of(r.chi_u);
    const double centered = u2_of(minus_mean(to_signal(chiN)));
    CHECK(residual < centered);
    CHECK(r.measured_lipschitz <= r.lipschitz_bound + 1e-9);
    CHECK(std::abs(r.measured_u2 - residual) < 1e-12);
}

TEST_CASE("(Q, V) estimation from family spectra") {
    const std::vector<MultiplicativeFunction> ones{MultiplicativeFunction::one()};
    const auto e1 = estimate_qv(2000, 6007, 0.4, ones);
    CHECK(e1.Q == 1);
    CHECK(e1.V <= 10);
    CHECK(e1.spectrum_hits >= 1);

    const std::vector<MultiplicativeFunction> m2{MultiplicativeFunction::minus_at_two()};
    const auto e2 = estimate_qv(2000, 6007, 0.4, m2);
    CHECK(e2.Q % 2 == 0);
    CHECK(e2.spectrum_hits >= 1);

    const auto empty = estimate_qv(2000, 120011, 0.9, m2);
    CHECK(empty.Q == 1);
    CHECK(empty.V == 1);
    CHECK(empty.spectrum_hits == 0);

    // Best candidate still violates the kernel size guard: ceil(theta^-4) is
    // already larger than the modulus.
    CHECK_THROWS_AS(estimate_qv(100, 601, 0.05, ones), estimation_error);
}

TEST_CASE("theta schedules and feasibility floor") {
    const auto halving = default_theta_schedule(0.8, 4, 0.01);
    REQUIRE(halving.size() == 4);
    for (std::size_t j = 0; j + 1 < halving.size(); ++j) CHECK(halving[j] > halving[j + 1]);
    CHECK(std::abs(halving[0] - 0.4) < 1e-12);  // plain halving while above the floor
    CHECK(halving.back() >= 0.01 - 1e-12);

    const auto clipped = default_theta_schedule(0.8, 4, 0.4);
    CHECK(clipped.back() >= 0.4 - 1e-12);

    const double floor601 = feasible_theta_floor(601, 1, 1);
    const auto probe = uniformity_kernel(601, 1, 1, floor601);
    check_kernel_invariants(probe);
}

TEST_CASE("planned schedules satisfy the chain preconditions") {
    const std::vector<MultiplicativeFunction> family{
        MultiplicativeFunction::one(), MultiplicativeFunction::minus_at_two(),
        MultiplicativeFunction::character_like(3)};
    const auto plan = plan_schedules(100, 6007, 0.8, 5, family);
    REQUIRE(plan.thetas.size() == 5);
    REQUIRE(plan.qv.size() == 5);
    for (std::size_t j = 0; j < plan.qv.size(); ++j) {
        const auto [Q, V] = plan.qv[j];
        KernelParams p{Q, V, plan.thetas[j]};
        check_kernel_invariants(uniformity_kernel(6007, Q, V, plan.thetas[j]));
        if (j > 0) {
            const auto [Qp, Vp] = plan.qv[j - 1];
            CHECK(plan.thetas[j] < plan.thetas[j - 1]);
            CHECK(Q % Qp == 0);
            CHECK(kernel_monotonicity(6007, {Qp, Vp, plan.thetas[j - 1]}, p));
        }
    }

    const auto direct = make_qv_schedule(100, 6007, plan.thetas, family);
    CHECK(direct == plan.qv);
}

TEST_CASE("energy-increment decomposition on a small instance") {
    const Modulus mod = select_modulus(10, 6);  // ntilde = 601
    const auto chiN = truncate(MultiplicativeFunction::one(), mod);
    const std::vector<double> thetas{0.9, 0.8, 0.7, 0.6};
    const std::vector<std::pair<std::int64_t, std::int64_t>> qv(4, {1, 1});
    const std::vector<std::pair<MultiplicativeFunction, double>> weights{
        {MultiplicativeFunction::one(), 1.0}};

    const auto r = u3_energy_decompose(chiN, thetas, weights, 1.0, qv);
    for (std::int64_t n = 0; n < mod.ntilde; ++n) {
        const cdouble back = r.chi_s.values()[n] + r.chi_u.values()[n] + r.chi_e.values()[n];
        CHECK(std::abs(back - chiN.values[n]) < 1e-12);
    }
    double total = 0;
    for (double e : r.energies) {
        CHECK(e >= 0.0);
        total += e;
    }
    CHECK(total <= 2.0 + 1e-9);
    REQUIRE(r.j0 >= 2);
    CHECK(r.energies[static_cast<std::size_t>(r.j0 - 2)] <= r.epsilon * r.epsilon + 1e-12);
    CHECK(r.chi_e_weighted_l1 <= r.epsilon + 1e-9);
    CHECK(r.sup_chi_s <= 1.0 + 1e-9);

    // Schedule too short for J = 1 + ceil(2 eps^-2).
    CHECK_THROWS_AS(u3_energy_decompose(chiN, {0.9, 0.8}, weights, 0.5, {{1, 1}, {1, 1}}),
                    schedule_error);
}
