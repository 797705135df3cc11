#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ulab/spectral.hpp"

namespace ulab {

/// Parameters (Q, V, theta) of a uniformity kernel phi_{N,theta}; the Fejer
/// width is m = Q * V * ceil(theta^-4).
struct KernelParams {
    std::int64_t Q;
    std::int64_t V;
    double theta;

    std::int64_t fejer_width() const;
};

/// Non-negative function on Z_ntilde with average 1. `closed_form` is set
/// when the kernel is a phi_{N,theta}, in which case its Fourier
/// coefficients have the explicit piecewise-linear shape.
struct Kernel {
    std::int64_t modulus;
    std::vector<double> values;
    std::optional<KernelParams> closed_form;

    CyclicSignal signal() const;
};

/// f_{N,m}(x) = sum_{|xi| <= m} (1 - |xi|/m) e(x xi / ntilde); requires
/// ntilde > 2m. Real, non-negative, average 1, spectrum (-m, m).
Kernel fejer_kernel(std::int64_t ntilde, std::int64_t m);

/// phi_{N,theta}(x) = f_{N,m}(Q^* x) with m = Q V ceil(theta^-4) and Q^* the
/// inverse of Q mod ntilde.
Kernel uniformity_kernel(std::int64_t ntilde, std::int64_t Q, std::int64_t V, double theta);

/// Closed-form coefficient: 1 - ||Q xi / ntilde|| * ntilde / m on the
/// spectrum set, 0 off it.
double kernel_coefficient(const KernelParams& p, std::int64_t ntilde, std::int64_t xi);

/// The spectrum set Xi_{N,theta} = { xi : ||Q xi / ntilde|| < m / ntilde }.
std::vector<std::int64_t> kernel_spectrum_set(const KernelParams& p, std::int64_t ntilde);

/// True iff the closed-form coefficients satisfy phi_hat_B >= phi_hat_A >= 0
/// pointwise. Preconditions: B.theta <= A.theta, A.Q divides B.Q,
/// B.V >= A.V.
bool kernel_monotonicity(std::int64_t ntilde, const KernelParams& A, const KernelParams& B);

struct DecompositionResult {
    CyclicSignal chi_s, chi_u, chi_e;
    std::int64_t Q = 1;
    double theta = 0.0;
    double lipschitz_bound = 0.0;    // |Xi| * Q * V * ceil(theta^-4)
    double measured_lipschitz = 0.0; // sup_n ntilde * |chi_s(n+Q) - chi_s(n)|
    double measured_u2 = 0.0;        // U2 norm of chi_u
    std::optional<double> measured_u3;
    double sup_chi_s = 0.0;

    // Energy-increment mode only.
    std::vector<double> energies;  // e_j for j = 2..J
    std::int64_t j0 = 0;
    double epsilon = 0.0;
    double chi_e_weighted_l1 = 0.0;
};

/// Weak U2 decomposition: chi_s = chi_N * phi_{N,theta}, chi_u = chi_N -
/// chi_s, chi_e = 0.
DecompositionResult u2_decompose(const TruncatedSignal& chiN, std::int64_t Q, std::int64_t V, double theta,
                                 bool with_u3 = false);

struct QVEstimate {
    std::int64_t Q;
    std::int64_t V;
    std::int64_t W;           // max_{xi in A} ntilde * ||Q xi / ntilde||
    std::size_t spectrum_hits;  // |A|
};

/// Finite surrogate for the asymptotic constants: A collects the xi where
/// some family member has |chi_N_hat(xi)| >= theta^2; Q is the factorial
/// k! <= cap! minimizing the kernel cost Q * (1 + ceil(W/Q)), smallest k on
/// ties; V = 1 + ceil(W/Q). Empty A gives (1, 1). Throws estimation_error
/// when even the best pair violates the kernel size guard.
QVEstimate estimate_qv(std::int64_t N, std::int64_t ntilde, double theta,
                       const std::vector<MultiplicativeFunction>& family, int factorial_cap = 8);

/// Pointwise max over the family of |chi_N_hat(xi)|; the shared input of the
/// (Q, V) estimates along a schedule.
std::vector<double> family_max_spectrum(std::int64_t N, std::int64_t ntilde,
                                        const std::vector<MultiplicativeFunction>& family);

QVEstimate estimate_qv(const std::vector<double>& max_coeff, std::int64_t ntilde, double theta,
                       int factorial_cap = 8);

/// Strictly decreasing theta schedule: theta0 * r^j for j = 1..count with
/// r = max(1/2, (floor/theta0)^(1/count)), so the plain halving schedule is
/// used whenever it stays above the feasibility floor.
std::vector<double> default_theta_schedule(double theta0, std::size_t count, double floor_theta);

/// Smallest theta whose kernel fits the guard ntilde > 2 Q V ceil(theta^-4).
double feasible_theta_floor(std::int64_t ntilde, std::int64_t Q, std::int64_t V);

/// Estimates (Q, V) along a schedule and enforces the chain preconditions:
/// Q_{j+1} a multiple of Q_j and nondecreasing V * ceil(theta^-4).
std::vector<std::pair<std::int64_t, std::int64_t>> make_qv_schedule(
    std::int64_t N, std::int64_t ntilde, const std::vector<double>& schedule,
    const std::vector<MultiplicativeFunction>& family, int factorial_cap = 8);

struct SchedulePlan {
    std::vector<double> thetas;
    std::vector<std::pair<std::int64_t, std::int64_t>> qv;
};

/// Builds a default theta schedule plus matching (Q, V) estimates, raising
/// the feasibility floor and retrying whenever an entry would violate the
/// kernel size guard.
SchedulePlan plan_schedules(std::int64_t N, std::int64_t ntilde, double theta0, std::size_t count,
                            const std::vector<MultiplicativeFunction>& family, int factorial_cap = 8);

/// Energy-increment decomposition: builds kernels along the schedule, selects
/// the scale j0 in [2, J] where the weighted consecutive L2 energy drops
/// below epsilon^2, and returns chi_s = chi_N * phi_{j0}, chi_e = chi_N *
/// (phi_{j0+1} - phi_{j0}), chi_u = chi_N - chi_N * phi_{j0+1}.
DecompositionResult u3_energy_decompose(const TruncatedSignal& chiN, const std::vector<double>& theta_schedule,
                                        const std::vector<std::pair<MultiplicativeFunction, double>>& weights,
                                        double epsilon,
                                        const std::vector<std::pair<std::int64_t, std::int64_t>>& qv_schedule,
                                        bool with_u3 = false);

}  // namespace ulab
