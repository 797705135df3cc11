#include "ulab/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "ulab/errors.hpp"
#include "ulab/gowers.hpp"

namespace ulab {

namespace {

constexpr double kPi = std::numbers::pi;

std::int64_t ceil_inverse_fourth(double theta) {
    if (!(theta > 0.0)) throw parameter_error("kernel: theta must be positive");
    const double v = std::pow(1.0 / theta, 4.0);
    return static_cast<std::int64_t>(std::ceil(v - 1e-9));
}

// ntilde * || q xi / ntilde || as an exact integer distance.
std::int64_t scaled_circle_distance(std::int64_t q, std::int64_t xi, std::int64_t ntilde) {
    auto r = static_cast<std::int64_t>((static_cast<__int128>(q) * xi) % ntilde);
    if (r < 0) r += ntilde;
    return std::min(r, ntilde - r);
}

// Fejer closed form (1/m) (sin(pi m t) / sin(pi t))^2 at t = x / ntilde.
double fejer_value(std::int64_t x, std::int64_t m, std::int64_t ntilde) {
    if (x % ntilde == 0) return static_cast<double>(m);
    const double t = kPi * static_cast<double>(x) / static_cast<double>(ntilde);
    const double ratio = std::sin(static_cast<double>(m) * t) / std::sin(t);
    return ratio * ratio / static_cast<double>(m);
}

CyclicSignal spectral_product(const CyclicSignal& chi, const KernelParams& params) {
    const std::int64_t q = chi.modulus();
    const auto& spec = chi.spectrum();
    std::vector<cdouble> product(spec.size());
    for (std::int64_t xi = 0; xi < q; ++xi) {
        product[static_cast<std::size_t>(xi)] = spec[static_cast<std::size_t>(xi)] * kernel_coefficient(params, q, xi);
    }
    return idft(product, q);
}

double sup_abs(const CyclicSignal& s) {
    double sup = 0.0;
    for (const auto& v : s.values()) sup = std::max(sup, std::abs(v));
    return sup;
}

double lipschitz_at_step(const CyclicSignal& s, std::int64_t step) {
    const std::int64_t q = s.modulus();
    double sup = 0.0;
    for (std::int64_t n = 0; n < q; ++n) {
        std::int64_t j = n + step;
        j %= q;
        sup = std::max(sup, std::abs(s.values()[static_cast<std::size_t>(j)] - s.values()[static_cast<std::size_t>(n)]));
    }
    return static_cast<double>(q) * sup;
}

}  // namespace

std::int64_t KernelParams::fejer_width() const {
    const std::int64_t c = ceil_inverse_fourth(theta);
    if (Q < 1 || V < 1) throw parameter_error("kernel: Q and V must be positive");
    return Q * V * c;
}

CyclicSignal Kernel::signal() const {
    std::vector<cdouble> v(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) v[i] = cdouble(values[i], 0.0);
    return CyclicSignal(modulus, std::move(v));
}

Kernel fejer_kernel(std::int64_t ntilde, std::int64_t m) {
    if (m < 1) throw parameter_error("fejer_kernel: m must be positive");
    if (ntilde <= 2 * m) throw parameter_error("fejer_kernel: need ntilde > 2m");
    Kernel k;
    k.modulus = ntilde;
    k.values.resize(static_cast<std::size_t>(ntilde));
    for (std::int64_t x = 0; x < ntilde; ++x) {
        k.values[static_cast<std::size_t>(x)] = std::max(0.0, fejer_value(x, m, ntilde));
    }
    return k;
}

Kernel uniformity_kernel(std::int64_t ntilde, std::int64_t Q, std::int64_t V, double theta) {
    KernelParams params{Q, V, theta};
    const std::int64_t m = params.fejer_width();
    if (ntilde <= 2 * m) {
        throw parameter_error("uniformity_kernel: need ntilde > 2*Q*V*ceil(theta^-4), got m=" + std::to_string(m));
    }
    if (Q % ntilde == 0) throw parameter_error("uniformity_kernel: Q must be invertible mod ntilde");
    const std::int64_t qinv = mod_inverse(Q, ntilde);
    Kernel k;
    k.modulus = ntilde;
    k.closed_form = params;
    k.values.resize(static_cast<std::size_t>(ntilde));
    for (std::int64_t x = 0; x < ntilde; ++x) {
        const auto y = static_cast<std::int64_t>((static_cast<__int128>(qinv) * x) % ntilde);
        k.values[static_cast<std::size_t>(x)] = std::max(0.0, fejer_value(y, m, ntilde));
    }
    return k;
}

double kernel_coefficient(const KernelParams& p, std::int64_t ntilde, std::int64_t xi) {
    const std::int64_t m = p.fejer_width();
    const std::int64_t dist = scaled_circle_distance(p.Q, xi, ntilde);
    if (dist >= m) return 0.0;
    return 1.0 - static_cast<double>(dist) / static_cast<double>(m);
}

std::vector<std::int64_t> kernel_spectrum_set(const KernelParams& p, std::int64_t ntilde) {
    const std::int64_t m = p.fejer_width();
    std::vector<std::int64_t> xi_set;
    for (std::int64_t xi = 0; xi < ntilde; ++xi) {
        if (scaled_circle_distance(p.Q, xi, ntilde) < m) xi_set.push_back(xi);
    }
    return xi_set;
}

bool kernel_monotonicity(std::int64_t ntilde, const KernelParams& A, const KernelParams& B) {
    if (!(B.theta <= A.theta) || B.Q % A.Q != 0 || B.V < A.V) {
        throw parameter_error(
            "kernel_monotonicity: need theta' <= theta, Q' a multiple of Q, and V' >= V");
    }
    for (std::int64_t xi = 0; xi < ntilde; ++xi) {
        const double a = kernel_coefficient(A, ntilde, xi);
        const double b = kernel_coefficient(B, ntilde, xi);
        if (a < -1e-12 || b < a - 1e-12) return false;
    }
    return true;
}

DecompositionResult u2_decompose(const TruncatedSignal& chiN, std::int64_t Q, std::int64_t V, double theta,
                                 bool with_u3) {
    const std::int64_t q = chiN.modulus.ntilde;
    KernelParams params{Q, V, theta};
    const std::int64_t m = params.fejer_width();
    if (q <= 2 * m) throw parameter_error("u2_decompose: kernel does not fit the modulus");
    const CyclicSignal chi = to_signal(chiN);
    CyclicSignal chi_s = spectral_product(chi, params);
    std::vector<cdouble> u_values(static_cast<std::size_t>(q));
    for (std::int64_t n = 0; n < q; ++n) {
        u_values[static_cast<std::size_t>(n)] =
            chi.values()[static_cast<std::size_t>(n)] - chi_s.values()[static_cast<std::size_t>(n)];
    }
    CyclicSignal chi_u(q, std::move(u_values));
    CyclicSignal chi_e(q, std::vector<cdouble>(static_cast<std::size_t>(q), cdouble(0.0, 0.0)));

    DecompositionResult out{std::move(chi_s), std::move(chi_u), std::move(chi_e)};
    out.Q = Q;
    out.theta = theta;
    out.lipschitz_bound =
        static_cast<double>(kernel_spectrum_set(params, q).size()) * static_cast<double>(m);
    out.measured_lipschitz = lipschitz_at_step(out.chi_s, Q);
    out.measured_u2 = u2_norm(out.chi_u);
    out.sup_chi_s = sup_abs(out.chi_s);
    if (with_u3) out.measured_u3 = u3_norm(out.chi_u);
    return out;
}

std::vector<double> family_max_spectrum(std::int64_t N, std::int64_t ntilde,
                                        const std::vector<MultiplicativeFunction>& family) {
    if (family.empty()) throw input_error("family_max_spectrum: family must be non-empty");
    std::vector<double> max_coeff(static_cast<std::size_t>(ntilde), 0.0);
    Modulus modulus{N, 0, ntilde};
    for (const auto& chi : family) {
        const auto spec = dft(truncate(chi, modulus).values);
        for (std::int64_t xi = 0; xi < ntilde; ++xi) {
            max_coeff[static_cast<std::size_t>(xi)] =
                std::max(max_coeff[static_cast<std::size_t>(xi)], std::abs(spec[static_cast<std::size_t>(xi)]));
        }
    }
    return max_coeff;
}

QVEstimate estimate_qv(std::int64_t N, std::int64_t ntilde, double theta,
                       const std::vector<MultiplicativeFunction>& family, int factorial_cap) {
    return estimate_qv(family_max_spectrum(N, ntilde, family), ntilde, theta, factorial_cap);
}

QVEstimate estimate_qv(const std::vector<double>& max_coeff, std::int64_t ntilde, double theta,
                       int factorial_cap) {
    if (factorial_cap < 1 || factorial_cap > 20) throw parameter_error("estimate_qv: cap must be in [1, 20]");
    const double threshold = theta * theta;
    std::vector<std::int64_t> significant;
    for (std::int64_t xi = 0; xi < ntilde; ++xi) {
        if (max_coeff[static_cast<std::size_t>(xi)] >= threshold - 1e-12) significant.push_back(xi);
    }
    if (significant.empty()) return QVEstimate{1, 1, 0, 0};

    QVEstimate best{0, 0, 0, significant.size()};
    std::int64_t best_cost = -1;
    std::int64_t q = 1;
    for (int k = 1; k <= factorial_cap; ++k) {
        q *= k;
        std::int64_t w = 0;
        for (std::int64_t xi : significant) w = std::max(w, scaled_circle_distance(q, xi, ntilde));
        const std::int64_t v = 1 + (w + q - 1) / q;
        const std::int64_t cost = q * v;
        if (best_cost < 0 || cost < best_cost) {
            best_cost = cost;
            best = QVEstimate{q, v, w, significant.size()};
        }
    }
    const std::int64_t c = ceil_inverse_fourth(theta);
    if (ntilde <= 2 * best.Q * best.V * c) {
        throw estimation_error("estimate_qv: no (Q,V) fits the kernel guard; best Q=" + std::to_string(best.Q) +
                               " V=" + std::to_string(best.V) + " W=" + std::to_string(best.W));
    }
    return best;
}

double feasible_theta_floor(std::int64_t ntilde, std::int64_t Q, std::int64_t V) {
    const double budget = static_cast<double>(ntilde) / (2.0 * static_cast<double>(Q) * static_cast<double>(V)) - 1.0;
    if (budget < 1.0) throw parameter_error("feasible_theta_floor: modulus too small for any kernel");
    return 1.02 * std::pow(1.0 / budget, 0.25);
}

std::vector<double> default_theta_schedule(double theta0, std::size_t count, double floor_theta) {
    if (!(theta0 > 0.0) || count == 0) throw parameter_error("default_theta_schedule: bad parameters");
    if (!(floor_theta > 0.0) || floor_theta >= theta0) {
        throw parameter_error("default_theta_schedule: need 0 < floor < theta0");
    }
    const double r = std::max(0.5, std::pow(floor_theta / theta0, 1.0 / static_cast<double>(count)));
    std::vector<double> schedule(count);
    double t = theta0;
    for (std::size_t j = 0; j < count; ++j) {
        t *= r;
        schedule[j] = t;
    }
    return schedule;
}

namespace {

std::vector<std::pair<std::int64_t, std::int64_t>> qv_schedule_from_spectrum(
    const std::vector<double>& max_coeff, std::int64_t ntilde, const std::vector<double>& schedule,
    int factorial_cap) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    out.reserve(schedule.size());
    std::int64_t prev_q = 1;
    std::int64_t prev_width = 0;  // V * ceil(theta^-4) of the previous step
    for (double theta : schedule) {
        const auto est = estimate_qv(max_coeff, ntilde, theta, factorial_cap);
        const std::int64_t q = std::lcm(prev_q, est.Q);
        const std::int64_t c = ceil_inverse_fourth(theta);
        std::int64_t v = est.V;
        if (v * c < prev_width) v = (prev_width + c - 1) / c;
        if (ntilde <= 2 * q * v * c) {
            throw estimation_error("make_qv_schedule: kernel guard violated at theta=" + std::to_string(theta));
        }
        out.emplace_back(q, v);
        prev_q = q;
        prev_width = v * c;
    }
    return out;
}

}  // namespace

std::vector<std::pair<std::int64_t, std::int64_t>> make_qv_schedule(
    std::int64_t N, std::int64_t ntilde, const std::vector<double>& schedule,
    const std::vector<MultiplicativeFunction>& family, int factorial_cap) {
    return qv_schedule_from_spectrum(family_max_spectrum(N, ntilde, family), ntilde, schedule, factorial_cap);
}

SchedulePlan plan_schedules(std::int64_t N, std::int64_t ntilde, double theta0, std::size_t count,
                            const std::vector<MultiplicativeFunction>& family, int factorial_cap) {
    const auto max_coeff = family_max_spectrum(N, ntilde, family);
    double floor_theta = feasible_theta_floor(ntilde, 1, 1);
    for (int attempt = 0; attempt < 40; ++attempt) {
        if (floor_theta >= theta0) break;
        SchedulePlan plan;
        plan.thetas = default_theta_schedule(theta0, count, floor_theta);
        try {
            plan.qv = qv_schedule_from_spectrum(max_coeff, ntilde, plan.thetas, factorial_cap);
            return plan;
        } catch (const estimation_error&) {
            floor_theta *= 1.3;
        }
    }
    throw estimation_error("plan_schedules: no feasible schedule below theta0");
}

DecompositionResult u3_energy_decompose(const TruncatedSignal& chiN, const std::vector<double>& theta_schedule,
                                        const std::vector<std::pair<MultiplicativeFunction, double>>& weights,
                                        double epsilon,
                                        const std::vector<std::pair<std::int64_t, std::int64_t>>& qv_schedule,
                                        bool with_u3) {
    const std::int64_t q = chiN.modulus.ntilde;
    if (!(epsilon > 0.0)) throw parameter_error("u3_energy_decompose: epsilon must be positive");
    if (theta_schedule.size() != qv_schedule.size()) {
        throw schedule_error("u3_energy_decompose: theta and (Q,V) schedules differ in length");
    }
    const auto J = static_cast<std::size_t>(1 + std::llround(std::ceil(2.0 / (epsilon * epsilon))));
    if (theta_schedule.size() < J + 1) {
        throw schedule_error("u3_energy_decompose: schedule shorter than J+1 = " + std::to_string(J + 1));
    }
    if (weights.empty()) throw schedule_error("u3_energy_decompose: empty weight family");
    double weight_sum = 0.0;
    for (const auto& [chi, w] : weights) {
        if (w < 0.0) throw schedule_error("u3_energy_decompose: negative weight");
        weight_sum += w;
    }
    std::vector<KernelParams> params;
    params.reserve(theta_schedule.size());
    for (std::size_t j = 0; j < theta_schedule.size(); ++j) {
        if (j > 0 && !(theta_schedule[j] < theta_schedule[j - 1])) {
            throw schedule_error("u3_energy_decompose: schedule must be strictly decreasing");
        }
        params.push_back(KernelParams{qv_schedule[j].first, qv_schedule[j].second, theta_schedule[j]});
        if (q <= 2 * params.back().fejer_width()) {
            throw schedule_error("u3_energy_decompose: kernel guard violated in the schedule");
        }
        if (j > 0) {
            const auto& prev = params[j - 1];
            const auto& cur = params.back();
            if (cur.Q % prev.Q != 0 || cur.fejer_width() / cur.Q < prev.fejer_width() / prev.Q) {
                throw schedule_error("u3_energy_decompose: (Q,V,theta) chain violates kernel monotonicity");
            }
        }
    }

    // Weighted consecutive energies via Parseval and the closed-form kernel
    // coefficients; e_j for j = 2..J (1-based schedule positions).
    std::vector<std::vector<double>> power_spectra;
    power_spectra.reserve(weights.size());
    for (const auto& [chi, w] : weights) {
        const auto spec = dft(truncate(chi, chiN.modulus).values);
        std::vector<double> power(spec.size());
        for (std::size_t xi = 0; xi < spec.size(); ++xi) power[xi] = std::norm(spec[xi]);
        power_spectra.push_back(std::move(power));
    }
    std::vector<double> energies;
    energies.reserve(J - 1);
    std::int64_t j0 = 0;
    for (std::size_t j = 2; j <= J; ++j) {
        const auto& pj = params[j - 1];
        const auto& pj1 = params[j];
        double e = 0.0;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            double member = 0.0;
            for (std::int64_t xi = 0; xi < q; ++xi) {
                const double d = kernel_coefficient(pj1, q, xi) - kernel_coefficient(pj, q, xi);
                member += power_spectra[i][static_cast<std::size_t>(xi)] * d * d;
            }
            e += weights[i].second * member;
        }
        energies.push_back(e);
        if (j0 == 0 && e <= epsilon * epsilon) j0 = static_cast<std::int64_t>(j);
    }
    if (j0 == 0) {
        throw schedule_error("u3_energy_decompose: no admissible j0; weight sum was " + std::to_string(weight_sum));
    }

    const auto& p1 = params[static_cast<std::size_t>(j0 - 1)];  // phi_{theta_{j0}}
    const auto& p2 = params[static_cast<std::size_t>(j0)];      // phi_{theta_{j0+1}}
    const CyclicSignal chi = to_signal(chiN);
    CyclicSignal conv1 = spectral_product(chi, p1);
    CyclicSignal conv2 = spectral_product(chi, p2);
    std::vector<cdouble> e_values(static_cast<std::size_t>(q)), u_values(static_cast<std::size_t>(q));
    for (std::int64_t n = 0; n < q; ++n) {
        const auto i = static_cast<std::size_t>(n);
        e_values[i] = conv2.values()[i] - conv1.values()[i];
        u_values[i] = chi.values()[i] - conv2.values()[i];
    }

    DecompositionResult out{std::move(conv1), CyclicSignal(q, std::move(u_values)),
                            CyclicSignal(q, std::move(e_values))};
    out.Q = p1.Q;
    out.theta = p1.theta;
    out.lipschitz_bound =
        static_cast<double>(kernel_spectrum_set(p1, q).size()) * static_cast<double>(p1.fejer_width());
    out.measured_lipschitz = lipschitz_at_step(out.chi_s, p1.Q);
    out.measured_u2 = u2_norm(out.chi_u);
    out.sup_chi_s = sup_abs(out.chi_s);
    if (with_u3) out.measured_u3 = u3_norm(out.chi_u);
    out.energies = std::move(energies);
    out.j0 = j0;
    out.epsilon = epsilon;

    double weighted_l1 = 0.0;
    for (const auto& [member, w] : weights) {
        if (w == 0.0) continue;
        const CyclicSignal member_chi = to_signal(truncate(member, chiN.modulus));
        const CyclicSignal a = spectral_product(member_chi, p1);
        const CyclicSignal b = spectral_product(member_chi, p2);
        double l1 = 0.0;
        for (std::int64_t n = 0; n < q; ++n) {
            l1 += std::abs(b.values()[static_cast<std::size_t>(n)] - a.values()[static_cast<std::size_t>(n)]);
        }
        weighted_l1 += w * l1 / static_cast<double>(q);
    }
    out.chi_e_weighted_l1 = weighted_l1;
    return out;
}

}  // namespace ulab
