#include "ulab/katai.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ulab/core_ring.hpp"
#include "ulab/errors.hpp"

namespace ulab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

cdouble unit_phase(double fraction) { return std::polar(1.0, kTwoPi * fraction); }

}  // namespace

KataiReport katai_statistic(const std::vector<cdouble>& values, std::int64_t K0, std::int64_t K) {
    const auto N = static_cast<std::int64_t>(values.size());
    if (N < 1) throw input_error("katai_statistic: empty input");
    if (K0 < 1 || K0 >= K) throw parameter_error("katai_statistic: need 1 <= K0 < K");
    for (const auto& v : values) {
        if (std::abs(v) > 1.0 + 1e-9) throw input_error("katai_statistic: |f| must be at most 1");
    }
    std::vector<std::int64_t> primes;
    for (std::int64_t p : primes_up_to(std::max<std::int64_t>(2, K - 1))) {
        if (p > K0 && p < K) primes.push_back(p);
    }
    if (primes.size() < 2) throw parameter_error("katai_statistic: no prime pair in (K0, K)");

    KataiReport report;
    report.K0 = K0;
    report.K = K;
    report.window_warning = K * K > N;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        for (std::size_t j = i + 1; j < primes.size(); ++j) {
            const std::int64_t p = primes[i];
            const std::int64_t pp = primes[j];
            const std::int64_t limit = N / pp;
            if (limit < 1) continue;
            cdouble sum(0.0, 0.0);
            for (std::int64_t n = 1; n <= limit; ++n) {
                sum += values[static_cast<std::size_t>(p * n - 1)] *
                       std::conj(values[static_cast<std::size_t>(pp * n - 1)]);
            }
            const double stat = std::abs(sum) / static_cast<double>(limit);
            if (stat > report.pair_statistic) {
                report.pair_statistic = stat;
                report.argmax_pair = {p, pp};
            }
        }
    }
    return report;
}

double chi_correlation(const std::vector<cdouble>& values, const std::vector<MultiplicativeFunction>& family) {
    const auto N = static_cast<std::int64_t>(values.size());
    if (N < 1) throw input_error("chi_correlation: empty input");
    double sup = 0.0;
    for (const auto& chi : family) {
        const auto chi_values = evaluate_range(chi, N);
        cdouble sum(0.0, 0.0);
        for (std::int64_t n = 0; n < N; ++n) {
            sum += chi_values[static_cast<std::size_t>(n)] * values[static_cast<std::size_t>(n)];
        }
        sup = std::max(sup, std::abs(sum) / static_cast<double>(N));
    }
    return sup;
}

std::vector<MultiplicativeFunction> default_test_family(std::size_t count, std::uint64_t seed) {
    std::vector<MultiplicativeFunction> family;
    family.push_back(MultiplicativeFunction::one());
    family.push_back(MultiplicativeFunction::minus_at_two());
    // A small phase keeps the self-paired four-term averages of this member
    // clearly positive at moderate truncation lengths while still exercising
    // genuinely complex values.
    family.push_back(MultiplicativeFunction::phase(0.05));
    family.push_back(MultiplicativeFunction::character_like(3));
    family.push_back(MultiplicativeFunction::character_like(5));
    for (std::size_t i = 0; i < count; ++i) {
        family.push_back(MultiplicativeFunction::random_unimodular(seed + static_cast<std::uint64_t>(i)));
    }
    return family;
}

std::vector<FrequencyHit> frequency_scan(const TruncatedSignal& chiN, double theta, std::int64_t Q_cap) {
    if (!(theta > 0.0) || theta > 1.0) throw parameter_error("frequency_scan: theta must be in (0, 1]");
    if (Q_cap < 1) throw parameter_error("frequency_scan: Q_cap must be positive");
    const std::int64_t ntilde = chiN.modulus.ntilde;
    const double scale = static_cast<double>(ntilde) / static_cast<double>(chiN.modulus.trunc);
    const auto spec = dft(chiN.values);
    std::vector<FrequencyHit> hits;
    for (std::int64_t xi = 0; xi < ntilde; ++xi) {
        const double mag = scale * std::abs(spec[static_cast<std::size_t>(xi)]);
        if (mag < theta) continue;
        std::int64_t best_q = 1;
        std::int64_t best_dist = -1;
        for (std::int64_t q = 1; q <= Q_cap; ++q) {
            auto r = static_cast<std::int64_t>((static_cast<__int128>(q) * xi) % ntilde);
            const std::int64_t dist = std::min(r, ntilde - r);
            if (best_dist < 0 || dist < best_dist) {
                best_dist = dist;
                best_q = q;
            }
        }
        hits.push_back(FrequencyHit{xi, mag, best_q, best_dist});
    }
    std::stable_sort(hits.begin(), hits.end(), [](const FrequencyHit& u, const FrequencyHit& v) {
        if (u.magnitude != v.magnitude) return u.magnitude > v.magnitude;
        return u.xi < v.xi;
    });
    return hits;
}

PhaseCorrelation quadratic_phase_correlation(const CyclicSignal& g, std::int64_t grid_size, bool refine) {
    const std::int64_t q = g.modulus();
    if (grid_size < q) throw parameter_error("quadratic_phase_correlation: grid must be at least ntilde");
    const std::int64_t G = grid_size;

    // S(j/G) for all j at once: bin g by n^2 mod G, then one transform.
    // S(j/G) = |sum_r bins[r] e(r j / G)| / ntilde.
    std::vector<cdouble> bins(static_cast<std::size_t>(G), cdouble(0.0, 0.0));
    std::vector<std::int64_t> residue(static_cast<std::size_t>(q));
    for (std::int64_t n = 0; n < q; ++n) {
        const auto r = static_cast<std::int64_t>((static_cast<__int128>(n) * n) % G);
        residue[static_cast<std::size_t>(n)] = r;
        bins[static_cast<std::size_t>(r)] += std::conj(g.values()[static_cast<std::size_t>(n)]);
    }
    const auto transformed = dft(bins);
    const double scale = static_cast<double>(G) / static_cast<double>(q);
    std::int64_t best_j = 0;
    double best_value = -1.0;
    for (std::int64_t j = 0; j < G; ++j) {
        const double v = scale * std::abs(transformed[static_cast<std::size_t>(j)]);
        if (v > best_value) {
            best_value = v;
            best_j = j;
        }
    }

    PhaseCorrelation out;
    out.alpha = static_cast<double>(best_j) / static_cast<double>(G);
    out.value = best_value;
    if (!refine) return out;

    // Local refinement at alpha = best_j/G + delta. The grid part of the
    // phase stays exact: n^2 (j/G) mod 1 = ((n^2 mod G) j mod G)/G; only the
    // small correction n^2 delta is accumulated in floating point.
    std::vector<cdouble> base_terms(static_cast<std::size_t>(q));
    for (std::int64_t n = 0; n < q; ++n) {
        const auto rj = static_cast<std::int64_t>(
            (static_cast<__int128>(residue[static_cast<std::size_t>(n)]) * best_j) % G);
        base_terms[static_cast<std::size_t>(n)] =
            g.values()[static_cast<std::size_t>(n)] *
            unit_phase(static_cast<double>(rj) / static_cast<double>(G));
    }
    auto evaluate = [&](double delta) {
        cdouble sum(0.0, 0.0);
        for (std::int64_t n = 0; n < q; ++n) {
            const double extra = static_cast<double>(n) * static_cast<double>(n) * delta;
            sum += base_terms[static_cast<std::size_t>(n)] * unit_phase(extra - std::floor(extra));
        }
        return std::abs(sum) / static_cast<double>(q);
    };
    double lo = -1.0 / static_cast<double>(G);
    double hi = 1.0 / static_cast<double>(G);
    for (int iter = 0; iter < 80; ++iter) {
        const double m1 = lo + (hi - lo) / 3.0;
        const double m2 = hi - (hi - lo) / 3.0;
        if (evaluate(m1) < evaluate(m2)) {
            lo = m1;
        } else {
            hi = m2;
        }
    }
    const double delta = 0.5 * (lo + hi);
    const double refined = evaluate(delta);
    if (refined > out.value) {
        out.value = refined;
        double alpha = out.alpha + delta;
        alpha -= std::floor(alpha);
        out.alpha = alpha;
    }
    return out;
}

}  // namespace ulab
