#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ulab/spectral.hpp"

namespace ulab {

/// Result of the prime-pair orthogonality statistic on f restricted to [N].
struct KataiReport {
    std::int64_t K0 = 0;
    std::int64_t K = 0;
    double pair_statistic = 0.0;               // max over prime pairs K0 < p < p' < K
    std::pair<std::int64_t, std::int64_t> argmax_pair{0, 0};
    bool window_warning = false;               // set when K^2 > N
};

/// pair_statistic = max over primes K0 < p < p' < K of
/// |E_{n <= floor(N/p')} f(pn) conj(f(p'n))|. `values` holds f(1..N) with
/// entry i = f(i+1); requires |f| <= 1 entrywise.
KataiReport katai_statistic(const std::vector<cdouble>& values, std::int64_t K0, std::int64_t K);

/// sup over the family of |E_{n in [N]} chi(n) f(n)|.
double chi_correlation(const std::vector<cdouble>& values, const std::vector<MultiplicativeFunction>& family);

/// Default correlation test family: the named members plus `count` seeded
/// random unimodular functions.
std::vector<MultiplicativeFunction> default_test_family(std::size_t count, std::uint64_t seed);

struct FrequencyHit {
    std::int64_t xi;
    double magnitude;          // |E_{n in [N]} chi(n) e(-n xi / ntilde)|
    std::int64_t best_Q;       // smallest Q <= cap minimizing ntilde*||Q xi/ntilde||
    std::int64_t scaled_dist;  // ntilde * ||best_Q * xi / ntilde||
};

/// Lists every xi whose restricted-average coefficient magnitude reaches
/// theta, sorted by magnitude descending (ties: ascending xi). The
/// magnitude is normalized by N (the number of non-zero entries of chi_N),
/// i.e. (ntilde/N) |chi_N_hat(xi)|, so theta in (0,1] is meaningful.
std::vector<FrequencyHit> frequency_scan(const TruncatedSignal& chiN, double theta, std::int64_t Q_cap);

struct PhaseCorrelation {
    double alpha;  // in [0, 1)
    double value;  // S(alpha); a lower bound for the true sup
};

/// S(alpha) = |E_{n in Z_ntilde} g(n) e(n^2 alpha)| maximized over the grid
/// {j / grid_size} and optionally refined by local ternary search. Smallest
/// maximizing alpha on ties.
PhaseCorrelation quadratic_phase_correlation(const CyclicSignal& g, std::int64_t grid_size, bool refine);

}  // namespace ulab
