#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ulab/gowers.hpp"
#include "ulab/quadforms.hpp"

namespace ulab {

/// The averaging window Theta_N: pairs (m, n) in [N]^2 with every shifted
/// form m + l_i n still inside [N].
struct ThetaSet {
    std::int64_t N;
    LinearFormsPattern pattern;
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
};

ThetaSet theta_set(std::int64_t N, const LinearFormsPattern& pattern);

/// E over Theta_N of chi(m) chi(m+l1 n) conj(chi(m+l2 n)) conj(chi(m+l3 n)).
cdouble recurrence_average(const MultiplicativeFunction& chi, const LinearFormsPattern& pattern, std::int64_t N);

/// #{(m,n) in Theta_N : m(m+l1 n) = (m+l2 n)(m+l3 n)} — the degenerate pairs
/// where the two produced integers coincide.
std::int64_t degenerate_pair_count(const LinearFormsPattern& pattern, std::int64_t N);

/// Weighted sum of the self-paired four-form averages, one per family
/// member: sum_i w_i * multiform_average(chi_i_N, ..., pattern, N).
cdouble mixture_average(const std::vector<std::pair<MultiplicativeFunction, double>>& weights,
                        const LinearFormsPattern& pattern, const Modulus& modulus);

/// Truncated multiplicative Folner set: products p_1^{k_1} ... p_d^{k_d}
/// over the first `depth` primes with 0 <= k_i <= exponent_cap, ascending.
/// Guard: (cap+1)^depth <= 10^7.
std::vector<BigInt> folner_set(std::int64_t depth, std::int64_t exponent_cap);

/// Fraction of the truncated Folner set satisfying the predicate.
double multiplicative_density(const std::function<bool(const BigInt&)>& predicate, std::int64_t depth,
                              std::int64_t exponent_cap);

/// Finite coloring of the positive integers.
struct Coloring {
    int num_cells;
    std::function<int(std::int64_t)> rule;  // cell index in [0, num_cells)
    std::string label;

    static Coloring trivial();
    /// Cells n mod q.
    static Coloring residue(std::int64_t q);
    /// Six cells: the lowest-order non-zero digit of the 7-adic expansion,
    /// i.e. (n / 7^{v_7(n)}) mod 7, shifted to [0, 6).
    static Coloring seven_adic();
    /// Parses "trivial", "residue:<q>", "7adic".
    static Coloring parse(const std::string& spec);
};

struct MonochromaticHit {
    std::int64_t x, y, n;  // p(x, y, n) = 0, x != y, same cell
    int cell;
};

/// Exhaustive scan over x, y <= bound (x != y, same color) for a positive
/// integer n with p(x, y, n) = 0 exactly. Form coefficients must fit in
/// 64 bits.
std::vector<MonochromaticHit> coloring_search(const QuadraticForm& p, const Coloring& coloring,
                                              std::int64_t bound);

struct PatternHit {
    std::int64_t k, m, n;
    std::int64_t x, y;  // x = k l0 m (m + l1 n), y = k l0 (m + l2 n)(m + l3 n)
    int cell;
};

/// Enumerates (k, m, n) in [1, bound]^3 and reports same-colored distinct
/// positive pairs produced by the pattern.
std::vector<PatternHit> coloring_search(const EllPattern& pattern, const Coloring& coloring, std::int64_t bound);

}  // namespace ulab
