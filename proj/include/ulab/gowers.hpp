#pragma once

#include <cstdint>
#include <utility>

#include "ulab/spectral.hpp"

namespace ulab {

/// The three shift coefficients of the linear forms m, m+l1 n, m+l2 n,
/// m+l3 n. Pairwise distinct positive integers.
struct LinearFormsPattern {
    std::int64_t l1, l2, l3;

    LinearFormsPattern(std::int64_t a, std::int64_t b, std::int64_t c);
    std::int64_t ell() const { return l1 + l2 + l3; }
};

/// U2 norm through the spectral identity: ||f||_{U2}^4 = sum_xi |f_hat(xi)|^4.
double u2_norm(const CyclicSignal& f);

/// U2 norm straight from the difference-function definition, O(n^2).
/// Guarded to n <= 4096; the oracle for u2_norm.
double u2_norm_direct(const CyclicSignal& f);

/// U3 norm via ||f||_{U3}^8 = E_h ||Delta_h f||_{U2}^4 with each inner U2
/// evaluated spectrally; O(n^2 log n). Parallel over h with a fixed-order
/// final reduction.
double u3_norm(const CyclicSignal& f);

/// U3 norm from the definition, O(n^3). Guarded to n <= 128.
double u3_norm_direct(const CyclicSignal& f);

/// Returns (u2, u3); the U3 norm dominates the U2 norm.
std::pair<double, double> monotonicity_check(const CyclicSignal& f);

/// E_{m,n in Z_ntilde} 1_[N](n) a0(m) a1(m+l1 n) conj(a2(m+l2 n))
/// conj(a3(m+l3 n)), arguments reduced mod ntilde.
cdouble multiform_average(const CyclicSignal& a0, const CyclicSignal& a1, const CyclicSignal& a2,
                          const CyclicSignal& a3, const LinearFormsPattern& pattern, std::int64_t N);

struct ArithmeticProgression {
    std::int64_t start;   // first element, in [1, ntilde]
    std::int64_t step;    // positive
    std::int64_t length;  // at least 1
};

struct ProgressionBound {
    double lhs;  // |E_{n in Z_ntilde} 1_P(n) a(n)|
    double rhs;  // ||1_P hat||_{4/3} * ||a||_{U2}
};

/// The explicit Hoelder-side bound for correlation with a progression
/// indicator; lhs <= rhs always.
ProgressionBound progression_correlation_bound(const CyclicSignal& a, const ArithmeticProgression& P);

}  // namespace ulab
