#include "ulab/gowers.hpp"

#include <cmath>
#include <thread>
#include <vector>

#include "ulab/errors.hpp"

namespace ulab {

namespace {

double pairwise_sum_real(const double* data, std::size_t count) {
    if (count <= 8) {
        double s = 0.0;
        for (std::size_t i = 0; i < count; ++i) s += data[i];
        return s;
    }
    const std::size_t half = count / 2;
    return pairwise_sum_real(data, half) + pairwise_sum_real(data + half, count - half);
}

std::vector<cdouble> difference_function(const std::vector<cdouble>& f, std::int64_t h, std::int64_t n) {
    std::vector<cdouble> g(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        std::int64_t j = i + h;
        if (j >= n) j -= n;
        g[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(j)] * std::conj(f[static_cast<std::size_t>(i)]);
    }
    return g;
}

double fourth_power_sum(const std::vector<cdouble>& spectrum) {
    double s = 0.0;
    for (const auto& c : spectrum) {
        const double m2 = std::norm(c);
        s += m2 * m2;
    }
    return s;
}

}  // namespace

LinearFormsPattern::LinearFormsPattern(std::int64_t a, std::int64_t b, std::int64_t c) : l1(a), l2(b), l3(c) {
    if (l1 < 1 || l2 < 1 || l3 < 1 || l1 == l2 || l1 == l3 || l2 == l3) {
        throw parameter_error("LinearFormsPattern: l1, l2, l3 must be distinct positive integers");
    }
}

double u2_norm(const CyclicSignal& f) { return std::pow(fourth_power_sum(f.spectrum()), 0.25); }

double u2_norm_direct(const CyclicSignal& f) {
    const std::int64_t n = f.modulus();
    if (n > 4096) throw size_error("u2_norm_direct: modulus exceeds the 4096 cost guard");
    const auto& v = f.values();
    double outer = 0.0;
    for (std::int64_t h = 0; h < n; ++h) {
        cdouble inner(0.0, 0.0);
        for (std::int64_t i = 0; i < n; ++i) {
            std::int64_t j = i + h;
            if (j >= n) j -= n;
            inner += v[static_cast<std::size_t>(j)] * std::conj(v[static_cast<std::size_t>(i)]);
        }
        inner /= static_cast<double>(n);
        outer += std::norm(inner);
    }
    return std::pow(outer / static_cast<double>(n), 0.25);
}

double u3_norm(const CyclicSignal& f) {
    const std::int64_t n = f.modulus();
    const auto& v = f.values();

    // Delta_h f vanishes identically unless the support of f meets its own
    // h-translate; detect those shifts once via the support autocorrelation
    // so sparse signals (truncations with N << ntilde) skip most transforms.
    std::vector<char> active(static_cast<std::size_t>(n), 1);
    {
        std::size_t support = 0;
        std::vector<cdouble> ind(static_cast<std::size_t>(n), cdouble(0.0, 0.0));
        for (std::int64_t i = 0; i < n; ++i) {
            if (v[static_cast<std::size_t>(i)] != cdouble(0.0, 0.0)) {
                ind[static_cast<std::size_t>(i)] = cdouble(1.0, 0.0);
                ++support;
            }
        }
        if (support < static_cast<std::size_t>(n)) {
            std::vector<cdouble> rev(static_cast<std::size_t>(n));
            for (std::int64_t i = 0; i < n; ++i) {
                rev[static_cast<std::size_t>(i)] = ind[static_cast<std::size_t>((n - i) % n)];
            }
            const CyclicSignal overlap = convolve(CyclicSignal(n, std::move(ind)), CyclicSignal(n, std::move(rev)));
            const double threshold = 0.5 / static_cast<double>(n);
            for (std::int64_t h = 0; h < n; ++h) {
                active[static_cast<std::size_t>(h)] = overlap.values()[static_cast<std::size_t>(h)].real() > threshold;
            }
        }
    }

    std::vector<double> per_shift(static_cast<std::size_t>(n), 0.0);
    const unsigned workers = std::min<unsigned>(thread_count(), static_cast<unsigned>(n));
    auto run = [&](std::int64_t lo, std::int64_t hi) {
        for (std::int64_t h = lo; h < hi; ++h) {
            if (!active[static_cast<std::size_t>(h)]) continue;
            per_shift[static_cast<std::size_t>(h)] = fourth_power_sum(dft(difference_function(v, h, n)));
        }
    };
    if (workers <= 1) {
        run(0, n);
    } else {
        std::vector<std::thread> pool;
        const std::int64_t chunk = (n + workers - 1) / workers;
        for (unsigned t = 0; t < workers; ++t) {
            const std::int64_t lo = static_cast<std::int64_t>(t) * chunk;
            const std::int64_t hi = std::min<std::int64_t>(lo + chunk, n);
            if (lo >= hi) break;
            pool.emplace_back(run, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    const double mean = pairwise_sum_real(per_shift.data(), per_shift.size()) / static_cast<double>(n);
    return std::pow(mean, 0.125);
}

double u3_norm_direct(const CyclicSignal& f) {
    const std::int64_t n = f.modulus();
    if (n > 128) throw size_error("u3_norm_direct: modulus exceeds the 128 cost guard");
    const auto& v = f.values();
    auto at = [&](std::int64_t i) { return v[static_cast<std::size_t>(i % n)]; };
    double total = 0.0;
    for (std::int64_t h1 = 0; h1 < n; ++h1) {
        for (std::int64_t h2 = 0; h2 < n; ++h2) {
            cdouble inner(0.0, 0.0);
            for (std::int64_t i = 0; i < n; ++i) {
                inner += at(i + h1 + h2) * std::conj(at(i + h1)) * std::conj(at(i + h2)) * at(i);
            }
            total += std::norm(inner / static_cast<double>(n));
        }
    }
    return std::pow(total / static_cast<double>(n * n), 0.125);
}

std::pair<double, double> monotonicity_check(const CyclicSignal& f) { return {u2_norm(f), u3_norm(f)}; }

cdouble multiform_average(const CyclicSignal& a0, const CyclicSignal& a1, const CyclicSignal& a2,
                          const CyclicSignal& a3, const LinearFormsPattern& pattern, std::int64_t N) {
    const std::int64_t q = a0.modulus();
    if (a1.modulus() != q || a2.modulus() != q || a3.modulus() != q) {
        throw dimension_error("multiform_average: all four signals must share the modulus");
    }
    if (N < 1 || N >= q) throw parameter_error("multiform_average: need 1 <= N < ntilde");
    const auto& v0 = a0.values();
    const auto& v1 = a1.values();
    const auto& v2 = a2.values();
    const auto& v3 = a3.values();
    // Kahan-compensated accumulation; up to ntilde*N unit-size terms.
    cdouble sum(0.0, 0.0), comp(0.0, 0.0);
    for (std::int64_t n = 1; n <= N; ++n) {
        const std::int64_t s1 = (pattern.l1 * n) % q;
        const std::int64_t s2 = (pattern.l2 * n) % q;
        const std::int64_t s3 = (pattern.l3 * n) % q;
        for (std::int64_t m = 0; m < q; ++m) {
            std::int64_t i1 = m + s1;
            if (i1 >= q) i1 -= q;
            std::int64_t i2 = m + s2;
            if (i2 >= q) i2 -= q;
            std::int64_t i3 = m + s3;
            if (i3 >= q) i3 -= q;
            const cdouble term = v0[static_cast<std::size_t>(m)] * v1[static_cast<std::size_t>(i1)] *
                                 std::conj(v2[static_cast<std::size_t>(i2)]) *
                                 std::conj(v3[static_cast<std::size_t>(i3)]);
            const cdouble y = term - comp;
            const cdouble t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
    }
    return sum / static_cast<double>(q) / static_cast<double>(q);
}

ProgressionBound progression_correlation_bound(const CyclicSignal& a, const ArithmeticProgression& P) {
    const std::int64_t q = a.modulus();
    if (P.start < 1 || P.step < 1 || P.length < 1 || P.start + (P.length - 1) * P.step > q) {
        throw range_error("progression_correlation_bound: progression not contained in [ntilde]");
    }
    std::vector<cdouble> indicator(static_cast<std::size_t>(q), cdouble(0.0, 0.0));
    for (std::int64_t j = 0; j < P.length; ++j) {
        indicator[static_cast<std::size_t>((P.start + j * P.step) % q)] = cdouble(1.0, 0.0);
    }
    cdouble corr(0.0, 0.0);
    for (std::int64_t i = 0; i < q; ++i) {
        if (indicator[static_cast<std::size_t>(i)].real() != 0.0) corr += a.values()[static_cast<std::size_t>(i)];
    }
    const double lhs = std::abs(corr) / static_cast<double>(q);
    const CyclicSignal ind(q, std::move(indicator));
    double norm43 = 0.0;
    for (const auto& c : ind.spectrum()) norm43 += std::pow(std::abs(c), 4.0 / 3.0);
    const double rhs = std::pow(norm43, 0.75) * u2_norm(a);
    return ProgressionBound{lhs, rhs};
}

}  // namespace ulab
