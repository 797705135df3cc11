#include "ulab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ulab/errors.hpp"

namespace ulab {

ThetaSet theta_set(std::int64_t N, const LinearFormsPattern& pattern) {
    if (N < 1) throw parameter_error("theta_set: N must be positive");
    ThetaSet out{N, pattern, {}};
    const std::int64_t lmax = std::max({pattern.l1, pattern.l2, pattern.l3});
    for (std::int64_t m = 1; m <= N; ++m) {
        for (std::int64_t n = 1; n <= N && m + lmax * n <= N; ++n) {
            out.pairs.emplace_back(m, n);
        }
    }
    return out;
}

cdouble recurrence_average(const MultiplicativeFunction& chi, const LinearFormsPattern& pattern, std::int64_t N) {
    const auto theta = theta_set(N, pattern);
    if (theta.pairs.empty()) throw parameter_error("recurrence_average: Theta_N is empty");
    const auto values = evaluate_range(chi, N);
    auto at = [&](std::int64_t v) { return values[static_cast<std::size_t>(v - 1)]; };
    cdouble sum(0.0, 0.0);
    for (const auto& [m, n] : theta.pairs) {
        sum += at(m) * at(m + pattern.l1 * n) * std::conj(at(m + pattern.l2 * n)) *
               std::conj(at(m + pattern.l3 * n));
    }
    return sum / static_cast<double>(theta.pairs.size());
}

std::int64_t degenerate_pair_count(const LinearFormsPattern& pattern, std::int64_t N) {
    std::int64_t count = 0;
    for (const auto& [m, n] : theta_set(N, pattern).pairs) {
        if (m * (m + pattern.l1 * n) == (m + pattern.l2 * n) * (m + pattern.l3 * n)) ++count;
    }
    return count;
}

cdouble mixture_average(const std::vector<std::pair<MultiplicativeFunction, double>>& weights,
                        const LinearFormsPattern& pattern, const Modulus& modulus) {
    cdouble total(0.0, 0.0);
    for (const auto& [chi, w] : weights) {
        if (w < 0.0) throw parameter_error("mixture_average: weights must be non-negative");
        if (w == 0.0) continue;
        const CyclicSignal chiN = to_signal(truncate(chi, modulus));
        total += w * multiform_average(chiN, chiN, chiN, chiN, pattern, modulus.trunc);
    }
    return total;
}

std::vector<BigInt> folner_set(std::int64_t depth, std::int64_t exponent_cap) {
    if (depth < 1 || exponent_cap < 1) throw parameter_error("folner_set: depth and cap must be positive");
    double size = 1.0;
    for (std::int64_t i = 0; i < depth; ++i) size *= static_cast<double>(exponent_cap + 1);
    if (size > 1e7) throw size_error("folner_set: (cap+1)^depth exceeds the 10^7 cost guard");

    std::vector<std::int64_t> primes;
    for (std::int64_t bound = 16;; bound *= 2) {
        primes = primes_up_to(bound);
        if (static_cast<std::int64_t>(primes.size()) >= depth) break;
    }
    primes.resize(static_cast<std::size_t>(depth));

    std::vector<BigInt> out{BigInt(1)};
    for (std::int64_t p : primes) {
        std::vector<BigInt> next;
        next.reserve(out.size() * static_cast<std::size_t>(exponent_cap + 1));
        for (const auto& v : out) {
            BigInt power = v;
            next.push_back(power);
            for (std::int64_t k = 1; k <= exponent_cap; ++k) {
                power *= p;
                next.push_back(power);
            }
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

double multiplicative_density(const std::function<bool(const BigInt&)>& predicate, std::int64_t depth,
                              std::int64_t exponent_cap) {
    const auto phi = folner_set(depth, exponent_cap);
    std::size_t hits = 0;
    for (const auto& v : phi) {
        if (predicate(v)) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(phi.size());
}

Coloring Coloring::trivial() {
    return Coloring{1, [](std::int64_t) { return 0; }, "trivial"};
}

Coloring Coloring::residue(std::int64_t q) {
    if (q < 1) throw parameter_error("Coloring::residue: q must be positive");
    return Coloring{static_cast<int>(q), [q](std::int64_t n) { return static_cast<int>(((n % q) + q) % q); },
                    "residue:" + std::to_string(q)};
}

Coloring Coloring::seven_adic() {
    return Coloring{6,
                    [](std::int64_t n) {
                        if (n == 0) return 0;
                        while (n % 7 == 0) n /= 7;
                        return static_cast<int>(n % 7) - 1;
                    },
                    "7adic"};
}

Coloring Coloring::parse(const std::string& spec) {
    if (spec == "trivial") return trivial();
    if (spec == "7adic") return seven_adic();
    if (spec.rfind("residue:", 0) == 0) return residue(std::stoll(spec.substr(8)));
    throw input_error("Coloring::parse: unknown coloring '" + spec + "'");
}

namespace {

std::int64_t small(const BigInt& v, const char* what) {
    if (v < std::numeric_limits<std::int64_t>::min() || v > std::numeric_limits<std::int64_t>::max()) {
        throw size_error(std::string("coloring_search: ") + what + " does not fit in 64 bits");
    }
    return static_cast<std::int64_t>(v);
}

/// Exact square root of a non-negative 64-bit integer, or -1.
std::int64_t exact_sqrt(std::int64_t v) {
    if (v < 0) return -1;
    auto s = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(v))));
    while (s > 0 && s * s > v) --s;
    while ((s + 1) * (s + 1) <= v) ++s;
    return s * s == v ? s : -1;
}

}  // namespace

std::vector<MonochromaticHit> coloring_search(const QuadraticForm& p, const Coloring& coloring,
                                              std::int64_t bound) {
    if (bound < 2) throw parameter_error("coloring_search: bound must be at least 2");
    const std::int64_t a = small(p.a, "a"), b = small(p.b, "b"), c = small(p.c, "c");
    const std::int64_t d = small(p.d, "d"), e = small(p.e, "e"), f = small(p.f, "f");
    if (c == 0) throw parameter_error("coloring_search: c must be non-zero to solve for n");

    std::vector<int> cell(static_cast<std::size_t>(bound + 1));
    for (std::int64_t v = 1; v <= bound; ++v) cell[static_cast<std::size_t>(v)] = coloring.rule(v);

    std::vector<MonochromaticHit> hits;
    for (std::int64_t x = 1; x <= bound; ++x) {
        for (std::int64_t y = 1; y <= bound; ++y) {
            if (x == y || cell[static_cast<std::size_t>(x)] != cell[static_cast<std::size_t>(y)]) continue;
            // c n^2 + (e x + f y) n + (a x^2 + b y^2 + d x y) = 0.
            const std::int64_t lin = e * x + f * y;
            const std::int64_t cst = a * x * x + b * y * y + d * x * y;
            const std::int64_t disc = lin * lin - 4 * c * cst;
            const std::int64_t s = exact_sqrt(disc);
            if (s < 0) continue;
            for (std::int64_t num : {-lin + s, -lin - s}) {
                if (num % (2 * c) != 0) continue;
                const std::int64_t n = num / (2 * c);
                if (n <= 0) continue;
                // Re-verify exactly before reporting.
                if (p.eval(x, y, n) != 0) continue;
                hits.push_back(MonochromaticHit{x, y, n, cell[static_cast<std::size_t>(x)]});
                break;
            }
        }
    }
    return hits;
}

std::vector<PatternHit> coloring_search(const EllPattern& pattern, const Coloring& coloring, std::int64_t bound) {
    if (bound < 1) throw parameter_error("coloring_search: bound must be positive");
    const std::int64_t l0 = small(pattern.ell0, "ell0"), l1 = small(pattern.ell1, "ell1");
    const std::int64_t l2 = small(pattern.ell2, "ell2"), l3 = small(pattern.ell3, "ell3");
    std::vector<PatternHit> hits;
    for (std::int64_t k = 1; k <= bound; ++k) {
        for (std::int64_t m = 1; m <= bound; ++m) {
            for (std::int64_t n = 1; n <= bound; ++n) {
                const std::int64_t x = k * l0 * m * (m + l1 * n);
                const std::int64_t y = k * l0 * (m + l2 * n) * (m + l3 * n);
                if (x <= 0 || y <= 0 || x == y) continue;
                const int cx = coloring.rule(x);
                if (cx != coloring.rule(y)) continue;
                hits.push_back(PatternHit{k, m, n, x, y, cx});
            }
        }
    }
    return hits;
}

}  // namespace ulab
