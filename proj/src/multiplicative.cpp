#include "ulab/multiplicative.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "ulab/errors.hpp"

namespace ulab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

cdouble unit_phase(double frac) { return std::polar(1.0, kTwoPi * frac); }

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

int legendre_symbol(std::int64_t a, std::int64_t q) {
    a %= q;
    if (a < 0) a += q;
    if (a == 0) return 0;
    std::int64_t r = 1, base = a, e = (q - 1) / 2;
    while (e > 0) {
        if (e & 1) r = static_cast<std::int64_t>((static_cast<__int128>(r) * base) % q);
        base = static_cast<std::int64_t>((static_cast<__int128>(base) * base) % q);
        e >>= 1;
    }
    return r == 1 ? 1 : -1;
}

}  // namespace

MultiplicativeFunction::MultiplicativeFunction(std::string label, PrimeRule default_rule,
                                               std::map<std::int64_t, cdouble> overrides)
    : label_(std::move(label)), default_rule_(std::move(default_rule)), overrides_(std::move(overrides)) {
    for (const auto& [p, v] : overrides_) {
        if (std::abs(std::abs(v) - 1.0) > 1e-12) {
            throw input_error("MultiplicativeFunction: override at prime " + std::to_string(p) +
                              " is not unimodular");
        }
    }
}

cdouble MultiplicativeFunction::at_prime(std::int64_t p) const {
    if (auto it = overrides_.find(p); it != overrides_.end()) return it->second;
    return default_rule_(p);
}

MultiplicativeFunction MultiplicativeFunction::one() {
    return MultiplicativeFunction("one", [](std::int64_t) { return cdouble(1.0, 0.0); });
}

MultiplicativeFunction MultiplicativeFunction::minus_at_two() {
    return MultiplicativeFunction("minus-at-2", [](std::int64_t) { return cdouble(1.0, 0.0); },
                                  {{2, cdouble(-1.0, 0.0)}});
}

MultiplicativeFunction MultiplicativeFunction::phase(double alpha) {
    return MultiplicativeFunction("phase:" + std::to_string(alpha),
                                  [alpha](std::int64_t) { return unit_phase(alpha); });
}

MultiplicativeFunction MultiplicativeFunction::random_unimodular(std::uint64_t seed) {
    return MultiplicativeFunction("random:" + std::to_string(seed), [seed](std::int64_t p) {
        std::uint64_t h = splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(p)));
        double frac = static_cast<double>(h >> 11) * 0x1.0p-53;
        return unit_phase(frac);
    });
}

MultiplicativeFunction MultiplicativeFunction::character_like(std::int64_t q) {
    if (q < 3 || !is_prime_u64(static_cast<std::uint64_t>(q)) || q % 2 == 0) {
        throw input_error("character_like: q must be an odd prime");
    }
    // chi(q) := 1 keeps the function unimodular at the ramified prime.
    return MultiplicativeFunction(
        "charlike:" + std::to_string(q),
        [q](std::int64_t p) { return cdouble(static_cast<double>(legendre_symbol(p, q)), 0.0); },
        {{q, cdouble(1.0, 0.0)}});
}

MultiplicativeFunction MultiplicativeFunction::parse(const std::string& spec) {
    if (spec == "one") return one();
    if (spec == "minus-at-2") return minus_at_two();
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        const std::string head = spec.substr(0, colon);
        const std::string tail = spec.substr(colon + 1);
        try {
            if (head == "phase") return phase(std::stod(tail));
            if (head == "random") return random_unimodular(std::stoull(tail));
            if (head == "charlike") return character_like(std::stoll(tail));
        } catch (const std::logic_error&) {
            throw input_error("bad chi parameter in '" + spec + "'");
        }
    }
    throw input_error("unknown chi spec '" + spec +
                      "' (expected one|minus-at-2|phase:<alpha>|random:<seed>|charlike:<q>)");
}

std::vector<cdouble> evaluate_range(const MultiplicativeFunction& chi, std::int64_t N) {
    if (N < 1) throw input_error("evaluate_range: N must be positive");
    const auto size = static_cast<std::size_t>(N) + 1;
    std::vector<std::int32_t> spf(size, 0);
    for (std::int64_t i = 2; i <= N; ++i) {
        if (spf[static_cast<std::size_t>(i)] != 0) continue;
        for (std::int64_t j = i; j <= N; j += i) {
            if (spf[static_cast<std::size_t>(j)] == 0) spf[static_cast<std::size_t>(j)] = static_cast<std::int32_t>(i);
        }
    }
    std::vector<cdouble> values(size);
    values[0] = cdouble(0.0, 0.0);  // unused slot
    if (N >= 1) values[1] = cdouble(1.0, 0.0);
    std::map<std::int64_t, cdouble> prime_cache;
    for (std::int64_t n = 2; n <= N; ++n) {
        const std::int64_t p = spf[static_cast<std::size_t>(n)];
        auto it = prime_cache.find(p);
        if (it == prime_cache.end()) it = prime_cache.emplace(p, chi.at_prime(p)).first;
        values[static_cast<std::size_t>(n)] = values[static_cast<std::size_t>(n / p)] * it->second;
    }
    values.erase(values.begin());  // drop slot 0 so entry i is chi(i+1)
    return values;
}

TruncatedSignal truncate(const MultiplicativeFunction& chi, const Modulus& modulus) {
    const auto range = evaluate_range(chi, modulus.trunc);
    std::vector<cdouble> values(static_cast<std::size_t>(modulus.ntilde), cdouble(0.0, 0.0));
    for (std::int64_t n = 1; n <= modulus.trunc; ++n) {
        values[static_cast<std::size_t>(n)] = range[static_cast<std::size_t>(n - 1)];
    }
    return TruncatedSignal{modulus, std::move(values)};
}

cdouble mean_value(const MultiplicativeFunction& chi, std::int64_t N) {
    const auto range = evaluate_range(chi, N);
    cdouble sum(0.0, 0.0);
    for (const auto& v : range) sum += v;
    return sum / static_cast<double>(N);
}

cdouble alternating_mean_value(const MultiplicativeFunction& chi, std::int64_t N) {
    const auto range = evaluate_range(chi, N);
    cdouble sum(0.0, 0.0);
    for (std::int64_t n = 1; n <= N; ++n) {
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        sum += sign * range[static_cast<std::size_t>(n - 1)];
    }
    return sum / static_cast<double>(N);
}

}  // namespace ulab
