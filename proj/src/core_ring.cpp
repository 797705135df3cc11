#include "ulab/core_ring.hpp"

#include <cmath>

namespace ulab {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t acc = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) acc = mulmod_u64(acc, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return acc;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // This witness set is deterministic for all n < 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i < r - 1; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

bool is_prime_trial_division(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

Modulus select_modulus(std::int64_t N, std::int64_t ell) {
    if (N < 1 || ell < 1) throw input_error("select_modulus: N and ell must be positive");
    const unsigned __int128 bound = static_cast<unsigned __int128>(20) * static_cast<unsigned __int128>(ell) *
                                    static_cast<unsigned __int128>(N);
    if (bound > static_cast<unsigned __int128>(INT64_MAX)) {
        throw size_error("select_modulus: 20*ell*N does not fit in a 64-bit integer");
    }
    std::int64_t candidate = 10 * ell * N + 1;
    while (!is_prime_u64(static_cast<std::uint64_t>(candidate))) ++candidate;
    return Modulus{N, ell, candidate};
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    if (p < 2) throw input_error("mod_inverse: modulus must be a prime >= 2");
    std::int64_t r = a % p;
    if (r < 0) r += p;
    if (r == 0) throw input_error("mod_inverse: argument is divisible by the modulus");
    // p is prime, so a^(p-2) is the inverse.
    return static_cast<std::int64_t>(
        powmod_u64(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(p - 2), static_cast<std::uint64_t>(p)));
}

std::vector<std::int64_t> primes_up_to(std::int64_t K) {
    if (K < 2) throw input_error("primes_up_to: K must be at least 2");
    std::vector<bool> composite(static_cast<std::size_t>(K) + 1, false);
    std::vector<std::int64_t> primes;
    for (std::int64_t i = 2; i <= K; ++i) {
        if (composite[static_cast<std::size_t>(i)]) continue;
        primes.push_back(i);
        for (std::int64_t j = i * i; j <= K; j += i) composite[static_cast<std::size_t>(j)] = true;
    }
    return primes;
}

std::optional<std::int64_t> integer_sqrt_if_square(std::int64_t n) {
    if (n < 0) return std::nullopt;
    auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (s > 0 && s * s > n) --s;
    while ((s + 1) * (s + 1) <= n) ++s;
    if (s * s == n) return s;
    return std::nullopt;
}

std::optional<BigInt> integer_sqrt_if_square(const BigInt& n) {
    if (n < 0) return std::nullopt;
    BigInt s = boost::multiprecision::sqrt(n);
    if (s * s == n) return s;
    return std::nullopt;
}

}  // namespace ulab
