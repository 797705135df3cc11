#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <random>

#include "ulab/core_ring.hpp"
#include "ulab/errors.hpp"

using namespace ulab;

TEST_CASE("select_modulus pinned values") {
    CHECK(select_modulus(1, 1).ntilde == 11);
    CHECK(select_modulus(10, 6).ntilde == 601);
}

TEST_CASE("select_modulus invariants against the trial-division oracle") {
    for (std::int64_t N : {1, 2, 7, 10, 100, 2000}) {
        for (std::int64_t ell : {1, 3, 6, 12}) {
            const Modulus m = select_modulus(N, ell);
            CHECK(m.trunc == N);
            CHECK(m.ell == ell);
            CHECK(is_prime_trial_division(static_cast<std::uint64_t>(m.ntilde)));
            CHECK(m.ntilde > 10 * ell * N);
            CHECK(m.ntilde <= 20 * ell * N);
            // Smallest such prime: nothing prime in (10 ell N, ntilde).
            for (std::int64_t k = 10 * ell * N + 1; k < m.ntilde; ++k) {
                CHECK_FALSE(is_prime_trial_division(static_cast<std::uint64_t>(k)));
            }
        }
    }
}

TEST_CASE("select_modulus overflow guard") {
    CHECK_THROWS_AS(select_modulus(std::int64_t{1} << 40, std::int64_t{1} << 25), size_error);
}

TEST_CASE("Miller-Rabin agrees with trial division") {
    for (std::uint64_t n = 0; n <= 20000; ++n) {
        CHECK(is_prime_u64(n) == is_prime_trial_division(n));
    }
}

TEST_CASE("mod_inverse pinned values and involution") {
    CHECK(mod_inverse(2, 11) == 6);
    CHECK(mod_inverse(1, 97) == 1);
    for (std::int64_t a = 1; a < 101; ++a) {
        const std::int64_t inv = mod_inverse(a, 101);
        CHECK((a * inv) % 101 == 1);
        CHECK(mod_inverse(inv, 101) == a);
    }
    CHECK_THROWS_AS(mod_inverse(0, 11), input_error);
    CHECK_THROWS_AS(mod_inverse(22, 11), input_error);
}

TEST_CASE("mod_inverse exhaustive for all primes up to 101") {
    for (std::int64_t p : primes_up_to(101)) {
        for (std::int64_t a = 1; a < p; ++a) {
            CHECK((a * mod_inverse(a, p)) % p == 1);
        }
    }
}

TEST_CASE("primes_up_to examples and oracle") {
    CHECK(primes_up_to(10) == std::vector<std::int64_t>{2, 3, 5, 7});
    CHECK(primes_up_to(2) == std::vector<std::int64_t>{2});
    CHECK(primes_up_to(30).size() == 10);
    const auto primes = primes_up_to(500);
    std::size_t count = 0;
    for (std::uint64_t n = 2; n <= 500; ++n) {
        if (is_prime_trial_division(n)) {
            REQUIRE(count < primes.size());
            CHECK(primes[count] == static_cast<std::int64_t>(n));
            ++count;
        }
    }
    CHECK(count == primes.size());
}

TEST_CASE("integer_sqrt_if_square pinned values") {
    CHECK(integer_sqrt_if_square(std::int64_t{100}) == 10);
    CHECK(integer_sqrt_if_square(std::int64_t{921600}) == 960);
    CHECK_FALSE(integer_sqrt_if_square(std::int64_t{2}).has_value());
    CHECK_FALSE(integer_sqrt_if_square(std::int64_t{-4}).has_value());
    CHECK(integer_sqrt_if_square(std::int64_t{0}) == 0);
}

TEST_CASE("integer_sqrt_if_square agrees with the floating oracle up to 10^6") {
    for (std::int64_t n = 0; n <= 1000000; ++n) {
        const auto s = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(n))));
        const bool is_square = s * s == n || (s - 1) * (s - 1) == n || (s + 1) * (s + 1) == n;
        const auto got = integer_sqrt_if_square(n);
        CHECK(got.has_value() == is_square);
        if (got) CHECK(*got * *got == n);
    }
}

TEST_CASE("integer_sqrt_if_square on random 128-bit squares") {
    std::mt19937_64 rng(20260823);
    for (int i = 0; i < 64; ++i) {
        BigInt root = BigInt(rng()) | (BigInt(1) << 63);  // force a genuinely large root
        BigInt square = root * root;
        auto got = integer_sqrt_if_square(square);
        REQUIRE(got.has_value());
        CHECK(*got == root);
        CHECK_FALSE(integer_sqrt_if_square(square + 1).has_value());
        CHECK_FALSE(integer_sqrt_if_square(square - 1).has_value());
    }
}
