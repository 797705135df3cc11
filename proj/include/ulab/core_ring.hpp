#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ulab/errors.hpp"

namespace ulab {

using BigInt = boost::multiprecision::cpp_int;

/// Cyclic group parameters: truncation length N, form weight ell = l1+l2+l3,
/// and the prime modulus ntilde, the smallest prime above 10*ell*N.
struct Modulus {
    std::int64_t trunc;   // N
    std::int64_t ell;     // l1 + l2 + l3
    std::int64_t ntilde;  // smallest prime > 10*ell*N, at most 20*ell*N
};

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// Primality by trial division; the independent oracle used in tests.
bool is_prime_trial_division(std::uint64_t n);

/// Smallest prime strictly greater than 10*ell*N, packaged with N and ell.
/// Throws size_error when the 20*ell*N search bound does not fit in 64 bits.
Modulus select_modulus(std::int64_t N, std::int64_t ell);

/// Inverse of a modulo the prime p, in [1, p-1]. Throws input_error when
/// a == 0 (mod p).
std::int64_t mod_inverse(std::int64_t a, std::int64_t p);

/// Ascending list of primes in [2, K]. K >= 2.
std::vector<std::int64_t> primes_up_to(std::int64_t K);

/// Exact integer square root when n is a perfect square, empty otherwise.
/// Negative inputs yield empty.
std::optional<std::int64_t> integer_sqrt_if_square(std::int64_t n);
std::optional<BigInt> integer_sqrt_if_square(const BigInt& n);

}  // namespace ulab
