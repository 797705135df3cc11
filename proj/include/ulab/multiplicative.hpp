#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ulab/core_ring.hpp"

namespace ulab {

using cdouble = std::complex<double>;

/// Completely multiplicative function of modulus 1, determined by its values
/// on the primes. Represented as a default rule plus finitely many explicit
/// overrides, so sparse patterns cost O(#overrides) memory.
class MultiplicativeFunction {
public:
    using PrimeRule = std::function<cdouble(std::int64_t)>;

    MultiplicativeFunction(std::string label, PrimeRule default_rule,
                           std::map<std::int64_t, cdouble> overrides = {});

    const std::string& label() const { return label_; }

    /// Value at a prime p. Overrides are checked for |value| = 1 at
    /// construction; the default rule must be unimodular by construction.
    cdouble at_prime(std::int64_t p) const;

    // Built-in family.
    static MultiplicativeFunction one();
    static MultiplicativeFunction minus_at_two();
    /// chi(p) = e(alpha) for every prime p, so chi(n) = e(alpha * Omega(n)).
    static MultiplicativeFunction phase(double alpha);
    /// Seeded pseudo-random unimodular value at each prime, deterministic in
    /// (seed, p).
    static MultiplicativeFunction random_unimodular(std::uint64_t seed);
    /// Legendre-symbol pattern mod the odd prime q, with chi(q) := 1 so the
    /// function stays unimodular.
    static MultiplicativeFunction character_like(std::int64_t q);

    /// Parses "one", "minus-at-2", "phase:<alpha>", "random:<seed>",
    /// "charlike:<q>".
    static MultiplicativeFunction parse(const std::string& spec);

private:
    std::string label_;
    PrimeRule default_rule_;
    std::map<std::int64_t, cdouble> overrides_;
};

/// chi(1..N), entry i holding chi(i+1). Sieve over smallest prime factors,
/// values built as products along the factorization.
std::vector<cdouble> evaluate_range(const MultiplicativeFunction& chi, std::int64_t N);

/// chi_N on Z_ntilde: chi on [N], zero elsewhere. Index n of `values` is the
/// residue n.
struct TruncatedSignal {
    Modulus modulus;
    std::vector<cdouble> values;
};

TruncatedSignal truncate(const MultiplicativeFunction& chi, const Modulus& modulus);

/// (1/N) sum_{n<=N} chi(n).
cdouble mean_value(const MultiplicativeFunction& chi, std::int64_t N);

/// (1/N) sum_{n<=N} (-1)^n chi(n); the alternating-weight mean from the
/// obstruction example.
cdouble alternating_mean_value(const MultiplicativeFunction& chi, std::int64_t N);

}  // namespace ulab
