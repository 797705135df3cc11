#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <vector>

#include "ulab/multiplicative.hpp"

namespace ulab {

/// Complex-valued function on Z_ntilde (ntilde prime) with a lazily cached
/// averaged Fourier transform. Values are immutable after construction; the
/// spectrum cache is populated once under a single-writer lock, so concurrent
/// reads are safe.
class CyclicSignal {
public:
    CyclicSignal(std::int64_t modulus, std::vector<cdouble> values);

    std::int64_t modulus() const { return modulus_; }
    const std::vector<cdouble>& values() const { return values_; }

    /// Averaged transform f_hat(xi) = (1/ntilde) sum_n f(n) e(-n xi / ntilde),
    /// computed on first use and cached.
    const std::vector<cdouble>& spectrum() const;

private:
    struct SpectrumCache {
        std::once_flag flag;
        std::vector<cdouble> data;
    };

    std::int64_t modulus_;
    std::vector<cdouble> values_;
    std::shared_ptr<SpectrumCache> cache_;
};

CyclicSignal to_signal(const TruncatedSignal& t);

/// Averaged forward transform via Bluestein's chirp-z reduction to a
/// power-of-two convolution; works at any length, in particular prime ones.
std::vector<cdouble> dft(const std::vector<cdouble>& values);

/// O(n^2) reference transform with pairwise summation; the cross-check oracle
/// for the fast path.
std::vector<cdouble> naive_dft(const std::vector<cdouble>& values);

/// Inversion: f(n) = sum_xi spectrum[xi] e(n xi / modulus).
CyclicSignal idft(const std::vector<cdouble>& spectrum, std::int64_t modulus);

/// Averaged convolution (f*g)(n) = (1/ntilde) sum_k g(n-k) f(k). Under the
/// averaged transform the spectra multiply with no stray factors.
CyclicSignal convolve(const CyclicSignal& f, const CyclicSignal& g);

/// Naive O(n^2) convolution, the oracle for the spectral path.
CyclicSignal naive_convolve(const CyclicSignal& f, const CyclicSignal& g);

/// CSV dump, columns xi,re,im in ascending xi order.
void dump_spectrum_csv(const CyclicSignal& f, std::ostream& out);

/// Worker count used by the parallel loops in this library (u3_norm and the
/// grid scans). Defaults to the hardware concurrency; results are bit-stable
/// across thread counts.
void set_thread_count(unsigned n);
unsigned thread_count();

}  // namespace ulab
