#include "ulab/spectral.hpp"

#include <atomic>
#include <bit>
#include <cmath>
#include <map>
#include <numbers>
#include <ostream>
#include <thread>
#include <utility>

#include "ulab/errors.hpp"

namespace ulab {

namespace {

constexpr double kPi = std::numbers::pi;

std::atomic<unsigned> g_threads{0};

void fft_pow2(std::vector<cdouble>& a, bool inverse) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = (inverse ? 2.0 : -2.0) * kPi / static_cast<double>(len);
        const cdouble wlen = std::polar(1.0, ang);
        for (std::size_t i = 0; i < n; i += len) {
            cdouble w(1.0, 0.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                cdouble u = a[i + j];
                cdouble v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

// Chirp-z data shared by every transform of a given length.
struct BluesteinPlan {
    std::int64_t n = 0;
    std::size_t padded = 0;
    std::vector<cdouble> chirp;      // w[k] = e(-i pi k^2 / n), k^2 reduced mod 2n
    std::vector<cdouble> fft_chirp;  // transform of the padded conjugate chirp
};

std::shared_ptr<const BluesteinPlan> plan_for(std::int64_t n) {
    static std::mutex mutex;
    static std::map<std::int64_t, std::shared_ptr<const BluesteinPlan>> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    auto plan = std::make_shared<BluesteinPlan>();
    plan->n = n;
    std::size_t m = std::bit_ceil(static_cast<std::size_t>(2 * n - 1));
    plan->padded = m;
    plan->chirp.resize(static_cast<std::size_t>(n));
    for (std::int64_t k = 0; k < n; ++k) {
        const auto r = static_cast<std::int64_t>((static_cast<__int128>(k) * k) % (2 * n));
        plan->chirp[static_cast<std::size_t>(k)] = std::polar(1.0, -kPi * static_cast<double>(r) / static_cast<double>(n));
    }
    std::vector<cdouble> b(m, cdouble(0.0, 0.0));
    b[0] = std::conj(plan->chirp[0]);
    for (std::int64_t k = 1; k < n; ++k) {
        const cdouble v = std::conj(plan->chirp[static_cast<std::size_t>(k)]);
        b[static_cast<std::size_t>(k)] = v;
        b[m - static_cast<std::size_t>(k)] = v;
    }
    fft_pow2(b, false);
    plan->fft_chirp = std::move(b);
    std::lock_guard<std::mutex> lock(mutex);
    auto [it, inserted] = cache.emplace(n, std::move(plan));
    return it->second;
}

// Unnormalized forward transform X[xi] = sum_n f[n] e(-2 pi i n xi / n).
std::vector<cdouble> raw_dft(const std::vector<cdouble>& f) {
    const auto n = static_cast<std::int64_t>(f.size());
    if (n == 1) return f;
    const auto plan = plan_for(n);
    std::vector<cdouble> a(plan->padded, cdouble(0.0, 0.0));
    for (std::int64_t k = 0; k < n; ++k) {
        a[static_cast<std::size_t>(k)] = f[static_cast<std::size_t>(k)] * plan->chirp[static_cast<std::size_t>(k)];
    }
    fft_pow2(a, false);
    for (std::size_t k = 0; k < plan->padded; ++k) a[k] *= plan->fft_chirp[k];
    fft_pow2(a, true);
    const double scale = 1.0 / static_cast<double>(plan->padded);
    std::vector<cdouble> out(static_cast<std::size_t>(n));
    for (std::int64_t k = 0; k < n; ++k) {
        out[static_cast<std::size_t>(k)] =
            a[static_cast<std::size_t>(k)] * plan->chirp[static_cast<std::size_t>(k)] * scale;
    }
    return out;
}

cdouble pairwise_sum(const cdouble* data, std::size_t count) {
    if (count <= 8) {
        cdouble s(0.0, 0.0);
        for (std::size_t i = 0; i < count; ++i) s += data[i];
        return s;
    }
    const std::size_t half = count / 2;
    return pairwise_sum(data, half) + pairwise_sum(data + half, count - half);
}

}  // namespace

void set_thread_count(unsigned n) { g_threads.store(n == 0 ? 1 : n); }

unsigned thread_count() {
    unsigned n = g_threads.load();
    if (n == 0) {
        n = std::thread::hardware_concurrency();
        if (n == 0) n = 1;
    }
    return n;
}

CyclicSignal::CyclicSignal(std::int64_t modulus, std::vector<cdouble> values)
    : modulus_(modulus), values_(std::move(values)), cache_(std::make_shared<SpectrumCache>()) {
    if (modulus < 2 || !is_prime_u64(static_cast<std::uint64_t>(modulus))) {
        throw parameter_error("CyclicSignal: modulus must be prime");
    }
    if (values_.size() != static_cast<std::size_t>(modulus)) {
        throw dimension_error("CyclicSignal: value count must equal the modulus");
    }
}

const std::vector<cdouble>& CyclicSignal::spectrum() const {
    std::call_once(cache_->flag, [this] { cache_->data = dft(values_); });
    return cache_->data;
}

CyclicSignal to_signal(const TruncatedSignal& t) { return CyclicSignal(t.modulus.ntilde, t.values); }

std::vector<cdouble> dft(const std::vector<cdouble>& values) {
    auto out = raw_dft(values);
    const double scale = 1.0 / static_cast<double>(values.size());
    for (auto& v : out) v *= scale;
    return out;
}

std::vector<cdouble> naive_dft(const std::vector<cdouble>& values) {
    const auto n = static_cast<std::int64_t>(values.size());
    std::vector<cdouble> roots(static_cast<std::size_t>(n));
    for (std::int64_t r = 0; r < n; ++r) {
        roots[static_cast<std::size_t>(r)] = std::polar(1.0, -2.0 * kPi * static_cast<double>(r) / static_cast<double>(n));
    }
    std::vector<cdouble> out(static_cast<std::size_t>(n));
    std::vector<cdouble> terms(static_cast<std::size_t>(n));
    for (std::int64_t xi = 0; xi < n; ++xi) {
        for (std::int64_t k = 0; k < n; ++k) {
            const auto r = static_cast<std::int64_t>((static_cast<__int128>(k) * xi) % n);
            terms[static_cast<std::size_t>(k)] = values[static_cast<std::size_t>(k)] * roots[static_cast<std::size_t>(r)];
        }
        out[static_cast<std::size_t>(xi)] = pairwise_sum(terms.data(), terms.size()) / static_cast<double>(n);
    }
    return out;
}

CyclicSignal idft(const std::vector<cdouble>& spectrum, std::int64_t modulus) {
    if (spectrum.size() != static_cast<std::size_t>(modulus)) {
        throw dimension_error("idft: spectrum length must equal the modulus");
    }
    std::vector<cdouble> tmp(spectrum.size());
    for (std::size_t i = 0; i < spectrum.size(); ++i) tmp[i] = std::conj(spectrum[i]);
    tmp = raw_dft(tmp);
    for (auto& v : tmp) v = std::conj(v);
    return CyclicSignal(modulus, std::move(tmp));
}

CyclicSignal convolve(const CyclicSignal& f, const CyclicSignal& g) {
    if (f.modulus() != g.modulus()) throw dimension_error("convolve: modulus mismatch");
    const auto& fs = f.spectrum();
    const auto& gs = g.spectrum();
    std::vector<cdouble> product(fs.size());
    for (std::size_t i = 0; i < fs.size(); ++i) product[i] = fs[i] * gs[i];
    return idft(product, f.modulus());
}

CyclicSignal naive_convolve(const CyclicSignal& f, const CyclicSignal& g) {
    if (f.modulus() != g.modulus()) throw dimension_error("convolve: modulus mismatch");
    const std::int64_t n = f.modulus();
    std::vector<cdouble> out(static_cast<std::size_t>(n));
    std::vector<cdouble> terms(static_cast<std::size_t>(n));
    for (std::int64_t m = 0; m < n; ++m) {
        for (std::int64_t k = 0; k < n; ++k) {
            std::int64_t j = m - k;
            if (j < 0) j += n;
            terms[static_cast<std::size_t>(k)] =
                g.values()[static_cast<std::size_t>(j)] * f.values()[static_cast<std::size_t>(k)];
        }
        out[static_cast<std::size_t>(m)] = pairwise_sum(terms.data(), terms.size()) / static_cast<double>(n);
    }
    return CyclicSignal(n, std::move(out));
}

void dump_spectrum_csv(const CyclicSignal& f, std::ostream& out) {
    out << "xi,re,im\n";
    const auto& s = f.spectrum();
    for (std::size_t xi = 0; xi < s.size(); ++xi) {
        out << xi << ',' << s[xi].real() << ',' << s[xi].imag() << '\n';
    }
}

}  // namespace ulab
