#pragma once

#include <cmath>
#include <map>
#include <vector>

#include "lznik/core.hpp"
#include "lznik/rng.hpp"
#include "lznik/sampled.hpp"
#include "lznik/spectrum.hpp"

namespace lznik {

inline double sinc(double z) {
    const double a = 3.14159265358979323846 * z;
    if (std::fabs(a) < 1e-8) return 1.0 - a * a / 6.0;
    return std::sin(a) / a;
}

// integral of sinc^n over the line (n even, sinc(u) = sin(pi u)/(pi u)):
// (1/(2^{n-1} (n-1)!)) * sum_k (-1)^k C(n,k) (n-2k)^{n-1}
inline double sinc_power_integral(int n) {
    require(n >= 2 && n % 2 == 0, "sinc_power_integral: n must be even and >= 2");
    double fact = 1.0;
    for (int i = 2; i < n; ++i) fact *= i;
    double sum = 0.0;
    double binom = 1.0;
    for (int k = 0; k <= n / 2; ++k) {
        const double base = static_cast<double>(n - 2 * k);
        sum += (k % 2 == 0 ? 1.0 : -1.0) * binom * std::pow(base, n - 1);
        binom = binom * (n - k) / (k + 1);
    }
    return sum / (std::pow(2.0, n - 1) * fact);
}

enum class FamilyKind { sinc_power, random_spectrum };

struct BandlimitedFunction {
    FamilyKind kind = FamilyKind::sinc_power;
    double omega = 0.0;
    int m = 0;
    SampledFunction samples;
    Spectrum spectrum;
    std::map<double, double> closed_form_norms; // p -> ||f||_p (key kInf = sup norm)
};

struct GridSpec {
    double half_width; // desired spatial half-width (rounded up to a pow2 grid)
    double step;
};

// Grid for sinc^m(omega x) whose truncated tails keep every ||f||_q
// (q = 1..q_max) within tail_tol relative error, with the step fine enough
// that cell sums of f^q are alias-free.
inline GridSpec sinc_grid(double omega, int m, int q_max = 2, double tail_tol = 1e-5) {
    require(omega > 0.0 && m >= 1, "sinc_grid: need omega > 0, m >= 1");
    const double pi = 3.14159265358979323846;
    double x = 8.0 / omega; // never truncate inside the first lobes
    for (int q = 1; q <= q_max; ++q) {
        const int n = m * q;
        if (n < 2) continue;
        const double cn = n % 2 == 0 ? sinc_power_integral(n) : 0.25;
        // envelope bound: |sinc(omega x)|^{n} <= (pi omega x)^{-n}
        const double rhs = 2.0 * omega / (std::pow(pi * omega, n) * cn * (n - 1) * tail_tol);
        x = std::max(x, std::pow(rhs, 1.0 / (n - 1)));
    }
    GridSpec g;
    g.step = 1.0 / (1.25 * std::max(1, q_max) * m * omega);
    g.half_width = x;
    return g;
}

// f(x) = sinc^m(omega x) on a truncated symmetric grid containing x = 0;
// spectrum is the m-fold box convolution support [-m omega/2, m omega/2].
inline BandlimitedFunction make_sinc_power(double omega, int m, const GridSpec& grid) {
    require(omega > 0.0, "make_sinc_power: omega must be positive");
    require(m >= 1, "make_sinc_power: m must be >= 1");
    require(grid.step > 0.0 && grid.half_width > 0.0, "make_sinc_power: bad grid");
    require(grid.step <= 1.0 / (m * omega),
            "make_sinc_power: grid does not resolve the bandwidth (step > 1/(m*omega))");

    std::size_t n = 2;
    while (static_cast<double>(n) * grid.step < 2.0 * grid.half_width && n < (1ull << 31))
        n <<= 1;

    BandlimitedFunction f;
    f.kind = FamilyKind::sinc_power;
    f.omega = omega;
    f.m = m;
    f.spectrum = Spectrum(1, {box1(-0.5 * m * omega, 0.5 * m * omega)});
    f.samples.dim = 1;
    f.samples.extent = {n, 1};
    f.samples.spacing = {grid.step, 1.0};
    f.samples.origin = {-static_cast<double>(n / 2) * grid.step, 0.0};
    f.samples.values.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double x = f.samples.coordinate(k)[0];
        f.samples.values[k] = std::pow(sinc(omega * x), m);
    }
    f.closed_form_norms[kInf] = 1.0;
    for (int p = 1; p <= 4; ++p) {
        const int n_exp = m * p;
        if (n_exp >= 2 && n_exp % 2 == 0)
            f.closed_form_norms[p] =
                std::pow(sinc_power_integral(n_exp) / omega, 1.0 / p);
    }
    return f;
}

// Spectral state of a random band-limited periodic surrogate: independent
// complex Gaussian coefficients on the grid frequencies inside S.
struct RandomBandState {
    Spectrum spectrum;
    double period = 0.0;
    DftData data;
    std::vector<std::size_t> active_bins;
};

inline RandomBandState random_band_state(const Spectrum& s, std::uint64_t seed, double period,
                                         std::size_t grid_points) {
    require(period > 0.0, "random_band_state: period must be positive");
    require(is_pow2(grid_points), "random_band_state: grid points must be a power of two");
    const double dxi = 1.0 / period;
    const double nyq = (static_cast<double>(grid_points) / 2.0 - 1.0) * dxi;
    require(s.radius() <= nyq, "random_band_state: resolution insufficient for the spectrum");

    RandomBandState st;
    st.spectrum = s;
    st.period = period;
    st.data.dim = s.dim;
    st.data.extent = {grid_points, s.dim == 2 ? grid_points : 1};
    st.data.freq_spacing = {dxi, s.dim == 2 ? dxi : 0.0};
    st.data.bins.assign(st.data.extent[0] * st.data.extent[1], {0.0, 0.0});

    CounterRng rng(seed);
    const long n0 = static_cast<long>(st.data.extent[0]);
    const long n1 = static_cast<long>(st.data.extent[1]);
    for (long j1 = s.dim == 2 ? -n1 / 2 : 0; j1 < (s.dim == 2 ? n1 / 2 : 1); ++j1) {
        for (long j0 = -n0 / 2; j0 < n0 / 2; ++j0) {
            std::array<double, 2> xi = {static_cast<double>(j0) * dxi,
                                        static_cast<double>(j1) * dxi};
            if (!s.contains(xi)) continue;
            const std::size_t i0 = static_cast<std::size_t>((j0 + n0) % n0);
            const std::size_t i1 = static_cast<std::size_t>((j1 + n1) % n1);
            const std::size_t idx = i0 + st.data.extent[0] * i1;
            st.data.bins[idx] = rng.next_complex_normal();
            st.active_bins.push_back(idx);
        }
    }
    return st;
}

inline BandlimitedFunction synthesize(const RandomBandState& st) {
    BandlimitedFunction f;
    f.kind = FamilyKind::random_spectrum;
    f.spectrum = st.spectrum;
    const double h = st.period / static_cast<double>(st.data.extent[0]);
    const std::array<double, 2> origin = {-0.5 * st.period,
                                          st.data.dim == 2 ? -0.5 * st.period : 0.0};
    const std::array<double, 2> spacing = {h, st.data.dim == 2 ? h : 1.0};
    f.samples = inverse_dft(st.data, origin, spacing);
    return f;
}

// Deterministic periodic surrogate: random spectral coefficients supported
// in S, realized on one period by the inverse transform.
inline BandlimitedFunction make_random_bandlimited(const Spectrum& s, std::uint64_t seed,
                                                   double period, std::size_t grid_points) {
    return synthesize(random_band_state(s, seed, period, grid_points));
}

struct DftChecks {
    double plancherel_residual = 0.0;
    double hausdorff_young_l1_residual = 0.0;
};

// Residuals of the two endpoint mapping properties of the discrete
// transform surrogate: |  ||fhat||_2 - ||f||_2 | / ||f||_2 and
// max(0, ||fhat||_inf - ||f||_1) / ||f||_1, cell-measure weighted.
inline DftChecks dft_checks(const SampledFunction& f) {
    DftChecks out;
    const double cell = f.cell_measure();
    double l2 = 0.0, l1 = 0.0;
    for (const auto& z : f.values) {
        const double a = std::abs(z);
        l2 += a * a * cell;
        l1 += a * cell;
    }
    if (l2 == 0.0) return out;
    const DftData F = forward_dft(f);
    double dxi = F.freq_spacing[0];
    if (F.dim == 2) dxi *= F.freq_spacing[1];
    double fl2 = 0.0, fmax = 0.0;
    for (const auto& z : F.bins) {
        const double a = std::abs(z);
        fl2 += a * a * dxi;
        fmax = std::max(fmax, a);
    }
    out.plancherel_residual = std::fabs(std::sqrt(fl2) - std::sqrt(l2)) / std::sqrt(l2);
    out.hausdorff_young_l1_residual = std::max(0.0, fmax - l1) / l1;
    return out;
}

} // namespace lznik
