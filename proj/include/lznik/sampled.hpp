#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "lznik/core.hpp"
#include "lznik/fft.hpp"
#include "lznik/step_function.hpp"

namespace lznik {

// Uniform complex samples covering a truncated box of R^n, n = 1 or 2;
// each sample stands for one grid cell of measure prod(spacing).
struct SampledFunction {
    int dim = 1;
    std::array<std::size_t, 2> extent{0, 1}; // samples per axis (axis 1 unused in 1-D)
    std::array<double, 2> spacing{1.0, 1.0};
    std::array<double, 2> origin{0.0, 0.0}; // coordinate of sample (0, 0)
    std::vector<std::complex<double>> values; // row-major, index = i0 + extent0 * i1

    std::size_t size() const { return values.size(); }
    double cell_measure() const { return dim == 1 ? spacing[0] : spacing[0] * spacing[1]; }
    double total_measure() const { return cell_measure() * static_cast<double>(size()); }

    std::array<double, 2> coordinate(std::size_t i0, std::size_t i1 = 0) const {
        return {origin[0] + static_cast<double>(i0) * spacing[0],
                origin[1] + static_cast<double>(i1) * spacing[1]};
    }
};

// one constant piece of measure cell_measure() per cell, value |f|
inline StepFunction to_step(const SampledFunction& f) {
    std::vector<Piece> ps;
    ps.reserve(f.size());
    const double cell = f.cell_measure();
    for (const auto& z : f.values) ps.push_back({std::abs(z), cell});
    return StepFunction(std::move(ps));
}

inline StepFunction rearrange(const SampledFunction& f) { return rearrange(to_step(f)); }

// Samples of the transform on the dual grid: bin j (signed, in
// [-N/2, N/2) per axis) sits at frequency j / (N * spacing) and is stored at
// array index (j + N) % N.
struct DftData {
    int dim = 1;
    std::array<std::size_t, 2> extent{0, 1};
    std::array<double, 2> freq_spacing{0.0, 0.0};
    std::vector<std::complex<double>> bins;

    double frequency(int axis, long j) const {
        return static_cast<double>(j) * freq_spacing[axis];
    }
    static long signed_bin(std::size_t idx, std::size_t n) {
        const long l = static_cast<long>(idx);
        return l < static_cast<long>(n / 2) ? l : l - static_cast<long>(n);
    }
};

namespace detail {

inline void axis_fft(std::vector<std::complex<double>>& v,
                     const std::array<std::size_t, 2>& extent, int dim, int axis, int sign) {
    const std::size_t n0 = extent[0], n1 = extent[1];
    if (axis == 0) {
        std::vector<std::complex<double>> line(n0);
        for (std::size_t i1 = 0; i1 < n1; ++i1) {
            for (std::size_t i0 = 0; i0 < n0; ++i0) line[i0] = v[i0 + n0 * i1];
            fft_pow2(line, sign);
            for (std::size_t i0 = 0; i0 < n0; ++i0) v[i0 + n0 * i1] = line[i0];
        }
    } else {
        std::vector<std::complex<double>> line(n1);
        for (std::size_t i0 = 0; i0 < n0; ++i0) {
            for (std::size_t i1 = 0; i1 < n1; ++i1) line[i1] = v[i0 + n0 * i1];
            fft_pow2(line, sign);
            for (std::size_t i1 = 0; i1 < n1; ++i1) v[i0 + n0 * i1] = line[i1];
        }
    }
    (void)dim;
}

} // namespace detail

// Discrete surrogate of the transform with the continuum normalization
// (Riemann-sum scaling): fhat(xi_j) = sum_k f(x_k) exp(-2 pi i xi_j x_k) * cell.
inline DftData forward_dft(const SampledFunction& f) {
    require(f.size() > 0, "forward_dft: empty grid");
    for (int a = 0; a < f.dim; ++a)
        require(is_pow2(f.extent[a]), "forward_dft: extents must be powers of two");
    DftData out;
    out.dim = f.dim;
    out.extent = f.extent;
    for (int a = 0; a < f.dim; ++a)
        out.freq_spacing[a] = 1.0 / (static_cast<double>(f.extent[a]) * f.spacing[a]);
    out.bins = f.values;
    for (int a = 0; a < f.dim; ++a) detail::axis_fft(out.bins, f.extent, f.dim, a, -1);
    // cell scaling and the phase carrying the grid origin
    const double cell = f.cell_measure();
    const double two_pi = 2.0 * 3.14159265358979323846;
    for (std::size_t i1 = 0; i1 < out.extent[1]; ++i1) {
        const long j1 = f.dim == 2 ? DftData::signed_bin(i1, out.extent[1]) : 0;
        for (std::size_t i0 = 0; i0 < out.extent[0]; ++i0) {
            const long j0 = DftData::signed_bin(i0, out.extent[0]);
            double phase = out.frequency(0, j0) * f.origin[0];
            if (f.dim == 2) phase += out.frequency(1, j1) * f.origin[1];
            out.bins[i0 + out.extent[0] * i1] *=
                cell * std::polar(1.0, -two_pi * phase);
        }
    }
    return out;
}

// Exact inverse of forward_dft back onto the given spatial grid.
inline SampledFunction inverse_dft(const DftData& F, const std::array<double, 2>& origin,
                                   const std::array<double, 2>& spacing) {
    SampledFunction out;
    out.dim = F.dim;
    out.extent = F.extent;
    out.spacing = spacing;
    out.origin = origin;
    out.values = F.bins;
    const double two_pi = 2.0 * 3.14159265358979323846;
    double dxi = F.freq_spacing[0];
    if (F.dim == 2) dxi *= F.freq_spacing[1];
    for (std::size_t i1 = 0; i1 < F.extent[1]; ++i1) {
        const long j1 = F.dim == 2 ? DftData::signed_bin(i1, F.extent[1]) : 0;
        for (std::size_t i0 = 0; i0 < F.extent[0]; ++i0) {
            const long j0 = DftData::signed_bin(i0, F.extent[0]);
            double phase = F.frequency(0, j0) * origin[0];
            if (F.dim == 2) phase += F.frequency(1, j1) * origin[1];
            out.values[i0 + F.extent[0] * i1] *= dxi * std::polar(1.0, two_pi * phase);
        }
    }
    for (int a = 0; a < F.dim; ++a) detail::axis_fft(out.values, F.extent, F.dim, a, +1);
    return out;
}

} // namespace lznik
