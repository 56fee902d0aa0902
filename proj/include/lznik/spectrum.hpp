#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "lznik/core.hpp"

namespace lznik {

// Axis-aligned closed box; axis 1 is ignored in dimension one.
struct Box {
    std::array<double, 2> lo{0.0, 0.0};
    std::array<double, 2> hi{0.0, 0.0};
};

inline Box box1(double lo, double hi) { return Box{{lo, 0.0}, {hi, 0.0}}; }
inline Box box2(double lo0, double hi0, double lo1, double hi1) {
    return Box{{lo0, lo1}, {hi0, hi1}};
}

// Finite union of axis-aligned boxes representing a compact spectral
// support; overlaps allowed.
struct Spectrum {
    int dim = 1;
    std::vector<Box> boxes;

    Spectrum() = default;
    Spectrum(int d, std::vector<Box> bs) : dim(d), boxes(std::move(bs)) {
        require(dim == 1 || dim == 2, "Spectrum: dimension must be 1 or 2");
        for (const auto& b : boxes)
            for (int a = 0; a < dim; ++a)
                require(b.hi[a] > b.lo[a], "Spectrum: boxes must have positive volume");
    }

    bool empty() const { return boxes.empty(); }

    bool contains(std::array<double, 2> x) const {
        for (const auto& b : boxes) {
            bool in = true;
            for (int a = 0; a < dim; ++a)
                in = in && x[a] >= b.lo[a] && x[a] <= b.hi[a];
            if (in) return true;
        }
        return false;
    }

    Box bounding_box() const {
        require(!boxes.empty(), "Spectrum: empty");
        Box out = boxes.front();
        for (const auto& b : boxes)
            for (int a = 0; a < dim; ++a) {
                out.lo[a] = std::min(out.lo[a], b.lo[a]);
                out.hi[a] = std::max(out.hi[a], b.hi[a]);
            }
        return out;
    }

    // Euclidean radius of the farthest corner from the origin
    double radius() const {
        double r2 = 0.0;
        for (const auto& b : boxes) {
            double s = 0.0;
            for (int a = 0; a < dim; ++a) {
                const double m = std::max(std::fabs(b.lo[a]), std::fabs(b.hi[a]));
                s += m * m;
            }
            r2 = std::max(r2, s);
        }
        return std::sqrt(r2);
    }
};

// Lebesgue measure of the union, exact via coordinate decomposition.
inline double spectrum_measure(const Spectrum& s) {
    require(!s.empty(), "spectrum_measure: empty spectrum");
    if (s.dim == 1) {
        std::vector<std::pair<double, double>> iv;
        iv.reserve(s.boxes.size());
        for (const auto& b : s.boxes) iv.emplace_back(b.lo[0], b.hi[0]);
        std::sort(iv.begin(), iv.end());
        double total = 0.0, cur_lo = iv[0].first, cur_hi = iv[0].second;
        for (std::size_t i = 1; i < iv.size(); ++i) {
            if (iv[i].first > cur_hi) {
                total += cur_hi - cur_lo;
                cur_lo = iv[i].first;
                cur_hi = iv[i].second;
            } else {
                cur_hi = std::max(cur_hi, iv[i].second);
            }
        }
        return total + (cur_hi - cur_lo);
    }
    // 2-D: mark covered cells of the coordinate grid
    std::vector<double> xs, ys;
    for (const auto& b : s.boxes) {
        xs.push_back(b.lo[0]);
        xs.push_back(b.hi[0]);
        ys.push_back(b.lo[1]);
        ys.push_back(b.hi[1]);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
        for (std::size_t j = 0; j + 1 < ys.size(); ++j) {
            const double cx = 0.5 * (xs[i] + xs[i + 1]);
            const double cy = 0.5 * (ys[j] + ys[j + 1]);
            if (s.contains({cx, cy}))
                total += (xs[i + 1] - xs[i]) * (ys[j + 1] - ys[j]);
        }
    return total;
}

// Bounding box of the convex hull dilated by the integer factor rho about
// the origin: a measurable superset of the spectral support of the rho-th
// pointwise power (the support of an iterated self-convolution lies inside
// rho times the convex hull).
inline Spectrum power_support(const Spectrum& s, int rho) {
    require(rho >= 1, "power_support: rho must be >= 1");
    Box bb = s.bounding_box();
    for (int a = 0; a < s.dim; ++a) {
        bb.lo[a] *= rho;
        bb.hi[a] *= rho;
    }
    return Spectrum(s.dim, {bb});
}

} // namespace lznik
