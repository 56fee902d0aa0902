#pragma once

#include <array>
#include <cmath>
#include <functional>

#include "lznik/core.hpp"

namespace lznik {

struct QuadPart {
    double value = 0.0;
    double abs_err = 0.0;
    bool exact = true;
};

namespace detail {

// 7-15 Gauss-Kronrod pair (QUADPACK constants)
inline constexpr std::array<double, 8> kGkNodes = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> kKronrodW = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr std::array<double, 4> kGaussW = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <class F>
inline void gk15(const F& f, double a, double b, double& value, double& err) {
    const double h = 0.5 * (b - a);
    const double c = 0.5 * (a + b);
    double resk = 0.0, resg = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double x = h * kGkNodes[i];
        double fv = f(c + x);
        if (i != 7) fv += f(c - x);
        resk += kKronrodW[i] * fv;
        if (i % 2 == 1) resg += kGaussW[i / 2] * fv;
        else if (i == 7) resg += kGaussW[3] * fv;
    }
    value = resk * h;
    err = std::fabs((resk - resg) * h);
}

template <class F>
inline void adaptive_gk(const F& f, double a, double b, double tol, int depth,
                        double& value, double& err) {
    double v, e;
    gk15(f, a, b, v, e);
    if (e <= tol || depth >= 28 || (b - a) < 1e-14 * (std::fabs(a) + std::fabs(b) + 1.0)) {
        value += v;
        err += e;
        return;
    }
    const double m = 0.5 * (a + b);
    adaptive_gk(f, a, m, 0.5 * tol, depth + 1, value, err);
    adaptive_gk(f, m, b, 0.5 * tol, depth + 1, value, err);
}

template <class F>
inline QuadPart adaptive(const F& f, double a, double b, double rel_tol) {
    if (!(b > a)) return {0.0, 0.0, true};
    double rough, rough_err;
    gk15(f, a, b, rough, rough_err);
    const double tol = std::max(std::fabs(rough), rough_err) * rel_tol + 1e-300;
    QuadPart out;
    out.exact = false;
    adaptive_gk(f, a, b, tol, 0, out.value, out.abs_err);
    return out;
}

// stable t1^e - t0^e built from the log-ratio
inline double pow_diff(double e, double u0, double u1) {
    // exp(e*u1) - exp(e*u0), u0 <= u1
    if (u0 == -kInf) return std::exp(e * u1);
    return std::exp(e * u0) * std::expm1(e * (u1 - u0));
}

} // namespace detail

// Integral of exp(e*u) * (1 + |u|)^a over [u0, u1] with the interval on one
// side of 0: left side means u1 <= 0 (u0 may be -inf, requiring e > 0 or a
// decaying weight), right side means u0 >= 0. This is the t-integral of
// t^{e-1} l^a(t) after u = ln t.
inline QuadPart log_weight_integral_side(double e, double a, double u0, double u1,
                                         bool left_side, double rel_tol = 1e-11,
                                         bool force_quad = false) {
    QuadPart out;
    if (!(u1 > u0)) return out;
    if (force_quad && u0 == -kInf && e == 0.0) force_quad = false; // no decaying factor to walk

    // pure power
    if (a == 0.0 && !force_quad) {
        if (e == 0.0) {
            require(std::isfinite(u0), "log_weight_integral: divergent at 0");
            out.value = u1 - u0;
        } else {
            if (u0 == -kInf) require(e > 0.0, "log_weight_integral: divergent at 0");
            out.value = detail::pow_diff(e, u0, u1) / e;
        }
        return out;
    }

    // no power factor: elementary antiderivative of (1 +- u)^a
    if (e == 0.0 && !force_quad) {
        if (left_side) {
            // d/du [-(1-u)^{a+1}/(a+1)] = (1-u)^a
            if (a == -1.0) {
                require(std::isfinite(u0), "log_weight_integral: divergent at 0");
                out.value = std::log((1.0 - u0) / (1.0 - u1));
            } else {
                const double hi = std::pow(1.0 - u1, a + 1.0);
                double lo;
                if (u0 == -kInf) {
                    require(a < -1.0, "log_weight_integral: divergent at 0");
                    lo = 0.0;
                } else {
                    lo = std::pow(1.0 - u0, a + 1.0);
                }
                out.value = (lo - hi) / (a + 1.0);
            }
        } else {
            if (a == -1.0) {
                out.value = std::log((1.0 + u1) / (1.0 + u0));
            } else {
                out.value = (std::pow(1.0 + u1, a + 1.0) - std::pow(1.0 + u0, a + 1.0)) / (a + 1.0);
            }
        }
        return out;
    }

    // nonnegative integer log exponent: finite integration-by-parts ladder
    const double ar = std::round(a);
    if (!force_quad && a > 0.0 && std::fabs(a - ar) <= 1e-9 * std::max(1.0, std::fabs(a)) &&
        ar <= 64.0) {
        const int n = static_cast<int>(ar);
        auto anti = [&](double u) {
            // left: A_k = e^{eu}(1-u)^k/e + (k/e) A_{k-1}
            // right: B_k = e^{eu}(1+u)^k/e - (k/e) B_{k-1}
            if (u == -kInf) return 0.0;
            const double ex = std::exp(e * u);
            const double g = left_side ? 1.0 - u : 1.0 + u;
            const double sgn = left_side ? 1.0 : -1.0;
            double acc = ex / e; // k = 0
            for (int k = 1; k <= n; ++k)
                acc = ex * std::pow(g, k) / e + sgn * (static_cast<double>(k) / e) * acc;
            return acc;
        };
        if (u0 == -kInf) require(e > 0.0, "log_weight_integral: divergent at 0");
        out.value = anti(u1) - anti(u0);
        return out;
    }

    // general case: adaptive Gauss-Kronrod on log-spaced panels
    auto integrand = [&](double u) {
        const double g = left_side ? 1.0 - u : 1.0 + u;
        return std::exp(e * u) * std::pow(g, a);
    };
    if (u0 != -kInf) {
        QuadPart q = detail::adaptive(integrand, u0, u1, rel_tol);
        return q;
    }
    // semi-infinite tail toward t = 0: walk fixed-width panels leftward
    // until their contribution is negligible (exp(e*u) decays, e > 0)
    require(e > 0.0, "log_weight_integral: divergent at 0");
    out.exact = false;
    double hi = u1;
    const double width = std::max(8.0, 4.0 / e);
    for (int block = 0; block < 400; ++block) {
        const double lo = hi - width;
        QuadPart q = detail::adaptive(integrand, lo, hi, rel_tol);
        out.value += q.value;
        out.abs_err += q.abs_err;
        hi = lo;
        if (q.value <= 1e-17 * std::fabs(out.value) || q.value == 0.0) break;
    }
    return out;
}

// Integral of t^{e-1} * (1+|ln t|)^{a_left or a_right} dt over [t0, t1],
// split at t = 1 where the weight's branch switches. t0 = 0 allowed.
inline QuadPart log_weight_integral(double e, double a_left, double a_right, double t0,
                                    double t1, double rel_tol = 1e-11,
                                    bool force_quad = false) {
    QuadPart out;
    if (!(t1 > t0)) return out;
    const double u0 = t0 == 0.0 ? -kInf : std::log(t0);
    const double u1 = std::log(t1);
    auto add = [&](const QuadPart& q) {
        out.value += q.value;
        out.abs_err += q.abs_err;
        out.exact = out.exact && q.exact;
    };
    if (u1 <= 0.0) {
        add(log_weight_integral_side(e, a_left, u0, u1, true, rel_tol, force_quad));
    } else if (u0 >= 0.0) {
        add(log_weight_integral_side(e, a_right, u0, u1, false, rel_tol, force_quad));
    } else {
        add(log_weight_integral_side(e, a_left, u0, 0.0, true, rel_tol, force_quad));
        add(log_weight_integral_side(e, a_right, 0.0, u1, false, rel_tol, force_quad));
    }
    return out;
}

} // namespace lznik
