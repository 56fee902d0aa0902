#pragma once

#include <cmath>
#include <stdexcept>

#include "lznik/core.hpp"
#include "lznik/log_pair.hpp"

namespace lznik {

// Parameters (p, b, A) of a Lorentz-Zygmund space. p and b live in (0, inf];
// infinity is a first-class value and 1/inf = 0 throughout.
struct SpaceParams {
    double p = 2.0;
    double b = 2.0;
    LogPair a{};

    SpaceParams() = default;
    SpaceParams(double p_, double b_, LogPair a_ = {}) : p(p_), b(b_), a(a_) {
        require(p > 0.0, "SpaceParams: p must be in (0, inf]");
        require(b > 0.0, "SpaceParams: b must be in (0, inf]");
        require(!std::isnan(p) && !std::isnan(b), "SpaceParams: p, b must not be NaN");
        require(finite(a), "SpaceParams: exponent pair must be finite");
    }

    bool operator==(const SpaceParams&) const = default;
};

// The space is nonzero iff p < inf; or p = inf and alpha0 + 1/b < 0;
// or p = b = inf and alpha0 = 0.
inline bool nontrivial(const SpaceParams& s) {
    if (!is_inf(s.p)) return true;
    if (cond_lt(s.a.alpha0 + inv(s.b), 0.0)) return true;
    return is_inf(s.b) && cond_eq(s.a.alpha0, 0.0);
}

// p' with 1/p' + 1/p = 1, for p in [1, inf]
inline double conjugate(double p) {
    require(p >= 1.0, "conjugate: p must be >= 1");
    if (p == 1.0) return kInf;
    if (is_inf(p)) return 1.0;
    return p / (p - 1.0);
}

// Parameters (theta, b, A) of the real interpolation functor with
// broken-logarithmic factor.
struct InterpSpec {
    double theta;
    double b;
    LogPair a{};
};

// The functor makes sense iff one of: 0 < theta < 1; theta = 0 with
// alphaInf + 1/b < 0; theta = 0, b = inf, alphaInf = 0; theta = 1 with
// alpha0 + 1/b < 0; theta = 1, b = inf, alpha0 = 0.
inline bool interp_admissible(const InterpSpec& s) {
    if (s.theta > 0.0 && s.theta < 1.0) return true;
    if (cond_eq(s.theta, 0.0)) {
        if (cond_lt(s.a.alpha_inf + inv(s.b), 0.0)) return true;
        return is_inf(s.b) && cond_eq(s.a.alpha_inf, 0.0);
    }
    if (cond_eq(s.theta, 1.0)) {
        if (cond_lt(s.a.alpha0 + inv(s.b), 0.0)) return true;
        return is_inf(s.b) && cond_eq(s.a.alpha0, 0.0);
    }
    return false;
}

// Parameter arithmetic of the interpolation identities:
//   0 < theta < 1:  1/p = (1-theta)/p0 + theta/p1,
//                   Gamma = A + (1-theta) A0 + theta A1,
//     valid for p0 != p1 both finite, or p0 finite and (p1, b1, A1) = L_inf
//     pattern p1 = b1 = inf, A1 = 0;
//   theta = 1:      endpoint couple (s0, L_inf), returns (inf, b, A);
//     the resulting space is nonzero only when alpha0 + 1/b < 0 or
//     b = inf, alpha0 = 0 (query with nontrivial()).
// Only the parameter output is modelled; no K-functionals are computed.
inline SpaceParams interp_params(const InterpSpec& spec, const SpaceParams& s0,
                                 const SpaceParams& s1) {
    require(spec.b > 0.0, "interp_params: b must be in (0, inf]");
    require(finite(spec.a), "interp_params: exponent pair must be finite");
    if (!interp_admissible(spec))
        throw std::invalid_argument(
            "interp_params: inadmissible (theta, b, A) combination");

    const double th = spec.theta;
    if (th > 0.0 && th < 1.0) {
        const bool ext_case = is_inf(s1.p) && is_inf(s1.b) && is_zero(s1.a);
        if (!ext_case) {
            require(!is_inf(s0.p) && !is_inf(s1.p) && !cond_eq(s0.p, s1.p),
                    "interp_params: need p0 != p1 finite, or p1 = b1 = inf with A1 = 0");
        } else {
            require(!is_inf(s0.p), "interp_params: extended case needs p0 < inf");
        }
        const double ip = (1.0 - th) * inv(s0.p) + th * inv(s1.p);
        const double p = ip == 0.0 ? kInf : 1.0 / ip;
        const LogPair gamma = spec.a + scale(s0.a, 1.0 - th) + scale(s1.a, th);
        return SpaceParams(p, spec.b, gamma);
    }
    if (cond_eq(th, 1.0)) {
        require(!is_inf(s0.p), "interp_params: theta = 1 needs a finite first exponent");
        require(is_inf(s1.p) && is_inf(s1.b) && is_zero(s1.a),
                "interp_params: theta = 1 couples against L_inf");
        return SpaceParams(kInf, spec.b, spec.a);
    }
    throw std::invalid_argument("interp_params: no parameter formula for theta = 0");
}

} // namespace lznik
