#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "lznik/core.hpp"
#include "lznik/log_pair.hpp"
#include "lznik/quadrature.hpp"
#include "lznik/spaces.hpp"
#include "lznik/step_function.hpp"

namespace lznik {

enum class NormMethod { closed_form, exact_step, quadrature };

struct NormResult {
    double value = 0.0;
    NormMethod method = NormMethod::closed_form;
    double estimated_rel_error = 0.0;
};

struct NormOptions {
    double quad_rel_tol = 1e-11;
    bool force_quadrature = false; // route every piece through the adaptive path
};

namespace detail {

// sup over [t0, t1] of t^{ip} * l^A(t), with ip = 1/p and t0 >= 0. The weight
// is piecewise of the form t^s (1 +- ln t)^alpha, so the maximum sits at an
// endpoint, at t = 1, or at one interior critical point per branch.
inline double weight_sup(double ip, LogPair a, double t0, double t1) {
    auto eval = [&](double t) -> double {
        if (t <= 0.0) {
            if (ip > 0.0) return 0.0;
            if (a.alpha0 < 0.0) return 0.0;
            if (a.alpha0 == 0.0) return 1.0;
            return kInf;
        }
        return std::pow(t, ip) * broken_log(a, t);
    };
    double best = std::max(eval(t0), eval(t1));
    if (t0 < 1.0 && t1 > 1.0) best = std::max(best, 1.0);
    if (ip > 0.0) {
        // left branch critical point: 1 - ln t = alpha0 / ip
        if (a.alpha0 / ip >= 1.0) {
            const double tc = std::exp(1.0 - a.alpha0 / ip);
            if (tc > t0 && tc < std::min(t1, 1.0)) best = std::max(best, eval(tc));
        }
        // right branch critical point: 1 + ln t = -alphaInf / ip
        if (-a.alpha_inf / ip >= 1.0) {
            const double tc = std::exp(-a.alpha_inf / ip - 1.0);
            if (tc > std::max(t0, 1.0) && tc < t1) best = std::max(best, eval(tc));
        }
    }
    return best;
}

} // namespace detail

// Quasi-norm || t^{1/p - 1/b} l^A(t) f*(t) ||_{L_b(0, domain_measure)} of a
// canonical rearrangement. For b < inf each piece contributes
// v^b * integral of t^{b/p - 1} l^{bA}(t); the integral is evaluated in
// closed form where the antiderivative is elementary (pure power, no power
// factor, or nonnegative integer log exponent) and by adaptive quadrature
// on log-spaced panels otherwise. For b = inf the supremum is located
// exactly per piece.
inline NormResult lz_norm(const StepFunction& fstar, const SpaceParams& s,
                          double domain_measure = kInf, const NormOptions& opt = {}) {
    require(fstar.canonical, "lz_norm: input must be canonical (use rearrange)");
    require(nontrivial(s), "lz_norm: the target space is trivial");
    require(domain_measure > 0.0, "lz_norm: domain measure must be positive");

    NormResult out;
    if (fstar.is_zero()) return out;

    const double ip = inv(s.p);
    if (is_inf(s.b)) {
        double best = 0.0;
        double edge = 0.0;
        for (const auto& pc : fstar.pieces) {
            const double t0 = std::min(edge, domain_measure);
            edge += pc.measure;
            const double t1 = std::min(edge, domain_measure);
            if (t1 <= t0) break;
            best = std::max(best, pc.value * detail::weight_sup(ip, s.a, t0, t1));
        }
        out.value = best;
        out.method = NormMethod::closed_form;
        return out;
    }

    const double b = s.b;
    const double e = b * ip;
    const double al = b * s.a.alpha0;
    const double ar = b * s.a.alpha_inf;
    double total = 0.0;
    double err = 0.0;
    bool all_exact = true;
    double edge = 0.0;
    for (const auto& pc : fstar.pieces) {
        const double t0 = std::min(edge, domain_measure);
        edge += pc.measure;
        const double t1 = std::min(edge, domain_measure);
        if (t1 <= t0) break;
        if (pc.value == 0.0) continue;
        const QuadPart q =
            log_weight_integral(e, al, ar, t0, t1, opt.quad_rel_tol, opt.force_quadrature);
        total += std::pow(pc.value, b) * q.value;
        err += std::pow(pc.value, b) * q.abs_err;
        all_exact = all_exact && q.exact;
    }
    out.value = std::pow(total, 1.0 / b);
    out.method = all_exact && !opt.force_quadrature ? NormMethod::exact_step
                                                    : NormMethod::quadrature;
    out.estimated_rel_error = total > 0.0 ? err / (b * total) : 0.0;
    return out;
}

// Both sides of the power identity ||f||_{p,b;A}^k = ||f^k||_{p/k, b/k; kA}.
struct PowerCheck {
    double lhs; // lz_norm(f, (p,b,A))^k
    double rhs; // lz_norm(f^k, (p/k, b/k, kA))
    NormResult lhs_norm;
    NormResult rhs_norm;
};

inline PowerCheck lz_norm_power_check(const StepFunction& f, const SpaceParams& s, int k,
                                      double domain_measure = kInf,
                                      const NormOptions& opt = {}) {
    require(k >= 1, "lz_norm_power_check: k must be a positive integer");
    const StepFunction fstar = f.canonical ? f : rearrange(f);
    PowerCheck out{};
    out.lhs_norm = lz_norm(fstar, s, domain_measure, opt);
    out.lhs = std::pow(out.lhs_norm.value, k);
    const SpaceParams powered(is_inf(s.p) ? kInf : s.p / k, is_inf(s.b) ? kInf : s.b / k,
                              scale(s.a, k));
    out.rhs_norm = lz_norm(rearrange(pow_values(fstar, k)), powered, domain_measure, opt);
    out.rhs = out.rhs_norm.value;
    return out;
}

// Embedding factor mu^{1/p - 1/q} * l^{A - B}(mu) between a source space
// (q, c, B) and a target (p, b, A) with p < q on a set of measure mu.
inline double lemma2_factor(const SpaceParams& target, const SpaceParams& source, double mu) {
    require(std::isfinite(mu) && mu > 0.0, "lemma2_factor: mu must be positive finite");
    require(nontrivial(target) && nontrivial(source), "lemma2_factor: spaces must be nontrivial");
    require(cond_gt(inv(target.p), inv(source.p)), "lemma2_factor: requires target p < source q");
    return std::pow(mu, inv(target.p) - inv(source.p)) * broken_log(target.a - source.a, mu);
}

// Ratio || s^{sigma - 1/b} l^B(s) chi_{(0,t)}(s) ||_b / (t^sigma l^B(t)).
// Bounded above and below by t-independent constants for each fixed
// (sigma, b, B) with sigma > 0.
inline double weighted_power_equiv_ratio(double sigma, double b, LogPair B, double t,
                                         const NormOptions& opt = {}) {
    require(sigma > 0.0, "weighted_power_equiv_ratio: sigma must be positive");
    require(b > 0.0, "weighted_power_equiv_ratio: b must be in (0, inf]");
    require(t > 0.0, "weighted_power_equiv_ratio: t must be positive");
    double num;
    if (is_inf(b)) {
        num = detail::weight_sup(sigma, B, 0.0, t);
    } else {
        QuadPart q = log_weight_integral(sigma * b, b * B.alpha0, b * B.alpha_inf, 0.0, t,
                                         opt.quad_rel_tol);
        num = std::pow(q.value, 1.0 / b);
    }
    return num / (std::pow(t, sigma) * broken_log(B, t));
}

} // namespace lznik
