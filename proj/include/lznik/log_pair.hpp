#pragma once

#include <cmath>
#include <stdexcept>

#include "lznik/core.hpp"

namespace lznik {

// Ordered exponent pair A = (alpha0, alphaInf). The broken-logarithmic
// weight l^A uses alpha0 on (0,1] and alphaInf on (1,inf).
struct LogPair {
    double alpha0 = 0.0;
    double alpha_inf = 0.0;

    bool operator==(const LogPair&) const = default;
};

inline LogPair tilde(LogPair a) { return {a.alpha_inf, a.alpha0}; }

inline LogPair operator+(LogPair a, LogPair b) {
    return {a.alpha0 + b.alpha0, a.alpha_inf + b.alpha_inf};
}
inline LogPair operator-(LogPair a, LogPair b) {
    return {a.alpha0 - b.alpha0, a.alpha_inf - b.alpha_inf};
}
inline LogPair operator+(LogPair a, double sigma) {
    return {a.alpha0 + sigma, a.alpha_inf + sigma};
}
inline LogPair operator-(LogPair a, double sigma) { return a + (-sigma); }
inline LogPair scale(LogPair a, double k) { return {k * a.alpha0, k * a.alpha_inf}; }

inline bool is_zero(LogPair a) {
    return cond_eq(a.alpha0, 0.0) && cond_eq(a.alpha_inf, 0.0);
}

inline bool finite(LogPair a) {
    return std::isfinite(a.alpha0) && std::isfinite(a.alpha_inf);
}

// branch exponent of l^A at t
inline double branch_exponent(LogPair a, double t) {
    return t <= 1.0 ? a.alpha0 : a.alpha_inf;
}

inline double log_weight_base(double t) { return 1.0 + std::fabs(std::log(t)); }

// l^A(t) = (1 + |ln t|)^{alpha0} for t <= 1, (1 + |ln t|)^{alphaInf} for t > 1
inline double broken_log(LogPair a, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("broken_log: t must be positive");
    const double e = branch_exponent(a, t);
    if (e == 0.0) return 1.0;
    return std::pow(log_weight_base(t), e);
}

// ll^A(t): same branch rule with the iterated logarithm 1 + ln(1 + |ln t|)
inline double broken_loglog(LogPair a, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("broken_loglog: t must be positive");
    const double e = branch_exponent(a, t);
    if (e == 0.0) return 1.0;
    return std::pow(1.0 + std::log(log_weight_base(t)), e);
}

} // namespace lznik
