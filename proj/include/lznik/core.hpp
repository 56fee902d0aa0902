#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace lznik {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Absolute tolerance for every real-valued condition test (dispatcher
// hypotheses, class boundaries, admissibility checks). Inputs arrive as
// doubles, so equalities like a0 + 1/b == b0 + 1/c are decided inside a
// fixed band instead of bit-exactly.
inline constexpr double kCondTol = 1e-12;

inline bool is_inf(double x) { return std::isinf(x); }

// 1/x under the convention 1/inf = 0 (and 1/0 = inf where it arises).
inline double inv(double x) {
    if (std::isinf(x)) return 0.0;
    if (x == 0.0) return kInf;
    return 1.0 / x;
}

inline bool cond_eq(double a, double b) {
    if (std::isinf(a) || std::isinf(b)) return a == b;
    return std::fabs(a - b) <= kCondTol;
}
inline bool cond_lt(double a, double b) { return !cond_eq(a, b) && a < b; }
inline bool cond_gt(double a, double b) { return !cond_eq(a, b) && a > b; }
inline bool cond_le(double a, double b) { return cond_eq(a, b) || a < b; }
inline bool cond_ge(double a, double b) { return cond_eq(a, b) || a > b; }

inline void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

// Thrown when no bound/embedding hypothesis set matches the inputs.
// `condition()` names the specific violated condition.
class DispatchError : public std::runtime_error {
public:
    explicit DispatchError(std::string condition)
        : std::runtime_error("dispatch failure: " + condition),
          condition_(std::move(condition)) {}
    const std::string& condition() const { return condition_; }

private:
    std::string condition_;
};

} // namespace lznik
