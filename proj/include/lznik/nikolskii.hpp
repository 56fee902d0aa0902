#pragma once

#include <cmath>
#include <cstdio>
#include <cstring>
#include <optional>
#include <string>
#include <vector>

#include "lznik/bandlimited.hpp"
#include "lznik/core.hpp"
#include "lznik/lz_norm.hpp"
#include "lznik/spaces.hpp"
#include "lznik/spectrum.hpp"
#include "lznik/stats.hpp"

namespace lznik {

enum class ClassTag { F0, F1, Frho };

struct TripleClass {
    ClassTag tag;
    int rho = 1; // 1 for F1, >= 2 for Frho, meaningless for F0
};

inline const char* to_string(ClassTag t) {
    switch (t) {
        case ClassTag::F0: return "F0";
        case ClassTag::F1: return "F1";
        case ClassTag::Frho: return "Frho";
    }
    return "?";
}

namespace detail {

inline bool in_f1(double q, double c, LogPair b) {
    if (cond_eq(q, 1.0) && cond_eq(c, 1.0) && is_zero(b)) return true;
    if (cond_gt(q, 1.0) && cond_lt(q, 2.0)) return true;
    return cond_eq(q, 2.0) && cond_eq(c, 2.0) && is_zero(b);
}

} // namespace detail

// Class of a source triple (q, c, B):
//   F1: q = c = 1 with B = 0, or 1 < q < 2, or q = c = 2 with B = 0;
//   F0: 0 < q < 1, or q = 1 otherwise;
//   Frho: the smallest rho with (q/rho, c/rho, rho B) in F1 is >= 2.
// Returns nullopt when no class matches (possible only on the q = 2
// boundary with (c, B) != (2, 0)).
inline std::optional<TripleClass> try_classify(double q, double c, LogPair b) {
    if (!(q > 0.0) || is_inf(q)) return std::nullopt;
    if (cond_lt(q, 1.0)) return TripleClass{ClassTag::F0, 1};
    if (cond_eq(q, 1.0))
        return detail::in_f1(q, c, b) ? TripleClass{ClassTag::F1, 1}
                                      : TripleClass{ClassTag::F0, 1};
    const int rho_max = static_cast<int>(std::ceil(q)) + 1;
    for (int rho = 1; rho <= rho_max; ++rho) {
        const double cr = is_inf(c) ? kInf : c / rho;
        if (detail::in_f1(q / rho, cr, scale(b, rho)))
            return TripleClass{rho == 1 ? ClassTag::F1 : ClassTag::Frho, rho};
    }
    return std::nullopt;
}

inline TripleClass classify(double q, double c, LogPair b) {
    require(q > 0.0, "classify: q must be positive");
    if (is_inf(q)) throw DispatchError("classify: no class is defined for q = inf");
    auto cls = try_classify(q, c, b);
    if (!cls)
        throw DispatchError(
            "classify: (q, c, B) lies in none of F0, F1, F_rho (q = 2 boundary)");
    return *cls;
}

enum class TheoremId {
    identity, // source == target fast path, G = 1
    T4, T5, T6, T7, T8, T9, T10i, T10ii, T11,
    T13, T15, T16, T17i, T17ii, T18
};

inline const char* to_string(TheoremId id) {
    switch (id) {
        case TheoremId::identity: return "identity";
        case TheoremId::T4: return "T4";
        case TheoremId::T5: return "T5";
        case TheoremId::T6: return "T6";
        case TheoremId::T7: return "T7";
        case TheoremId::T8: return "T8";
        case TheoremId::T9: return "T9";
        case TheoremId::T10i: return "T10i";
        case TheoremId::T10ii: return "T10ii";
        case TheoremId::T11: return "T11";
        case TheoremId::T13: return "T13";
        case TheoremId::T15: return "T15";
        case TheoremId::T16: return "T16";
        case TheoremId::T17i: return "T17i";
        case TheoremId::T17ii: return "T17ii";
        case TheoremId::T18: return "T18";
    }
    return "?";
}

// Decomposed bound factor
//   G = baseMeasure^{powerExponent} * l^{logExponents}(baseMeasure)
//                                   * ll^{loglogExponents}(baseMeasure),
// where baseMeasure is mu(Omega) for F0/F1 sources and the measure of the
// rho-dilated hull box for F_rho sources. requires_bounded marks the
// F0 statements that additionally assume f bounded.
struct BoundResult {
    TheoremId theorem = TheoremId::identity;
    double base_measure = 1.0;
    double power_exponent = 0.0;
    LogPair log_exponents{};
    LogPair loglog_exponents{};
    double value = 1.0;
    bool requires_bounded = false;
};

inline double bound_value(double base, double power, LogPair lg, LogPair llg) {
    return std::pow(base, power) * broken_log(lg, base) * broken_loglog(llg, base);
}

namespace detail {

inline BoundResult finish(TheoremId id, double base, double power, LogPair lg, LogPair llg,
                          bool req_bounded) {
    BoundResult r;
    r.theorem = id;
    r.base_measure = base;
    r.power_exponent = power;
    r.log_exponents = lg;
    r.loglog_exponents = llg;
    r.value = bound_value(base, power, lg, llg);
    r.requires_bounded = req_bounded;
    return r;
}

inline std::string num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

} // namespace detail

// Selects the unique applicable statement of the bound catalog for a
// band-limited source space (q, c, B) and target (p, b, A) with spectral
// support S, and returns the decomposed factor G.
//
// Decision tree: identical triples short-circuit to G = 1; otherwise the
// source triple is classified (F1 / F0 / F_rho picks the statement family
// and the base measure); q < p splits on p < inf versus the p = inf sign
// patterns of (alpha0, alphaInf, -1/b); q = p splits on b <= c (log-factor
// statement, with the equality subcase carrying an iterated-log factor)
// versus c <= b (plain log statement). Failures name the violated
// condition.
inline BoundResult nikolskii_bound(const SpaceParams& source, const SpaceParams& target,
                                   const Spectrum& s) {
    const double q = source.p, c = source.b;
    const LogPair B = source.a;
    const double p = target.p, b = target.b;
    const LogPair A = target.a;

    if (!nontrivial(target))
        throw DispatchError("target space is trivial (violates the nontriviality conditions)");
    if (source == target) {
        BoundResult r;
        r.base_measure = spectrum_measure(s);
        return r;
    }
    const double iq = inv(q), ip = inv(p), ib = inv(b), ic = inv(c);
    if (cond_lt(iq, ip))
        throw DispatchError("requires q <= p, got q = " + detail::num(q) +
                            " > p = " + detail::num(p));

    const TripleClass cls = classify(q, c, B);
    const bool dilated = cls.tag == ClassTag::Frho;
    const double base =
        dilated ? spectrum_measure(power_support(s, cls.rho)) : spectrum_measure(s);
    const bool req_bounded = cls.tag == ClassTag::F0;

    if (cond_gt(iq, ip)) {
        // q < p: power-of-measure statements
        const TheoremId main_id = cls.tag == ClassTag::F0   ? TheoremId::T7
                                  : cls.tag == ClassTag::F1 ? TheoremId::T4
                                                            : TheoremId::T13;
        if (!is_inf(p) || (is_inf(b) && is_zero(A)))
            return detail::finish(main_id, base, iq - ip, tilde(A) - tilde(B), {},
                                  req_bounded);
        // p = inf with a genuine log profile
        if (cond_lt(A.alpha0, -ib) && cond_lt(-ib, A.alpha_inf)) {
            const TheoremId id = cls.tag == ClassTag::F0   ? TheoremId::T8
                                 : cls.tag == ClassTag::F1 ? TheoremId::T5
                                                           : TheoremId::T15;
            return detail::finish(id, base, iq, (tilde(A) + ib) - tilde(B), {}, req_bounded);
        }
        if (cond_lt(A.alpha0, -ib) && cond_lt(A.alpha_inf, -ib)) {
            const TheoremId id = cls.tag == ClassTag::F0   ? TheoremId::T9
                                 : cls.tag == ClassTag::F1 ? TheoremId::T6
                                                           : TheoremId::T16;
            return detail::finish(id, base, iq,
                                  LogPair{0.0, A.alpha0 + ib} - tilde(B), {}, req_bounded);
        }
        if (!cond_lt(A.alpha0, -ib))
            throw DispatchError("p = inf needs alpha0 < -1/b (or b = inf with A = 0): alpha0 = " +
                                detail::num(A.alpha0) + ", -1/b = " + detail::num(-ib));
        throw DispatchError(
            "p = inf needs alphaInf != -1/b for a matching statement: alphaInf = " +
            detail::num(A.alpha_inf) + ", -1/b = " + detail::num(-ib));
    }

    // q = p: pure log-factor statements
    if (cond_le(ic, ib) && cond_lt(A.alpha_inf + ib, B.alpha_inf + ic)) {
        const LogPair gamma = (tilde(A) + ib) - (tilde(B) + ic);
        if (cond_gt(A.alpha0 + ib, B.alpha0 + ic)) {
            const TheoremId id = dilated ? TheoremId::T17i : TheoremId::T10i;
            return detail::finish(id, base, 0.0, gamma, {}, req_bounded);
        }
        if (cond_eq(A.alpha0 + ib, B.alpha0 + ic)) {
            const TheoremId id = dilated ? TheoremId::T17ii : TheoremId::T10ii;
            return detail::finish(id, base, 0.0, gamma, LogPair{0.0, ib - ic}, req_bounded);
        }
    }
    if (cond_le(ib, ic) && cond_lt(A.alpha_inf, B.alpha_inf) && cond_ge(A.alpha0, B.alpha0)) {
        const TheoremId id = dilated ? TheoremId::T18 : TheoremId::T11;
        return detail::finish(id, base, 0.0, tilde(A) - tilde(B), {}, req_bounded);
    }

    // Name the nearest miss for the q = p case.
    if (cond_le(ic, ib)) {
        if (!cond_lt(A.alpha_inf + ib, B.alpha_inf + ic))
            throw DispatchError("q = p with b <= c needs alphaInf + 1/b < betaInf + 1/c: " +
                                detail::num(A.alpha_inf + ib) + " >= " +
                                detail::num(B.alpha_inf + ic));
        throw DispatchError("q = p with b <= c needs alpha0 + 1/b >= beta0 + 1/c: " +
                            detail::num(A.alpha0 + ib) + " < " + detail::num(B.alpha0 + ic));
    }
    if (!cond_lt(A.alpha_inf, B.alpha_inf))
        throw DispatchError("q = p with c <= b needs alphaInf < betaInf: " +
                            detail::num(A.alpha_inf) + " >= " + detail::num(B.alpha_inf));
    throw DispatchError("q = p with c <= b needs alpha0 >= beta0: " +
                        detail::num(A.alpha0) + " < " + detail::num(B.alpha0));
}

struct VerifyResult {
    double lhs = 0.0;   // || f ||_{target}
    double rhs = 0.0;   // G * || f ||_{source}
    double ratio = 0.0; // lhs / rhs (0 for the zero function)
    BoundResult bound;
    double source_norm = 0.0;
    double target_norm = 0.0;
};

// Evaluates one instance of the inequality on a concrete band-limited
// function. The ratio over a family stays bounded; the hidden constant is
// never asserted.
inline VerifyResult verify_inequality(const BandlimitedFunction& f, const SpaceParams& source,
                                      const SpaceParams& target, const NormOptions& opt = {}) {
    VerifyResult out;
    out.bound = nikolskii_bound(source, target, f.spectrum);
    const StepFunction fstar = rearrange(f.samples);
    if (fstar.is_zero()) return out;
    out.source_norm = lz_norm(fstar, source, kInf, opt).value;
    out.target_norm = lz_norm(fstar, target, kInf, opt).value;
    if (!std::isfinite(out.source_norm) || out.source_norm <= 0.0)
        throw DispatchError("source norm is not finite and positive");
    out.lhs = out.target_norm;
    out.rhs = out.bound.value * out.source_norm;
    out.ratio = out.lhs / out.rhs;
    return out;
}

// Family description for sweeps and probes.
struct FamilySpec {
    FamilyKind kind = FamilyKind::sinc_power;
    int m = 2;                   // sinc power
    int q_max = 4;               // sinc grid: highest power kept alias-free
    double tail_tol = 1e-5;      // sinc grid: truncation budget
    std::uint64_t seed = 1;      // random kind
    double period = 16.0;        // random kind
    std::size_t grid_points = 4096;
};

// omega-indexed member: sinc^m(omega x), or random coefficients on
// [-omega/2, omega/2]
inline BandlimitedFunction make_family_member(const FamilySpec& fam, double omega) {
    if (fam.kind == FamilyKind::sinc_power)
        return make_sinc_power(omega, fam.m, sinc_grid(omega, fam.m, fam.q_max, fam.tail_tol));
    const Spectrum s(1, {box1(-0.5 * omega, 0.5 * omega)});
    std::uint64_t label;
    static_assert(sizeof label == sizeof omega);
    std::memcpy(&label, &omega, sizeof label);
    const std::uint64_t member_seed = CounterRng(fam.seed).fork(label).next_u64();
    return make_random_bandlimited(s, member_seed, fam.period, fam.grid_points);
}

struct SweepRow {
    double omega = 0.0;
    double mu_omega = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
    BoundResult bound;
    double slope = 0.0; // least-squares slope of log(lhs/source) vs log(mu)
};

// Scale sweep: evaluates the inequality along the family and fits the
// growth exponent of the target/source norm ratio against the spectral
// measure.
inline std::vector<SweepRow> sweep(const FamilySpec& fam, const std::vector<double>& omegas,
                                   const SpaceParams& source, const SpaceParams& target,
                                   const NormOptions& opt = {}) {
    require(omegas.size() >= 3, "sweep: need at least 3 omega values");
    std::vector<SweepRow> rows;
    std::vector<double> lx, ly;
    for (double w : omegas) {
        const BandlimitedFunction f = make_family_member(fam, w);
        const VerifyResult v = verify_inequality(f, source, target, opt);
        SweepRow r;
        r.omega = w;
        r.mu_omega = spectrum_measure(f.spectrum);
        r.lhs = v.lhs;
        r.rhs = v.rhs;
        r.ratio = v.ratio;
        r.bound = v.bound;
        rows.push_back(r);
        lx.push_back(std::log(r.mu_omega));
        ly.push_back(std::log(v.target_norm / v.source_norm));
    }
    const double slope = fit_line(lx, ly).slope;
    for (auto& r : rows) r.slope = slope;
    return rows;
}

struct ProbeResult {
    double best_ratio = 0.0;
    std::vector<std::complex<double>> best_coefficients;
    std::size_t evaluations = 0;
};

struct ProbeOptions {
    double period = 16.0;
    std::size_t grid_points = 2048;
    double step_scale = 0.75;
};

// Randomized extremal search: greedy acceptance over perturbations of the
// spectral coefficients supported in S, maximizing the verify ratio.
// Deterministic for a fixed seed; best-so-far is monotone in the budget.
inline ProbeResult probe_sharpness(const SpaceParams& source, const SpaceParams& target,
                                   const Spectrum& s, int budget, std::uint64_t seed,
                                   const ProbeOptions& popt = {}, const NormOptions& opt = {}) {
    require(budget >= 0, "probe_sharpness: budget must be >= 0");
    RandomBandState st = random_band_state(s, seed, popt.period, popt.grid_points);
    require(!st.active_bins.empty(), "probe_sharpness: no grid frequencies inside S");
    CounterRng rng = CounterRng(seed).fork(0x70726f6265ull);

    ProbeResult out;
    auto ratio_of = [&](const RandomBandState& state) {
        return verify_inequality(synthesize(state), source, target, opt).ratio;
    };
    out.best_ratio = ratio_of(st);
    out.best_coefficients.reserve(st.active_bins.size());
    for (std::size_t i : st.active_bins) out.best_coefficients.push_back(st.data.bins[i]);
    out.evaluations = 1;

    RandomBandState best = st;
    for (int it = 0; it < budget; ++it) {
        RandomBandState cand = best;
        const std::size_t which = rng.next_index(cand.active_bins.size());
        cand.data.bins[cand.active_bins[which]] += popt.step_scale * rng.next_complex_normal();
        const double r = ratio_of(cand);
        ++out.evaluations;
        if (r > out.best_ratio) {
            out.best_ratio = r;
            best = std::move(cand);
        }
    }
    out.best_coefficients.clear();
    for (std::size_t i : best.active_bins) out.best_coefficients.push_back(best.data.bins[i]);
    return out;
}

} // namespace lznik
