#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "lznik/bandlimited.hpp"
#include "lznik/core.hpp"
#include "lznik/lz_norm.hpp"
#include "lznik/nikolskii.hpp"
#include "lznik/spaces.hpp"

namespace lznik {

// Dyadic resolution-of-unity family: phi0 is a smooth radial bump with
// support {1/2 <= r <= 2}, normalized over its own dyadic dilates so that
// sum_k phi0(2^{-k} r) = 1 for every r > 0; phi_k(xi) = phi0(2^{-k} xi);
// psi completes the low frequencies, psi = 1 - sum_{k>=1} phi_k.
struct PartitionFamily {
    int kmin = 0;
    int kmax = 0;

    double phi0(double r) const {
        if (r <= 0.5 || r >= 2.0) return 0.0;
        return bump(r) / dyadic_sum(r);
    }

    double phi(int k, double r) const { return phi0(std::ldexp(r, -k)); }

    double psi(double r) const {
        if (r <= 1.0) return 1.0;
        double s = 1.0;
        // only the bands with 2^{k-1} < r < 2^{k+1} and k >= 1 contribute
        const int k0 = static_cast<int>(std::floor(std::log2(r)));
        for (int k = std::max(1, k0 - 1); k <= k0 + 1; ++k) s -= phi(k, r);
        return s;
    }

private:
    static double bump(double r) {
        // exp(-1 / ((r - 1/2)(2 - r))) on (1/2, 2)
        return std::exp(-1.0 / ((r - 0.5) * (2.0 - r)));
    }
    static double dyadic_sum(double r) {
        // at most two dilates of the bump overlap any r
        double s = 0.0;
        const int j0 = static_cast<int>(std::floor(std::log2(r)));
        for (int j = j0 - 1; j <= j0 + 1; ++j) {
            const double rj = std::ldexp(r, -j);
            if (rj > 0.5 && rj < 2.0) s += bump(rj);
        }
        return s;
    }
};

struct FrequencyGrid {
    double max_abs_freq;
    double spacing;
};

inline PartitionFamily build_partition(int kmin, int kmax, const FrequencyGrid& grid) {
    require(kmax >= kmin, "build_partition: kmax must be >= kmin");
    require(grid.spacing > 0.0 && grid.max_abs_freq > 0.0, "build_partition: bad grid");
    require(grid.max_abs_freq >= std::ldexp(1.0, kmax + 1),
            "build_partition: grid does not cover the top dyadic band");
    require(grid.spacing <= std::ldexp(1.0, kmin - 1),
            "build_partition: grid does not resolve the lowest dyadic band");
    PartitionFamily p;
    p.kmin = kmin;
    p.kmax = kmax;
    return p;
}

// Smoothness parameters of the Besov-type quasi-norm over the base space
// (p, b, A): classical exponent sigma plus logarithmic smoothness, scalar
// gamma for the inhomogeneous scale and a pair Gamma for the homogeneous
// one, with summation exponent u.
struct BesovParams {
    double sigma = 0.0;
    double gamma = 0.0;     // inhomogeneous log smoothness
    LogPair Gamma{};        // homogeneous log smoothness
    double u = 2.0;
    SpaceParams base{2.0, 2.0, {}};
};

struct BesovBlock {
    int k = 0;          // dyadic index; kmin-1 encodes the psi block
    bool low_pass = false;
    double norm = 0.0;  // block norm in the base space
    double weight = 1.0;
};

namespace detail {

inline std::vector<BesovBlock> besov_blocks(const BandlimitedFunction& f,
                                            const SpaceParams& base,
                                            const PartitionFamily& part, bool homogeneous,
                                            const NormOptions& opt) {
    require(nontrivial(base), "besov_norm: trivial base space");
    const DftData F = forward_dft(f.samples);
    std::vector<BesovBlock> out;

    auto block_norm = [&](auto&& profile) -> double {
        DftData G = F;
        bool any = false;
        for (std::size_t i1 = 0; i1 < G.extent[1]; ++i1) {
            const long j1 = G.dim == 2 ? DftData::signed_bin(i1, G.extent[1]) : 0;
            for (std::size_t i0 = 0; i0 < G.extent[0]; ++i0) {
                const long j0 = DftData::signed_bin(i0, G.extent[0]);
                double r = G.frequency(0, j0);
                if (G.dim == 2) r = std::hypot(r, G.frequency(1, j1));
                else r = std::fabs(r);
                const double w = profile(r);
                auto& z = G.bins[i0 + G.extent[0] * i1];
                z *= w;
                any = any || (w != 0.0 && std::abs(z) != 0.0);
            }
        }
        if (!any) return 0.0;
        const SampledFunction g = inverse_dft(G, f.samples.origin, f.samples.spacing);
        return lz_norm(rearrange(g), base, kInf, opt).value;
    };

    if (!homogeneous) {
        BesovBlock lp;
        lp.k = part.kmin - 1;
        lp.low_pass = true;
        lp.norm = block_norm([&](double r) { return part.psi(r); });
        out.push_back(lp);
    }
    const int klo = homogeneous ? part.kmin : std::max(part.kmin, 1);
    for (int k = klo; k <= part.kmax; ++k) {
        BesovBlock bk;
        bk.k = k;
        bk.norm = block_norm([&](double r) { return part.phi(k, r); });
        out.push_back(bk);
    }
    return out;
}

// partition sized to the function: top band from the spectral radius,
// bottom band from the grid's frequency resolution
inline PartitionFamily fitted_partition(const BandlimitedFunction& f) {
    const double radius = std::max(f.spectrum.radius(), 1.0);
    const int kmax = static_cast<int>(std::floor(std::log2(radius))) + 1;
    double dxi = f.samples.dim == 2
                     ? std::min(1.0 / (f.samples.spacing[0] * f.samples.extent[0]),
                                1.0 / (f.samples.spacing[1] * f.samples.extent[1]))
                     : 1.0 / (f.samples.spacing[0] * f.samples.extent[0]);
    const int kmin = std::min(static_cast<int>(std::floor(std::log2(dxi))), 0);
    PartitionFamily p;
    p.kmin = kmin;
    p.kmax = kmax;
    return p;
}

} // namespace detail

// Besov-type quasi-norm of a band-limited function: low-pass block norm
// plus the weighted dyadic block sum
//   inhomogeneous weight 2^{sigma k} (1+k)^gamma        (k >= 1),
//   homogeneous weight  2^{sigma k} l^Gamma(2^k)        (k in Z),
// combined in the u-mean (sup when u = inf). Band-limitation makes the sum
// finite: blocks above the spectral radius vanish identically.
inline double besov_norm(const BandlimitedFunction& f, const BesovParams& bp, bool homogeneous,
                         const PartitionFamily& part, const NormOptions& opt = {}) {
    auto blocks = detail::besov_blocks(f, bp.base, part, homogeneous, opt);
    double low_pass = 0.0;
    std::vector<double> terms;
    for (auto& blk : blocks) {
        if (blk.low_pass) {
            low_pass = blk.norm;
            continue;
        }
        const double k = static_cast<double>(blk.k);
        const double w = homogeneous
                             ? std::pow(2.0, bp.sigma * k) *
                                   broken_log(bp.Gamma, std::ldexp(1.0, blk.k))
                             : std::pow(2.0, bp.sigma * k) * std::pow(1.0 + k, bp.gamma);
        terms.push_back(w * blk.norm);
    }
    double dyadic;
    if (is_inf(bp.u)) {
        dyadic = 0.0;
        for (double t : terms) dyadic = std::max(dyadic, t);
    } else {
        double s = 0.0;
        for (double t : terms) s += std::pow(t, bp.u);
        dyadic = std::pow(s, 1.0 / bp.u);
    }
    return homogeneous ? dyadic : low_pass + dyadic;
}

inline double besov_norm(const BandlimitedFunction& f, const BesovParams& bp,
                         bool homogeneous, const NormOptions& opt = {}) {
    return besov_norm(f, bp, homogeneous, detail::fitted_partition(f), opt);
}

enum class Corollary { C21, C22, C23, C24, C25, C26, C27, C28, C29 };

inline const char* to_string(Corollary c) {
    switch (c) {
        case Corollary::C21: return "C21";
        case Corollary::C22: return "C22";
        case Corollary::C23: return "C23";
        case Corollary::C24: return "C24";
        case Corollary::C25: return "C25";
        case Corollary::C26: return "C26";
        case Corollary::C27: return "C27";
        case Corollary::C28: return "C28";
        case Corollary::C29: return "C29";
    }
    return "?";
}

inline bool corollary_homogeneous(Corollary c) {
    switch (c) {
        case Corollary::C22:
        case Corollary::C24:
        case Corollary::C25:
        case Corollary::C27:
        case Corollary::C29: return true;
        default: return false;
    }
}

namespace detail {

inline void require_in_f(const SpaceParams& source) {
    auto cls = try_classify(source.p, source.b, source.a);
    if (!cls || cls->tag == ClassTag::F0)
        throw DispatchError("source triple (q, c, B) must lie in the union of the F_rho classes");
}

} // namespace detail

// Source-side smoothness parameters demanded by the embedding: the target
// smoothness shifted by the exponent of the blockwise bound. Hypotheses
// mirror the bound dispatcher's conditions and violations name the failed
// condition.
inline BesovParams embedding_shift(Corollary cor, const SpaceParams& source,
                                   const SpaceParams& target, int n,
                                   const BesovParams& target_smoothness) {
    require(n >= 1, "embedding_shift: dimension must be >= 1");
    require(nontrivial(target), "embedding_shift: trivial target base space");
    detail::require_in_f(source);

    const double q = source.p, c = source.b;
    const LogPair B = source.a;
    const double p = target.p, b = target.b;
    const LogPair A = target.a;
    const double iq = inv(q), ip = inv(p), ib = inv(b), ic = inv(c);

    BesovParams out = target_smoothness;
    out.base = source;

    auto need = [&](bool ok, const std::string& cond) {
        if (!ok) throw DispatchError(std::string(to_string(cor)) + " needs " + cond);
    };

    switch (cor) {
        case Corollary::C21:
        case Corollary::C22:
            need(cond_gt(iq, ip), "q < p");
            need(!is_inf(p) || (is_inf(b) && is_zero(A)), "p < inf, or p = b = inf with A = 0");
            out.sigma += n * (iq - ip);
            if (cor == Corollary::C21) out.gamma += A.alpha0 - B.alpha0;
            else out.Gamma = out.Gamma + (tilde(A) - tilde(B));
            return out;
        case Corollary::C23:
            need(is_inf(p), "p = inf");
            need(cond_lt(A.alpha0, -ib), "alpha0 < -1/b");
            need(!cond_eq(A.alpha_inf + ib, 0.0), "alphaInf + 1/b != 0");
            out.sigma += n * iq;
            out.gamma += A.alpha0 + ib - B.alpha0;
            return out;
        case Corollary::C24:
            need(is_inf(p), "p = inf");
            need(cond_lt(A.alpha0, -ib) && cond_lt(-ib, A.alpha_inf),
                 "alpha0 < -1/b < alphaInf");
            out.sigma += n * iq;
            out.Gamma = out.Gamma + ((tilde(A) + ib) - tilde(B));
            return out;
        case Corollary::C25:
            need(is_inf(p), "p = inf");
            need(cond_lt(A.alpha0, -ib) && cond_lt(A.alpha_inf, -ib),
                 "alpha0 < -1/b and alphaInf < -1/b");
            out.sigma += n * iq;
            out.Gamma = out.Gamma + (LogPair{0.0, A.alpha0 + ib} - tilde(B));
            return out;
        case Corollary::C26:
        case Corollary::C27:
            need(cond_eq(iq, ip), "q = p");
            need(cond_le(ic, ib), "b <= c");
            need(cond_lt(A.alpha_inf + ib, B.alpha_inf + ic),
                 "alphaInf + 1/b < betaInf + 1/c");
            need(cond_gt(A.alpha0 + ib, B.alpha0 + ic), "alpha0 + 1/b > beta0 + 1/c");
            if (cor == Corollary::C26) out.gamma += A.alpha0 + ib - B.alpha0 - ic;
            else out.Gamma = out.Gamma + ((tilde(A) + ib) - (tilde(B) + ic));
            return out;
        case Corollary::C28:
        case Corollary::C29:
            need(cond_eq(iq, ip), "q = p");
            need(cond_le(ib, ic), "c <= b");
            need(cond_lt(A.alpha_inf, B.alpha_inf), "alphaInf < betaInf");
            need(cond_ge(A.alpha0, B.alpha0), "alpha0 >= beta0");
            if (cor == Corollary::C28) out.gamma += A.alpha0 - B.alpha0;
            else out.Gamma = out.Gamma + (tilde(A) - tilde(B));
            return out;
    }
    throw DispatchError("unknown corollary");
}

struct EmbeddingRow {
    int index = 0;
    double omega = 0.0;
    double target_norm = 0.0;
    double source_norm = 0.0;
    double ratio = 0.0;
};

struct EmbeddingSpec {
    Corollary corollary = Corollary::C21;
    SpaceParams source{1.0, 1.0, {}};
    SpaceParams target{2.0, 2.0, {}};
    int n = 1;
    BesovParams target_smoothness{};
};

// Per-function ratios target-Besov-norm / shifted-source-Besov-norm over a
// random band-limited family with spectra [-omega, omega] (an annulus for
// homogeneous corollaries, keeping the spectrum away from zero).
inline std::vector<EmbeddingRow> verify_embedding(const EmbeddingSpec& spec,
                                                  const std::vector<double>& omegas, int count,
                                                  std::uint64_t seed, double period = 8.0,
                                                  std::size_t grid_points = 8192,
                                                  const NormOptions& opt = {}) {
    require(count >= 1, "verify_embedding: count must be >= 1");
    require(!omegas.empty(), "verify_embedding: need at least one omega");
    const bool hom = corollary_homogeneous(spec.corollary);
    const BesovParams shifted =
        embedding_shift(spec.corollary, spec.source, spec.target, spec.n,
                        spec.target_smoothness);
    BesovParams target_bp = spec.target_smoothness;
    target_bp.base = spec.target;

    std::vector<EmbeddingRow> rows;
    CounterRng base(seed);
    for (int i = 0; i < count; ++i) {
        const double w = omegas[static_cast<std::size_t>(i) % omegas.size()];
        Spectrum s =
            hom ? Spectrum(1, {box1(-w, -0.125 * w), box1(0.125 * w, w)})
                : Spectrum(1, {box1(-w, w)});
        const BandlimitedFunction f = make_random_bandlimited(
            s, base.fork(static_cast<std::uint64_t>(i)).next_u64(), period, grid_points);
        EmbeddingRow row;
        row.index = i;
        row.omega = w;
        row.target_norm = besov_norm(f, target_bp, hom, opt);
        row.source_norm = besov_norm(f, shifted, hom, opt);
        row.ratio = row.source_norm > 0.0 ? row.target_norm / row.source_norm : 0.0;
        rows.push_back(row);
    }
    return rows;
}

} // namespace lznik
