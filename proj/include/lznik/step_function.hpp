#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "lznik/core.hpp"

namespace lznik {

struct Piece {
    double value;   // >= 0
    double measure; // > 0
};

// Finite-piece function: value v_i on a set of measure m_i. The canonical
// (rearranged) form has strictly decreasing values; zero-valued mass is
// folded into total_measure as an implicit tail.
struct StepFunction {
    std::vector<Piece> pieces;
    double total_measure = 0.0; // >= sum of piece measures
    bool canonical = false;

    StepFunction() = default;

    explicit StepFunction(std::vector<Piece> ps, double total = -1.0) : pieces(std::move(ps)) {
        double sum = 0.0;
        for (const auto& pc : pieces) {
            require(pc.measure > 0.0, "StepFunction: piece measures must be positive");
            require(pc.value >= 0.0 && std::isfinite(pc.value),
                    "StepFunction: piece values must be finite and nonnegative");
            sum += pc.measure;
        }
        if (total < 0.0) {
            total_measure = sum;
        } else {
            require(total >= sum * (1.0 - 1e-12), "StepFunction: total measure below piece sum");
            total_measure = std::max(total, sum);
        }
    }

    // measure of {f > 0} (for canonical form, the support of f*)
    double support_measure() const {
        double s = 0.0;
        for (const auto& pc : pieces)
            if (pc.value > 0.0) s += pc.measure;
        return s;
    }

    bool is_zero() const {
        for (const auto& pc : pieces)
            if (pc.value > 0.0) return false;
        return true;
    }
};

// Non-increasing rearrangement: sort by value descending, merge equal
// values (exact ties only), drop the zero tail.
inline StepFunction rearrange(const StepFunction& f) {
    std::vector<Piece> ps;
    ps.reserve(f.pieces.size());
    for (const auto& pc : f.pieces) {
        require(pc.value >= 0.0, "rearrange: values must be nonnegative");
        if (pc.value > 0.0) ps.push_back(pc);
    }
    std::sort(ps.begin(), ps.end(),
              [](const Piece& a, const Piece& b) { return a.value > b.value; });
    std::vector<Piece> merged;
    merged.reserve(ps.size());
    for (const auto& pc : ps) {
        if (!merged.empty() && merged.back().value == pc.value)
            merged.back().measure += pc.measure;
        else
            merged.push_back(pc);
    }
    StepFunction out;
    out.pieces = std::move(merged);
    out.total_measure = f.total_measure;
    out.canonical = true;
    return out;
}

// distribution function: measure of {x : f(x) > lambda}
inline double dist_function(const StepFunction& f, double lambda) {
    double s = 0.0;
    for (const auto& pc : f.pieces)
        if (pc.value > lambda) s += pc.measure;
    return s;
}

// f*(t) for canonical f (right-continuous step evaluation; 0 past support)
inline double value_at(const StepFunction& fstar, double t) {
    require(fstar.canonical, "value_at: needs canonical (rearranged) input");
    double edge = 0.0;
    for (const auto& pc : fstar.pieces) {
        edge += pc.measure;
        if (t < edge) return pc.value;
    }
    return 0.0;
}

// Restriction to a set of measure one carrying the largest values: the
// first unit of measure of f*.
inline StepFunction truncate_to_unit_set(const StepFunction& f) {
    require(f.total_measure >= 1.0, "truncate_to_unit_set: total measure must be >= 1");
    StepFunction r = f.canonical ? f : rearrange(f);
    std::vector<Piece> out;
    double acc = 0.0;
    for (const auto& pc : r.pieces) {
        if (acc >= 1.0) break;
        const double take = std::min(pc.measure, 1.0 - acc);
        out.push_back({pc.value, take});
        acc += take;
    }
    StepFunction res;
    res.pieces = std::move(out);
    res.total_measure = 1.0;
    res.canonical = true;
    return res;
}

// measures (and total) scaled by c > 0; a measure-space dilation, so the
// rearrangement scales along exactly
inline StepFunction scale_measures(const StepFunction& f, double c) {
    require(c > 0.0 && std::isfinite(c), "scale_measures: factor must be positive finite");
    StepFunction out = f;
    for (auto& pc : out.pieces) pc.measure *= c;
    out.total_measure *= c;
    return out;
}

// pointwise k-th power (values only)
inline StepFunction pow_values(const StepFunction& f, int k) {
    require(k >= 1, "pow_values: k must be a positive integer");
    StepFunction out = f;
    for (auto& pc : out.pieces) pc.value = std::pow(pc.value, k);
    return out;
}

} // namespace lznik
