#include "smc/critical_arc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace smc {

Split::Split(int a, int b) : m_a(a), m_b(b) {
    if (a < 2 || b < 2 || a % 2 != 0 || b % 2 != 0)
        throw InvalidInput("Split: multiplicities must be positive even integers");
    if (a > b) std::swap(m_a, m_b);
}

std::vector<Split> canonical_splits(int k) {
    if (k < 2) throw InvalidInput("canonical_splits: k must be at least 2");
    std::vector<Split> out;
    for (int ma = 2; ma <= k; ma += 2) out.emplace_back(ma, 2 * k - ma);
    return out;
}

RakedTrigPoly endpoint_poly(int k, const Split& split, double L) {
    if (L <= 0.0 || L >= std::numbers::pi)
        throw InvalidInput("endpoint_poly: L must lie in (0, pi)");
    if (split.k() != k) throw InvalidInput("endpoint_poly: split does not match k");
    return interpolate(RootSpec(
        k, {{CirclePoint(0.0), split.m_a}, {CirclePoint(L), split.m_b}}));
}

std::pair<CirclePoint, double> opposite_min(int k, const Split& split, double L) {
    const RakedTrigPoly f = endpoint_poly(k, split, L);
    const double lo = std::numbers::pi;
    const double hi = L + std::numbers::pi;

    double best_t = lo;
    double best_v = eval(f, lo);
    auto consider = [&](double t) {
        const double v = eval(f, t);
        if (v < best_v) {
            best_v = v;
            best_t = t;
        }
    };
    consider(hi);
    for (const auto& r : circle_roots(derivative(f, 1))) {
        const double off = arc_offset(lo, r.point.angle);
        if (off >= 0.0 && off <= L) consider(lo + off);
    }
    return {CirclePoint(best_t), best_v};
}

CriticalArcResult critical_length(int k, const Split& split, double tol) {
    if (tol <= 0.0) throw InvalidInput("critical_length: tol must be positive");
    // The lower end is safe by the pi/2 bound.  The top of the bracket is
    // found by walking upward to the first sign change (valid because the
    // touching transition crosses zero exactly once): the tangency system
    // turns machine-singular as the endpoints approach antipodal positions,
    // so a fixed top near pi is not evaluable at higher multiplicities.
    double lo = std::numbers::pi / 2 + 1e-6;
    const double vlo = opposite_min(k, split, lo).second;
    if (!(vlo > 0.0))
        throw BracketFailure("critical_length: opposite-arc minimum not positive at pi/2");
    double hi = lo;
    bool bracketed = false;
    while (hi < std::numbers::pi - 1e-3) {
        const double next = std::min(hi + 0.05, std::numbers::pi - 1e-3);
        if (opposite_min(k, split, next).second < 0.0) {
            lo = hi;
            hi = next;
            bracketed = true;
            break;
        }
        hi = next;
    }
    if (!bracketed)
        throw BracketFailure("critical_length: opposite-arc minimum does not change sign");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        // sign only: near L* the family is tangent to zero and the magnitude
        // carries no information
        if (opposite_min(k, split, mid).second > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    CriticalArcResult res;
    res.split = split;
    res.length = 0.5 * (lo + hi);
    res.bisection_width = hi - lo;
    res.poly = endpoint_poly(k, split, res.length);
    res.extra_root = opposite_min(k, split, res.length).first;
    return res;
}

std::pair<double, Split> phi(int k, double tol) {
    if (k < 2) throw InvalidInput("phi: k must be at least 2");
    double best = std::numbers::pi;
    Split best_split;
    for (const Split& s : canonical_splits(k)) {
        const CriticalArcResult r = critical_length(k, s, tol);
        if (r.length < best) {
            best = r.length;
            best_split = s;
        }
    }
    return {best, best_split};
}

SemicircleReport semicircle_check(int k) {
    if (k < 2) throw InvalidInput("semicircle_check: k must be at least 2");
    SemicircleReport rep;
    rep.min_margin = std::numeric_limits<double>::infinity();
    const double L = std::numbers::pi / 2;
    for (int m = 1; m < k; ++m) {
        const int ma = 2 * m, mb = 2 * (k - m);
        const RakedTrigPoly f = interpolate(
            RootSpec(k, {{CirclePoint(0.0), ma}, {CirclePoint(L), mb}}));
        const double margin =
            positivity_margin(f, {CirclePoint(0.0), CirclePoint(L)}, 0.05);
        rep.entries.push_back({ma, mb, margin});
        rep.min_margin = std::min(rep.min_margin, margin);
    }
    return rep;
}

}  // namespace smc
