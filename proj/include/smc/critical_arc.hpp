#ifndef SMC_CRITICAL_ARC_HPP
#define SMC_CRITICAL_ARC_HPP

#include <utility>
#include <vector>

#include "smc/interpolation.hpp"

namespace smc {

/// An endpoint multiplicity split: positive even integers with
/// m_a + m_b = 2k, canonically ordered m_a <= m_b.
struct Split {
    int m_a = 2;
    int m_b = 2;

    Split() = default;
    Split(int a, int b);

    int k() const { return (m_a + m_b) / 2; }
    bool operator==(const Split&) const = default;
};

/// All canonical splits for a given k, in increasing m_a order.
std::vector<Split> canonical_splits(int k);

/// Per-split critical arc length L* with the touching polynomial at L* and
/// its extra root in the opposite arc.
struct CriticalArcResult {
    Split split;
    double length = 0.0;          ///< L*, in (pi/2, pi)
    RakedTrigPoly poly;           ///< touching polynomial at L*
    CirclePoint extra_root;       ///< in the opposite arc (pi, L* + pi)
    double bisection_width = 0.0;
};

/// The unique degree-(2k-1) polynomial with constant term 1, a root of
/// multiplicity m_a at 0 and m_b at L.
RakedTrigPoly endpoint_poly(int k, const Split& split, double L);

/// Minimizer and minimum of endpoint_poly over the closed opposite arc
/// [pi, L + pi], located from the roots of the derivative.
std::pair<CirclePoint, double> opposite_min(int k, const Split& split, double L);

/// Bisection on L in (pi/2, pi) for the sign change of the opposite-arc
/// minimum; valid because the touching transition is strictly monotone.
/// Throws BracketFailure if the minimum does not change sign on the bracket.
CriticalArcResult critical_length(int k, const Split& split, double tol = 1e-10);

/// The neighborliness threshold phi_k: minimum of critical_length over all
/// canonical splits, with the attaining split.
std::pair<double, Split> phi(int k, double tol = 1e-10);

/// Per-split margins of endpoint_poly at L = pi/2 off {0, pi/2}; all must be
/// positive.  Splits here are ordered pairs (2m, 2n), m + n = k.
struct SemicircleReport {
    struct Entry {
        int m_a;
        int m_b;
        double margin;
    };
    std::vector<Entry> entries;
    double min_margin = 0.0;
};

SemicircleReport semicircle_check(int k);

}  // namespace smc

#endif
