#ifndef SMC_CIRCLE_HPP
#define SMC_CIRCLE_HPP

#include <cmath>
#include <numbers>

namespace smc {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Canonical representative of an angle in [0, 2*pi).
inline double canonical_angle(double t) {
    double r = t - std::floor(t / kTwoPi) * kTwoPi;
    if (r >= kTwoPi) r -= kTwoPi;  // guard against floor rounding at the seam
    if (r < 0.0) r += kTwoPi;
    return r;
}

/// A point on the circle S = R/2piZ, stored canonically in [0, 2*pi).
struct CirclePoint {
    double angle = 0.0;

    CirclePoint() = default;
    explicit CirclePoint(double t) : angle(canonical_angle(t)) {}

    CirclePoint antipode() const { return CirclePoint(angle + std::numbers::pi); }
};

/// Distance along the circle (length of the shorter arc), in [0, pi].
inline double circular_distance(double s, double t) {
    double d = canonical_angle(s - t);
    return d > std::numbers::pi ? kTwoPi - d : d;
}

inline double circular_distance(CirclePoint p, CirclePoint q) {
    return circular_distance(p.angle, q.angle);
}

/// Signed position of t relative to the arc start a, in [0, 2*pi).
inline double arc_offset(double a, double t) { return canonical_angle(t - a); }

/// An open arc traversed counterclockwise from `start`, 0 < length < 2*pi.
struct Arc {
    CirclePoint start;
    double length = 0.0;

    Arc() = default;
    Arc(CirclePoint s, double len) : start(s), length(len) {}

    /// Strict containment (the arc is open).
    bool contains(CirclePoint p) const {
        double off = arc_offset(start.angle, p.angle);
        return off > 0.0 && off < length;
    }

    /// The arc shifted by half a turn.
    Arc opposite() const { return Arc(start.antipode(), length); }
};

}  // namespace smc

#endif
