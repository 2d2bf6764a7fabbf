#ifndef SMC_POLYTOPE_HPP
#define SMC_POLYTOPE_HPP

#include <cstdint>
#include <vector>

#include "smc/interpolation.hpp"

namespace smc {

/// A point of the symmetric moment curve
/// U_k(t) = (cos t, sin t, cos 3t, sin 3t, ..., cos (2k-1)t, sin (2k-1)t).
struct CurvePoint {
    CirclePoint t;
    std::vector<double> coords;  ///< length 2k
};

CurvePoint embed(int k, CirclePoint t);

/// A set of curve parameters, optionally centrally symmetric (the angle
/// multiset invariant under t -> t + pi).
struct VertexConfig {
    int k = 1;
    std::vector<CirclePoint> angles;
    bool symmetric = false;
};

/// The clustered construction: m points near each of 0, pi/2, pi, 3pi/2,
/// equally spaced over [j pi/2 - spread/2, j pi/2 + spread/2].  Centrally
/// symmetric by construction.  Requires pi/2 + spread < phi_k so that arcs
/// between adjacent clusters stay below the neighborliness threshold.
/// Throws SpreadTooLarge otherwise.
VertexConfig clustered_config(int k, int m, double spread);

/// Classification counts for all (face_dim+1)-element subsets of a config.
struct FaceCount {
    int dim = 0;
    std::int64_t verified_count = 0;
    std::int64_t unknown_count = 0;
    std::int64_t not_face_count = 0;
    std::int64_t total_subsets = 0;
};

struct CountOptions {
    std::int64_t subset_cap = 10'000'000;  ///< CombinatorialExplosion guard
    FaceOptions face;
};

/// Classify every (face_dim+1)-subset of config.angles via is_face.
/// Requires face_dim + 1 <= k (the certificate path).
FaceCount count_faces(const VertexConfig& config, int face_dim, const CountOptions& opt = {});

/// Supporting-hyperplane feasibility for an arbitrary point set: true iff
/// there exist (c, delta) with <c, p_i> = delta on the subset and
/// <c, p_j> <= delta - 1 elsewhere, with box-bounded coefficients.
bool lp_face_oracle(const std::vector<std::vector<double>>& points,
                    const std::vector<int>& subset, double box = 1e6);

/// Cross-validation harness: run lp_face_oracle on a curve-sampled instance
/// made of the subset angles, the surrounding config, a uniform filler grid,
/// near-subset sentinels, and optional probe angles (e.g. the certificate's
/// negative minimizer).
bool curve_face_oracle(int k, const std::vector<CirclePoint>& subset,
                       const std::vector<CirclePoint>& context,
                       const std::vector<CirclePoint>& probes = {}, int filler = 40,
                       double box = 1e6);

/// The complete edge characterization of B_k: [U(a), U(b)] is an edge iff
/// the shorter arc between a and b is below (2k-2)/(2k-1) * pi.
bool edge_check(int k, CirclePoint a, CirclePoint b);

/// C(n, r) with a cap guard; returns cap+1 when the count exceeds the cap.
std::int64_t binomial_capped(int n, int r, std::int64_t cap);

}  // namespace smc

#endif
