#ifndef SMC_INTERPOLATION_HPP
#define SMC_INTERPOLATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "smc/trigpoly.hpp"

namespace smc {

/// Prescribed roots with multiplicities for Hermite interpolation: points
/// pairwise distinct, all in one open semicircle, multiplicities summing to
/// exactly 2k.
struct RootSpec {
    int k = 1;
    std::vector<std::pair<CirclePoint, int>> roots;

    RootSpec() = default;
    RootSpec(int k_, std::vector<std::pair<CirclePoint, int>> roots_);

    int total_multiplicity() const;
    /// Shift every point by `a` (the construction is shift-equivariant).
    RootSpec shifted(double a) const;
};

/// True when all angles fit in one open semicircle (span of the multiset is
/// strictly less than pi).
bool fits_open_semicircle(const std::vector<CirclePoint>& pts);

/// A positivity certificate: a raked polynomial with constant term 1 that
/// vanishes to even order exactly at the spec points and stays at least
/// `margin` above zero elsewhere (outside small exclusion balls).
struct FaceCertificate {
    RakedTrigPoly poly;
    RootSpec spec;
    double margin = 0.0;
};

enum class FaceStatus { FACE, NOT_FACE, UNKNOWN };

struct FaceVerdict {
    FaceStatus status = FaceStatus::UNKNOWN;
    std::optional<FaceCertificate> certificate;
    std::optional<CirclePoint> witness;  ///< where a candidate certificate fails
};

std::string to_string(FaceStatus s);

/// The unique raked trigonometric polynomial of degree 2k-1 with constant
/// term exactly 1 whose root at each spec point has exactly the prescribed
/// multiplicity.  Solves the 2k x 2k linear system f^(r)(t_i) = 0,
/// r = 0..m_i-1, with c = 1 fixed.
///
/// Throws SingularSystem when the system is numerically singular (violated
/// distinctness or semicircle preconditions).
RakedTrigPoly interpolate(const RootSpec& spec);

/// Minimum of f over the circle minus open balls of `radius` around the
/// excluded points, computed from critical points of f plus ball endpoints.
/// A negative value means f changes sign or vanishes off the excluded set.
double positivity_margin(const RakedTrigPoly& f, const std::vector<CirclePoint>& excluded,
                         double radius, const RootOptions& opt = {});

struct FaceOptions {
    double pos_tol = 1e-9;            ///< margins inside [-pos_tol, pos_tol] are undecided
    double exclusion_radius = 0.05;   ///< ball radius for margin computation
    RootOptions roots;
};

/// Decide whether the given curve points span a face of B_k via the
/// certificate machinery.
///
///  * n == k points in an open semicircle: build the all-multiplicities-2
///    interpolant; FACE iff it is strictly positive off the points,
///    NOT_FACE with a witness iff it goes negative.
///  * n < k: pad with auxiliary double roots inside the spanning arc
///    (sufficient test; failure gives UNKNOWN, never NOT_FACE).
///  * points not in a semicircle: attempt a certificate from the nullspace
///    of the tangency conditions; FACE on success, UNKNOWN otherwise.
///
/// Throws InvalidInput for duplicate points, or for more than k points
/// inside one open semicircle (no certificate can exist there).
FaceVerdict is_face(int k, const std::vector<CirclePoint>& points, const FaceOptions& opt = {});

/// Velocity of the interpolant family when the moving root slides to s:
/// central finite differences of the coefficients in s (step 1e-6).
/// The result has constant term 0.
RakedTrigPoly family_velocity(const RootSpec& spec, int moving_index, CirclePoint s,
                              double step = 1e-6);

}  // namespace smc

#endif
