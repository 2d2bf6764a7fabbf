#ifndef SMC_DEFORMATION_HPP
#define SMC_DEFORMATION_HPP

#include <complex>
#include <utility>
#include <vector>

#include "smc/trigpoly.hpp"

namespace smc {

/// Reciprocal pairing of the 4k-2 roots of a lifted even polynomial:
/// 2k-1 unordered pairs {zeta, 1/zeta} whose union is the root multiset.
struct RootPairing {
    std::vector<std::pair<std::complex<double>, std::complex<double>>> pairs;
};

/// Split the roots of lift(f) into reciprocal pairs.  Requires f even
/// (f(-t) = f(t)) of full degree 2k-1.
///
/// Throws NotEven if f is not even, PairingFailure if the roots cannot be
/// matched into reciprocal pairs at tolerance (in particular when
/// lift(f)(0) = 0, i.e. deg f < 2k-1).
RootPairing pair_roots(const RakedTrigPoly& f, const RootOptions& opt = {});

/// The lambda-deformation: map each reciprocal pair sum s = zeta + 1/zeta to
/// lambda*s, solve xi^2 - lambda*s*xi + 1 = 0 per pair, and rebuild the even
/// raked polynomial from the new root multiset.  The result is scaled to
/// constant term 1 when that term is nonzero.
RakedTrigPoly lambda_deform(const RakedTrigPoly& f, double lambda, const RootOptions& opt = {});

/// Root multiset of the lambda-deformed polynomial (the per-pair quadratic
/// roots), without rebuilding coefficients.  Exposed because the deformed
/// multiset is often more accurate than roots re-extracted from rebuilt
/// coefficients at multiple roots.
std::vector<std::complex<double>> lambda_deformed_roots(const RakedTrigPoly& f, double lambda,
                                                        const RootOptions& opt = {});

/// Running ratio (2j-1)!!/(2j)!! computed by pairwise products; j = 0 gives 1.
double double_factorial_ratio(int j);

/// n!! in floating point; (-1)!! = 0!! = 1.
double double_factorial(int n);

/// sin^{2k-1} t as a raked polynomial (sine coefficients only).
RakedTrigPoly sin_power(int k);

/// h_k(t) = int_0^t sin^{2k-1}(tau) dtau: term-wise antiderivative of
/// sin_power with the constant term fixed by h_k(0) = 0.  Has a root of
/// multiplicity 2k at t = 0.
RakedTrigPoly h_poly(int k);

/// The unique root beta_k in (pi/2, pi) of F_k(t) = sin^2(t) h_{k-1}(t) - h_k(t).
double beta_root(int k, double tol = 1e-12);

/// F_k(t) itself (not raked; used for root bracketing and monotonicity tests).
double F_k(int k, double t);

/// f_k(t) = sin^2(beta_k) h_{k-1}(t) - h_k(t): root of multiplicity 2k-2 at 0,
/// double roots at +-beta_k, nonnegative on the circle.
RakedTrigPoly witness_poly(int k);

/// Left-hand side of the conjecture equation
///   F(alpha) = cos(alpha) + 1 + sum_{j=1}^{k-1} (-1)^j (2j-1)!!/(2j)!! tan^{2j}(alpha).
double conjecture_equation(int k, double alpha);

/// Smallest positive root of the conjecture equation on (0, pi/2), located by
/// scanning for the first sign change and bisecting.  k must be even.
/// Throws NoRoot if no sign change is found.
double alpha_conjecture(int k, double tol = 1e-12);

}  // namespace smc

#endif
