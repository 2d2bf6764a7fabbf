#ifndef SMC_TRIGPOLY_HPP
#define SMC_TRIGPOLY_HPP

#include <complex>
#include <vector>

#include "smc/circle.hpp"
#include "smc/errors.hpp"

namespace smc {

/// A raked trigonometric polynomial of degree at most 2k-1,
///
///     f(t) = c + sum_j a_j cos((2j-1) t) + sum_j b_j sin((2j-1) t),
///
/// i.e. a constant term plus odd harmonics only.  Under the half-turn shift
/// it satisfies f(t + pi) = 2c - f(t).  Immutable by convention: operations
/// return new values.
struct RakedTrigPoly {
    int k = 1;              ///< half-dimension; harmonics run over 1, 3, ..., 2k-1
    double c = 0.0;         ///< constant term
    std::vector<double> a;  ///< cosine coefficients, a[j] multiplies cos((2j+1) t)
    std::vector<double> b;  ///< sine coefficients,   b[j] multiplies sin((2j+1) t)

    RakedTrigPoly() : a(1, 0.0), b(1, 0.0) {}
    RakedTrigPoly(int k_, double c_, std::vector<double> a_, std::vector<double> b_);

    /// Largest odd harmonic present; 2k-1 exactly when a_k != 0 or b_k != 0.
    bool full_degree(double tol = 0.0) const {
        return std::abs(a[k - 1]) > tol || std::abs(b[k - 1]) > tol;
    }

    /// Max absolute coefficient; cheap zero test and scale reference.
    double coeff_norm() const;

    bool operator==(const RakedTrigPoly&) const = default;
};

/// A complex polynomial in ascending-degree coefficient form.
struct ComplexPoly {
    std::vector<std::complex<double>> coeffs;  ///< coeffs[i] multiplies z^i

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    std::complex<double> eval(std::complex<double> z) const;
    ComplexPoly derivative() const;
};

/// A root of f on the circle together with its multiplicity: f and its first
/// multiplicity-1 derivatives vanish there, the next one does not.
struct CircleRoot {
    CirclePoint point;
    int multiplicity = 1;
};

/// f(t), or the order-th derivative of f at t.
double eval(const RakedTrigPoly& f, CirclePoint t, int order = 0);
double eval(const RakedTrigPoly& f, double t, int order = 0);

/// Term-wise differentiation; keeps only odd harmonics, constant term 0 for
/// order >= 1.  Order 0 is the identity.
RakedTrigPoly derivative(const RakedTrigPoly& f, int order = 1);

/// The associated complex polynomial
///
///     P(f)(z) = z^{2k-1} ( c + sum_j a_j (z^{2j-1}+z^{1-2j})/2
///                            + sum_j b_j (z^{2j-1}-z^{1-2j})/(2i) ),
///
/// which satisfies P(f)(e^{it}) = e^{(2k-1)it} f(t).
ComplexPoly lift(const RakedTrigPoly& f);

/// max_{t in S} |f(t)|, from a dense grid polished by local maximization.
double sup_norm(const RakedTrigPoly& f);

/// Options for root extraction.
struct RootOptions {
    double cluster_tol = 1e-7;    ///< clustering scale; radius for multiplicity m is cluster_tol^(1/m)
    double residual_tol = 1e-12;  ///< relative residual considered an exact zero
};

/// Roots of f on the circle with multiplicities, extracted from the
/// eigenvalues of the companion matrix of lift(f).  Eigenvalue clusters are
/// polished by Newton iteration on the appropriate derivative and confirmed
/// by derivative residuals; total multiplicity never exceeds 4k-2.
///
/// Throws ZeroPolynomial if f is (numerically) identically zero and
/// IllConditioned if cluster assignment is ambiguous at the tolerance.
std::vector<CircleRoot> circle_roots(const RakedTrigPoly& f, const RootOptions& opt = {});

/// All 4k-2 roots of lift(f) (circle and off-circle alike), polished.
/// Used by the lambda-deformation machinery.
std::vector<std::complex<double>> lifted_roots(const RakedTrigPoly& f, const RootOptions& opt = {});

/// Sum of multiplicities of `roots` inside the open arc.
int total_multiplicity_in(const std::vector<CircleRoot>& roots, const Arc& arc);

}  // namespace smc

#endif
