#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <vector>

#include "smc/trigpoly.hpp"

namespace smc {
namespace {

using cplx = std::complex<double>;

std::vector<cplx> companion_eigenvalues(const std::vector<cplx>& coeffs) {
    const int d = static_cast<int>(coeffs.size()) - 1;
    if (d < 1) return {};
    if (d == 1) return {-coeffs[0] / coeffs[1]};
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 1; i < d; ++i) m(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) m(i, d - 1) = -coeffs[i] / coeffs[d];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw IllConditioned("companion eigenvalue extraction failed");
    std::vector<cplx> out(d);
    for (int i = 0; i < d; ++i) out[i] = solver.eigenvalues()(i);
    return out;
}

/// Trimmed lifted coefficients plus the number of roots at z = 0 dropped.
std::vector<cplx> trimmed_lift(const RakedTrigPoly& f, int* zeros_at_origin = nullptr) {
    ComplexPoly p = lift(f);
    double maxc = 0.0;
    for (const auto& z : p.coeffs) maxc = std::max(maxc, std::abs(z));
    if (maxc == 0.0) return {};
    const double cut = 1e-13 * maxc;
    int hi = static_cast<int>(p.coeffs.size()) - 1;
    while (hi > 0 && std::abs(p.coeffs[hi]) <= cut) --hi;
    int lo = 0;
    while (lo < hi && std::abs(p.coeffs[lo]) <= cut) ++lo;
    if (zeros_at_origin) *zeros_at_origin = lo;
    return {p.coeffs.begin() + lo, p.coeffs.begin() + hi + 1};
}

double circular_mean(const std::vector<double>& angles) {
    double sc = 0.0, ss = 0.0;
    for (double t : angles) {
        sc += std::cos(t);
        ss += std::sin(t);
    }
    return canonical_angle(std::atan2(ss, sc));
}

struct Extractor {
    const RakedTrigPoly& f;
    RootOptions opt;
    double supf;
    int max_mult;
    std::vector<CircleRoot> found;
    std::vector<double> rejected;  ///< candidate angles that validated as non-roots
    mutable std::vector<RakedTrigPoly> derivs{};  ///< derivs[r] = f^(r)
    mutable std::vector<double> dnorms{};         ///< sup norms of the derivatives

    /// Sup norm of f^(r), computed lazily; the natural zero-test scale.
    double deriv_scale(int r) const {
        if (derivs.empty()) {
            derivs.push_back(f);
            dnorms.push_back(supf);
        }
        while (static_cast<int>(dnorms.size()) <= r) {
            derivs.push_back(derivative(derivs.back(), 1));
            dnorms.push_back(std::max(sup_norm(derivs.back()), 1e-300));
        }
        return dnorms[static_cast<size_t>(r)];
    }

    double radius(int level) const { return std::pow(opt.cluster_tol, 1.0 / level); }

    /// Newton iteration on f^(mu-1) starting from t0; stays near the cluster.
    double polish(double t0, int mu, double guard) const {
        const RakedTrigPoly g = derivative(f, mu - 1);
        double t = t0;
        for (int it = 0; it < 60; ++it) {
            const double gv = eval(g, t, 0);
            const double gd = eval(g, t, 1);
            if (gd == 0.0) break;
            const double step = gv / gd;
            if (!std::isfinite(step)) break;
            t -= step;
            if (circular_distance(t, t0) > guard) return t0;  // drifted out of basin
            if (std::abs(step) < 1e-15) break;
        }
        return canonical_angle(t);
    }

    /// Exact-multiplicity confirmation at t: the first mu derivatives vanish
    /// relative to their own scales, the mu-th does not.
    bool validate(double t, int mu) const {
        for (int r = 0; r < mu; ++r)
            if (std::abs(eval(f, t, r)) > opt.cluster_tol * deriv_scale(r)) return false;
        if (mu >= max_mult) return true;  // cannot exceed the structural bound
        return std::abs(eval(f, t, mu)) > opt.cluster_tol * deriv_scale(mu);
    }

    void emit(double t, int mu) { found.push_back({CirclePoint(t), mu}); }

    /// Split sorted-by-angle candidates at circular gaps larger than `radius`.
    std::vector<std::vector<double>> link(std::vector<double> angles, double rad) const {
        std::sort(angles.begin(), angles.end());
        const int n = static_cast<int>(angles.size());
        if (n == 1) return {angles};
        // rotate so the largest gap is the seam
        int cut = 0;
        double maxgap = angles.front() + kTwoPi - angles.back();
        for (int i = 1; i < n; ++i) {
            const double gap = angles[i] - angles[i - 1];
            if (gap > maxgap) {
                maxgap = gap;
                cut = i;
            }
        }
        std::rotate(angles.begin(), angles.begin() + cut, angles.end());
        std::vector<std::vector<double>> clusters;
        clusters.push_back({angles[0]});
        for (int i = 1; i < n; ++i) {
            const double gap = canonical_angle(angles[i] - angles[i - 1]);
            if (gap <= rad)
                clusters.back().push_back(angles[i]);
            else
                clusters.push_back({angles[i]});
        }
        return clusters;
    }

    void process(const std::vector<double>& candidates, int level) {
        if (candidates.empty()) return;
        for (auto& cluster : link(candidates, radius(level))) {
            const int mu = static_cast<int>(cluster.size());
            const double mean = circular_mean(cluster);
            const double t = polish(mean, mu, 4.0 * radius(level) + 1e-12);
            if (validate(t, mu)) {
                emit(t, mu);
                continue;
            }
            if (level > 1) {
                process(cluster, level - 1);
                continue;
            }
            descend(cluster);
        }
    }

    /// Finest level: peel off validated sub-multiplicities, drop the rest.
    void descend(std::vector<double> cluster) {
        while (!cluster.empty()) {
            bool emitted = false;
            const double mean = circular_mean(cluster);
            for (int mu = static_cast<int>(cluster.size()); mu >= 1; --mu) {
                const double t = polish(mean, mu, 4.0 * radius(1) + 1e-9);
                if (!validate(t, mu)) continue;
                emit(t, mu);
                std::sort(cluster.begin(), cluster.end(), [&](double x, double y) {
                    return circular_distance(x, t) < circular_distance(y, t);
                });
                cluster.erase(cluster.begin(), cluster.begin() + mu);
                emitted = true;
                break;
            }
            if (!emitted) {
                // Candidates with no consistent on-circle reading: genuine
                // off-circle roots that strayed into the radial window, or
                // stragglers of a root already emitted.
                for (double t : cluster) rejected.push_back(t);
                return;
            }
        }
    }

    void finalize() {
        std::sort(found.begin(), found.end(),
                  [](const CircleRoot& x, const CircleRoot& y) { return x.point.angle < y.point.angle; });
        for (size_t i = 1; i < found.size(); ++i) {
            const double d = circular_distance(found[i].point, found[i - 1].point);
            if (d < 1e-12)
                throw IllConditioned("two root clusters coincide; multiplicity assignment ambiguous");
        }
        int total = 0;
        for (const auto& r : found) total += r.multiplicity;
        if (total > max_mult)
            throw IllConditioned("extracted multiplicities exceed the structural bound");
    }
};

}  // namespace

std::vector<CircleRoot> circle_roots(const RakedTrigPoly& f, const RootOptions& opt) {
    const double supf = sup_norm(f);
    if (supf <= opt.residual_tol) throw ZeroPolynomial("circle_roots: polynomial is numerically zero");

    const std::vector<cplx> coeffs = trimmed_lift(f);
    Extractor ex{f, opt, supf, 4 * f.k - 2, {}, {}};
    if (coeffs.size() <= 1) return {};

    const double window = ex.radius(ex.max_mult);
    std::vector<double> candidates;
    for (const cplx& z : companion_eigenvalues(coeffs))
        if (std::abs(std::abs(z) - 1.0) <= window) candidates.push_back(canonical_angle(std::arg(z)));
    if (candidates.empty()) return {};

    ex.process(candidates, ex.max_mult);
    ex.finalize();
    return ex.found;
}

std::vector<std::complex<double>> lifted_roots(const RakedTrigPoly& f, const RootOptions& opt) {
    const double supf = sup_norm(f);
    if (supf <= opt.residual_tol) throw ZeroPolynomial("lifted_roots: polynomial is numerically zero");

    int zeros_at_origin = 0;
    const std::vector<cplx> coeffs = trimmed_lift(f, &zeros_at_origin);
    std::vector<cplx> out(static_cast<size_t>(zeros_at_origin), cplx(0.0, 0.0));
    if (coeffs.size() <= 1) return out;

    Extractor ex{f, opt, supf, 4 * f.k - 2, {}, {}};
    const double window = ex.radius(ex.max_mult);
    std::vector<double> on_circle;
    std::vector<cplx> off_circle;
    std::vector<std::pair<double, cplx>> window_originals;  // angle -> eigenvalue
    for (const cplx& z : companion_eigenvalues(coeffs)) {
        if (std::abs(std::abs(z) - 1.0) <= window) {
            const double t = canonical_angle(std::arg(z));
            on_circle.push_back(t);
            window_originals.emplace_back(t, z);
        } else {
            off_circle.push_back(z);
        }
    }
    if (!on_circle.empty()) {
        ex.process(on_circle, ex.max_mult);
        for (const auto& r : ex.found)
            for (int i = 0; i < r.multiplicity; ++i)
                out.push_back(std::polar(1.0, r.point.angle));
        // Window strays with no on-circle reading are ordinary complex roots;
        // restore their unprojected eigenvalues.
        for (double t : ex.rejected) {
            size_t best = 0;
            double best_d = std::numeric_limits<double>::infinity();
            for (size_t i = 0; i < window_originals.size(); ++i) {
                const double d = circular_distance(window_originals[i].first, t);
                if (d < best_d) {
                    best_d = d;
                    best = i;
                }
            }
            off_circle.push_back(window_originals[best].second);
            window_originals.erase(window_originals.begin() + best);
        }
    }

    // Off-circle roots: cluster by proximity, polish with complex Newton on
    // the (mu-1)-th derivative of the lifted polynomial.
    ComplexPoly p;
    p.coeffs = coeffs;
    std::vector<bool> used(off_circle.size(), false);
    for (size_t i = 0; i < off_circle.size(); ++i) {
        if (used[i]) continue;
        std::vector<size_t> cluster{i};
        used[i] = true;
        const double rad = std::pow(opt.cluster_tol, 0.5);
        for (size_t j = i + 1; j < off_circle.size(); ++j)
            if (!used[j] && std::abs(off_circle[j] - off_circle[i]) <= rad) {
                cluster.push_back(j);
                used[j] = true;
            }
        const int mu = static_cast<int>(cluster.size());
        cplx z0 = 0.0;
        for (size_t j : cluster) z0 += off_circle[j];
        z0 /= static_cast<double>(mu);
        ComplexPoly g = p;
        for (int r = 0; r < mu - 1; ++r) g = g.derivative();
        ComplexPoly gd = g.derivative();
        const double guard = (mu == 1) ? rad : 10.0 * rad;
        cplx z = z0;
        for (int it = 0; it < 60; ++it) {
            const cplx gv = g.eval(z);
            const cplx dv = gd.eval(z);
            if (dv == cplx(0.0)) break;
            const cplx step = gv / dv;
            if (!std::isfinite(std::abs(step))) {
                z = z0;
                break;
            }
            z -= step;
            if (std::abs(z - z0) > guard) {
                z = z0;  // basin hop onto a different root; keep the eigenvalue
                break;
            }
            if (std::abs(step) < 1e-15) break;
        }
        for (int r = 0; r < mu; ++r) out.push_back(z);
    }
    return out;
}

}  // namespace smc
