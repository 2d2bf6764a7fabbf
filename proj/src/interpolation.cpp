#include "smc/interpolation.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace smc {

RootSpec::RootSpec(int k_, std::vector<std::pair<CirclePoint, int>> roots_)
    : k(k_), roots(std::move(roots_)) {
    if (k < 1) throw InvalidInput("RootSpec: k must be positive");
    for (const auto& [p, m] : roots)
        if (m < 1) throw InvalidInput("RootSpec: multiplicities must be positive");
    for (size_t i = 0; i < roots.size(); ++i)
        for (size_t j = i + 1; j < roots.size(); ++j)
            if (circular_distance(roots[i].first, roots[j].first) <= 1e-9)
                throw InvalidInput("RootSpec: points must be pairwise distinct");
    if (total_multiplicity() != 2 * k)
        throw InvalidInput("RootSpec: multiplicities must sum to 2k");
    std::vector<CirclePoint> pts;
    for (const auto& [p, m] : roots) pts.push_back(p);
    if (!fits_open_semicircle(pts))
        throw InvalidInput("RootSpec: points must lie in one open semicircle");
}

int RootSpec::total_multiplicity() const {
    int t = 0;
    for (const auto& [p, m] : roots) t += m;
    return t;
}

RootSpec RootSpec::shifted(double a) const {
    RootSpec s;
    s.k = k;
    for (const auto& [p, m] : roots) s.roots.emplace_back(CirclePoint(p.angle + a), m);
    return s;
}

bool fits_open_semicircle(const std::vector<CirclePoint>& pts) {
    if (pts.size() <= 1) return true;
    std::vector<double> a;
    a.reserve(pts.size());
    for (const auto& p : pts) a.push_back(p.angle);
    std::sort(a.begin(), a.end());
    // the multiset fits an open semicircle iff some circular gap exceeds pi
    double maxgap = a.front() + kTwoPi - a.back();
    for (size_t i = 1; i < a.size(); ++i) maxgap = std::max(maxgap, a[i] - a[i - 1]);
    return maxgap > std::numbers::pi;
}

std::string to_string(FaceStatus s) {
    switch (s) {
        case FaceStatus::FACE: return "FACE";
        case FaceStatus::NOT_FACE: return "NOT_FACE";
        default: return "UNKNOWN";
    }
}

RakedTrigPoly interpolate(const RootSpec& spec) {
    const int k = spec.k;
    const int n = 2 * k;
    Eigen::MatrixXd A(n, n);
    Eigen::VectorXd rhs(n);
    int row = 0;
    for (const auto& [p, m] : spec.roots) {
        for (int r = 0; r < m; ++r, ++row) {
            const double phase = r * std::numbers::pi / 2.0;
            for (int j = 0; j < k; ++j) {
                const double h = 2.0 * j + 1.0;
                const double s = std::pow(h, r);
                A(row, j) = s * std::cos(h * p.angle + phase);
                A(row, k + j) = s * std::sin(h * p.angle + phase);
            }
            rhs(row) = (r == 0) ? -1.0 : 0.0;
        }
    }
    // Row equilibration keeps high-order derivative rows from dominating.
    for (int i = 0; i < n; ++i) {
        const double s = A.row(i).cwiseAbs().maxCoeff();
        if (s > 0.0) {
            A.row(i) /= s;
            rhs(i) /= s;
        }
    }
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
    // rcond() is nan for exactly singular input; reject anything not clearly
    // above threshold
    if (!(lu.rcond() > 1e-13))
        throw SingularSystem("interpolate: tangency system numerically singular");
    Eigen::VectorXd x = lu.solve(rhs);
    if (!((A * x - rhs).cwiseAbs().maxCoeff() <= 1e-6))
        throw SingularSystem("interpolate: tangency system unsolved to tolerance");
    std::vector<double> a(x.data(), x.data() + k);
    std::vector<double> b(x.data() + k, x.data() + n);
    return RakedTrigPoly(k, 1.0, std::move(a), std::move(b));
}

double positivity_margin(const RakedTrigPoly& f, const std::vector<CirclePoint>& excluded,
                         double radius, const RootOptions& opt) {
    if (sup_norm(f) <= opt.residual_tol)
        throw ZeroPolynomial("positivity_margin: polynomial is numerically zero");
    auto in_excluded_ball = [&](double t) {
        for (const auto& p : excluded)
            if (circular_distance(t, p.angle) < radius) return true;
        return false;
    };

    const RakedTrigPoly fp = derivative(f, 1);
    std::vector<double> candidates;
    if (fp.coeff_norm() <= opt.residual_tol) {
        // constant polynomial; any allowed point will do
        candidates.push_back(excluded.empty() ? 0.0
                                              : canonical_angle(excluded.front().angle + radius));
    } else {
        for (const auto& r : circle_roots(fp, opt))
            if (!in_excluded_ball(r.point.angle)) candidates.push_back(r.point.angle);
    }
    for (const auto& p : excluded) {
        for (double s : {radius, -radius}) {
            const double t = canonical_angle(p.angle + s);
            if (!in_excluded_ball(t)) candidates.push_back(t);
        }
    }
    if (candidates.empty())
        throw InvalidInput("positivity_margin: exclusion balls cover the whole circle");
    double best = eval(f, candidates.front());
    for (double t : candidates) best = std::min(best, eval(f, t));
    return best;
}

namespace {

/// Aux double roots at interior positions of the gaps between consecutive
/// points, largest gaps first, so that the padded spec reaches 2k.
RootSpec padded_spec(int k, std::vector<double> angles) {
    const int n = static_cast<int>(angles.size());
    std::vector<std::pair<CirclePoint, int>> roots;
    if (n == 1) {
        roots.emplace_back(CirclePoint(angles[0]), 2 * k);
        return RootSpec(k, std::move(roots));
    }
    // order along the spanning arc: rotate the sorted list at the largest gap
    std::sort(angles.begin(), angles.end());
    int cut = 0;
    double maxgap = angles.front() + kTwoPi - angles.back();
    for (int i = 1; i < n; ++i) {
        const double g = angles[i] - angles[i - 1];
        if (g > maxgap) {
            maxgap = g;
            cut = i;
        }
    }
    std::rotate(angles.begin(), angles.begin() + cut, angles.end());

    int aux_left = k - n;
    std::vector<int> per_gap(n - 1, 0);
    // round-robin over gaps by decreasing length
    std::vector<int> order(n - 1);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        const double gx = canonical_angle(angles[x + 1] - angles[x]);
        const double gy = canonical_angle(angles[y + 1] - angles[y]);
        return gx > gy;
    });
    while (aux_left > 0)
        for (int g : order) {
            if (aux_left == 0) break;
            ++per_gap[g];
            --aux_left;
        }

    for (double t : angles) roots.emplace_back(CirclePoint(t), 2);
    for (int g = 0; g < n - 1; ++g) {
        const double len = canonical_angle(angles[g + 1] - angles[g]);
        for (int i = 1; i <= per_gap[g]; ++i)
            roots.emplace_back(CirclePoint(angles[g] + len * i / (per_gap[g] + 1)), 2);
    }
    return RootSpec(k, std::move(roots));
}

/// Certificate attempt for points outside any open semicircle: look for a
/// raked polynomial vanishing to order >= 2 at every point in the nullspace
/// of the tangency conditions.
FaceVerdict nonsemicircle_certificate(int k, const std::vector<CirclePoint>& pts,
                                      const FaceOptions& opt) {
    const int n = static_cast<int>(pts.size());
    Eigen::MatrixXd A(2 * n, 2 * k + 1);
    for (int i = 0; i < n; ++i) {
        for (int r = 0; r < 2; ++r) {
            const double phase = r * std::numbers::pi / 2.0;
            A(2 * i + r, 0) = (r == 0) ? 1.0 : 0.0;
            for (int j = 0; j < k; ++j) {
                const double h = 2.0 * j + 1.0;
                const double s = std::pow(h, r);
                A(2 * i + r, 1 + j) = s * std::cos(h * pts[i].angle + phase);
                A(2 * i + r, 1 + k + j) = s * std::sin(h * pts[i].angle + phase);
            }
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) > 1e-10 * sv(0)) return {FaceStatus::UNKNOWN, {}, {}};
    Eigen::VectorXd v = svd.matrixV().col(2 * k);
    if (std::abs(v(0)) < 1e-8) return {FaceStatus::UNKNOWN, {}, {}};  // certificate needs c != 0
    v /= v(0);
    std::vector<double> a(v.data() + 1, v.data() + 1 + k);
    std::vector<double> b(v.data() + 1 + k, v.data() + 1 + 2 * k);
    RakedTrigPoly f(k, 1.0, std::move(a), std::move(b));

    const double margin = positivity_margin(f, pts, opt.exclusion_radius, opt.roots);
    if (margin <= opt.pos_tol) return {FaceStatus::UNKNOWN, {}, {}};
    // verify the roots are exactly the given points, even multiplicities
    std::vector<CircleRoot> roots;
    try {
        roots = circle_roots(f, opt.roots);
    } catch (const Error&) {
        return {FaceStatus::UNKNOWN, {}, {}};
    }
    std::vector<std::pair<CirclePoint, int>> spec_roots;
    for (const auto& r : roots) {
        if (r.multiplicity % 2 != 0) return {FaceStatus::UNKNOWN, {}, {}};
        bool matched = false;
        for (const auto& p : pts)
            if (circular_distance(r.point, p) < 1e-6) matched = true;
        if (!matched) return {FaceStatus::UNKNOWN, {}, {}};
        spec_roots.emplace_back(r.point, r.multiplicity);
    }
    if (spec_roots.size() != pts.size()) return {FaceStatus::UNKNOWN, {}, {}};
    FaceCertificate cert;
    cert.poly = f;
    cert.spec.k = k;
    cert.spec.roots = std::move(spec_roots);
    cert.margin = margin;
    return {FaceStatus::FACE, cert, {}};
}

/// Exact certificate test for vanishing margins: f is a certificate iff its
/// circle roots are exactly the spec roots (even multiplicities, nothing
/// else), since a sign change would require additional roots.
bool roots_match_spec(const RakedTrigPoly& f, const RootSpec& spec, const RootOptions& opt) {
    std::vector<CircleRoot> roots;
    try {
        roots = circle_roots(f, opt);
    } catch (const Error&) {
        return false;
    }
    if (roots.size() != spec.roots.size()) return false;
    int total = 0;
    for (const auto& r : roots) {
        if (r.multiplicity % 2 != 0) return false;
        bool matched = false;
        for (const auto& [p, m] : spec.roots)
            if (circular_distance(r.point, p) < 1e-6 && r.multiplicity == m) matched = true;
        if (!matched) return false;
        total += r.multiplicity;
    }
    return total == spec.total_multiplicity();
}

CirclePoint margin_witness(const RakedTrigPoly& f, const std::vector<CirclePoint>& excluded,
                           double radius, const RootOptions& opt) {
    // the minimizing candidate of the margin computation
    const RakedTrigPoly fp = derivative(f, 1);
    double best_t = canonical_angle(excluded.empty() ? 0.0 : excluded.front().angle + radius);
    double best_v = eval(f, best_t);
    auto consider = [&](double t) {
        for (const auto& p : excluded)
            if (circular_distance(t, p.angle) < radius) return;
        const double v = eval(f, t);
        if (v < best_v) {
            best_v = v;
            best_t = t;
        }
    };
    if (fp.coeff_norm() > opt.residual_tol)
        for (const auto& r : circle_roots(fp, opt)) consider(r.point.angle);
    for (const auto& p : excluded)
        for (double s : {radius, -radius}) consider(canonical_angle(p.angle + s));
    return CirclePoint(best_t);
}

}  // namespace

FaceVerdict is_face(int k, const std::vector<CirclePoint>& points, const FaceOptions& opt) {
    const int n = static_cast<int>(points.size());
    if (n < 1) throw InvalidInput("is_face: need at least one point");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (circular_distance(points[i], points[j]) <= 1e-9)
                throw InvalidInput("is_face: points must be pairwise distinct");

    const bool semicircle = fits_open_semicircle(points);
    if (!semicircle) return nonsemicircle_certificate(k, points, opt);
    if (n > k)
        throw InvalidInput(
            "is_face: more than k points in an open semicircle cannot span a face");

    double min_sep = kTwoPi;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            min_sep = std::min(min_sep, circular_distance(points[i], points[j]));
    FaceOptions o = opt;
    if (n > 1 && min_sep < 3.0 * opt.exclusion_radius) o.exclusion_radius = min_sep / 3.0;

    std::vector<double> angles;
    for (const auto& p : points) angles.push_back(p.angle);

    RootSpec spec = padded_spec(k, angles);
    RakedTrigPoly f;
    try {
        f = interpolate(spec);
    } catch (const SingularSystem&) {
        // near-antipodal inputs sit on the semicircle boundary where the
        // tangency system degenerates; the certificate cannot decide them
        return {FaceStatus::UNKNOWN, {}, {}};
    }
    std::vector<CirclePoint> excluded;
    for (const auto& [p, m] : spec.roots) excluded.push_back(p);
    // padded aux roots may sit closer to the inputs than the inputs do to
    // each other; shrink the exclusion radius accordingly
    double spec_sep = kTwoPi;
    for (size_t i = 0; i < excluded.size(); ++i)
        for (size_t j = i + 1; j < excluded.size(); ++j)
            spec_sep = std::min(spec_sep, circular_distance(excluded[i], excluded[j]));
    if (excluded.size() > 1 && spec_sep < 3.0 * o.exclusion_radius)
        o.exclusion_radius = spec_sep / 3.0;

    const double margin = positivity_margin(f, excluded, o.exclusion_radius, o.roots);
    if (margin > o.pos_tol) {
        FaceCertificate cert{f, spec, margin};
        return {FaceStatus::FACE, cert, {}};
    }
    if (n == k && margin < -o.pos_tol) {
        return {FaceStatus::NOT_FACE, {}, margin_witness(f, excluded, o.exclusion_radius, o.roots)};
    }
    // High multiplicities flatten the certificate near its roots, which can
    // push a genuinely positive margin below pos_tol; an exact root-multiset
    // match still decides the certificate.
    if (margin >= 0.0 && roots_match_spec(f, spec, o.roots)) {
        FaceCertificate cert{f, spec, margin};
        return {FaceStatus::FACE, cert, {}};
    }
    return {FaceStatus::UNKNOWN, {}, {}};
}

RakedTrigPoly family_velocity(const RootSpec& spec, int moving_index, CirclePoint s, double step) {
    if (moving_index < 0 || moving_index >= static_cast<int>(spec.roots.size()))
        throw InvalidInput("family_velocity: moving_index out of range");
    auto at = [&](double t) {
        RootSpec moved = spec;
        moved.roots[moving_index].first = CirclePoint(t);
        return interpolate(RootSpec(moved.k, moved.roots));  // revalidate
    };
    const RakedTrigPoly fp = at(s.angle + step);
    const RakedTrigPoly fm = at(s.angle - step);
    RakedTrigPoly g = fp;
    g.c = 0.0;
    for (int j = 0; j < g.k; ++j) {
        g.a[j] = (fp.a[j] - fm.a[j]) / (2.0 * step);
        g.b[j] = (fp.b[j] - fm.b[j]) / (2.0 * step);
    }
    return g;
}

}  // namespace smc
