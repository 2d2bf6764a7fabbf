#include "smc/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "smc/critical_arc.hpp"
#include "smc/simplex.hpp"

namespace smc {

CurvePoint embed(int k, CirclePoint t) {
    CurvePoint p;
    p.t = t;
    p.coords.reserve(2 * k);
    for (int j = 0; j < k; ++j) {
        const double n = 2.0 * j + 1.0;
        p.coords.push_back(std::cos(n * t.angle));
        p.coords.push_back(std::sin(n * t.angle));
    }
    return p;
}

namespace {

double phi_cached(int k) {
    static std::map<int, double> cache;
    static std::mutex mu;
    std::lock_guard lock(mu);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    const double v = phi(k, 1e-9).first;
    cache.emplace(k, v);
    return v;
}

}  // namespace

VertexConfig clustered_config(int k, int m, double spread) {
    if (m < 1) throw InvalidInput("clustered_config: m must be positive");
    if (spread < 0.0) throw InvalidInput("clustered_config: spread must be nonnegative");
    const double threshold = phi_cached(k);
    // extreme points of adjacent clusters are pi/2 + spread apart
    if (std::numbers::pi / 2 + spread >= threshold)
        throw SpreadTooLarge("clustered_config: pi/2 + spread reaches phi_k");
    if (m > 1 && spread == 0.0)
        throw InvalidInput("clustered_config: m > 1 needs positive spread");
    VertexConfig config;
    config.k = k;
    config.symmetric = true;
    for (int j = 0; j < 4; ++j) {
        const double center = j * std::numbers::pi / 2;
        for (int i = 0; i < m; ++i) {
            const double off =
                (m == 1) ? 0.0 : -spread / 2 + spread * i / (m - 1);
            config.angles.emplace_back(center + off);
        }
    }
    return config;
}

FaceCount count_faces(const VertexConfig& config, int face_dim, const CountOptions& opt) {
    if (face_dim < 0) throw InvalidInput("count_faces: face_dim must be nonnegative");
    const int r = face_dim + 1;
    const int n = static_cast<int>(config.angles.size());
    if (r > config.k)
        throw InvalidInput("count_faces: face_dim + 1 must not exceed k (certificate path)");
    if (r > n) throw InvalidInput("count_faces: subset size exceeds config size");
    const std::int64_t total = binomial_capped(n, r, opt.subset_cap);
    if (total > opt.subset_cap)
        throw CombinatorialExplosion("count_faces: subset count exceeds the cap");

    FaceCount fc;
    fc.dim = face_dim;
    fc.total_subsets = total;
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    std::vector<CirclePoint> pts(r);
    while (true) {
        for (int i = 0; i < r; ++i) pts[i] = config.angles[idx[i]];
        FaceStatus status;
        try {
            status = is_face(config.k, pts, opt.face).status;
        } catch (const Error&) {
            status = FaceStatus::UNKNOWN;
        }
        switch (status) {
            case FaceStatus::FACE: ++fc.verified_count; break;
            case FaceStatus::NOT_FACE: ++fc.not_face_count; break;
            default: ++fc.unknown_count; break;
        }
        // next combination
        int i = r - 1;
        while (i >= 0 && idx[i] == n - r + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
    return fc;
}

bool lp_face_oracle(const std::vector<std::vector<double>>& points,
                    const std::vector<int>& subset, double box) {
    if (points.empty()) throw InvalidInput("lp_face_oracle: no points");
    const int d = static_cast<int>(points.front().size());
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != d)
            throw InvalidInput("lp_face_oracle: inconsistent point dimensions");
    std::vector<bool> in_subset(points.size(), false);
    for (int i : subset) {
        if (i < 0 || i >= static_cast<int>(points.size()))
            throw InvalidInput("lp_face_oracle: subset index out of range");
        in_subset[static_cast<size_t>(i)] = true;
    }

    double max_coord = 1.0;
    for (const auto& p : points)
        for (double v : p) max_coord = std::max(max_coord, std::abs(v));
    const double delta_box = box * d * max_coord + 1.0;

    // variables: c_1..c_d, delta
    FeasibilityLP lp;
    lp.lo.assign(d, -box);
    lp.hi.assign(d, box);
    lp.lo.push_back(-delta_box);
    lp.hi.push_back(delta_box);
    for (size_t i = 0; i < points.size(); ++i) {
        std::vector<double> row = points[i];
        row.push_back(-1.0);
        if (in_subset[i]) {
            lp.a_eq.push_back(std::move(row));
            lp.b_eq.push_back(0.0);
        } else {
            lp.a_ub.push_back(std::move(row));
            lp.b_ub.push_back(-1.0);
        }
    }
    return lp_feasible(lp);
}

bool curve_face_oracle(int k, const std::vector<CirclePoint>& subset,
                       const std::vector<CirclePoint>& context,
                       const std::vector<CirclePoint>& probes, int filler, double box) {
    std::vector<double> angles;
    for (const auto& p : subset) angles.push_back(p.angle);
    const int nsub = static_cast<int>(angles.size());
    auto add_if_clear = [&](double t, double clearance) {
        for (double u : angles)
            if (circular_distance(t, u) < clearance) return;
        angles.push_back(canonical_angle(t));
    };
    for (const auto& p : context) add_if_clear(p.angle, 1e-7);
    for (const auto& p : probes) add_if_clear(p.angle, 1e-7);
    for (const auto& p : subset) {
        add_if_clear(p.angle + 0.01, 1e-7);
        add_if_clear(p.angle - 0.01, 1e-7);
    }
    for (int i = 0; i < filler; ++i) add_if_clear(kTwoPi * i / filler, 0.02);

    std::vector<std::vector<double>> pts;
    pts.reserve(angles.size());
    for (double t : angles) pts.push_back(embed(k, CirclePoint(t)).coords);
    std::vector<int> sub(nsub);
    for (int i = 0; i < nsub; ++i) sub[i] = i;
    return lp_face_oracle(pts, sub, box);
}

bool edge_check(int k, CirclePoint a, CirclePoint b) {
    if (circular_distance(a, b) <= 1e-15)
        throw InvalidInput("edge_check: points must be distinct");
    const double threshold = (2.0 * k - 2.0) / (2.0 * k - 1.0) * std::numbers::pi;
    return circular_distance(a, b) < threshold;
}

std::int64_t binomial_capped(int n, int r, std::int64_t cap) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    std::int64_t v = 1;
    for (int i = 1; i <= r; ++i) {
        // v * (n - r + i) may overflow; divide eagerly and cap
        v = v * (n - r + i) / i;
        if (v > cap) return cap + 1;
    }
    return v;
}

}  // namespace smc
