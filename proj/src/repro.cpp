#include "smc/repro.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>

#include "smc/deformation.hpp"
#include "smc/rng.hpp"

namespace smc {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

double golden_or(const json& golden, const char* key, double fallback) {
    if (golden.contains(key)) return golden.at(key).get<double>();
    return fallback;
}

/// Random spec in an open semicircle with separated points.
RootSpec random_spec(Rng& rng, int k) {
    std::vector<int> mults;
    int remaining = 2 * k;
    while (remaining > 0) {
        const int m = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(remaining)));
        mults.push_back(m);
        remaining -= m;
    }
    const int n = static_cast<int>(mults.size());
    const double span = kPi - 0.3;
    std::vector<double> pts;
    for (int attempt = 0; attempt < 1000; ++attempt) {
        pts.clear();
        for (int i = 0; i < n; ++i) pts.push_back(rng.uniform(0.0, span));
        std::sort(pts.begin(), pts.end());
        bool ok = true;
        for (int i = 1; i < n; ++i)
            if (pts[i] - pts[i - 1] < 0.1) ok = false;
        if (ok) break;
    }
    const double base = rng.angle();
    std::vector<std::pair<CirclePoint, int>> roots;
    for (int i = 0; i < n; ++i) roots.emplace_back(CirclePoint(base + pts[i]), mults[i]);
    return RootSpec(k, std::move(roots));
}

RakedTrigPoly random_poly(Rng& rng, int k, bool zero_constant) {
    std::vector<double> a(k), b(k);
    for (int j = 0; j < k; ++j) {
        a[j] = rng.normal();
        b[j] = rng.normal();
    }
    return RakedTrigPoly(k, zero_constant ? 0.0 : rng.normal(), std::move(a), std::move(b));
}

/// Largest total multiplicity of roots confined to one open semicircle.
int max_semicircle_multiplicity(const std::vector<CircleRoot>& roots) {
    const int n = static_cast<int>(roots.size());
    if (n == 0) return 0;
    std::vector<std::pair<double, int>> rs;
    for (const auto& r : roots) rs.emplace_back(r.point.angle, r.multiplicity);
    std::sort(rs.begin(), rs.end());
    int best = 0;
    for (int i = 0; i < n; ++i) {
        int total = 0;
        for (int j = 0; j < n; ++j) {
            const double off = canonical_angle(rs[(i + j) % n].first - rs[i].first);
            if (j > 0 && off >= kPi - 1e-12) break;
            total += rs[(i + j) % n].second;
        }
        best = std::max(best, total);
    }
    return best;
}

/// Sum of multiplicities over a maximal antipodal-free subset of the roots.
int antipodal_free_multiplicity(const std::vector<CircleRoot>& roots) {
    const int n = static_cast<int>(roots.size());
    std::vector<bool> skip(n, false);
    int total = 0;
    for (int i = 0; i < n; ++i) {
        if (skip[i]) continue;
        int keep = roots[i].multiplicity;
        for (int j = i + 1; j < n; ++j) {
            if (skip[j]) continue;
            if (circular_distance(roots[i].point.antipode(), roots[j].point) < 1e-6) {
                keep = std::max(keep, roots[j].multiplicity);
                skip[j] = true;
            }
        }
        total += keep;
    }
    return total;
}

struct Check {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (detail.tellp() > 0) detail << "; ";
            detail << what;
        }
    }
};

CriterionResult criterion_phi(int id, int k, double expected, Split expected_split, double thr,
                              bool check_runtime) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto [value, split] = phi(k, 1e-10);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Check c;
    c.require(std::abs(value - expected) < thr,
              "phi_" + std::to_string(k) + "=" + fmt(value) + " vs " + fmt(expected));
    c.require(split == expected_split, "split (" + std::to_string(split.m_a) + "," +
                                           std::to_string(split.m_b) + ")");
    if (check_runtime) c.require(elapsed < 1.0, "runtime " + fmt(elapsed) + "s");
    std::string detail = "phi_" + std::to_string(k) + "=" + fmt(value) + ", expected " +
                         fmt(expected) + ", dev=" + fmt(std::abs(value - expected));
    if (!c.pass) detail += " [" + c.detail.str() + "]";
    return {id, "phi_" + std::to_string(k) + " reproduction", c.pass, detail};
}

}  // namespace

double golden_phi(int k) {
    switch (k) {
        case 2: return 2.0 * kPi / 3.0;
        case 3: return kPi - std::acos((3.0 - std::sqrt(5.0)) / 2.0);
        case 4: {
            const double r = std::cbrt(91.0 + 336.0 * std::sqrt(15.0));
            return 2.0 * std::acos(-r / 48.0 + 119.0 / (48.0 * r) + 29.0 / 48.0);
        }
        default: throw InvalidInput("golden_phi: no closed form pinned for this k");
    }
}

std::vector<CriterionResult> run_acceptance(const ReproOptions& opt) {
    std::vector<CriterionResult> out;
    const auto thr = [&](double pinned) { return std::max(pinned, opt.tol); };

    // 1..3: phi reproduction for k = 2, 3, 4
    out.push_back(criterion_phi(1, 2, golden_or(opt.golden, "phi_2", golden_phi(2)), Split(2, 2),
                                thr(1e-8), true));
    out.push_back(criterion_phi(2, 3, golden_or(opt.golden, "phi_3", golden_phi(3)), Split(2, 4),
                                thr(1e-8), false));
    {
        CriterionResult r = criterion_phi(3, 4, golden_or(opt.golden, "phi_4", golden_phi(4)),
                                          Split(4, 4), thr(1e-8), false);
        const double phi4 = phi(4, 1e-10).first;
        const double l26 = critical_length(4, Split(2, 6), 1e-10).length;
        if (!(l26 > phi4)) {
            r.pass = false;
            r.detail += " [split (2,6) length " + fmt(l26) + " not above phi_4]";
        } else {
            r.detail += ", L*(2,6)=" + fmt(l26);
        }
        out.push_back(r);
    }

    // 4: conjecture consistency
    {
        Check c;
        const double a2 = alpha_conjecture(2, 1e-12);
        const double a4 = alpha_conjecture(4, 1e-12);
        const double p2 = phi(2, 1e-10).first;
        const double p4 = phi(4, 1e-10).first;
        const double alpha2_ref = golden_or(opt.golden, "alpha_2", kPi / 3.0);
        c.require(std::abs(2 * a2 - p2) < thr(1e-7), "|2a_2-phi_2|=" + fmt(std::abs(2 * a2 - p2)));
        c.require(std::abs(2 * a4 - p4) < thr(1e-7), "|2a_4-phi_4|=" + fmt(std::abs(2 * a4 - p4)));
        c.require(std::abs(a2 - alpha2_ref) < thr(1e-10), "alpha_2=" + fmt(a2));
        std::string detail = "2a_2=" + fmt(2 * a2) + ", 2a_4=" + fmt(2 * a4) +
                             ", dev=(" + fmt(std::abs(2 * a2 - p2)) + ", " +
                             fmt(std::abs(2 * a4 - p4)) + ")";
        if (!c.pass) detail += " [" + c.detail.str() + "]";
        out.push_back({4, "conjecture consistency (k=2,4)", c.pass, detail});
    }

    // 5: deformation golden case
    {
        Check c;
        RakedTrigPoly f(3, 1.0, {0.0, 0.0, -1.0}, {0.0, 0.0, 0.0});
        const double lambda = 1.0 / std::cos(kPi / 5.0);
        const double alpha = std::acos((3.0 - std::sqrt(5.0)) / 2.0);
        try {
            const RakedTrigPoly g = lambda_deform(f, lambda);
            const auto roots = circle_roots(g);
            c.require(roots.size() == 3, "expected 3 root clusters, got " +
                                             std::to_string(roots.size()));
            double worst = 0.0;
            const std::vector<std::pair<double, int>> expect{
                {alpha, 2}, {kPi, 4}, {kTwoPi - alpha, 2}};
            for (const auto& [angle, mult] : expect) {
                bool matched = false;
                for (const auto& r : roots) {
                    const double d = circular_distance(r.point.angle, angle);
                    if (d < 1e-4) {
                        matched = true;
                        worst = std::max(worst, d);
                        c.require(r.multiplicity == mult,
                                  "multiplicity at " + fmt(angle) + " is " +
                                      std::to_string(r.multiplicity) + " not " +
                                      std::to_string(mult));
                    }
                }
                c.require(matched, "no root near " + fmt(angle));
            }
            c.require(worst < thr(1e-8), "angle error " + fmt(worst));
            std::string detail = "max angle error " + fmt(worst);
            if (!c.pass) detail += " [" + c.detail.str() + "]";
            out.push_back({5, "lambda-deformation golden case", c.pass, detail});
        } catch (const Error& e) {
            out.push_back({5, "lambda-deformation golden case", false, e.what()});
        }
    }

    // 6: beta_k suite, k = 2..30
    {
        Check c;
        std::vector<double> betas;
        for (int k = 2; k <= 30; ++k) betas.push_back(beta_root(k, 1e-12));
        for (int k = 2; k <= 30; ++k) {
            const double b = betas[k - 2];
            c.require(b > kPi / 2 && b < kPi, "beta_" + std::to_string(k) + " outside (pi/2,pi)");
            const double bound = (2.0 * k - 2.0) / (2.0 * k - 1.0);
            c.require(std::sin(b) * std::sin(b) > bound,
                      "sin^2 beta_" + std::to_string(k) + " below bound");
        }
        for (size_t i = 1; i < betas.size(); ++i)
            c.require(betas[i] < betas[i - 1], "beta not strictly decreasing at k=" +
                                                   std::to_string(i + 2));
        c.require(betas.back() - kPi / 2 < betas.front() - kPi / 2, "no trend toward pi/2");
        std::string detail = "beta_2=" + fmt(betas.front()) + ", beta_30=" + fmt(betas.back());
        if (!c.pass) detail += " [" + c.detail.str() + "]";
        out.push_back({6, "beta_k suite (k=2..30)", c.pass, detail});
    }

    // 7: Lemma 6.2 margins at L = pi/2
    {
        Check c;
        double min_margin = std::numeric_limits<double>::infinity();
        for (int k = 2; k <= 6; ++k) {
            const auto rep = semicircle_check(k);
            min_margin = std::min(min_margin, rep.min_margin);
            c.require(rep.min_margin > 0.0, "margin <= 0 at k=" + std::to_string(k));
        }
        std::string detail = "min margin " + fmt(min_margin);
        if (!c.pass) detail += " [" + c.detail.str() + "]";
        out.push_back({7, "quarter-arc margins (k=2..6)", c.pass, detail});
    }

    // 8: interpolation property suite
    {
        Check c;
        Rng rng(opt.seed ^ 0x8ULL);
        double worst_resid = 0.0, worst_shift = 0.0;
        for (int k : {2, 3, 4, 5}) {
            for (int trial = 0; trial < 200 && c.pass; ++trial) {
                const RootSpec spec = random_spec(rng, k);
                const RakedTrigPoly f = interpolate(spec);
                c.require(f.c == 1.0, "constant term not exactly 1");
                const double scale = sup_norm(f);
                for (const auto& [p, m] : spec.roots)
                    for (int r = 0; r < m; ++r) {
                        const double resid = std::abs(eval(f, p, r));
                        worst_resid = std::max(worst_resid, resid / scale);
                        c.require(resid < thr(1e-9) * scale,
                                  "residual " + fmt(resid) + " at k=" + std::to_string(k));
                    }
                const auto roots = circle_roots(f);
                for (const auto& [p, m] : spec.roots) {
                    bool matched = false;
                    for (const auto& r : roots)
                        if (circular_distance(r.point, p) < 1e-6) {
                            matched = (r.multiplicity == m);
                        }
                    c.require(matched, "multiplicity not recovered exactly (k=" +
                                           std::to_string(k) + ", trial " +
                                           std::to_string(trial) + ")");
                }
                const double a = rng.angle();
                const RakedTrigPoly g = interpolate(spec.shifted(a));
                for (int i = 0; i < 32; ++i) {
                    const double t = kTwoPi * i / 32;
                    const double d = std::abs(eval(g, t) - eval(f, t - a));
                    worst_shift = std::max(worst_shift, d);
                    c.require(d < thr(1e-9) * std::max(1.0, scale), "shift equivariance " + fmt(d));
                }
            }
        }
        std::string detail =
            "worst residual " + fmt(worst_resid) + ", worst shift dev " + fmt(worst_shift);
        if (!c.pass) detail += " [" + c.detail.str() + "]";
        out.push_back({8, "interpolation property suite", c.pass, detail});
    }

    // 9: Theorem 3.1 property suite
    {
        Check c;
        Rng rng(opt.seed ^ 0x9ULL);
        int polys_checked = 0;
        for (int k : {2, 3, 4}) {
            for (int trial = 0; trial < 500 && c.pass; ++trial) {
                const bool zero_c = (trial % 2 == 1);
                const RakedTrigPoly f = random_poly(rng, k, zero_c);
                std::vector<CircleRoot> roots;
                try {
                    roots = circle_roots(f);
                } catch (const ZeroPolynomial&) {
                    continue;
                }
                ++polys_checked;
                int total = 0;
                for (const auto& r : roots) total += r.multiplicity;
                c.require(total <= 4 * k - 2, "total multiplicity " + std::to_string(total) +
                                                  " exceeds 4k-2 at k=" + std::to_string(k));
                c.require(max_semicircle_multiplicity(roots) <= 2 * k,
                          "semicircle multiplicity above 2k at k=" + std::to_string(k));
                if (zero_c)
                    c.require(antipodal_free_multiplicity(roots) <= 2 * k - 1,
                              "antipodal-free multiplicity above 2k-1 at k=" + std::to_string(k));
            }
        }
        std::string detail = std::to_string(polys_checked) + " random polynomials within bounds";
        if (!c.pass) detail += " [" + c.detail.str() + "]";
        out.push_back({9, "root-count bounds property suite", c.pass, detail});
    }

    // 10: oracle equivalence
    {
        Check c;
        Rng rng(opt.seed ^ 0x10ULL);
        int decided = 0, undecided = 0;
        for (int k : {2, 3}) {
            FaceOptions fo;
            fo.pos_tol = 1e-6;
            for (int trial = 0; trial < 200 && c.pass; ++trial) {
                const int nconf = 12;
                const double span = rng.uniform(1.0, kPi - 0.05);
                std::vector<double> conf;
                for (int attempt = 0; attempt < 1000; ++attempt) {
                    conf.clear();
                    for (int i = 0; i < nconf; ++i) conf.push_back(rng.uniform(0.0, span));
                    std::sort(conf.begin(), conf.end());
                    bool ok = true;
                    for (int i = 1; i < nconf; ++i)
                        if (conf[i] - conf[i - 1] < 0.05) ok = false;
                    if (ok) break;
                }
                const double base = rng.angle();
                std::vector<CirclePoint> config;
                for (double t : conf) config.emplace_back(base + t);
                // draw k distinct indices
                std::vector<int> idx;
                while (static_cast<int>(idx.size()) < k) {
                    const int i = static_cast<int>(rng.below(nconf));
                    if (std::find(idx.begin(), idx.end(), i) == idx.end()) idx.push_back(i);
                }
                std::vector<CirclePoint> subset;
                std::vector<CirclePoint> context;
                for (int i = 0; i < nconf; ++i) {
                    if (std::find(idx.begin(), idx.end(), i) != idx.end())
                        subset.push_back(config[i]);
                    else
                        context.push_back(config[i]);
                }
                const FaceVerdict v = is_face(k, subset, fo);
                if (v.status == FaceStatus::UNKNOWN) {
                    ++undecided;
                    continue;
                }
                ++decided;
                std::vector<CirclePoint> probes;
                if (v.witness) probes.push_back(*v.witness);
                const bool oracle = curve_face_oracle(k, subset, context, probes);
                c.require(oracle == (v.status == FaceStatus::FACE),
                          "oracle disagrees at k=" + std::to_string(k) + ", trial " +
                              std::to_string(trial));
            }
        }
        std::string detail = std::to_string(decided) + " decided instances agree, " +
                             std::to_string(undecided) + " undecided";
        if (!c.pass) detail += " [" + c.detail.str() + "]";
        out.push_back({10, "certificate/LP oracle equivalence", c.pass, detail});
    }

    // 11: edge characterization around the exact thresholds
    {
        Check c;
        for (int k : {2, 3}) {
            const double threshold = (2.0 * k - 2.0) / (2.0 * k - 1.0) * kPi;
            for (double delta : {0.05, 0.01}) {
                for (int i = 0; i < 8; ++i) {
                    const double base = kTwoPi * i / 8 + 0.1;
                    c.require(edge_check(k, CirclePoint(base), CirclePoint(base + threshold - delta)),
                              "edge expected below threshold (k=" + std::to_string(k) + ")");
                    c.require(!edge_check(k, CirclePoint(base), CirclePoint(base + threshold + delta)),
                              "non-edge expected above threshold (k=" + std::to_string(k) + ")");
                    if (k == 2) {
                        const auto below = is_face(
                            2, {CirclePoint(base), CirclePoint(base + threshold - delta)});
                        const auto above = is_face(
                            2, {CirclePoint(base), CirclePoint(base + threshold + delta)});
                        c.require(below.status == FaceStatus::FACE, "is_face misses edge");
                        c.require(above.status == FaceStatus::NOT_FACE, "is_face misses non-edge");
                    }
                }
            }
        }
        out.push_back({11, "edge characterization thresholds", c.pass,
                       c.pass ? "thresholds classified exactly" : c.detail.str()});
    }

    // 12: polytope bound and uniform edge fraction
    {
        Check c;
        const VertexConfig clustered = clustered_config(2, 5, 0.05);
        const FaceCount fc = count_faces(clustered, 1);
        const std::int64_t bound = 4 * binomial_capped(10, 2, 1 << 20) -
                                   4 * binomial_capped(5, 2, 1 << 20);
        c.require(fc.verified_count >= bound,
                  "verified " + std::to_string(fc.verified_count) + " below bound " +
                      std::to_string(bound));
        Rng rng(opt.seed ^ 0x12ULL);
        VertexConfig uniform;
        uniform.k = 2;
        for (int i = 0; i < 20; ++i) uniform.angles.emplace_back(rng.angle());
        const FaceCount uc = count_faces(uniform, 1);
        const double fraction =
            static_cast<double>(uc.verified_count) / static_cast<double>(uc.total_subsets);
        c.require(std::abs(fraction - 2.0 / 3.0) < thr(0.03),
                  "uniform edge fraction " + fmt(fraction));
        std::string detail = "clustered verified=" + std::to_string(fc.verified_count) +
                             " (bound " + std::to_string(bound) + "), uniform fraction " +
                             fmt(fraction);
        if (!c.pass) detail += " [" + c.detail.str() + "]";
        out.push_back({12, "polytope face-count bounds", c.pass, detail});
    }

    // 13: non-vanishing family velocity
    {
        Check c;
        const RootSpec spec(3, {{CirclePoint(0.4), 2}, {CirclePoint(0.9), 2}, {CirclePoint(1.4), 2}});
        double min_ratio = std::numeric_limits<double>::infinity();
        for (int i = 0; i < 32; ++i) {
            const double s = 0.05 + (0.30 - 0.05) * i / 31.0;
            const RakedTrigPoly g = family_velocity(spec, 0, CirclePoint(s));
            RootSpec moved = spec;
            moved.roots[0].first = CirclePoint(s);
            const RakedTrigPoly f = interpolate(RootSpec(moved.k, moved.roots));
            const double ratio = g.coeff_norm() / std::max(1.0, f.coeff_norm());
            min_ratio = std::min(min_ratio, ratio);
        }
        c.require(min_ratio > thr(1e-3), "velocity ratio " + fmt(min_ratio));
        std::string detail = "min |g_s|/scale = " + fmt(min_ratio);
        if (!c.pass) detail += " [" + c.detail.str() + "]";
        out.push_back({13, "non-vanishing family velocity", c.pass, detail});
    }

    // 14: Example 1.4 walk
    {
        Check c;
        const double limit = 2.0 * kPi / 5.0;
        int faces = 0;
        for (int i = 1; i <= 10; ++i)
            for (int j = 1; j <= 10; ++j) {
                const double t1 = limit * i / 11.0;
                const double t3 = -limit * j / 11.0;
                const auto v = is_face(3, {CirclePoint(t1), CirclePoint(0.0), CirclePoint(t3)});
                if (v.status == FaceStatus::FACE) ++faces;
            }
        c.require(faces == 100, std::to_string(faces) + "/100 grid configurations verified");
        out.push_back({14, "three-point face walk", c.pass,
                       std::to_string(faces) + "/100 grid configurations are faces"});
    }

    return out;
}

std::string format_report(const std::vector<CriterionResult>& results) {
    std::ostringstream os;
    for (const auto& r : results)
        os << (r.pass ? "[PASS] " : "[FAIL] ") << "criterion " << r.id << ": " << r.name << " — "
           << r.detail << "\n";
    int passed = 0;
    for (const auto& r : results) passed += r.pass;
    os << passed << "/" << results.size() << " criteria passed\n";
    return os.str();
}

}  // namespace smc
