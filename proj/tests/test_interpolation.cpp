#include <doctest.h>

#include <cmath>

#include "smc/interpolation.hpp"
#include "smc/rng.hpp"

using namespace smc;

namespace {

constexpr double kPi = std::numbers::pi;

RootSpec random_spec(Rng& rng, int k, int parts_cap = 0) {
    std::vector<int> mults;
    int remaining = 2 * k;
    while (remaining > 0) {
        int m = 1 + static_cast<int>(rng.below(remaining));
        if (parts_cap > 0) m = std::min(m, parts_cap);
        mults.push_back(m);
        remaining -= m;
    }
    const int n = static_cast<int>(mults.size());
    std::vector<double> pts;
    for (int attempt = 0; attempt < 1000; ++attempt) {
        pts.clear();
        for (int i = 0; i < n; ++i) pts.push_back(rng.uniform(0.0, kPi - 0.3));
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

}  // namespace

TEST_SUITE_BEGIN("interpolation");

TEST_CASE("spec invariants are enforced") {
    CHECK_THROWS_AS(RootSpec(2, {{CirclePoint(0.0), 2}, {CirclePoint(0.0), 2}}), InvalidInput);
    CHECK_THROWS_AS(RootSpec(2, {{CirclePoint(0.0), 2}, {CirclePoint(1.0), 1}}), InvalidInput);
    CHECK_THROWS_AS(RootSpec(2, {{CirclePoint(0.0), 2}, {CirclePoint(kPi), 2}}), InvalidInput);
    CHECK_THROWS_AS(
        RootSpec(3, {{CirclePoint(0.0), 2}, {CirclePoint(2.0), 2}, {CirclePoint(4.0), 2}}),
        InvalidInput);
}

TEST_CASE("semicircle fitting") {
    CHECK(fits_open_semicircle({CirclePoint(0.1), CirclePoint(1.0), CirclePoint(2.9)}));
    CHECK_FALSE(fits_open_semicircle({CirclePoint(0.0), CirclePoint(kPi)}));
    CHECK_FALSE(fits_open_semicircle(
        {CirclePoint(0.0), CirclePoint(2 * kPi / 3), CirclePoint(4 * kPi / 3)}));
    CHECK(fits_open_semicircle({CirclePoint(6.0), CirclePoint(0.5)}));  // wraps the seam
}

TEST_CASE("interpolation recovers 1 - cos 3t") {
    const RakedTrigPoly f =
        interpolate(RootSpec(2, {{CirclePoint(2 * kPi / 3), 2}, {CirclePoint(4 * kPi / 3), 2}}));
    CHECK(f.c == 1.0);
    CHECK(std::abs(f.a[0]) < 1e-10);
    CHECK(f.a[1] == doctest::Approx(-1.0).epsilon(1e-10));
    CHECK(std::abs(f.b[0]) < 1e-10);
    CHECK(std::abs(f.b[1]) < 1e-10);
}

TEST_CASE("interpolation recovers 1 - cos t at k = 1") {
    const RakedTrigPoly f = interpolate(RootSpec(1, {{CirclePoint(0.0), 2}}));
    CHECK(f.c == 1.0);
    CHECK(f.a[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(std::abs(f.b[0]) < 1e-12);
}

TEST_CASE("random Hermite residuals vanish") {
    Rng rng(101);
    for (int trial = 0; trial < 25; ++trial) {
        const RootSpec spec = random_spec(rng, 3);
        const RakedTrigPoly f = interpolate(spec);
        const double scale = sup_norm(f);
        for (const auto& [p, m] : spec.roots)
            for (int r = 0; r < m; ++r) CHECK(std::abs(eval(f, p, r)) < 1e-9 * scale);
    }
}

TEST_CASE("uniqueness under reordering") {
    const RootSpec s1(3, {{CirclePoint(0.2), 2}, {CirclePoint(1.0), 2}, {CirclePoint(2.0), 2}});
    const RootSpec s2(3, {{CirclePoint(2.0), 2}, {CirclePoint(0.2), 2}, {CirclePoint(1.0), 2}});
    const RakedTrigPoly f = interpolate(s1);
    const RakedTrigPoly g = interpolate(s2);
    for (int j = 0; j < 3; ++j) {
        CHECK(f.a[j] == doctest::Approx(g.a[j]).epsilon(1e-10));
        CHECK(f.b[j] == doctest::Approx(g.b[j]).epsilon(1e-10));
    }
}

TEST_CASE("interpolants attain full degree") {
    Rng rng(103);
    for (int k : {2, 3, 4}) {
        const RakedTrigPoly f = interpolate(random_spec(rng, k));
        CHECK(f.full_degree(1e-9 * f.coeff_norm()));
    }
}

TEST_CASE("exact multiplicities are recovered") {
    Rng rng(107);
    for (int trial = 0; trial < 20; ++trial) {
        const RootSpec spec = random_spec(rng, 4);
        const RakedTrigPoly f = interpolate(spec);
        const auto roots = circle_roots(f);
        for (const auto& [p, m] : spec.roots) {
            bool matched = false;
            for (const auto& r : roots)
                if (circular_distance(r.point, p) < 1e-6) matched = (r.multiplicity == m);
            CHECK(matched);
        }
    }
}

TEST_CASE("extra roots land in the opposite arc") {
    Rng rng(109);
    for (int trial = 0; trial < 20; ++trial) {
        const RootSpec spec = random_spec(rng, 3);
        const RakedTrigPoly f = interpolate(spec);
        double lo = spec.roots.front().first.angle;
        double span = 0.0;
        for (const auto& [p, m] : spec.roots)
            span = std::max(span, arc_offset(lo, p.angle));
        const Arc gamma(CirclePoint(lo), std::max(span, 1e-9));
        for (const auto& r : circle_roots(f)) {
            bool prescribed = false;
            for (const auto& [p, m] : spec.roots)
                if (circular_distance(r.point, p) < 1e-6) prescribed = true;
            if (prescribed) continue;
            const double off = arc_offset(gamma.start.angle + kPi, r.point.angle);
            CHECK(off <= gamma.length + 1e-9);
        }
    }
}

TEST_CASE("shift equivariance") {
    Rng rng(113);
    for (int trial = 0; trial < 10; ++trial) {
        const RootSpec spec = random_spec(rng, 3);
        const double a = rng.angle();
        const RakedTrigPoly f = interpolate(spec);
        const RakedTrigPoly g = interpolate(spec.shifted(a));
        for (int i = 0; i < 32; ++i) {
            const double t = kTwoPi * i / 32;
            CHECK(std::abs(eval(g, t) - eval(f, t - a)) < 1e-10 * std::max(1.0, sup_norm(f)) * 10);
        }
    }
}

TEST_CASE("coefficients vary continuously under small point moves") {
    const RootSpec spec(3, {{CirclePoint(0.3), 2}, {CirclePoint(1.1), 2}, {CirclePoint(1.9), 2}});
    const RakedTrigPoly f0 = interpolate(spec);
    const RakedTrigPoly vel = family_velocity(spec, 1, CirclePoint(1.1));
    RootSpec moved = spec;
    moved.roots[1].first = CirclePoint(1.1 + 1e-6);
    const RakedTrigPoly f1 = interpolate(RootSpec(moved.k, moved.roots));
    const double lipschitz = 2.0 * std::max(1.0, vel.coeff_norm());
    for (int j = 0; j < 3; ++j) {
        CHECK(std::abs(f1.a[j] - f0.a[j]) <= lipschitz * 1e-6);
        CHECK(std::abs(f1.b[j] - f0.b[j]) <= lipschitz * 1e-6);
    }
}

TEST_CASE("antipodal tangency conditions are singular") {
    RootSpec bad;  // bypass the validating constructor
    bad.k = 2;
    bad.roots = {{CirclePoint(0.0), 2}, {CirclePoint(kPi), 2}};
    CHECK_THROWS_AS(interpolate(bad), SingularSystem);
}

TEST_CASE("positivity margins") {
    const RakedTrigPoly f =
        interpolate(RootSpec(2, {{CirclePoint(0.0), 2}, {CirclePoint(2 * kPi / 3), 2}}));
    // f == 1 - cos 3(t - 0) pattern; positive off its three double roots
    const auto roots = circle_roots(f);
    std::vector<CirclePoint> excl;
    for (const auto& r : roots) excl.push_back(r.point);
    CHECK(positivity_margin(f, excl, 0.1) > 0.0);

    const RakedTrigPoly s(1, 0.0, {0.0}, {1.0});  // sin t
    CHECK(positivity_margin(s, {}, 0.0) == doctest::Approx(-1.0).epsilon(1e-9));

    RakedTrigPoly z(2, 0.0, {0.0, 0.0}, {0.0, 0.0});
    CHECK_THROWS_AS(positivity_margin(z, {}, 0.0), ZeroPolynomial);
}

TEST_CASE("is_face certifies points within the threshold arc") {
    const auto v = is_face(2, {CirclePoint(0.0), CirclePoint(0.9 * 2 * kPi / 3)});
    CHECK(v.status == FaceStatus::FACE);
    REQUIRE(v.certificate.has_value());
    CHECK(v.certificate->margin > 0.0);
    CHECK(v.certificate->poly.c == 1.0);
}

TEST_CASE("is_face rejects pairs beyond the edge threshold") {
    const auto v = is_face(2, {CirclePoint(0.0), CirclePoint(2 * kPi / 3 + 0.05)});
    CHECK(v.status == FaceStatus::NOT_FACE);
    REQUIRE(v.witness.has_value());
    const RakedTrigPoly f = interpolate(
        RootSpec(2, {{CirclePoint(0.0), 2}, {CirclePoint(2 * kPi / 3 + 0.05), 2}}));
    CHECK(eval(f, *v.witness) < 0.0);
}

TEST_CASE("the equilateral triangle is a face with certificate 1 - cos 3t") {
    const auto v =
        is_face(2, {CirclePoint(0.0), CirclePoint(2 * kPi / 3), CirclePoint(4 * kPi / 3)});
    CHECK(v.status == FaceStatus::FACE);
    REQUIRE(v.certificate.has_value());
    const RakedTrigPoly& f = v.certificate->poly;
    CHECK(f.c == doctest::Approx(1.0));
    CHECK(f.a[1] == doctest::Approx(-1.0).epsilon(1e-8));
    CHECK(std::abs(f.a[0]) < 1e-8);
    CHECK(std::abs(f.b[0]) < 1e-8);
    CHECK(std::abs(f.b[1]) < 1e-8);
}

TEST_CASE("three nearby points on B_3 span a face") {
    const double d = 2 * kPi / 5;
    const auto v = is_face(3, {CirclePoint(0.9 * d), CirclePoint(0.0), CirclePoint(-0.9 * d)});
    CHECK(v.status == FaceStatus::FACE);
}

TEST_CASE("subsets smaller than k are certified by padding") {
    const auto v1 = is_face(3, {CirclePoint(0.2), CirclePoint(0.8)});
    CHECK(v1.status == FaceStatus::FACE);
    const auto v2 = is_face(4, {CirclePoint(1.0)});
    CHECK(v2.status == FaceStatus::FACE);
}

TEST_CASE("is_face input validation") {
    CHECK_THROWS_AS(is_face(2, {CirclePoint(0.1), CirclePoint(0.1)}), InvalidInput);
    CHECK_THROWS_AS(is_face(2, {}), InvalidInput);
    CHECK_THROWS_AS(
        is_face(2, {CirclePoint(0.1), CirclePoint(0.4), CirclePoint(0.8)}), InvalidInput);
}

TEST_CASE("family velocity vanishes at the prescribed orders") {
    const RootSpec spec(3, {{CirclePoint(0.5), 4}, {CirclePoint(1.5), 2}});
    const CirclePoint s(0.5);
    const RakedTrigPoly g = family_velocity(spec, 0, s);
    CHECK(g.c == 0.0);
    const double scale = std::max(1.0, g.coeff_norm());
    // fixed root keeps multiplicity 2
    for (int r = 0; r < 2; ++r) CHECK(std::abs(eval(g, CirclePoint(1.5), r)) < 1e-3 * scale);
    // moving root of multiplicity 4 keeps order >= 3
    for (int r = 0; r < 3; ++r) CHECK(std::abs(eval(g, s, r)) < 1e-3 * scale);
    CHECK(g.coeff_norm() > 1e-3);
}

TEST_SUITE_END();
