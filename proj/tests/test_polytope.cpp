#include <doctest.h>

#include <cmath>

#include "smc/critical_arc.hpp"
#include "smc/json_io.hpp"
#include "smc/polytope.hpp"
#include "smc/rng.hpp"

using namespace smc;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE_BEGIN("polytope");

TEST_CASE("embedding formula") {
    const CurvePoint p0 = embed(1, CirclePoint(0.0));
    CHECK(p0.coords == std::vector<double>{1.0, 0.0});
    const CurvePoint ppi = embed(2, CirclePoint(kPi));
    REQUIRE(ppi.coords.size() == 4);
    CHECK(ppi.coords[0] == doctest::Approx(-1.0));
    CHECK(ppi.coords[1] == doctest::Approx(0.0));
    CHECK(ppi.coords[2] == doctest::Approx(-1.0));
    CHECK(ppi.coords[3] == doctest::Approx(0.0));
}

TEST_CASE("embedding is odd under half turns with unit harmonic pairs") {
    Rng rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        const double t = rng.angle();
        const auto u = embed(3, CirclePoint(t));
        const auto v = embed(3, CirclePoint(t + kPi));
        for (size_t i = 0; i < u.coords.size(); ++i)
            CHECK(std::abs(u.coords[i] + v.coords[i]) < 1e-14);
        for (int j = 0; j < 3; ++j) {
            const double n2 = u.coords[2 * j] * u.coords[2 * j] +
                              u.coords[2 * j + 1] * u.coords[2 * j + 1];
            CHECK(n2 == doctest::Approx(1.0).epsilon(1e-14));
        }
    }
}

TEST_CASE("clustered configurations are centrally symmetric") {
    const VertexConfig c = clustered_config(2, 3, 0.1);
    REQUIRE(c.angles.size() == 12);
    CHECK(c.symmetric);
    for (const auto& p : c.angles) {
        bool has_antipode = false;
        for (const auto& q : c.angles)
            if (circular_distance(p.antipode(), q) < 1e-12) has_antipode = true;
        CHECK(has_antipode);
    }
    // extreme points of adjacent clusters are pi/2 + spread apart, short of phi_2
    double max_adjacent = 0.0;
    for (const auto& p : c.angles)
        for (const auto& q : c.angles) {
            const double d = circular_distance(p, q);
            if (d > max_adjacent && d < kPi / 2 + 0.2) max_adjacent = d;
        }
    CHECK(max_adjacent == doctest::Approx(kPi / 2 + 0.1));
    CHECK(max_adjacent < phi(2, 1e-9).first);
}

TEST_CASE("overspread configurations are rejected") {
    CHECK_THROWS_AS(clustered_config(2, 3, 0.6), SpreadTooLarge);
    CHECK_THROWS_AS(clustered_config(3, 2, 0.45), SpreadTooLarge);
}

TEST_CASE("edge characterization thresholds") {
    CHECK(edge_check(2, CirclePoint(0.0), CirclePoint(2 * kPi / 3 - 0.01)));
    CHECK_FALSE(edge_check(2, CirclePoint(0.0), CirclePoint(2 * kPi / 3 + 0.01)));
    CHECK(edge_check(3, CirclePoint(0.0), CirclePoint(0.99 * 4 * kPi / 5)));
    CHECK_FALSE(edge_check(3, CirclePoint(0.0), CirclePoint(1.01 * 4 * kPi / 5)));
    CHECK_THROWS_AS(edge_check(2, CirclePoint(1.0), CirclePoint(1.0)), InvalidInput);
}

TEST_CASE("edge_check agrees with is_face for k = 2 away from the threshold") {
    for (int i = 0; i < 40; ++i) {
        const double arc = 0.05 + (kPi - 0.1) * i / 39.0;
        if (std::abs(arc - 2 * kPi / 3) < 0.02) continue;
        const double base = 0.37 * i;
        const auto v = is_face(2, {CirclePoint(base), CirclePoint(base + arc)});
        const bool edge = edge_check(2, CirclePoint(base), CirclePoint(base + arc));
        CHECK(v.status == (edge ? FaceStatus::FACE : FaceStatus::NOT_FACE));
    }
}

TEST_CASE("counting edges of the clustered square construction") {
    const VertexConfig c = clustered_config(2, 2, 0.05);
    const FaceCount fc = count_faces(c, 1);
    CHECK(fc.total_subsets == 28);
    const std::int64_t bound =
        4 * binomial_capped(4, 2, 1000) - 4 * binomial_capped(2, 2, 1000);
    CHECK(fc.verified_count >= bound);  // 20
    CHECK(fc.verified_count + fc.unknown_count + fc.not_face_count == fc.total_subsets);
    // opposite-cluster pairs straddle a diameter and are never faces
    CHECK(fc.not_face_count + fc.unknown_count == 8);
}

TEST_CASE("verified faces are closed under the antipodal map") {
    const VertexConfig c = clustered_config(2, 3, 0.08);
    const int n = static_cast<int>(c.angles.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const auto v = is_face(2, {c.angles[i], c.angles[j]});
            const auto w =
                is_face(2, {c.angles[i].antipode(), c.angles[j].antipode()});
            CHECK(v.status == w.status);
        }
}

TEST_CASE("subsets of verified faces are verified") {
    const std::vector<CirclePoint> pts{CirclePoint(0.1), CirclePoint(0.5), CirclePoint(0.8)};
    const auto v = is_face(3, pts);
    REQUIRE(v.status == FaceStatus::FACE);
    for (int drop = 0; drop < 3; ++drop) {
        std::vector<CirclePoint> sub;
        for (int i = 0; i < 3; ++i)
            if (i != drop) sub.push_back(pts[i]);
        CHECK(is_face(3, sub).status == FaceStatus::FACE);
    }
}

TEST_CASE("count_faces guards") {
    VertexConfig c;
    c.k = 2;
    for (int i = 0; i < 30; ++i) c.angles.emplace_back(0.1 * i);
    CountOptions opt;
    opt.subset_cap = 10;
    CHECK_THROWS_AS(count_faces(c, 1, opt), CombinatorialExplosion);
    CHECK_THROWS_AS(count_faces(c, 2), InvalidInput);  // dim + 1 > k
}

TEST_CASE("LP oracle on the unit square") {
    const std::vector<std::vector<double>> square{
        {0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}};
    CHECK(lp_face_oracle(square, {0}));
    CHECK(lp_face_oracle(square, {1}));
    CHECK(lp_face_oracle(square, {0, 1}));      // an edge
    CHECK_FALSE(lp_face_oracle(square, {0, 2}));  // a diagonal
    CHECK_FALSE(lp_face_oracle(square, {1, 3}));
    CHECK_FALSE(lp_face_oracle(square, {0, 1, 2}));  // no line through three corners
}

TEST_CASE("LP oracle input validation") {
    CHECK_THROWS_AS(lp_face_oracle({}, {0}), InvalidInput);
    CHECK_THROWS_AS(lp_face_oracle({{0.0, 0.0}}, {3}), InvalidInput);
}

TEST_CASE("curve oracle agrees with the certificate machinery") {
    Rng rng(37);
    int decided = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const int nconf = 12;
        const double span = rng.uniform(1.0, kPi - 0.05);
        std::vector<double> conf;
        for (int attempt = 0; attempt < 200; ++attempt) {
            conf.clear();
            for (int i = 0; i < nconf; ++i) conf.push_back(rng.uniform(0.0, span));
            std::sort(conf.begin(), conf.end());
            bool ok = true;
            for (int i = 1; i < nconf; ++i)
                if (conf[i] - conf[i - 1] < 0.05) ok = false;
            if (ok) break;
        }
        const double base = rng.angle();
        std::vector<CirclePoint> subset{CirclePoint(base + conf[2]), CirclePoint(base + conf[7])};
        std::vector<CirclePoint> context;
        for (int i = 0; i < nconf; ++i)
            if (i != 2 && i != 7) context.emplace_back(base + conf[i]);
        FaceOptions fo;
        fo.pos_tol = 1e-6;
        const auto v = is_face(2, subset, fo);
        if (v.status == FaceStatus::UNKNOWN) continue;
        ++decided;
        std::vector<CirclePoint> probes;
        if (v.witness) probes.push_back(*v.witness);
        CHECK(curve_face_oracle(2, subset, context, probes) ==
              (v.status == FaceStatus::FACE));
    }
    CHECK(decided >= 40);
}

TEST_CASE("capped binomials") {
    CHECK(binomial_capped(10, 2, 1000) == 45);
    CHECK(binomial_capped(5, 0, 10) == 1);
    CHECK(binomial_capped(5, 6, 10) == 0);
    CHECK(binomial_capped(100, 50, 1000) == 1001);  // capped
}

TEST_CASE("JSON round trips") {
    RakedTrigPoly f(2, 1.0, {0.25, -1.0}, {0.0, 3e-17});
    const json j = to_json(f);
    const RakedTrigPoly g = poly_from_json(j);
    CHECK(g == f);
    CHECK_THROWS_AS(poly_from_json(json{{"k", 2}, {"c", 1.0}, {"a", {1.0}}, {"b", {0.0, 0.0}}}),
                    InvalidInput);

    const std::vector<CircleRoot> roots{{CirclePoint(0.5), 2}, {CirclePoint(3.0), 4}};
    const auto back = roots_from_json(to_json(roots));
    REQUIRE(back.size() == 2);
    CHECK(back[1].multiplicity == 4);
    CHECK(back[0].point.angle == doctest::Approx(0.5));
}

TEST_SUITE_END();
