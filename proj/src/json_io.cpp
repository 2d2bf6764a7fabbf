#include "smc/json_io.hpp"

namespace smc {

json to_json(const RakedTrigPoly& f) {
    return json{{"k", f.k}, {"c", f.c}, {"a", f.a}, {"b", f.b}};
}

RakedTrigPoly poly_from_json(const json& j) {
    if (!j.contains("k") || !j.contains("c") || !j.contains("a") || !j.contains("b"))
        throw InvalidInput("poly_from_json: expected fields k, c, a, b");
    const int k = j.at("k").get<int>();
    auto a = j.at("a").get<std::vector<double>>();
    auto b = j.at("b").get<std::vector<double>>();
    if (static_cast<int>(a.size()) != k || static_cast<int>(b.size()) != k)
        throw InvalidInput("poly_from_json: coefficient arrays must have length k");
    return RakedTrigPoly(k, j.at("c").get<double>(), std::move(a), std::move(b));
}

json to_json(const std::vector<CircleRoot>& roots) {
    json arr = json::array();
    for (const auto& r : roots)
        arr.push_back(json{{"angle", r.point.angle}, {"mult", r.multiplicity}});
    return arr;
}

std::vector<CircleRoot> roots_from_json(const json& j) {
    std::vector<CircleRoot> roots;
    for (const auto& e : j)
        roots.push_back({CirclePoint(e.at("angle").get<double>()), e.at("mult").get<int>()});
    return roots;
}

json to_json(const FaceVerdict& v) {
    json j{{"status", to_string(v.status)}};
    if (v.certificate) {
        j["certificate"] = to_json(v.certificate->poly);
        j["margin"] = v.certificate->margin;
    }
    if (v.witness) j["witness"] = v.witness->angle;
    return j;
}

json to_json(const CriticalArcResult& r) {
    return json{{"k", r.split.k()},
                {"m_a", r.split.m_a},
                {"m_b", r.split.m_b},
                {"L_star", r.length},
                {"extra_root", r.extra_root.angle},
                {"bisection_width", r.bisection_width},
                {"poly", to_json(r.poly)}};
}

json to_json(const FaceCount& fc) {
    return json{{"dim", fc.dim},
                {"verified", fc.verified_count},
                {"unknown", fc.unknown_count},
                {"not_face", fc.not_face_count},
                {"total", fc.total_subsets}};
}

json to_json(const VertexConfig& c) {
    json angles = json::array();
    for (const auto& p : c.angles) angles.push_back(p.angle);
    return json{{"k", c.k}, {"angles", angles}, {"symmetric", c.symmetric}};
}

}  // namespace smc
