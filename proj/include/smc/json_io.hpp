#ifndef SMC_JSON_IO_HPP
#define SMC_JSON_IO_HPP

#include <json.hpp>

#include "smc/critical_arc.hpp"
#include "smc/interpolation.hpp"
#include "smc/polytope.hpp"

namespace smc {

using json = nlohmann::json;

json to_json(const RakedTrigPoly& f);
RakedTrigPoly poly_from_json(const json& j);

json to_json(const std::vector<CircleRoot>& roots);
std::vector<CircleRoot> roots_from_json(const json& j);

json to_json(const FaceVerdict& v);

json to_json(const CriticalArcResult& r);

json to_json(const FaceCount& fc);

json to_json(const VertexConfig& c);

}  // namespace smc

#endif
