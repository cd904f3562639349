#pragma once

#include <json.hpp>

#include "folia/completeness.hpp"

namespace folia::cli {

using Json = nlohmann::ordered_json;

Json to_json(const Gauss& z);
Json to_json(const std::pair<Gauss, Gauss>& p);
Json to_json(const Classification& c);
Json to_json(const ConservationReport& r);
Json to_json(const ResolutionTree& t);
Json to_json(const Verdict& v);
Json to_json(const ScVerdict& v);
Json to_json(const SaddleNodeData& s);
Json to_json(const ModelTag& m);
Json to_json(const TopComponentClass& c);
Json to_json(const InfinitySingularity& s);

}  // namespace folia::cli
