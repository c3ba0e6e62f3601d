#ifndef RIGID_REPORT_HPP
#define RIGID_REPORT_HPP

#include <string>

#include <json.hpp>

#include "rigid/rigidity.hpp"

namespace rigid {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kSchemaVersion = "1";

using Json = nlohmann::ordered_json;

Json toJson(const ConnectednessReport& r);
Json toJson(const MixingStatus& s);
Json toJson(const MahlerEstimate& e);
Json toJson(const EntropyReport& r);
Json toJson(const SystemAnalysis& a);
Json toJson(const RigidityVerdict& v);

/// System spec document: {name, d, k, relations: ["..."], options}.
ModulePresentation parseSystemSpec(const Json& doc);

Json analysisReportDoc(const SystemAnalysis& a, const RigidityOptions& opt);
Json rigidityReportDoc(const RigidityVerdict& v, const RigidityOptions& opt);

std::string renderText(const Json& doc);

}  // namespace rigid

#endif
