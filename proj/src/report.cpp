#include "rigid/report.hpp"

#include <cstdio>
#include <sstream>

#include "rigid/parse.hpp"

namespace rigid {

namespace {

// Fixed-format doubles keep reports byte-identical across runs.
std::string fmtDouble(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

Json numberField(double x) { return Json(fmtDouble(x)); }

std::string polyVecString(const PolyVec& v) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i].toString();
    }
    os << "]";
    return os.str();
}

}  // namespace

Json toJson(const ConnectednessReport& r) {
    Json j;
    j["connected"] = r.connected;
    j["method"] = r.method;
    j["certification"] = r.primeSetHeuristic ? "heuristic-prime-set" : "certified";
    if (!r.connected) {
        j["prime"] = r.prime->get_str();
        if (r.certificate) j["certificate"] = polyVecString(*r.certificate);
    }
    return j;
}

Json toJson(const MixingStatus& s) {
    Json j;
    switch (s.kind) {
        case MixingStatus::Kind::NotMixing: {
            j["status"] = "NotMixing";
            j["witness"] = s.witness->direction;
            j["certificate"] = polyVecString(s.witness->certificate);
            j["certification"] = "certified";
            break;
        }
        case MixingStatus::Kind::NoWitnessUpTo:
            j["status"] = "NoWitnessUpTo";
            j["bound"] = s.bound;
            j["certification"] = "bounded-search";
            break;
        case MixingStatus::Kind::MixingCertified:
            j["status"] = "MixingCertified";
            j["reason"] = s.reason;
            j["certification"] = "certified";
            break;
    }
    return j;
}

Json toJson(const MahlerEstimate& e) {
    Json j;
    j["estimate"] = numberField(e.estimate);
    j["method"] = e.method;
    j["resolution"] = e.resolution;
    j["error_indicator"] = numberField(e.errorIndicator);
    if (e.skippedPoints) j["skipped_points"] = e.skippedPoints;
    return j;
}

Json toJson(const EntropyReport& r) {
    Json j;
    j["finite"] = r.finite;
    switch (r.kind) {
        case EntropyReport::ValueKind::Infinite:
            j["value"] = "Infinite";
            break;
        case EntropyReport::ValueKind::Zero:
            j["value"] = "Zero";
            break;
        case EntropyReport::ValueKind::Exact:
            j["value"] = "Exact";
            j["nats"] = numberField(r.value);
            break;
        case EntropyReport::ValueKind::Interval:
            j["value"] = "Interval";
            j["lo"] = numberField(r.lo);
            j["hi"] = numberField(r.hi);
            break;
        case EntropyReport::ValueKind::UpperBound:
            j["value"] = "UpperBound";
            j["bound_nats"] = numberField(r.value);
            break;
        case EntropyReport::ValueKind::FiniteNoValue:
            j["value"] = "FiniteNoValue";
            break;
    }
    j["method"] = r.method;
    Json diags = Json::array();
    for (const auto& d : r.diagnostics) diags.push_back(toJson(d));
    j["diagnostics"] = diags;
    return j;
}

Json toJson(const SystemAnalysis& a) {
    Json j;
    j["name"] = a.name;
    j["connected"] = toJson(a.connected);
    j["mixing"] = toJson(a.mixing);
    j["noetherian"] = Json{{"noetherian", a.noetherian.noetherian},
                           {"note", a.noetherian.note}};
    j["entropy"] = toJson(a.entropy);
    return j;
}

Json toJson(const RigidityVerdict& v) {
    Json j;
    switch (v.kind) {
        case RigidityVerdict::Kind::Rigid:
            j["verdict"] = "Rigid";
            break;
        case RigidityVerdict::Kind::NotRigid:
            j["verdict"] = "NotRigid";
            break;
        case RigidityVerdict::Kind::Inapplicable:
            j["verdict"] = "Inapplicable";
            break;
    }
    j["failed_hypotheses"] = v.failedHypotheses;
    j["assumption_flags"] = v.assumptionFlags;
    j["system1"] = toJson(v.system1);
    j["system2"] = toJson(v.system2);
    return j;
}

ModulePresentation parseSystemSpec(const Json& doc) {
    int d = doc.at("d").get<int>();
    int k = doc.value("k", 1);
    std::string name = doc.value("name", "");
    std::vector<std::vector<LaurentPoly>> rows;
    if (doc.contains("relations")) {
        for (const auto& rel : doc.at("relations")) {
            std::vector<LaurentPoly> row;
            if (rel.is_string()) {
                if (k != 1)
                    throw std::invalid_argument(
                        "string relation requires k = 1; use an array per row");
                row.push_back(parsePoly(rel.get<std::string>(), d));
            } else {
                for (const auto& cell : rel)
                    row.push_back(parsePoly(cell.get<std::string>(), d));
            }
            rows.push_back(std::move(row));
        }
    }
    return ModulePresentation(d, k, std::move(rows), std::move(name));
}

namespace {

Json optionsJson(const RigidityOptions& opt) {
    Json j;
    j["mixing_bound"] = opt.mixingBound;
    j["mahler_grid"] = opt.entropy.mahlerGrid;
    j["roots_of_unity_order"] = opt.entropy.rootsOfUnityOrder;
    return j;
}

}  // namespace

Json analysisReportDoc(const SystemAnalysis& a, const RigidityOptions& opt) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["tool_version"] = kToolVersion;
    j["kind"] = "analysis";
    j["options"] = optionsJson(opt);
    j["system"] = toJson(a);
    return j;
}

Json rigidityReportDoc(const RigidityVerdict& v, const RigidityOptions& opt) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["tool_version"] = kToolVersion;
    j["kind"] = "rigidity";
    j["options"] = optionsJson(opt);
    j["result"] = toJson(v);
    return j;
}

namespace {

void renderValue(std::ostringstream& os, const Json& v, int indent) {
    std::string pad(indent, ' ');
    if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it) {
            if (it.value().is_object() || (it.value().is_array() &&
                                           !it.value().empty() &&
                                           it.value().front().is_object())) {
                os << pad << it.key() << ":\n";
                renderValue(os, it.value(), indent + 2);
            } else {
                os << pad << it.key() << ": " << it.value().dump() << "\n";
            }
        }
    } else if (v.is_array()) {
        int i = 0;
        for (const auto& item : v) {
            os << pad << "- [" << i++ << "]\n";
            renderValue(os, item, indent + 2);
        }
    } else {
        os << pad << v.dump() << "\n";
    }
}

}  // namespace

std::string renderText(const Json& doc) {
    std::ostringstream os;
    renderValue(os, doc, 0);
    return os.str();
}

}  // namespace rigid
