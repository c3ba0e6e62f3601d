#include "rigid/rigidity.hpp"

namespace rigid {

SystemAnalysis analyzeSystem(const ModulePresentation& M, const RigidityOptions& opt,
                             const Limits& lim) {
    SystemAnalysis a;
    a.name = M.name;
    a.connected = isConnected(M, lim);
    a.mixing = mixingSearch(M, opt.mixingBound, lim);
    a.noetherian = isNoetherian(M);
    a.entropy = entropyClassify(M, opt.entropy, lim);
    return a;
}

namespace {

std::string fmtDirection(const std::vector<int>& n) {
    std::string s = "(";
    for (size_t i = 0; i < n.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(n[i]);
    }
    return s + ")";
}

}  // namespace

RigidityVerdict verdict(const ModulePresentation& M1, const ModulePresentation& M2,
                        const RigidityOptions& opt, const Limits& lim) {
    RigidityVerdict v;
    v.system1 = analyzeSystem(M1, opt, lim);
    v.system2 = analyzeSystem(M2, opt, lim);

    auto checkSystem = [&](const SystemAnalysis& a, const std::string& label) {
        if (!a.connected.connected)
            v.failedHypotheses.push_back(label + ": not connected (prime " +
                                         a.connected.prime->get_str() + ")");
        if (a.mixing.kind == MixingStatus::Kind::NotMixing)
            v.failedHypotheses.push_back(
                label + ": not mixing, witness " +
                fmtDirection(a.mixing.witness->direction));
        else if (a.mixing.kind == MixingStatus::Kind::NoWitnessUpTo)
            v.assumptionFlags.push_back(label + ": mixing assumed, no witness up to " +
                                        std::to_string(a.mixing.bound));
    };
    checkSystem(v.system1, "X1");
    checkSystem(v.system2, "X2");

    if (!v.failedHypotheses.empty()) {
        v.kind = RigidityVerdict::Kind::Inapplicable;
        return v;
    }
    v.kind = v.system2.entropy.finite ? RigidityVerdict::Kind::Rigid
                                      : RigidityVerdict::Kind::NotRigid;
    return v;
}

}  // namespace rigid
