#ifndef RIGID_RIGIDITY_HPP
#define RIGID_RIGIDITY_HPP

#include <string>
#include <vector>

#include "rigid/analysis.hpp"
#include "rigid/entropy.hpp"

namespace rigid {

/// Hypothesis trail for one system.
struct SystemAnalysis {
    std::string name;
    ConnectednessReport connected;
    MixingStatus mixing;
    NoetherianReport noetherian;
    EntropyReport entropy;
};

struct RigidityVerdict {
    enum class Kind { Rigid, NotRigid, Inapplicable };
    Kind kind = Kind::Inapplicable;
    SystemAnalysis system1, system2;
    std::vector<std::string> failedHypotheses;
    std::vector<std::string> assumptionFlags;  // e.g. mixing only bounded-search-clean
};

struct RigidityOptions {
    int mixingBound = 4;
    EntropyOptions entropy;
};

SystemAnalysis analyzeSystem(const ModulePresentation& M,
                             const RigidityOptions& opt = {}, const Limits& lim = {});

/// The main equivalence as a combinator: with both systems certified (or
/// assumed at the stated bound) connected, mixing and Noetherian, the verdict
/// is Rigid iff X_2 has finite entropy.
RigidityVerdict verdict(const ModulePresentation& M1, const ModulePresentation& M2,
                        const RigidityOptions& opt = {}, const Limits& lim = {});

}  // namespace rigid

#endif
