#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "rigid/parse.hpp"
#include "rigid/rigidity.hpp"

using namespace rigid;

namespace {

LaurentPoly P(const std::string& s, int d = 0) { return parsePoly(s, d); }

RigidityOptions fastOpts() {
    RigidityOptions o;
    o.mixingBound = 2;
    o.entropy.mahlerGrid = 64;
    o.entropy.rootsOfUnityOrder = 16;
    return o;
}

ModulePresentation ledrappier() {
    return ModulePresentation::cyclic(2, P("1 + u1 + u2"), "ledrappier");
}

}  // namespace

TEST_CASE("ledrappier vs itself is Rigid") {
    RigidityVerdict v = verdict(ledrappier(), ledrappier(), fastOpts());
    CHECK(v.kind == RigidityVerdict::Kind::Rigid);
    CHECK(v.failedHypotheses.empty());
    // Mixing was only bounded-search-clean, so the assumption is on record.
    CHECK_FALSE(v.assumptionFlags.empty());
    CHECK(v.system2.entropy.finite);
}

TEST_CASE("ledrappier vs the full shift is NotRigid") {
    RigidityVerdict v =
        verdict(ledrappier(), ModulePresentation::freeModule(1, 1, "fullshift"),
                fastOpts());
    CHECK(v.kind == RigidityVerdict::Kind::NotRigid);
    CHECK_FALSE(v.system2.entropy.finite);
}

TEST_CASE("non-mixing target is Inapplicable with certificate") {
    ModulePresentation bad = ModulePresentation::cyclic(2, P("u1*u2 - 1"), "nonmix");
    RigidityVerdict v = verdict(ledrappier(), bad, fastOpts());
    CHECK(v.kind == RigidityVerdict::Kind::Inapplicable);
    CHECK_FALSE(v.failedHypotheses.empty());
    REQUIRE(v.system2.mixing.kind == MixingStatus::Kind::NotMixing);
    CHECK(v.system2.mixing.witness->direction == std::vector<int>{1, 1});
}

TEST_CASE("disconnected system is Inapplicable") {
    ModulePresentation disc = ModulePresentation::cyclic(2, P("2", 2), "disc");
    RigidityVerdict v = verdict(disc, ledrappier(), fastOpts());
    CHECK(v.kind == RigidityVerdict::Kind::Inapplicable);
    bool flagged = false;
    for (const auto& h : v.failedHypotheses)
        if (h.find("connected") != std::string::npos) flagged = true;
    CHECK(flagged);
}

TEST_CASE("verdict(M, M) is never NotRigid for finite-entropy M") {
    std::vector<ModulePresentation> fixtures = {
        ledrappier(), ModulePresentation::cyclic(1, P("u1 - 2"), "times2"),
        ModulePresentation::cyclic(1, P("u1^2 - u1 - 1"), "fib")};
    for (const auto& M : fixtures) {
        REQUIRE(entropyClassify(M, fastOpts().entropy).finite);
        RigidityVerdict v = verdict(M, M, fastOpts());
        CHECK(v.kind != RigidityVerdict::Kind::NotRigid);
    }
}

TEST_CASE("verdict depends only on the target's entropy") {
    std::vector<ModulePresentation> sources = {
        ledrappier(), ModulePresentation::cyclic(1, P("u1 - 2"), "times2"),
        ModulePresentation::freeModule(2, 1, "free2")};
    std::vector<ModulePresentation> targets = {
        ledrappier(), ModulePresentation::freeModule(1, 1, "fullshift")};
    for (const auto& M2 : targets) {
        std::vector<RigidityVerdict::Kind> kinds;
        for (const auto& M1 : sources) {
            RigidityVerdict v = verdict(M1, M2, fastOpts());
            if (v.kind != RigidityVerdict::Kind::Inapplicable)
                kinds.push_back(v.kind);
        }
        for (size_t i = 1; i < kinds.size(); ++i) CHECK(kinds[i] == kinds[0]);
    }
}

TEST_CASE("every Inapplicable carries a reason") {
    std::vector<std::pair<ModulePresentation, ModulePresentation>> pairs = {
        {ModulePresentation::cyclic(2, P("2", 2), "disc"), ledrappier()},
        {ledrappier(), ModulePresentation::cyclic(2, P("u1*u2 - 1"), "nonmix")},
    };
    for (const auto& [a, b] : pairs) {
        RigidityVerdict v = verdict(a, b, fastOpts());
        REQUIRE(v.kind == RigidityVerdict::Kind::Inapplicable);
        CHECK_FALSE(v.failedHypotheses.empty());
    }
}

TEST_CASE("analyzeSystem reports every hypothesis") {
    SystemAnalysis a = analyzeSystem(ledrappier(), fastOpts());
    CHECK(a.name == "ledrappier");
    CHECK(a.connected.connected);
    CHECK(a.mixing.kind == MixingStatus::Kind::NoWitnessUpTo);
    CHECK(a.noetherian.noetherian);
    CHECK(a.entropy.finite);
}
