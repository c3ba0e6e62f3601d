#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rigid/analytic.hpp"
#include "rigid/parse.hpp"
#include "rigid/report.hpp"

namespace {

using rigid::Json;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInapplicable = 4;

Json loadSpec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open spec file: " + path);
    Json doc;
    in >> doc;
    return doc;
}

void emit(const Json& doc, const std::string& format) {
    if (format == "text")
        std::cout << rigid::renderText(doc);
    else
        std::cout << doc.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decision procedures for topological rigidity of algebraic Z^d-actions"};
    app.require_subcommand(1);
    app.fallthrough();

    rigid::RigidityOptions opt;
    rigid::Limits lim;
    std::string format = "json";
    unsigned long seed = 20260823;
    app.add_option("--mixing-bound", opt.mixingBound, "sup-norm bound of the mixing witness search")->capture_default_str();
    app.add_option("--mahler-grid", opt.entropy.mahlerGrid, "per-axis quadrature resolution")->capture_default_str();
    app.add_option("--roots-of-unity", opt.entropy.rootsOfUnityOrder, "root-of-unity oracle order")->capture_default_str();
    app.add_option("--gb-max-pairs", lim.maxPairs, "Groebner pair budget")->capture_default_str();
    app.add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", seed, "seed for the sampling checks")->capture_default_str();

    std::string specPath, specPath2;
    auto* analyze = app.add_subcommand("analyze", "analyze a single system spec");
    analyze->add_option("spec", specPath, "system spec file (JSON)")->required();

    bool strict = false;
    auto* rigidity = app.add_subcommand("rigidity", "rigidity verdict for a pair of systems");
    rigidity->add_option("spec1", specPath, "domain system spec")->required();
    rigidity->add_option("spec2", specPath2, "target system spec")->required();
    rigidity->add_flag("--strict", strict, "exit 4 when hypotheses fail");

    std::string polyText;
    long grid = 512, rouOrder = 64;
    auto* mahler = app.add_subcommand("mahler", "Mahler measure estimates for a polynomial");
    mahler->add_option("poly", polyText, "polynomial, e.g. \"1 + u1 + u2\"")->required();
    mahler->add_option("--grid", grid, "quadrature grid")->capture_default_str();
    mahler->add_option("--order", rouOrder, "roots-of-unity order")->capture_default_str();

    long vkN = 1024;
    std::string fixturePath;
    auto* vk = app.add_subcommand("vk-check", "van Kampen splitting checks on sampled tori");
    vk->add_option("--n", vkN, "grid resolution")->capture_default_str();
    vk->add_option("--fixture", fixturePath, "phase-grid fixture file (text: m N then phases in turns)");

    std::string gText;
    int zdcRadius = 8, zdcTrials = 20;
    auto* zdc = app.add_subcommand("zdc-check", "truncated L2 zero-divisor check");
    zdc->add_option("--g", gText, "kernel polynomial, e.g. \"1 - u1\"")->required();
    zdc->add_option("--radius", zdcRadius, "truncation radius")->capture_default_str();
    zdc->add_option("--trials", zdcTrials, "random trials")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) {
            rigid::ModulePresentation M = rigid::parseSystemSpec(loadSpec(specPath));
            rigid::SystemAnalysis a = rigid::analyzeSystem(M, opt, lim);
            emit(rigid::analysisReportDoc(a, opt), format);
            return kExitOk;
        }
        if (*rigidity) {
            rigid::ModulePresentation M1 = rigid::parseSystemSpec(loadSpec(specPath));
            rigid::ModulePresentation M2 = rigid::parseSystemSpec(loadSpec(specPath2));
            rigid::RigidityVerdict v = rigid::verdict(M1, M2, opt, lim);
            emit(rigid::rigidityReportDoc(v, opt), format);
            if (strict && v.kind == rigid::RigidityVerdict::Kind::Inapplicable)
                return kExitInapplicable;
            return kExitOk;
        }
        if (*mahler) {
            rigid::LaurentPoly f = rigid::parsePoly(polyText);
            Json doc;
            doc["schema_version"] = rigid::kSchemaVersion;
            doc["tool_version"] = rigid::kToolVersion;
            doc["kind"] = "mahler";
            doc["poly"] = f.toString();
            Json est = Json::array();
            if (f.dim() == 1) est.push_back(rigid::toJson(rigid::mahlerD1Exact(f)));
            est.push_back(rigid::toJson(rigid::mahlerQuadrature(f, grid)));
            est.push_back(rigid::toJson(rigid::mahlerRootsOfUnity(f, rouOrder)));
            doc["estimates"] = est;
            emit(doc, format);
            return kExitOk;
        }
        if (*vk) {
            Json doc;
            doc["schema_version"] = rigid::kSchemaVersion;
            doc["tool_version"] = rigid::kToolVersion;
            doc["kind"] = "vk-check";
            if (!fixturePath.empty()) {
                std::ifstream in(fixturePath);
                if (!in) throw std::runtime_error("cannot open fixture: " + fixturePath);
                int m;
                long N;
                in >> m >> N;
                size_t total = 1;
                for (int a = 0; a < m; ++a) total *= static_cast<size_t>(N);
                std::vector<std::complex<double>> vals(total);
                for (size_t i = 0; i < total; ++i) {
                    double turns;
                    if (!(in >> turns)) throw std::runtime_error("truncated fixture");
                    vals[i] = {std::cos(2 * M_PI * turns), std::sin(2 * M_PI * turns)};
                }
                auto f = rigid::SampledTorusMap::fromValues(m, N, std::move(vals));
                auto dec = rigid::vkDecompose(f);
                auto uniq = rigid::vkVerifyUniqueness(f);
                doc["character"] = dec.character;
                doc["residual"] = dec.residual;
                doc["uniqueness_agreed"] = uniq.agreed;
                doc["uniqueness_discrepancy"] = uniq.maxDiscrepancy;
            } else {
                // Built-in constructed family: f = exp(2 pi i (2x + 0.1 sin 2 pi x)).
                auto f = rigid::SampledTorusMap::fromCharacterAndLift(
                    {2}, vkN, [](const std::vector<double>& x) {
                        return 0.1 * std::sin(2 * M_PI * x[0]);
                    });
                auto dec = rigid::vkDecompose(f);
                auto uniq = rigid::vkVerifyUniqueness(f);
                doc["character"] = dec.character;
                doc["residual"] = dec.residual;
                doc["uniqueness_agreed"] = uniq.agreed;
                doc["uniqueness_discrepancy"] = uniq.maxDiscrepancy;
            }
            emit(doc, format);
            return kExitOk;
        }
        if (*zdc) {
            rigid::LaurentPoly g = rigid::parsePoly(gText);
            rigid::FiniteSupportFn gf;
            for (const auto& [mon, c] : g.terms())
                gf[mon.e] = std::complex<double>(c.get_d(), 0.0);
            auto rep = rigid::zeroDivisorCheck(gf, zdcTrials, zdcRadius, seed);
            Json doc;
            doc["schema_version"] = rigid::kSchemaVersion;
            doc["tool_version"] = rigid::kToolVersion;
            doc["kind"] = "zdc-check";
            doc["g"] = g.toString();
            doc["radius"] = zdcRadius;
            doc["kernel_dim"] = rep.kernelDim;
            doc["norm_ratio"] = rep.normRatio;
            doc["sigma_min"] = rep.sigmaMin;
            doc["sigma_max"] = rep.sigmaMax;
            doc["fourier_residual"] = rep.fourierResidual;
            emit(doc, format);
            return kExitOk;
        }
    } catch (const rigid::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const rigid::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const Json::exception& e) {
        std::cerr << "spec error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
