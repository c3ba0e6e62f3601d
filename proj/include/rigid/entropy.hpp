#ifndef RIGID_ENTROPY_HPP
#define RIGID_ENTROPY_HPP

#include <optional>
#include <string>
#include <vector>

#include "rigid/analysis.hpp"
#include "rigid/laurent.hpp"

namespace rigid {

struct MahlerEstimate {
    double estimate = 0.0;  // nats, always >= 0
    std::string method;     // root-formula | quadrature | roots-of-unity-limit
    long resolution = 0;    // grid per axis / root order / polished root count
    double errorIndicator = 0.0;
    long skippedPoints = 0;  // roots-of-unity points where f vanished
};

struct MahlerFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// log|lead| + sum log max(1,|rho|) over the complex roots, via
/// companion-matrix eigenvalues with Newton polishing.
MahlerEstimate mahlerD1Exact(const LaurentPoly& f);

/// Mean of log|f| over a shifted uniform N^d torus lattice; the shift is a
/// fixed irrational offset so the lattice dodges zeros of f. The N-vs-2N
/// comparison supplies the error indicator.
MahlerEstimate mahlerQuadrature(const LaurentPoly& f, long grid);

/// Average of log|f(w)| over w in (mu_N)^d with f(w) != 0.
MahlerEstimate mahlerRootsOfUnity(const LaurentPoly& f, long order);

struct PeriodicPointEntry {
    long order = 0;
    bool degenerate = false;     // the product over N-torsion points vanished
    std::string exactCount;      // decimal string, d = 1 only
    double growthRate = 0.0;     // log(count) / N^d
};

/// Periodic-point counts of X_{R_d/(f)} at level N: |prod over (mu_N)^d of
/// f(w)|. Exact resultants for d = 1, log-accumulated products otherwise.
std::vector<PeriodicPointEntry> periodicPointGrowth(const LaurentPoly& f,
                                                    const std::vector<long>& orders);

struct EntropyReport {
    enum class ValueKind { Infinite, Zero, Exact, Interval, UpperBound, FiniteNoValue };
    bool finite = false;
    ValueKind kind = ValueKind::Infinite;
    double value = 0.0;       // Exact / UpperBound
    double lo = 0.0, hi = 0.0;  // Interval
    std::string method;
    std::vector<MahlerEstimate> diagnostics;
};

struct EntropyOptions {
    long mahlerGrid = 512;
    long rootsOfUnityOrder = 64;
};

EntropyReport entropyClassify(const ModulePresentation& M,
                              const EntropyOptions& opt = {},
                              const Limits& lim = {});

/// Exact |res(t^N - 1, f)| for a one-variable integer polynomial (Sylvester
/// determinant, fraction-free).
Int resultantWithCyclotomic(const std::vector<Int>& coeffs, long N);

}  // namespace rigid

#endif
