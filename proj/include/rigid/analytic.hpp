#ifndef RIGID_ANALYTIC_HPP
#define RIGID_ANALYTIC_HPP

#include <complex>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "rigid/laurent.hpp"

namespace rigid {

struct ResolutionTooCoarse : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Samples of a continuous map f: T^m -> T on the uniform N^m grid, stored
/// row-major, normalized so f(origin) = 1 and |f| = 1 everywhere.
struct SampledTorusMap {
    int m = 1;
    long N = 0;
    std::vector<std::complex<double>> values;

    static SampledTorusMap fromValues(int m, long N,
                                      std::vector<std::complex<double>> vals);
    /// Construct from winding numbers and a real lift sampled on the grid:
    /// f(x) = exp(2 pi i (n·x + lift(x))).
    static SampledTorusMap fromCharacterAndLift(
        const std::vector<long>& character, long N,
        const std::function<double(const std::vector<double>&)>& lift);

    size_t size() const { return values.size(); }
    size_t index(const std::vector<long>& k) const;
};

struct VKDecomposition {
    std::vector<long> character;  // winding numbers per axis
    std::vector<double> lift;     // S(f) samples in turns, lift(origin) = 0
    double residual = 0.0;        // max |f - phi · exp(2 pi i S(f))|
};

/// Split f = (character) · exp(2 pi i S(f)) by phase unwrapping from the
/// origin; requires adjacent phase steps < 0.4 turn.
VKDecomposition vkDecompose(const SampledTorusMap& f);

struct UniquenessCheck {
    bool agreed = false;
    double maxDiscrepancy = 0.0;
};

/// Decompose along two independent sweep orders and compare.
UniquenessCheck vkVerifyUniqueness(const SampledTorusMap& f, double tol = 1e-9);

struct HomomorphismCheck {
    double productError = 0.0;  // max |S(f1·f2) - S(f1) - S(f2)|
    double composeError = 0.0;  // max |S(f∘theta) - S(f)∘theta|
};

HomomorphismCheck vkHomomorphismCheck(const SampledTorusMap& f1,
                                      const SampledTorusMap& f2,
                                      const std::vector<std::vector<long>>& theta);

/// Finitely supported function Z^d -> C.
using FiniteSupportFn = std::map<std::vector<int>, std::complex<double>>;

struct ZeroDivisorReport {
    int kernelDim = 0;
    double normRatio = 0.0;  // max over trials of |P_ker f0| / |f0|
    double sigmaMin = 0.0, sigmaMax = 0.0;
    double fourierResidual = 0.0;
};

/// Truncated-kernel check of the convolution equation f*g = 0 for f supported
/// in the radius-R box, plus the Fourier identity (f*g)^ = f^·g^ on random
/// finitely supported pairs.
ZeroDivisorReport zeroDivisorCheck(const FiniteSupportFn& g, int trials, int radius,
                                   unsigned long seed = 20260823);

/// Fraction of uniform random torus points with |p| below the threshold.
double varietyMeasureCheck(const LaurentPoly& p, long samples,
                           unsigned long seed = 20260823, double threshold = 1e-12);

}  // namespace rigid

#endif
