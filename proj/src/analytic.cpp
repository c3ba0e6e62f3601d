#include "rigid/analytic.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <random>

namespace rigid {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double wrapToHalf(double x) { return x - std::round(x); }

double phaseTurns(const std::complex<double>& z) {
    return std::atan2(z.imag(), z.real()) / kTwoPi;
}

}  // namespace

SampledTorusMap SampledTorusMap::fromValues(int m, long N,
                                            std::vector<std::complex<double>> vals) {
    SampledTorusMap f;
    f.m = m;
    f.N = N;
    size_t expect = 1;
    for (int a = 0; a < m; ++a) expect *= static_cast<size_t>(N);
    if (vals.size() != expect)
        throw std::invalid_argument("sample count does not match grid");
    for (auto& v : vals) {
        double a = std::abs(v);
        if (std::abs(a - 1.0) > 1e-6)
            throw std::invalid_argument("samples must have unit modulus");
        v /= a;
    }
    std::complex<double> base = vals[0];
    for (auto& v : vals) v /= base;  // f(e) = 1
    f.values = std::move(vals);
    return f;
}

SampledTorusMap SampledTorusMap::fromCharacterAndLift(
    const std::vector<long>& character, long N,
    const std::function<double(const std::vector<double>&)>& lift) {
    int m = static_cast<int>(character.size());
    size_t total = 1;
    for (int a = 0; a < m; ++a) total *= static_cast<size_t>(N);
    std::vector<std::complex<double>> vals(total);
    std::vector<long> k(m, 0);
    for (size_t p = 0; p < total; ++p) {
        std::vector<double> x(m);
        double phase = 0;
        for (int a = 0; a < m; ++a) {
            x[a] = static_cast<double>(k[a]) / N;
            phase += character[a] * x[a];
        }
        phase += lift(x);
        vals[p] = {std::cos(kTwoPi * phase), std::sin(kTwoPi * phase)};
        int i = m - 1;
        while (i >= 0 && ++k[i] == N) k[i--] = 0;
    }
    return fromValues(m, N, std::move(vals));
}

size_t SampledTorusMap::index(const std::vector<long>& k) const {
    size_t idx = 0;
    for (int a = 0; a < m; ++a) {
        long ka = ((k[a] % N) + N) % N;
        idx = idx * static_cast<size_t>(N) + static_cast<size_t>(ka);
    }
    return idx;
}

namespace {

// Unwrap along a 1-D chain of sample indices starting from a known lift value.
void unwrapChain(const std::vector<double>& phases, const std::vector<size_t>& chain,
                 std::vector<double>& out) {
    for (size_t i = 1; i < chain.size(); ++i) {
        double delta = wrapToHalf(phases[chain[i]] - phases[chain[i - 1]]);
        if (std::abs(delta) >= 0.4)
            throw ResolutionTooCoarse("phase step >= 0.4 turn between neighbors");
        out[chain[i]] = out[chain[i - 1]] + delta;
    }
}

long closureWinding(const std::vector<double>& phases,
                    const std::vector<double>& unwrapped,
                    const std::vector<size_t>& chain) {
    double delta = wrapToHalf(phases[chain.front()] - phases[chain.back()]);
    if (std::abs(delta) >= 0.4)
        throw ResolutionTooCoarse("phase step >= 0.4 turn across the seam");
    double total = unwrapped[chain.back()] + delta - unwrapped[chain.front()];
    long w = std::lround(total);
    if (std::abs(total - w) > 1e-6)
        throw ResolutionTooCoarse("loop closure is not an integer winding");
    return w;
}

VKDecomposition decomposeSweep(const SampledTorusMap& f, bool rowMajor) {
    long N = f.N;
    std::vector<double> phases(f.size());
    for (size_t i = 0; i < f.size(); ++i) phases[i] = phaseTurns(f.values[i]);
    std::vector<double> unwrapped(f.size(), 0.0);
    VKDecomposition dec;
    dec.character.assign(f.m, 0);

    if (f.m == 1) {
        std::vector<size_t> chain(N);
        for (long i = 0; i < N; ++i) chain[i] = static_cast<size_t>(i);
        unwrapChain(phases, chain, unwrapped);
        dec.character[0] = closureWinding(phases, unwrapped, chain);
    } else if (f.m == 2) {
        int firstAxis = rowMajor ? 0 : 1;
        int secondAxis = 1 - firstAxis;
        auto at = [&](long i0, long i1) {
            return static_cast<size_t>(i0) * static_cast<size_t>(N) +
                   static_cast<size_t>(i1);
        };
        // Base line along the first axis through the origin.
        std::vector<size_t> base(N);
        for (long t = 0; t < N; ++t)
            base[t] = firstAxis == 0 ? at(t, 0) : at(0, t);
        unwrapChain(phases, base, unwrapped);
        dec.character[firstAxis] = closureWinding(phases, unwrapped, base);
        // Sweep the second axis from each base point.
        for (long s = 0; s < N; ++s) {
            std::vector<size_t> chain(N);
            for (long t = 0; t < N; ++t)
                chain[t] = secondAxis == 0 ? at(t, s) : at(s, t);
            // chain[0] lies on the base line and is already unwrapped
            unwrapChain(phases, chain, unwrapped);
            if (s == 0)
                dec.character[secondAxis] = closureWinding(phases, unwrapped, chain);
        }
    } else {
        throw std::invalid_argument("only T and T^2 grids are supported");
    }

    dec.lift.resize(f.size());
    double maxRes = 0;
    std::vector<long> k(f.m, 0);
    for (size_t p = 0; p < f.size(); ++p) {
        double charPart = 0;
        for (int a = 0; a < f.m; ++a)
            charPart += static_cast<double>(dec.character[a]) * k[a] / N;
        dec.lift[p] = unwrapped[p] - charPart;
        double ph = kTwoPi * unwrapped[p];
        std::complex<double> rec(std::cos(ph), std::sin(ph));
        maxRes = std::max(maxRes, std::abs(f.values[p] - rec));
        int i = f.m - 1;
        while (i >= 0 && ++k[i] == N) k[i--] = 0;
    }
    // Pin the basepoint: lift(origin) = 0 holds by construction.
    dec.residual = maxRes;
    return dec;
}

}  // namespace

VKDecomposition vkDecompose(const SampledTorusMap& f) {
    return decomposeSweep(f, true);
}

UniquenessCheck vkVerifyUniqueness(const SampledTorusMap& f, double tol) {
    VKDecomposition a = decomposeSweep(f, true);
    VKDecomposition b = decomposeSweep(f, false);
    UniquenessCheck c;
    double mx = 0;
    for (size_t i = 0; i < a.lift.size(); ++i)
        mx = std::max(mx, std::abs(a.lift[i] - b.lift[i]));
    c.maxDiscrepancy = mx;
    c.agreed = (a.character == b.character) && mx < tol;
    return c;
}

HomomorphismCheck vkHomomorphismCheck(const SampledTorusMap& f1,
                                      const SampledTorusMap& f2,
                                      const std::vector<std::vector<long>>& theta) {
    if (f1.m != f2.m || f1.N != f2.N)
        throw std::invalid_argument("grid mismatch");
    HomomorphismCheck out;

    std::vector<std::complex<double>> prod(f1.size());
    for (size_t i = 0; i < f1.size(); ++i) prod[i] = f1.values[i] * f2.values[i];
    SampledTorusMap h = SampledTorusMap::fromValues(f1.m, f1.N, std::move(prod));
    VKDecomposition dh = vkDecompose(h);
    VKDecomposition d1 = vkDecompose(f1);
    VKDecomposition d2 = vkDecompose(f2);
    for (size_t i = 0; i < dh.lift.size(); ++i)
        out.productError = std::max(
            out.productError, std::abs(dh.lift[i] - d1.lift[i] - d2.lift[i]));

    if (!theta.empty()) {
        // g = f1 ∘ theta with theta an integer matrix acting on grid indices.
        long N = f1.N;
        size_t total = f1.size();
        std::vector<std::complex<double>> gv(total);
        std::vector<long> k(f1.m, 0);
        std::vector<size_t> mapped(total);
        for (size_t p = 0; p < total; ++p) {
            std::vector<long> tk(f1.m, 0);
            for (int a = 0; a < f1.m; ++a)
                for (int b = 0; b < f1.m; ++b) tk[a] += theta[a][b] * k[b];
            size_t q = f1.index(tk);
            gv[p] = f1.values[q];
            mapped[p] = q;
            int i = f1.m - 1;
            while (i >= 0 && ++k[i] == N) k[i--] = 0;
        }
        SampledTorusMap g = SampledTorusMap::fromValues(f1.m, N, std::move(gv));
        VKDecomposition dg = vkDecompose(g);
        for (size_t p = 0; p < total; ++p)
            out.composeError = std::max(
                out.composeError, std::abs(dg.lift[p] - d1.lift[mapped[p]]));
    }
    return out;
}

ZeroDivisorReport zeroDivisorCheck(const FiniteSupportFn& g, int trials, int radius,
                                   unsigned long seed) {
    if (g.empty()) throw std::invalid_argument("g must be nonzero");
    int d = static_cast<int>(g.begin()->first.size());
    for (const auto& [k, v] : g)
        if (static_cast<int>(k.size()) != d)
            throw DimensionMismatch("support dimension mismatch");

    // Unknowns: f on the box [-R, R]^d.
    long side = 2L * radius + 1;
    size_t nUnknown = 1;
    for (int a = 0; a < d; ++a) nUnknown *= static_cast<size_t>(side);
    auto boxIndex = [&](const std::vector<int>& k) -> long {
        long idx = 0;
        for (int a = 0; a < d; ++a) {
            int v = k[a] + radius;
            if (v < 0 || v >= side) return -1;
            idx = idx * side + v;
        }
        return idx;
    };

    // Equations: every output point touched by the box under convolution by g.
    int gmin = 0, gmax = 0;
    for (const auto& [k, v] : g)
        for (int x : k) {
            gmin = std::min(gmin, x);
            gmax = std::max(gmax, x);
        }
    int lo = -radius + gmin, hi = radius + gmax;
    long outSide = hi - lo + 1;
    size_t nOut = 1;
    for (int a = 0; a < d; ++a) nOut *= static_cast<size_t>(outSide);

    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(nOut, nUnknown);
    {
        std::vector<int> i(d, lo);
        for (size_t r = 0; r < nOut; ++r) {
            for (const auto& [j, gj] : g) {
                std::vector<int> fj(d);
                for (int a = 0; a < d; ++a) fj[a] = i[a] - j[a];
                long c = boxIndex(fj);
                if (c >= 0) A(r, c) += gj;
            }
            int a = d - 1;
            while (a >= 0 && ++i[a] > hi) i[a--] = lo;
        }
    }

    // Singular structure of A via the Hermitian Gram matrix A^H A: the
    // eigenvectors are the right singular vectors, eigenvalues are sigma^2.
    Eigen::MatrixXcd gram = A.adjoint() * A;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(gram);
    const auto& ev = eig.eigenvalues();  // ascending
    ZeroDivisorReport rep;
    auto sigma = [&](long i) { return std::sqrt(std::max(ev(i), 0.0)); };
    rep.sigmaMax = ev.size() ? sigma(ev.size() - 1) : 0.0;
    rep.sigmaMin = ev.size() ? sigma(0) : 0.0;
    double tol = 1e-10 * std::max(rep.sigmaMax, 1.0);
    std::vector<long> kernelCols;
    for (long i = 0; i < ev.size(); ++i)
        if (sigma(i) <= tol) kernelCols.push_back(i);
    rep.kernelDim = static_cast<int>(kernelCols.size());

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double maxRatio = 0;
    for (int t = 0; t < trials; ++t) {
        Eigen::VectorXcd f0(nUnknown);
        for (size_t i = 0; i < nUnknown; ++i) f0(i) = {gauss(rng), gauss(rng)};
        f0.normalize();
        double proj = 0;
        for (long i : kernelCols) {
            std::complex<double> c = eig.eigenvectors().col(i).adjoint() * f0;
            proj += std::norm(c);
        }
        maxRatio = std::max(maxRatio, std::sqrt(proj));
    }
    rep.normRatio = maxRatio;

    // Fourier identity (f*g)^ = f^ · g^ on random finitely supported f.
    double maxFourier = 0;
    int fr = 4;
    for (int t = 0; t < std::max(trials, 1); ++t) {
        FiniteSupportFn f;
        std::vector<int> k(d, -fr);
        for (;;) {
            f[k] = {gauss(rng), gauss(rng)};
            int a = d - 1;
            while (a >= 0 && ++k[a] > fr) k[a--] = -fr;
            if (std::all_of(k.begin(), k.end(), [&](int x) { return x == -fr; }))
                break;
        }
        FiniteSupportFn conv;
        for (const auto& [i, fi] : f)
            for (const auto& [j, gj] : g) {
                std::vector<int> s(d);
                for (int a = 0; a < d; ++a) s[a] = i[a] + j[a];
                conv[s] += fi * gj;
            }
        auto transform = [&](const FiniteSupportFn& h,
                             const std::vector<double>& th) {
            std::complex<double> s(0, 0);
            for (const auto& [i, hi] : h) {
                double ph = 0;
                for (int a = 0; a < d; ++a) ph += th[a] * i[a];
                s += hi * std::complex<double>(std::cos(kTwoPi * ph),
                                               std::sin(kTwoPi * ph));
            }
            return s;
        };
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        for (int s = 0; s < 16; ++s) {
            std::vector<double> th(d);
            for (int a = 0; a < d; ++a) th[a] = uni(rng);
            std::complex<double> lhs = transform(conv, th);
            std::complex<double> rhs = transform(f, th) * transform(g, th);
            maxFourier = std::max(maxFourier, std::abs(lhs - rhs));
        }
    }
    rep.fourierResidual = maxFourier;
    return rep;
}

double varietyMeasureCheck(const LaurentPoly& p, long samples, unsigned long seed,
                           double threshold) {
    if (p.isZero()) throw std::invalid_argument("p must be nonzero");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    int d = p.dim();
    long hits = 0;
    for (long s = 0; s < samples; ++s) {
        std::vector<std::complex<double>> z(d);
        for (int a = 0; a < d; ++a) {
            double th = kTwoPi * uni(rng);
            z[a] = {std::cos(th), std::sin(th)};
        }
        if (std::abs(p.eval(z)) < threshold) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(samples);
}

}  // namespace rigid
