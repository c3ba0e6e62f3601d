#include "rigid/entropy.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

namespace rigid {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double pairwiseSum(const std::vector<double>& xs, size_t lo, size_t hi) {
    if (hi - lo <= 8) {
        double s = 0;
        for (size_t i = lo; i < hi; ++i) s += xs[i];
        return s;
    }
    size_t mid = lo + (hi - lo) / 2;
    return pairwiseSum(xs, lo, mid) + pairwiseSum(xs, mid, hi);
}

double pairwiseMean(const std::vector<double>& xs) {
    if (xs.empty()) return 0.0;
    return pairwiseSum(xs, 0, xs.size()) / static_cast<double>(xs.size());
}

double mpzLog(const Int& n) {
    long exp2;
    double m = mpz_get_d_2exp(&exp2, n.get_mpz_t());
    return std::log(std::abs(m)) + static_cast<double>(exp2) * std::log(2.0);
}

// Mean of log|f| over the lattice theta_k = (k/N + shift_a), one shift per
// axis. Returns nullopt when too many samples sit on (numerical) zeros.
std::optional<double> latticeLogMean(const LaurentPoly& f, long N,
                                     const std::vector<double>& shifts,
                                     long* skipped = nullptr) {
    int d = f.dim();
    size_t nTerms = f.termCount();
    std::vector<double> coeffs;
    std::vector<std::vector<int>> exps;
    for (const auto& [m, c] : f.terms()) {
        coeffs.push_back(c.get_d());
        exps.push_back(m.e);
    }
    // table[a][t*N + k] = exp(2 pi i * e_{t,a} * (k/N + shift_a))
    std::vector<std::vector<std::complex<double>>> table(d);
    for (int a = 0; a < d; ++a) {
        table[a].resize(nTerms * N);
        for (size_t t = 0; t < nTerms; ++t) {
            double e = exps[t][a];
            for (long k = 0; k < N; ++k) {
                double th = kTwoPi * e * (static_cast<double>(k) / N + shifts[a]);
                table[a][t * N + k] = {std::cos(th), std::sin(th)};
            }
        }
    }
    size_t total = 1;
    for (int a = 0; a < d; ++a) total *= static_cast<size_t>(N);
    std::vector<double> logs;
    logs.reserve(total);
    long nSkipped = 0;
    std::vector<long> idx(d, 0);
    for (size_t p = 0; p < total; ++p) {
        std::complex<double> s(0, 0);
        for (size_t t = 0; t < nTerms; ++t) {
            std::complex<double> term(coeffs[t], 0);
            for (int a = 0; a < d; ++a) term *= table[a][t * N + idx[a]];
            s += term;
        }
        double a = std::abs(s);
        if (a < 1e-13) {
            ++nSkipped;
        } else {
            logs.push_back(std::log(a));
        }
        int i = d - 1;
        while (i >= 0 && ++idx[i] == N) idx[i--] = 0;
    }
    if (skipped) *skipped = nSkipped;
    if (nSkipped > static_cast<long>(total) / 1000) return std::nullopt;
    return pairwiseMean(logs);
}

}  // namespace

MahlerEstimate mahlerD1Exact(const LaurentPoly& f) {
    if (f.isZero()) throw MahlerFailure("Mahler measure of zero");
    if (f.dim() != 1) throw DimensionMismatch("mahlerD1Exact expects d = 1");
    std::vector<Int> c = denseCoeffs(f);
    int D = static_cast<int>(c.size()) - 1;
    MahlerEstimate est;
    est.method = "root-formula";
    est.resolution = D;
    if (D == 0) {
        est.estimate = mpzLog(c[0]);
        return est;
    }
    double lead = c[D].get_d();
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(D, D);
    for (int i = 1; i < D; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < D; ++i) comp(i, D - 1) = -c[i].get_d() / lead;
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp);
    if (es.info() != Eigen::Success) throw MahlerFailure("eigen solver failed");

    std::vector<double> cd(D + 1);
    for (int i = 0; i <= D; ++i) cd[i] = c[i].get_d();
    double sum = mpzLog(c[D]);
    double maxResidual = 0;
    for (int r = 0; r < D; ++r) {
        std::complex<double> z = es.eigenvalues()[r];
        // Newton polishing against the original integer coefficients.
        for (int it = 0; it < 8; ++it) {
            std::complex<double> p(cd[D], 0), dp(0, 0);
            for (int i = D - 1; i >= 0; --i) {
                dp = dp * z + p;
                p = p * z + cd[i];
            }
            if (std::abs(dp) == 0.0) break;
            std::complex<double> step = p / dp;
            z -= step;
            if (std::abs(step) < 1e-16 * std::max(1.0, std::abs(z))) break;
        }
        // Residual relative to the coefficient scale at z.
        std::complex<double> p(cd[D], 0);
        double scale = std::abs(cd[D]);
        for (int i = D - 1; i >= 0; --i) {
            p = p * z + cd[i];
            scale = scale * std::abs(z) + std::abs(cd[i]);
        }
        double res = std::abs(p) / std::max(scale, 1.0);
        maxResidual = std::max(maxResidual, res);
        if (res > 1e-8) throw MahlerFailure("root polishing did not converge");
        double az = std::abs(z);
        if (az > 1.0) sum += std::log(az);
    }
    est.estimate = sum;
    est.errorIndicator = std::max(maxResidual, 1e-14);
    if (est.estimate < 0) {
        if (est.estimate < -1e-9) throw MahlerFailure("negative Mahler estimate");
        est.estimate = 0;
    }
    return est;
}

MahlerEstimate mahlerQuadrature(const LaurentPoly& f, long grid) {
    if (f.isZero()) throw MahlerFailure("Mahler measure of zero");
    if (grid < 2) throw std::invalid_argument("grid too small");
    int d = f.dim();
    const double sqrt2 = std::sqrt(2.0), sqrt3 = std::sqrt(3.0);
    for (int attempt = 0; attempt < 2; ++attempt) {
        std::vector<double> shifts(d);
        double base = attempt == 0 ? sqrt2 : sqrt3;
        for (int a = 0; a < d; ++a) shifts[a] = std::fmod(base * (a + 1), 1.0);
        auto eN = latticeLogMean(f, grid, shifts);
        auto e2N = latticeLogMean(f, 2 * grid, shifts);
        if (!eN || !e2N) continue;  // singular grid, retry with a new shift
        MahlerEstimate est;
        est.method = "quadrature";
        est.resolution = grid;
        est.estimate = *eN;
        est.errorIndicator = std::abs(*eN - *e2N);
        // A slightly negative finite-grid mean is within the method's own
        // error; only a gross violation signals numerical failure.
        if (est.estimate < -(10 * est.errorIndicator + 1e-2))
            throw MahlerFailure("negative Mahler estimate from quadrature");
        if (est.estimate < 0) est.estimate = 0;
        return est;
    }
    throw MahlerFailure("singular grid after shift retry");
}

MahlerEstimate mahlerRootsOfUnity(const LaurentPoly& f, long order) {
    if (f.isZero()) throw MahlerFailure("Mahler measure of zero");
    if (order < 2) throw std::invalid_argument("order must be >= 2");
    int d = f.dim();
    std::vector<double> shifts(d, 0.0);
    long skipped = 0;
    auto mean = latticeLogMean(f, order, shifts, &skipped);
    size_t total = 1;
    for (int a = 0; a < d; ++a) total *= static_cast<size_t>(order);
    if (skipped == static_cast<long>(total))
        throw MahlerFailure("f vanishes at every N-torsion point; increase N");
    MahlerEstimate est;
    est.method = "roots-of-unity-limit";
    est.resolution = order;
    est.skippedPoints = skipped;
    if (mean) {
        est.estimate = *mean;
    } else {
        // More than the singular-grid fraction vanished but not all: average
        // the surviving points directly.
        // latticeLogMean already skipped them; recompute without the cutoff.
        std::vector<double> logs;
        std::vector<long> idx(d, 0);
        std::vector<double> coeffs;
        std::vector<std::vector<int>> exps;
        for (const auto& [m, c] : f.terms()) {
            coeffs.push_back(c.get_d());
            exps.push_back(m.e);
        }
        for (size_t p = 0; p < total; ++p) {
            std::complex<double> s(0, 0);
            for (size_t t = 0; t < coeffs.size(); ++t) {
                std::complex<double> term(coeffs[t], 0);
                for (int a = 0; a < d; ++a) {
                    double th = kTwoPi * exps[t][a] * idx[a] / order;
                    term *= std::complex<double>(std::cos(th), std::sin(th));
                }
                s += term;
            }
            double ab = std::abs(s);
            if (ab >= 1e-13) logs.push_back(std::log(ab));
            int i = d - 1;
            while (i >= 0 && ++idx[i] == order) idx[i--] = 0;
        }
        est.estimate = pairwiseMean(logs);
    }
    // A coarse resolution-based indicator: compare with the half order.
    if (order >= 4 && order % 2 == 0) {
        long sk2 = 0;
        auto half = latticeLogMean(f, order / 2, shifts, &sk2);
        if (half) est.errorIndicator = std::abs(est.estimate - *half);
    }
    if (est.estimate < 0 && est.estimate > -1e-6) est.estimate = 0;
    return est;
}

Int resultantWithCyclotomic(const std::vector<Int>& coeffs, long N) {
    std::vector<Int> f = coeffs;
    while (!f.empty() && f.back() == 0) f.pop_back();
    if (f.empty()) return 0;
    long D = static_cast<long>(f.size()) - 1;
    if (D == 0) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), f[0].get_mpz_t(), N);
        return abs(r);
    }
    // Sylvester matrix of t^N - 1 (degree N) and f (degree D).
    long n = N + D;
    std::vector<std::vector<Int>> S(n, std::vector<Int>(n, Int(0)));
    for (long r = 0; r < D; ++r) {
        S[r][r] = 1;        // t^N coefficient
        S[r][r + N] = -1;   // constant term
    }
    for (long r = 0; r < N; ++r)
        for (long i = 0; i <= D; ++i) S[D + r][r + i] = f[D - i];
    // Fraction-free Bareiss determinant.
    Int prev = 1;
    int sign = 1;
    for (long kk = 0; kk < n - 1; ++kk) {
        if (S[kk][kk] == 0) {
            long p = -1;
            for (long i = kk + 1; i < n; ++i)
                if (S[i][kk] != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            std::swap(S[kk], S[p]);
            sign = -sign;
        }
        for (long i = kk + 1; i < n; ++i) {
            for (long j = kk + 1; j < n; ++j) {
                Int num = S[kk][kk] * S[i][j] - S[i][kk] * S[kk][j];
                S[i][j] = num / prev;  // exact
            }
            S[i][kk] = 0;
        }
        prev = S[kk][kk];
    }
    Int det = S[n - 1][n - 1] * sign;
    return abs(det);
}

std::vector<PeriodicPointEntry> periodicPointGrowth(const LaurentPoly& f,
                                                    const std::vector<long>& orders) {
    if (f.isZero()) throw MahlerFailure("periodic points of the zero polynomial");
    int d = f.dim();
    std::vector<PeriodicPointEntry> out;
    for (long N : orders) {
        PeriodicPointEntry e;
        e.order = N;
        if (d == 1) {
            Int count = resultantWithCyclotomic(denseCoeffs(f), N);
            if (count == 0) {
                e.degenerate = true;
                e.exactCount = "0";
            } else {
                e.exactCount = count.get_str();
                e.growthRate = mpzLog(count) / static_cast<double>(N);
            }
        } else {
            std::vector<double> shifts(d, 0.0);
            long skipped = 0;
            auto mean = latticeLogMean(f, N, shifts, &skipped);
            if (skipped > 0 || !mean) {
                e.degenerate = true;
            } else {
                double total = 1;
                for (int a = 0; a < d; ++a) total *= static_cast<double>(N);
                e.growthRate = *mean;  // already the per-point average
                (void)total;
            }
        }
        out.push_back(e);
    }
    return out;
}

namespace {

MahlerEstimate bestMahler(const LaurentPoly& g, const EntropyOptions& opt) {
    if (g.dim() == 1) return mahlerD1Exact(g);
    return mahlerQuadrature(g, opt.mahlerGrid);
}

}  // namespace

EntropyReport entropyClassify(const ModulePresentation& M, const EntropyOptions& opt,
                              const Limits& lim) {
    EntropyReport rep;
    bool torsion = isTorsion(M);
    rep.finite = torsion;
    if (!torsion) {
        rep.kind = EntropyReport::ValueKind::Infinite;
        rep.method = "full-shift factor (module has positive rank)";
        return rep;
    }

    // Zero module => trivial group => entropy zero.
    {
        SubmoduleHandle rel = M.relationModule();
        bool zero = true;
        for (int j = 0; j < M.k && zero; ++j) {
            PolyVec e(M.k, LaurentPoly(M.d));
            e[j] = LaurentPoly::constant(M.d, 1);
            if (!isMember(e, rel, lim)) zero = false;
        }
        if (zero) {
            rep.kind = EntropyReport::ValueKind::Zero;
            rep.method = "trivial group";
            return rep;
        }
    }

    if (M.isPrincipal()) {
        const LaurentPoly& f = M.relations.entries[0][0];
        if (M.d == 1) {
            MahlerEstimate e = mahlerD1Exact(f);
            rep.kind = EntropyReport::ValueKind::Exact;
            rep.value = e.estimate;
            rep.method = e.method;
            rep.diagnostics.push_back(e);
            return rep;
        }
        MahlerEstimate q = mahlerQuadrature(f, opt.mahlerGrid);
        MahlerEstimate r = mahlerRootsOfUnity(f, opt.rootsOfUnityOrder);
        double err = 3 * q.errorIndicator + std::abs(q.estimate - r.estimate) + 1e-4;
        rep.kind = EntropyReport::ValueKind::Interval;
        rep.lo = std::max(0.0, std::min(q.estimate, r.estimate) - err);
        rep.hi = std::max(q.estimate, r.estimate) + err;
        rep.value = q.estimate;
        rep.method = "quadrature + roots-of-unity cross-check";
        rep.diagnostics = {q, r};
        return rep;
    }

    if (M.isCyclic()) {
        // Non-principal cyclic torsion: each generator g of the relation ideal
        // gives the bound h(R_d/(g)) = m(g); take the minimum.
        std::optional<double> best;
        for (const auto& row : M.relations.entries) {
            const LaurentPoly& g = row[0];
            if (g.isZero()) continue;
            MahlerEstimate e = bestMahler(g, opt);
            rep.diagnostics.push_back(e);
            double v = e.estimate + e.errorIndicator;
            if (!best || v < *best) best = v;
        }
        rep.kind = EntropyReport::ValueKind::UpperBound;
        rep.value = best.value_or(0.0);
        rep.method = "min over generators of m(g)";
        return rep;
    }

    // k > 1: sum per-generator annihilator bounds when each generator has a
    // relation supported on it alone.
    double sum = 0;
    bool allBounded = true;
    for (int j = 0; j < M.k && allBounded; ++j) {
        std::optional<double> best;
        for (const auto& row : M.relations.entries) {
            bool onlyJ = !row[j].isZero();
            for (int i = 0; i < M.k && onlyJ; ++i)
                if (i != j && !row[i].isZero()) onlyJ = false;
            if (!onlyJ) continue;
            MahlerEstimate e = bestMahler(row[j], opt);
            double v = e.estimate + e.errorIndicator;
            if (!best || v < *best) best = v;
        }
        if (best) {
            sum += *best;
        } else {
            allBounded = false;
        }
    }
    if (allBounded) {
        rep.kind = EntropyReport::ValueKind::UpperBound;
        rep.value = sum;
        rep.method = "sum of per-generator bounds";
    } else {
        rep.kind = EntropyReport::ValueKind::FiniteNoValue;
        rep.method = "torsion certified; no per-generator bound available";
    }
    return rep;
}

}  // namespace rigid
