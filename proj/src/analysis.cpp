#include "rigid/analysis.hpp"

#include <algorithm>

namespace rigid {

ModulePresentation::ModulePresentation(int d_, int k_,
                                       std::vector<std::vector<LaurentPoly>> rows,
                                       std::string name_)
    : d(d_), k(k_), name(std::move(name_)) {
    // Drop zero rows at construction; monomial-normalize the rest.
    std::vector<std::vector<LaurentPoly>> kept;
    for (auto& r : rows) {
        if (static_cast<int>(r.size()) != k_)
            throw DimensionMismatch("relation row has wrong length");
        bool zero = true;
        for (const auto& p : r)
            if (!p.isZero()) zero = false;
        if (!zero) kept.push_back(std::move(r));
    }
    relations = PolyMatrix(static_cast<int>(kept.size()), k_, d_);
    for (size_t i = 0; i < kept.size(); ++i)
        for (int j = 0; j < k_; ++j)
            relations.entries[i][j] = kept[i][j].monomialNormalize();
}

ModulePresentation ModulePresentation::cyclic(int d_, const LaurentPoly& f,
                                              std::string name_) {
    return ModulePresentation(d_, 1, {{f}}, std::move(name_));
}

ModulePresentation ModulePresentation::freeModule(int d_, int k_, std::string name_) {
    return ModulePresentation(d_, k_, {}, std::move(name_));
}

SubmoduleHandle ModulePresentation::relationModule() const {
    std::vector<PolyVec> rows;
    for (const auto& r : relations.entries) rows.push_back(r);
    return SubmoduleHandle(d, k, std::move(rows));
}

int relationRank(const PolyMatrix& relations) {
    int m = relations.rows, n = relations.cols;
    if (m == 0 || n == 0) return 0;
    int d = 1;
    for (const auto& row : relations.entries)
        for (const auto& p : row) d = p.dim();
    // Bareiss fraction-free elimination; division by the previous pivot is
    // exact in the Laurent ring (entries are minors of the original matrix).
    std::vector<std::vector<LaurentPoly>> A;
    for (const auto& row : relations.entries) {
        std::vector<LaurentPoly> r;
        for (const auto& p : row) r.push_back(p);
        A.push_back(std::move(r));
    }
    LaurentPoly prev = LaurentPoly::constant(d, 1);
    int rank = 0;
    for (int step = 0; rank < m && rank < n; ++step) {
        int pr = -1, pc = -1;
        for (int i = rank; i < m && pr < 0; ++i)
            for (int j = rank; j < n; ++j)
                if (!A[i][j].isZero()) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr < 0) break;
        std::swap(A[rank], A[pr]);
        for (int i = 0; i < m; ++i) std::swap(A[i][rank], A[i][pc]);
        for (int i = rank + 1; i < m; ++i) {
            for (int j = rank + 1; j < n; ++j) {
                LaurentPoly num = A[rank][rank] * A[i][j] - A[i][rank] * A[rank][j];
                LaurentPoly q(d);
                if (!exactDivide(num, prev, q))
                    throw std::logic_error("Bareiss: inexact division");
                A[i][j] = std::move(q);
            }
            A[i][rank] = LaurentPoly(d);
        }
        prev = A[rank][rank];
        ++rank;
    }
    return rank;
}

int fractionFieldRank(const ModulePresentation& M) {
    return M.k - relationRank(M.relations);
}

bool isTorsion(const ModulePresentation& M) { return fractionFieldRank(M) == 0; }

namespace {

std::vector<Int> primeFactors(Int n) {
    std::vector<Int> out;
    n = abs(n);
    if (n <= 1) return out;
    for (Int p = 2; p * p <= n && p < 100000; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
            out.push_back(n);
        } else {
            // Rare at this engine's scale: fall back to full trial division.
            for (Int p = 100001; p * p <= n; p += 2) {
                if (n % p == 0) {
                    out.push_back(p);
                    while (n % p == 0) n /= p;
                }
            }
            if (n > 1) out.push_back(n);
        }
    }
    return out;
}

// A generator of C not lying in U (saturated sense); C is known to strictly
// contain U.
std::optional<PolyVec> strictGenerator(const SubmoduleHandle& C,
                                       const SubmoduleHandle& U, const Limits& lim) {
    for (const auto& r : C.rows())
        if (!isMember(r, U, lim)) return r;
    for (const auto& g : C.saturated(lim).rows())
        if (!isMember(g, U, lim)) return g;
    return std::nullopt;
}

}  // namespace

ConnectednessReport isConnected(const ModulePresentation& M, const Limits& lim) {
    ConnectednessReport rep;
    if (M.isPrincipal()) {
        const LaurentPoly& f = M.relations.entries[0][0];
        Int c = f.content();
        rep.method = "content";
        if (c > 1) {
            rep.connected = false;
            rep.prime = primeFactors(c).front();
            LaurentPoly v(M.d);
            if (!exactDivide(f, LaurentPoly::constant(M.d, *rep.prime), v))
                throw std::logic_error("content division failed");
            rep.certificate = PolyVec{v};
        }
        return rep;
    }
    rep.method = "colon";
    SubmoduleHandle rel = M.relationModule();
    if (M.relations.rows == 0) return rep;  // free module, torsion-free
    const StrongGBasis& B = rel.saturated(lim).basis(lim);
    std::vector<Int> primes;
    for (const auto& g : B.gens) {
        auto lt = leadingTerm(g, B.order);
        for (const Int& p : primeFactors(lt->coeff))
            if (std::find(primes.begin(), primes.end(), p) == primes.end())
                primes.push_back(p);
    }
    std::sort(primes.begin(), primes.end());
    rep.primeSetHeuristic = !M.isCyclic();
    for (const Int& c : primes) {
        SubmoduleHandle C = moduleColon(rel, LaurentPoly::constant(M.d, c), lim);
        if (!submoduleEqual(C, rel, lim)) {
            rep.connected = false;
            rep.prime = c;
            rep.certificate = strictGenerator(C, rel, lim);
            return rep;
        }
    }
    return rep;
}

std::vector<std::vector<int>> mixingDirections(int d, int bound) {
    std::vector<std::vector<int>> out;
    for (int shell = 1; shell <= bound; ++shell) {
        std::vector<std::vector<int>> inShell;
        std::vector<int> n(d, -shell);
        for (;;) {
            int mx = 0;
            for (int x : n) mx = std::max(mx, std::abs(x));
            if (mx == shell) {
                // canonical representative of {n, -n}: first nonzero positive
                int firstNz = 0;
                for (int x : n)
                    if (x != 0) {
                        firstNz = x;
                        break;
                    }
                if (firstNz > 0) inShell.push_back(n);
            }
            int i = d - 1;
            while (i >= 0 && n[i] == shell) n[i--] = -shell;
            if (i < 0) break;
            ++n[i];
        }
        std::sort(inShell.begin(), inShell.end());
        out.insert(out.end(), inShell.begin(), inShell.end());
    }
    return out;
}

std::vector<Int> denseCoeffs(const LaurentPoly& f) {
    LaurentPoly g = f.monomialNormalize();
    if (g.dim() != 1) throw DimensionMismatch("expected a one-variable polynomial");
    int deg = 0;
    for (const auto& [m, c] : g.terms()) deg = std::max(deg, m.e[0]);
    std::vector<Int> out(g.isZero() ? 0 : deg + 1, Int(0));
    for (const auto& [m, c] : g.terms()) out[m.e[0]] = c;
    return out;
}

namespace {

void trimZeros(std::vector<Int>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Int vecContent(const std::vector<Int>& a) {
    Int g = 0;
    for (const Int& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

void makePrimitive(std::vector<Int>& a) {
    Int g = vecContent(a);
    if (g > 1)
        for (Int& c : a) c /= g;
}

// Pseudo-remainder of a by b (deg a >= deg b > 0).
std::vector<Int> pseudoRem(std::vector<Int> a, const std::vector<Int>& b) {
    Int lb = b.back();
    int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        int da = static_cast<int>(a.size()) - 1;
        Int la = a.back();
        for (Int& c : a) c *= lb;
        for (int i = 0; i <= db; ++i) a[da - db + i] -= la * b[i];
        trimZeros(a);
    }
    return a;
}

}  // namespace

std::vector<Int> univariateGcd(std::vector<Int> a, std::vector<Int> b) {
    trimZeros(a);
    trimZeros(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    makePrimitive(a);
    makePrimitive(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        if (b.size() == 1) return {Int(1)};
        std::vector<Int> r = pseudoRem(a, b);
        makePrimitive(r);
        a = std::move(b);
        b = std::move(r);
        if (a.size() < b.size()) std::swap(a, b);
    }
    return a;
}

bool hasCyclotomicFactor(const std::vector<Int>& coeffs) {
    std::vector<Int> f = coeffs;
    trimZeros(f);
    if (f.size() <= 1) return false;
    long deg = static_cast<long>(f.size()) - 1;
    long bound = 2 * deg * deg + 6;  // phi(m) <= deg forces m <= 2 deg^2
    for (long m = 1; m <= bound; ++m) {
        std::vector<Int> tm(m + 1, Int(0));
        tm[0] = -1;
        tm[m] = 1;
        std::vector<Int> g = univariateGcd(f, tm);
        if (g.size() > 1) return true;
    }
    return false;
}

MixingStatus mixingSearch(const ModulePresentation& M, int bound, const Limits& lim) {
    if (bound < 1) throw std::invalid_argument("mixing bound must be positive");
    SubmoduleHandle rel = M.relationModule();

    // Zero module: trivial group, vacuously mixing.
    {
        bool zero = true;
        for (int j = 0; j < M.k && zero; ++j) {
            PolyVec e(M.k, LaurentPoly(M.d));
            e[j] = LaurentPoly::constant(M.d, 1);
            if (!isMember(e, rel, lim)) zero = false;
        }
        if (zero) return MixingStatus{MixingStatus::Kind::MixingCertified,
                                      std::nullopt, 0, "zero module"};
    }

    for (const auto& n : mixingDirections(M.d, bound)) {
        LaurentPoly p = unMinusOne(M.d, n);
        SubmoduleHandle C = moduleColon(rel, p, lim);
        if (!submoduleEqual(C, rel, lim)) {
            NotMixingWitness w;
            w.direction = n;
            auto cert = strictGenerator(C, rel, lim);
            if (!cert) throw std::logic_error("missing mixing certificate");
            w.certificate = *cert;
            return MixingStatus{MixingStatus::Kind::NotMixing, w, 0, ""};
        }
    }

    if (M.d == 1 && M.isPrincipal()) {
        const LaurentPoly& f = M.relations.entries[0][0];
        if (!f.isZero() && !hasCyclotomicFactor(denseCoeffs(f)))
            return MixingStatus{MixingStatus::Kind::MixingCertified, std::nullopt, 0,
                                "no cyclotomic factor (exact univariate gcd test)"};
    }

    return MixingStatus{MixingStatus::Kind::NoWitnessUpTo, std::nullopt, bound, ""};
}

NoetherianReport isNoetherian(const ModulePresentation& M) {
    (void)M;
    return NoetherianReport{
        true,
        "finitely presented over R_d, hence Noetherian (R_d is Noetherian)"};
}

}  // namespace rigid
