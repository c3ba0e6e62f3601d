#ifndef RIGID_ANALYSIS_HPP
#define RIGID_ANALYSIS_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rigid/grobner.hpp"
#include "rigid/laurent.hpp"

namespace rigid {

/// Finitely presented module M = R_d^k / row-span(relations), the dual module
/// of an algebraic Z^d-action. Finitely presented, hence Noetherian.
struct ModulePresentation {
    int d = 1;
    int k = 1;
    PolyMatrix relations;  // k columns, one row per relation
    std::string name;

    ModulePresentation() = default;
    ModulePresentation(int d_, int k_, std::vector<std::vector<LaurentPoly>> rows,
                       std::string name_ = "");
    static ModulePresentation cyclic(int d_, const LaurentPoly& f,
                                     std::string name_ = "");
    static ModulePresentation freeModule(int d_, int k_ = 1, std::string name_ = "");

    bool isCyclic() const { return k == 1; }
    bool isPrincipal() const { return k == 1 && relations.rows == 1; }

    SubmoduleHandle relationModule() const;
};

struct NotMixingWitness {
    std::vector<int> direction;  // nonzero n with u^n - 1 a zero divisor on M
    PolyVec certificate;         // v not in relations with (u^n - 1)·v in relations
};

struct MixingStatus {
    enum class Kind { NotMixing, NoWitnessUpTo, MixingCertified };
    Kind kind;
    std::optional<NotMixingWitness> witness;  // NotMixing
    int bound = 0;                            // NoWitnessUpTo
    std::string reason;                       // MixingCertified
};

struct ConnectednessReport {
    bool connected = true;
    // For a disconnected system: a prime c and v with c·v in relations,
    // v not in relations.
    std::optional<Int> prime;
    std::optional<PolyVec> certificate;
    std::string method;  // "content" or "colon"
    bool primeSetHeuristic = false;  // general (non-principal) prime set caveat
};

/// Rank of the relation matrix over the fraction field of R_d (Bareiss,
/// fraction-free, exact). Module rank of M is k minus this.
int relationRank(const PolyMatrix& relations);
int fractionFieldRank(const ModulePresentation& M);  // rank of M itself

bool isTorsion(const ModulePresentation& M);

ConnectednessReport isConnected(const ModulePresentation& M, const Limits& lim = {});

MixingStatus mixingSearch(const ModulePresentation& M, int bound,
                          const Limits& lim = {});

/// Always true for finitely presented input; carries the explanatory note.
struct NoetherianReport {
    bool noetherian = true;
    std::string note;
};
NoetherianReport isNoetherian(const ModulePresentation& M);

/// Enumeration order of the mixing search: increasing sup-norm shells,
/// lexicographic within a shell, one representative of {n, -n}.
std::vector<std::vector<int>> mixingDirections(int d, int bound);

/// gcd in Z[t] of two univariate polynomials given by dense coefficients
/// (primitive pseudo-remainder sequence); degree of the result.
std::vector<Int> univariateGcd(std::vector<Int> a, std::vector<Int> b);

/// Dense coefficient vector (constant term first) of a one-variable
/// LaurentPoly after monomial normalization.
std::vector<Int> denseCoeffs(const LaurentPoly& f);

/// True iff the univariate integer polynomial has a cyclotomic factor,
/// decided exactly by gcds with t^m - 1 for m up to 2·deg^2.
bool hasCyclotomicFactor(const std::vector<Int>& coeffs);

}  // namespace rigid

#endif
