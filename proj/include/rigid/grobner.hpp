#ifndef RIGID_GROBNER_HPP
#define RIGID_GROBNER_HPP

#include <memory>
#include <optional>
#include <vector>

#include "rigid/laurent.hpp"

namespace rigid {

struct Limits {
    long maxPairs = 200000;
    long maxCoeffBits = 1 << 20;
};

struct BudgetExceeded : std::runtime_error {
    long pairsUsed;
    explicit BudgetExceeded(long used)
        : std::runtime_error("pair budget exceeded after " + std::to_string(used) +
                             " pairs"),
          pairsUsed(used) {}
};

struct MonomialOrder {
    enum class Kind { GrevLex, Lex, Elim };
    Kind kind = Kind::GrevLex;
    int elimBlock = 0;       // leading variables eliminated first (Kind::Elim)
    bool termOverPosition = true;

    static MonomialOrder grevlex() { return MonomialOrder{}; }
    static MonomialOrder lex() { return MonomialOrder{Kind::Lex, 0, true}; }
    static MonomialOrder elim(int block) { return MonomialOrder{Kind::Elim, block, true}; }

    int cmp(const Monomial& a, const Monomial& b) const;  // -1 / 0 / +1
    // Module monomials (position, monomial); larger means reduced first.
    int cmpMod(int posA, const Monomial& a, int posB, const Monomial& b) const;
};

/// Element of the free module R^k, as a vector of polynomials.
using PolyVec = std::vector<LaurentPoly>;

struct ModTerm {
    int pos;
    Monomial mon;
    Int coeff;
};

bool vecIsZero(const PolyVec& v);
PolyVec vecSub(const PolyVec& a, const PolyVec& b);
PolyVec vecScale(const PolyVec& v, const LaurentPoly& f);
std::optional<ModTerm> leadingTerm(const PolyVec& v, const MonomialOrder& o);

/// Strong Groebner basis over Z: every S- and G-polynomial of pairs reduces
/// to zero, normal forms are unique (remainders in [0, lc)).
struct StrongGBasis {
    std::vector<PolyVec> gens;
    MonomialOrder order;
    int dim = 0;
    int rank = 0;
    long pairsUsed = 0;
};

StrongGBasis strongGroebner(const std::vector<PolyVec>& gens, int dim, int rank,
                            const MonomialOrder& order, const Limits& lim = {});

PolyVec normalForm(const PolyVec& v, const StrongGBasis& B);

/// Finitely generated submodule of R_d^k; caches its basis and saturation.
class SubmoduleHandle {
  public:
    SubmoduleHandle(int dim, int rank, std::vector<PolyVec> rows);
    static SubmoduleHandle ideal(int dim, std::vector<LaurentPoly> gens);

    int dim() const { return dim_; }
    int rank() const { return rank_; }
    const std::vector<PolyVec>& rows() const { return rows_; }

    const StrongGBasis& basis(const Limits& lim = {}) const;
    const SubmoduleHandle& saturated(const Limits& lim = {}) const;

  private:
    int dim_, rank_;
    std::vector<PolyVec> rows_;
    mutable std::shared_ptr<StrongGBasis> basis_;
    mutable std::shared_ptr<SubmoduleHandle> saturated_;
};

/// Laurent-sense membership: v in U·R_d, via saturation at u_1...u_d.
bool isMember(const PolyVec& v, const SubmoduleHandle& U, const Limits& lim = {});
bool isMember(const LaurentPoly& v, const SubmoduleHandle& U, const Limits& lim = {});

/// (U : (u_1...u_d)^inf) via the extra-variable elimination trick.
SubmoduleHandle saturateVars(const SubmoduleHandle& U, const Limits& lim = {});

/// {v : h·v in U}, via intersection with h·R^k and exact division.
SubmoduleHandle moduleColon(const SubmoduleHandle& U, const LaurentPoly& h,
                            const Limits& lim = {});

/// Equality as Laurent submodules (mutual membership after saturation).
bool submoduleEqual(const SubmoduleHandle& U, const SubmoduleHandle& V,
                    const Limits& lim = {});

}  // namespace rigid

#endif
