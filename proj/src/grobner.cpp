#include "rigid/grobner.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

namespace rigid {

namespace {

int cmpGrevlex(const Monomial& a, const Monomial& b) {
    long da = a.totalDegree(), db = b.totalDegree();
    if (da != db) return da < db ? -1 : 1;
    // Equal degree: the last nonzero entry of a-b decides (negative => a larger).
    for (int i = a.dim() - 1; i >= 0; --i) {
        int diff = a.e[i] - b.e[i];
        if (diff != 0) return diff < 0 ? 1 : -1;
    }
    return 0;
}

int cmpLex(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < a.dim(); ++i) {
        int diff = a.e[i] - b.e[i];
        if (diff != 0) return diff > 0 ? 1 : -1;
    }
    return 0;
}

Monomial slice(const Monomial& m, int from, int to) {
    return Monomial(std::vector<int>(m.e.begin() + from, m.e.begin() + to));
}

}  // namespace

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
    switch (kind) {
        case Kind::GrevLex:
            return cmpGrevlex(a, b);
        case Kind::Lex:
            return cmpLex(a, b);
        case Kind::Elim: {
            Monomial a1 = slice(a, 0, elimBlock), b1 = slice(b, 0, elimBlock);
            int c = cmpGrevlex(a1, b1);
            if (c != 0) return c;
            Monomial a2 = slice(a, elimBlock, a.dim());
            Monomial b2 = slice(b, elimBlock, b.dim());
            return cmpGrevlex(a2, b2);
        }
    }
    return 0;
}

int MonomialOrder::cmpMod(int posA, const Monomial& a, int posB, const Monomial& b) const {
    if (termOverPosition) {
        int c = cmp(a, b);
        if (c != 0) return c;
        if (posA != posB) return posA < posB ? 1 : -1;  // lower position larger
        return 0;
    }
    if (posA != posB) return posA < posB ? 1 : -1;
    return cmp(a, b);
}

bool vecIsZero(const PolyVec& v) {
    for (const auto& p : v)
        if (!p.isZero()) return false;
    return true;
}

PolyVec vecSub(const PolyVec& a, const PolyVec& b) {
    PolyVec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] - b[i];
    return r;
}

PolyVec vecScale(const PolyVec& v, const LaurentPoly& f) {
    PolyVec r = v;
    for (auto& p : r) p = p * f;
    return r;
}

std::optional<ModTerm> leadingTerm(const PolyVec& v, const MonomialOrder& o) {
    std::optional<ModTerm> best;
    for (int pos = 0; pos < static_cast<int>(v.size()); ++pos) {
        for (const auto& [m, c] : v[pos].terms()) {
            if (!best || o.cmpMod(pos, m, best->pos, best->mon) > 0)
                best = ModTerm{pos, m, c};
        }
    }
    return best;
}

namespace {

void negateVec(PolyVec& v) {
    for (auto& p : v) p = -p;
}

// Flip sign so the leading coefficient is positive.
PolyVec signNormalizeRow(PolyVec v, const MonomialOrder& o) {
    auto lt = leadingTerm(v, o);
    if (lt && lt->coeff < 0) negateVec(v);
    return v;
}

// Normalize a row by the unit monomial making every used variable touch the
// axes, and flip sign so the leading coefficient is positive. Only meaningful
// in the plain Laurent setting: rows of a SubmoduleHandle, never the lifted
// generators of an elimination computation.
PolyVec normalizeRow(const PolyVec& v, const MonomialOrder& o) {
    int d = v.empty() ? 0 : v[0].dim();
    std::vector<int> mn(d, 0);
    bool first = true;
    for (const auto& p : v) {
        if (p.isZero()) continue;
        std::vector<int> pm = p.minExponents();
        if (first) {
            mn = pm;
            first = false;
        } else {
            for (int i = 0; i < d; ++i) mn[i] = std::min(mn[i], pm[i]);
        }
    }
    if (first) return v;  // zero row
    std::vector<int> shift(d);
    for (int i = 0; i < d; ++i) shift[i] = -mn[i];
    LaurentPoly unit = LaurentPoly::monomial(d, Monomial(shift), 1);
    PolyVec r = vecScale(v, unit);
    auto lt = leadingTerm(r, o);
    if (lt && lt->coeff < 0) negateVec(r);
    return r;
}

struct Reducer {
    const std::vector<PolyVec>* gens;
    std::vector<ModTerm> leads;
    const MonomialOrder* order;

    void rebuild() {
        leads.clear();
        for (const auto& g : *gens) leads.push_back(*leadingTerm(g, *order));
    }
};

// Full canonical reduction: every term ends with a coefficient in [0, lc) with
// respect to every applicable divisor.
PolyVec reduceFull(PolyVec v, const std::vector<PolyVec>& gens,
                   const std::vector<ModTerm>& leads, const MonomialOrder& o,
                   int dim, int rank) {
    PolyVec result(rank, LaurentPoly(dim));
    while (true) {
        auto lt = leadingTerm(v, o);
        if (!lt) break;
        bool reducedTerm = false;
        bool retry = true;
        while (retry) {
            retry = false;
            Int cur = 0;
            auto it = v[lt->pos].terms().find(lt->mon);
            if (it == v[lt->pos].terms().end()) break;  // term vanished
            cur = it->second;
            for (size_t gi = 0; gi < gens.size(); ++gi) {
                const ModTerm& gl = leads[gi];
                if (gl.pos != lt->pos || !gl.mon.divides(lt->mon)) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), cur.get_mpz_t(), gl.coeff.get_mpz_t());
                if (q == 0) continue;
                LaurentPoly mult =
                    LaurentPoly::monomial(dim, lt->mon.quotient(gl.mon), q);
                v = vecSub(v, vecScale(gens[gi], mult));
                reducedTerm = true;
                retry = true;
                break;
            }
        }
        // Re-inspect: if the term is still present it is irreducible, move it.
        auto it = v[lt->pos].terms().find(lt->mon);
        if (it != v[lt->pos].terms().end()) {
            result[lt->pos].addTerm(lt->mon, it->second);
            v[lt->pos].addTerm(lt->mon, -it->second);
        }
        (void)reducedTerm;
    }
    return result;
}

struct PairKey {
    long deg;
    int i, j;
    bool operator>(const PairKey& o) const {
        return std::tie(deg, i, j) > std::tie(o.deg, o.i, o.j);
    }
};

}  // namespace

StrongGBasis strongGroebner(const std::vector<PolyVec>& gensIn, int dim, int rank,
                            const MonomialOrder& order, const Limits& lim) {
    StrongGBasis B;
    B.order = order;
    B.dim = dim;
    B.rank = rank;

    std::vector<PolyVec> G;
    for (const auto& g : gensIn) {
        PolyVec r = signNormalizeRow(g, order);
        if (!vecIsZero(r)) G.push_back(std::move(r));
    }
    std::vector<ModTerm> leads;
    for (const auto& g : G) leads.push_back(*leadingTerm(g, order));

    using QItem = std::pair<PairKey, std::pair<int, int>>;
    auto cmpQ = [](const QItem& a, const QItem& b) { return a.first > b.first; };
    std::priority_queue<QItem, std::vector<QItem>, decltype(cmpQ)> queue(cmpQ);

    auto pushPairs = [&](int idx) {
        for (int i = 0; i < idx; ++i) {
            if (leads[i].pos != leads[idx].pos) continue;
            Monomial m = monLcm(leads[i].mon, leads[idx].mon);
            queue.push({PairKey{m.totalDegree(), i, idx}, {i, idx}});
        }
    };
    for (int i = 1; i < static_cast<int>(G.size()); ++i) pushPairs(i);

    long pairs = 0;
    auto addElement = [&](PolyVec h) {
        auto lt = leadingTerm(h, order);
        if (lt->coeff < 0) negateVec(h);
        lt = leadingTerm(h, order);
        if (mpz_sizeinbase(lt->coeff.get_mpz_t(), 2) >
            static_cast<size_t>(lim.maxCoeffBits))
            throw BudgetExceeded(pairs);
        G.push_back(std::move(h));
        leads.push_back(*lt);
        pushPairs(static_cast<int>(G.size()) - 1);
    };

    while (!queue.empty()) {
        auto [key, ij] = queue.top();
        queue.pop();
        if (++pairs > lim.maxPairs) throw BudgetExceeded(pairs);
        int i = ij.first, j = ij.second;
        // By value: addElement may reallocate leads mid-iteration.
        const ModTerm li = leads[i], lj = leads[j];
        Monomial m = monLcm(li.mon, lj.mon);
        LaurentPoly mi = LaurentPoly::monomial(dim, m.quotient(li.mon), 1);
        LaurentPoly mj = LaurentPoly::monomial(dim, m.quotient(lj.mon), 1);

        // S-pair: coefficient lcm cancellation.
        Int cl;
        mpz_lcm(cl.get_mpz_t(), li.coeff.get_mpz_t(), lj.coeff.get_mpz_t());
        PolyVec sp = vecSub(vecScale(G[i], mi * (cl / li.coeff)),
                            vecScale(G[j], mj * (cl / lj.coeff)));
        sp = reduceFull(std::move(sp), G, leads, order, dim, rank);
        if (!vecIsZero(sp)) addElement(std::move(sp));

        // G-pair: Bezout gcd combination, skipped when one lead coefficient
        // already divides the other.
        Int g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                   li.coeff.get_mpz_t(), lj.coeff.get_mpz_t());
        if (g != li.coeff && g != lj.coeff) {
            PolyVec gp = vecSub(vecScale(G[i], mi * s), vecScale(G[j], mj * (-t)));
            gp = reduceFull(std::move(gp), G, leads, order, dim, rank);
            if (!vecIsZero(gp)) addElement(std::move(gp));
        }
    }

    // Interreduce until stable.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < G.size(); ++i) {
            std::vector<PolyVec> others;
            std::vector<ModTerm> olds;
            for (size_t j = 0; j < G.size(); ++j) {
                if (j == i) continue;
                others.push_back(G[j]);
                olds.push_back(leads[j]);
            }
            PolyVec r = reduceFull(G[i], others, olds, order, dim, rank);
            if (!(r == G[i])) {
                changed = true;
                if (vecIsZero(r)) {
                    G.erase(G.begin() + i);
                    leads.erase(leads.begin() + i);
                    --i;
                } else {
                    auto lt = leadingTerm(r, order);
                    if (lt->coeff < 0) negateVec(r);
                    G[i] = r;
                    leads[i] = *leadingTerm(G[i], order);
                }
            }
        }
    }

    // Deterministic ordering of the final basis.
    std::vector<size_t> idx(G.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        int c = order.cmpMod(leads[a].pos, leads[a].mon, leads[b].pos, leads[b].mon);
        if (c != 0) return c < 0;
        return leads[a].coeff < leads[b].coeff;
    });
    for (size_t i : idx) B.gens.push_back(G[i]);
    B.pairsUsed = pairs;
    return B;
}

PolyVec normalForm(const PolyVec& v, const StrongGBasis& B) {
    std::vector<ModTerm> leads;
    for (const auto& g : B.gens) leads.push_back(*leadingTerm(g, B.order));
    return reduceFull(v, B.gens, leads, B.order, B.dim, B.rank);
}

SubmoduleHandle::SubmoduleHandle(int dim, int rank, std::vector<PolyVec> rows)
    : dim_(dim), rank_(rank) {
    MonomialOrder o = MonomialOrder::grevlex();
    for (auto& r : rows) {
        if (static_cast<int>(r.size()) != rank)
            throw DimensionMismatch("row rank mismatch");
        PolyVec n = normalizeRow(r, o);
        if (!vecIsZero(n)) rows_.push_back(std::move(n));
    }
}

SubmoduleHandle SubmoduleHandle::ideal(int dim, std::vector<LaurentPoly> gens) {
    std::vector<PolyVec> rows;
    for (auto& g : gens) rows.push_back(PolyVec{std::move(g)});
    return SubmoduleHandle(dim, 1, std::move(rows));
}

const StrongGBasis& SubmoduleHandle::basis(const Limits& lim) const {
    if (!basis_)
        basis_ = std::make_shared<StrongGBasis>(
            strongGroebner(rows_, dim_, rank_, MonomialOrder::grevlex(), lim));
    return *basis_;
}

const SubmoduleHandle& SubmoduleHandle::saturated(const Limits& lim) const {
    if (!saturated_)
        saturated_ = std::make_shared<SubmoduleHandle>(saturateVars(*this, lim));
    return *saturated_;
}

namespace {

LaurentPoly liftPoly(const LaurentPoly& p, int extraExp = 0) {
    // Embed R_d into R_{d+1} with a fresh first variable; extraExp multiplies
    // by that variable to the given power.
    int d = p.dim();
    LaurentPoly r(d + 1);
    for (const auto& [m, c] : p.terms()) {
        std::vector<int> e(d + 1);
        e[0] = extraExp;
        std::copy(m.e.begin(), m.e.end(), e.begin() + 1);
        r.addTerm(Monomial(std::move(e)), c);
    }
    return r;
}

LaurentPoly dropVar0(const LaurentPoly& p) {
    int d = p.dim();
    LaurentPoly r(d - 1);
    for (const auto& [m, c] : p.terms())
        r.addTerm(Monomial(std::vector<int>(m.e.begin() + 1, m.e.end())), c);
    return r;
}

bool usesVar0(const PolyVec& v) {
    for (const auto& p : v)
        for (const auto& [m, c] : p.terms())
            if (m.e[0] != 0) return true;
    return false;
}

// Compute (sum of lifted generator rows) intersected with R_d^k via a strong
// basis under an order eliminating the fresh variable, then project back.
std::vector<PolyVec> eliminateVar0(const std::vector<PolyVec>& lifted, int dim,
                                   int rank, const Limits& lim) {
    StrongGBasis B =
        strongGroebner(lifted, dim + 1, rank, MonomialOrder::elim(1), lim);
    std::vector<PolyVec> out;
    for (const auto& g : B.gens) {
        if (usesVar0(g)) continue;
        PolyVec row;
        for (const auto& p : g) row.push_back(dropVar0(p));
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace

SubmoduleHandle saturateVars(const SubmoduleHandle& U, const Limits& lim) {
    int d = U.dim(), k = U.rank();
    std::vector<PolyVec> lifted;
    for (const auto& row : U.rows()) {
        PolyVec r;
        for (const auto& p : row) r.push_back(liftPoly(p));
        lifted.push_back(std::move(r));
    }
    // q = 1 - w·u_1...u_d; adjoining q·e_j realizes the colon by (u_1...u_d)^inf.
    LaurentPoly q(d + 1);
    q.addTerm(Monomial::one(d + 1), 1);
    q.addTerm(Monomial(std::vector<int>(d + 1, 1)), -1);
    for (int j = 0; j < k; ++j) {
        PolyVec r(k, LaurentPoly(d + 1));
        r[j] = q;
        lifted.push_back(std::move(r));
    }
    return SubmoduleHandle(d, k, eliminateVar0(lifted, d, k, lim));
}

SubmoduleHandle moduleColon(const SubmoduleHandle& U, const LaurentPoly& h,
                            const Limits& lim) {
    if (h.isZero()) throw std::invalid_argument("colon by zero");
    int d = U.dim(), k = U.rank();
    LaurentPoly hn = h.monomialNormalize();
    if (hn.termCount() == 1 && (hn.terms().begin()->second == 1 ||
                                hn.terms().begin()->second == -1))
        return U;  // unit multiplier
    // U ∩ hn·R^k = (t·U + (1-t)·hn·R^k) ∩ R^k, then divide by hn.
    std::vector<PolyVec> lifted;
    for (const auto& row : U.rows()) {
        PolyVec r;
        for (const auto& p : row) r.push_back(liftPoly(p, 1));
        lifted.push_back(std::move(r));
    }
    LaurentPoly oneMinusT(d + 1);
    oneMinusT.addTerm(Monomial::one(d + 1), 1);
    {
        std::vector<int> te(d + 1, 0);
        te[0] = 1;
        oneMinusT.addTerm(Monomial(te), -1);
    }
    LaurentPoly hLift = liftPoly(hn);
    for (int j = 0; j < k; ++j) {
        PolyVec r(k, LaurentPoly(d + 1));
        r[j] = oneMinusT * hLift;
        lifted.push_back(std::move(r));
    }
    std::vector<PolyVec> inter = eliminateVar0(lifted, d, k, lim);
    std::vector<PolyVec> out = U.rows();  // U is always contained in U:h
    for (const auto& w : inter) {
        PolyVec v;
        for (const auto& wj : w) {
            LaurentPoly q(d);
            if (!exactDivide(wj, hn, q))
                throw std::logic_error("colon: inexact division");
            v.push_back(std::move(q));
        }
        out.push_back(std::move(v));
    }
    return SubmoduleHandle(d, k, std::move(out));
}

bool isMember(const PolyVec& v, const SubmoduleHandle& U, const Limits& lim) {
    const SubmoduleHandle& S = U.saturated(lim);
    const StrongGBasis& B = S.basis(lim);
    MonomialOrder o = MonomialOrder::grevlex();
    PolyVec w = v;
    // shift into the positive orthant (unit multiple, same Laurent span)
    {
        int d = U.dim();
        std::vector<int> mn(d, 0);
        bool first = true;
        for (const auto& p : w) {
            if (p.isZero()) continue;
            auto pm = p.minExponents();
            if (first) {
                mn = pm;
                first = false;
            } else {
                for (int i = 0; i < d; ++i) mn[i] = std::min(mn[i], pm[i]);
            }
        }
        if (!first) {
            std::vector<int> shift(d);
            for (int i = 0; i < d; ++i) shift[i] = -mn[i];
            LaurentPoly unit = LaurentPoly::monomial(d, Monomial(shift), 1);
            w = vecScale(w, unit);
        }
    }
    (void)o;
    return vecIsZero(normalForm(w, B));
}

bool isMember(const LaurentPoly& v, const SubmoduleHandle& U, const Limits& lim) {
    return isMember(PolyVec{v}, U, lim);
}

bool submoduleEqual(const SubmoduleHandle& U, const SubmoduleHandle& V,
                    const Limits& lim) {
    if (U.rank() != V.rank() || U.dim() != V.dim())
        throw DimensionMismatch("submodule ambient mismatch");
    for (const auto& r : U.rows())
        if (!isMember(r, V, lim)) return false;
    for (const auto& r : V.rows())
        if (!isMember(r, U, lim)) return false;
    return true;
}

}  // namespace rigid
