#include "rigid/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rigid {

Monomial Monomial::operator*(const Monomial& o) const {
    if (e.size() != o.e.size()) throw DimensionMismatch("monomial dimension mismatch");
    Monomial r;
    r.e.resize(e.size());
    for (size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] + o.e[i];
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (e.size() != o.e.size()) return false;
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] > o.e[i]) return false;
    return true;
}

Monomial Monomial::quotient(const Monomial& o) const {
    if (e.size() != o.e.size()) throw DimensionMismatch("monomial dimension mismatch");
    Monomial r;
    r.e.resize(e.size());
    for (size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] - o.e[i];
    return r;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    long da = a.totalDegree(), db = b.totalDegree();
    if (da != db) return da < db;
    return a.e < b.e;  // lex tiebreak
}

Monomial monLcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.e.resize(a.e.size());
    for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
}

LaurentPoly LaurentPoly::constant(int d, const Int& c) {
    LaurentPoly f(d);
    f.addTerm(Monomial::one(d), c);
    return f;
}

LaurentPoly LaurentPoly::monomial(int d, const Monomial& m, const Int& c) {
    LaurentPoly f(d);
    f.addTerm(m, c);
    return f;
}

LaurentPoly LaurentPoly::variable(int d, int index) {
    Monomial m = Monomial::one(d);
    m.e[index] = 1;
    return monomial(d, m, 1);
}

void LaurentPoly::addTerm(const Monomial& m, const Int& c) {
    if (m.dim() != d_) throw DimensionMismatch("term dimension mismatch");
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& g) const {
    if (d_ != g.d_) throw DimensionMismatch("polynomial dimension mismatch");
    LaurentPoly r = *this;
    for (const auto& [m, c] : g.terms_) r.addTerm(m, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& g) const {
    if (d_ != g.d_) throw DimensionMismatch("polynomial dimension mismatch");
    LaurentPoly r = *this;
    for (const auto& [m, c] : g.terms_) r.addTerm(m, -c);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(d_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& g) const {
    if (d_ != g.d_) throw DimensionMismatch("polynomial dimension mismatch");
    LaurentPoly r(d_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : g.terms_) r.addTerm(ma * mb, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::operator*(const Int& c) const {
    LaurentPoly r(d_);
    if (c == 0) return r;
    for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
    return r;
}

LaurentPoly LaurentPoly::pow(int n) const {
    if (n == 0) return constant(d_, 1);
    if (n < 0) {
        if (terms_.size() != 1)
            throw std::invalid_argument("negative power of a non-monomial");
        const auto& [m, c] = *terms_.begin();
        if (c != 1 && c != -1)
            throw std::invalid_argument("negative power of a non-unit coefficient");
        Monomial inv;
        inv.e.resize(m.e.size());
        for (size_t i = 0; i < m.e.size(); ++i) inv.e[i] = -m.e[i];
        LaurentPoly base = monomial(d_, inv, c);  // c == c^{-1} for ±1
        return base.pow(-n);
    }
    LaurentPoly r = constant(d_, 1);
    LaurentPoly base = *this;
    int k = n;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

std::complex<double> LaurentPoly::eval(const std::vector<std::complex<double>>& z) const {
    if (static_cast<int>(z.size()) != d_)
        throw DimensionMismatch("evaluation point dimension mismatch");
    for (const auto& zi : z)
        if (zi == std::complex<double>(0.0, 0.0))
            throw std::invalid_argument("evaluation at a zero coordinate");
    // Kahan compensated accumulation, separately on real and imaginary parts.
    double sr = 0, si = 0, cr = 0, ci = 0;
    for (const auto& [m, c] : terms_) {
        std::complex<double> t(c.get_d(), 0.0);
        for (int i = 0; i < d_; ++i) {
            int e = m.e[i];
            if (e == 0) continue;
            std::complex<double> p = std::pow(z[i], e);
            t *= p;
        }
        double yr = t.real() - cr;
        double tr = sr + yr;
        cr = (tr - sr) - yr;
        sr = tr;
        double yi = t.imag() - ci;
        double ti = si + yi;
        ci = (ti - si) - yi;
        si = ti;
    }
    return {sr, si};
}

Int LaurentPoly::content() const {
    Int g = 0;
    for (const auto& [m, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

std::vector<int> LaurentPoly::minExponents() const {
    std::vector<int> r(d_, 0);
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (first) {
            r = m.e;
            first = false;
        } else {
            for (int i = 0; i < d_; ++i) r[i] = std::min(r[i], m.e[i]);
        }
    }
    return r;
}

std::vector<int> LaurentPoly::maxExponents() const {
    std::vector<int> r(d_, 0);
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (first) {
            r = m.e;
            first = false;
        } else {
            for (int i = 0; i < d_; ++i) r[i] = std::max(r[i], m.e[i]);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::monomialNormalize() const {
    if (isZero()) return *this;
    std::vector<int> mn = minExponents();
    bool trivial = true;
    for (int x : mn)
        if (x != 0) trivial = false;
    if (trivial) return *this;
    LaurentPoly r(d_);
    for (const auto& [m, c] : terms_) {
        Monomial mm = m;
        for (int i = 0; i < d_; ++i) mm.e[i] -= mn[i];
        r.terms_.emplace(mm, c);
    }
    return r;
}

LaurentPoly LaurentPoly::substituteMonomial(const std::vector<int>& n) const {
    if (static_cast<int>(n.size()) != d_)
        throw DimensionMismatch("direction dimension mismatch");
    bool allzero = true;
    for (int x : n)
        if (x != 0) allzero = false;
    if (allzero) throw std::invalid_argument("zero direction");
    LaurentPoly r(1);
    for (const auto& [m, c] : terms_) {
        long t = 0;
        for (int i = 0; i < d_; ++i) t += static_cast<long>(m.e[i]) * n[i];
        Monomial mm(std::vector<int>{static_cast<int>(t)});
        r.addTerm(mm, c);
    }
    return r;
}

bool LaurentPoly::inPositiveOrthant() const {
    for (const auto& [m, c] : terms_)
        for (int x : m.e)
            if (x < 0) return false;
    return true;
}

std::string LaurentPoly::toString() const {
    if (isZero()) return "0";
    std::ostringstream os;
    bool first = true;
    // Print in descending graded-lex order.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Monomial& m = it->first;
        const Int& c = it->second;
        Int ac = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool hasVar = !m.isOne();
        if (!hasVar || ac != 1) os << ac.get_str();
        bool needStar = !hasVar ? false : (ac != 1);
        for (int i = 0; i < d_; ++i) {
            if (m.e[i] == 0) continue;
            if (needStar) os << "*";
            os << "u" << (i + 1);
            if (m.e[i] != 1) os << "^" << m.e[i];
            needStar = true;
        }
    }
    return os.str();
}

LaurentPoly unMinusOne(int d, const std::vector<int>& n) {
    LaurentPoly f(d);
    f.addTerm(Monomial(n), 1);
    f.addTerm(Monomial::one(d), -1);
    return f;
}

bool exactDivide(const LaurentPoly& f, const LaurentPoly& h, LaurentPoly& out) {
    if (h.isZero()) return false;
    if (f.isZero()) {
        out = LaurentPoly(f.dim());
        return true;
    }
    int d = f.dim();
    // Shift both into the positive orthant; per-variable minimal exponents are
    // additive under multiplication, so the polynomial quotient below carries
    // the whole Laurent quotient up to a monomial shift.
    std::vector<int> fa = f.minExponents(), hb = h.minExponents();
    LaurentPoly fn = f.monomialNormalize();
    LaurentPoly hn = h.monomialNormalize();
    LaurentPoly q(d);
    LaurentPoly rem = fn;
    // Leading term of the divisor under graded-lex.
    auto hl = hn.terms().rbegin();
    const Monomial& hm = hl->first;
    const Int& hc = hl->second;
    while (!rem.isZero()) {
        auto rl = rem.terms().rbegin();
        const Monomial& rm = rl->first;
        const Int& rc = rl->second;
        if (!hm.divides(rm)) return false;
        if (rc % hc != 0) return false;
        Int qc = rc / hc;
        Monomial qm = rm.quotient(hm);
        LaurentPoly t = LaurentPoly::monomial(d, qm, qc);
        q = q + t;
        rem = rem - t * hn;
    }
    std::vector<int> shift(d);
    for (int i = 0; i < d; ++i) shift[i] = fa[i] - hb[i];
    out = q * LaurentPoly::monomial(d, Monomial(shift), 1);
    return true;
}

}  // namespace rigid
