#ifndef RIGID_LAURENT_HPP
#define RIGID_LAURENT_HPP

#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace rigid {

using Int = mpz_class;

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Exponent vector of u^n = u_1^{n_1} ... u_d^{n_d}; entries may be negative.
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}
    static Monomial one(int d) { return Monomial(std::vector<int>(d, 0)); }

    int dim() const { return static_cast<int>(e.size()); }
    long totalDegree() const {
        long s = 0;
        for (int x : e) s += x;
        return s;
    }
    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;  // componentwise <=
    Monomial quotient(const Monomial& o) const;  // this / o
    bool isOne() const {
        for (int x : e)
            if (x != 0) return false;
        return true;
    }
    bool operator==(const Monomial& o) const { return e == o.e; }
};

/// Graded-lex on exponent vectors; the canonical storage order of LaurentPoly.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

Monomial monLcm(const Monomial& a, const Monomial& b);

/// Element of R_d = Z[u_1^±,...,u_d^±] in canonical form: no zero
/// coefficients, terms keyed by graded-lex order.
class LaurentPoly {
  public:
    using TermMap = std::map<Monomial, Int, GrlexLess>;

    explicit LaurentPoly(int d = 1) : d_(d) {}
    static LaurentPoly constant(int d, const Int& c);
    static LaurentPoly monomial(int d, const Monomial& m, const Int& c = 1);
    static LaurentPoly variable(int d, int index);  // u_{index+1}

    int dim() const { return d_; }
    bool isZero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    size_t termCount() const { return terms_.size(); }

    void addTerm(const Monomial& m, const Int& c);

    LaurentPoly operator+(const LaurentPoly& g) const;
    LaurentPoly operator-(const LaurentPoly& g) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& g) const;
    LaurentPoly operator*(const Int& c) const;
    bool operator==(const LaurentPoly& g) const {
        return d_ == g.d_ && terms_ == g.terms_;
    }

    /// this^n; negative n only for unit monomials (single term, coeff ±1).
    LaurentPoly pow(int n) const;

    /// Sum f_n z^n with compensated (Kahan) summation; no z_i may be zero.
    std::complex<double> eval(const std::vector<std::complex<double>>& z) const;

    /// gcd of all coefficients; 0 for the zero polynomial.
    Int content() const;

    /// Minimum exponent per variable over the support (0 for zero poly).
    std::vector<int> minExponents() const;
    std::vector<int> maxExponents() const;

    /// Multiply by the unit monomial moving the support into the positive
    /// orthant with minimal exponent 0 in each used variable.
    LaurentPoly monomialNormalize() const;

    /// Image under u_i -> t^{n_i}; result lives in R_1.
    LaurentPoly substituteMonomial(const std::vector<int>& n) const;

    /// True iff every exponent is nonnegative.
    bool inPositiveOrthant() const;

    std::string toString() const;

  private:
    int d_;
    TermMap terms_;
};

inline LaurentPoly operator*(const Int& c, const LaurentPoly& f) { return f * c; }

/// u^n - 1 in R_d.
LaurentPoly unMinusOne(int d, const std::vector<int>& n);

/// Exact division in the Laurent ring; returns false if h does not divide f.
bool exactDivide(const LaurentPoly& f, const LaurentPoly& h, LaurentPoly& out);

/// Grid of LaurentPoly sharing one dimension d; rows are presentation
/// relations.
struct PolyMatrix {
    int rows = 0, cols = 0;
    std::vector<std::vector<LaurentPoly>> entries;

    PolyMatrix() = default;
    PolyMatrix(int r, int c, int d)
        : rows(r), cols(c),
          entries(r, std::vector<LaurentPoly>(c, LaurentPoly(d))) {}
};

}  // namespace rigid

#endif
