#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lambda2/errors.hpp"

namespace lambda2 {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Dense univariate polynomial over the integers, coefficients in ascending
/// degree order. The zero polynomial has an empty coefficient vector.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> ascending_coeffs);
    IntPolynomial(std::initializer_list<long long> ascending_coeffs);

    static IntPolynomial zero() { return {}; }
    static IntPolynomial constant(BigInt c);
    /// c * x^k
    static IntPolynomial monomial(int k, BigInt c = 1);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const BigInt& leading() const;
    /// Coefficient of x^i (0 beyond the degree).
    const BigInt& coeff(int i) const;
    const std::vector<BigInt>& coefficients() const { return coeffs_; }

    BigInt operator()(const BigInt& x) const;
    BigRat operator()(const BigRat& x) const;
    /// Exact sign of the value at a rational point (-1, 0, +1), computed with
    /// integer arithmetic only.
    int sign_at(const BigRat& x) const;
    /// Sign of the limit at +inf (direction=+1) or -inf (direction=-1).
    int sign_at_infinity(int direction) const;

    IntPolynomial operator-() const;
    friend IntPolynomial operator+(const IntPolynomial&, const IntPolynomial&);
    friend IntPolynomial operator-(const IntPolynomial&, const IntPolynomial&);
    friend IntPolynomial operator*(const IntPolynomial&, const IntPolynomial&);
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    std::string to_string() const;

private:
    void normalize();
    std::vector<BigInt> coeffs_;
};

IntPolynomial pow(const IntPolynomial& p, int k);
IntPolynomial derivative(const IntPolynomial& p);

/// Positive gcd of all coefficients (0 for the zero polynomial).
BigInt content(const IntPolynomial& p);
/// p divided by its content; leading coefficient keeps its sign.
IntPolynomial primitive_part(const IntPolynomial& p);

/// Raised by div_exact when the division leaves a remainder (or a quotient
/// outside Z[x]). Carries the rational remainder as numerator/denominator.
struct InexactDivision : Error {
    InexactDivision(std::string msg, IntPolynomial rem_num, BigInt rem_den)
        : Error(std::move(msg)),
          remainder_numerator(std::move(rem_num)),
          remainder_denominator(std::move(rem_den)) {}
    IntPolynomial remainder_numerator;
    BigInt remainder_denominator;
};

/// Exact quotient p / q in Z[x]; throws InexactDivision otherwise.
IntPolynomial div_exact(const IntPolynomial& p, const IntPolynomial& q);

/// Primitive positive-leading gcd over Z[x] (primitive PRS).
IntPolynomial gcd(const IntPolynomial& p, const IntPolynomial& q);

/// p / gcd(p, p'): primitive, positive leading coefficient, same distinct roots.
IntPolynomial squarefree_part(const IntPolynomial& p);

/// Signed-remainder (Sturm) sequence. Entries are primitive integer
/// polynomials; each is a positive rational multiple of the exact chain
/// member, so all sign evaluations agree with the rational chain.
struct SturmChain {
    std::vector<IntPolynomial> polys;
};

SturmChain sturm_chain(const IntPolynomial& p);

int sign_variations(const SturmChain& chain, const BigRat& at);
int sign_variations_at_infinity(const SturmChain& chain, int direction);

/// 1 + max_i |c_i| / |c_deg|: every real root lies in (-bound, bound).
BigRat cauchy_root_bound(const IntPolynomial& p);

/// Number of distinct real roots of p in (a, b]. Unset endpoints mean -inf /
/// +inf. Finite endpoints must not be roots (EndpointIsRoot otherwise).
int count_distinct_roots_in(const IntPolynomial& p,
                            const std::optional<BigRat>& a,
                            const std::optional<BigRat>& b);

/// Sign changes among the nonzero coefficients (Descartes bound on the
/// number of positive roots).
int descartes_sign_changes(const IntPolynomial& p);

/// Bisection on the squarefree part down to an interval of width <= tol;
/// requires a sign change over [a, b] (NoSignChange otherwise).
BigRat refine_root(const IntPolynomial& p, const BigRat& a, const BigRat& b, const BigRat& tol);

/// Square integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}
    IntMatrix(int n, std::vector<BigInt> entries);
    static IntMatrix identity(int n);

    int size() const { return n_; }
    BigInt& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const BigInt& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
    BigInt trace() const;
    bool is_symmetric() const;

    friend IntMatrix operator*(const IntMatrix&, const IntMatrix&);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    int n_ = 0;
    std::vector<BigInt> a_;
};

/// Monic characteristic polynomial det(xI - m), exact (Faddeev-LeVerrier;
/// every internal division is exact).
IntPolynomial charpoly_exact(const IntMatrix& m);

}  // namespace lambda2
