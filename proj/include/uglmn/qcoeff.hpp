#pragma once

// Exact coefficient arithmetic: rationals, sparse polynomials in v and
// reduced rational functions in v, plus the quantum integers built on them.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "uglmn/bigrat.hpp"

namespace uglmn {

/// Sparse polynomial in v with rational coefficients.
///
/// Terms are kept sorted by ascending exponent and never hold a zero
/// coefficient, so two equal polynomials have identical term lists.
class VPoly {
public:
    using Term = std::pair<int, BigRat>;

    VPoly() = default;
    explicit VPoly(BigRat constant);
    /// Builds from arbitrary (exponent, coefficient) pairs; duplicates are summed.
    explicit VPoly(std::vector<Term> terms);
    VPoly(std::initializer_list<Term> terms);

    static VPoly monomial(int exponent, BigRat coeff = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_one() const;
    /// Highest exponent; -1 for the zero polynomial.
    int degree() const;
    /// Lowest exponent with a nonzero coefficient; 0 for the zero polynomial.
    int valuation() const;
    const BigRat& leading_coeff() const;
    BigRat coeff(int exponent) const;
    const std::vector<Term>& terms() const { return terms_; }

    /// Multiply by v^k; k may be negative as long as no exponent goes below 0.
    VPoly shifted(int k) const;
    VPoly scaled(const BigRat& c) const;
    VPoly monic() const;
    BigRat evaluate(const BigRat& q) const;

    VPoly operator-() const;
    friend VPoly operator+(const VPoly& a, const VPoly& b);
    friend VPoly operator-(const VPoly& a, const VPoly& b);
    friend VPoly operator*(const VPoly& a, const VPoly& b);

    /// Euclidean division; throws std::domain_error on a zero divisor.
    static std::pair<VPoly, VPoly> divmod(const VPoly& a, const VPoly& b);
    /// Monic gcd (zero if both inputs are zero).
    static VPoly gcd(VPoly a, VPoly b);

    friend bool operator==(const VPoly& a, const VPoly& b) = default;

    /// Compact form without spaces, e.g. "v^3-v" or "1/2*v^2+1".
    std::string to_string() const;

private:
    void canonicalize();
    std::vector<Term> terms_;
};

/// Element of Q(v) held as num/den with gcd(num, den) = 1 and a monic den.
///
/// Zero is 0/1. Laurent monomials with negative exponent are 1/v^k.
class VFunc {
public:
    VFunc() : num_(), den_(BigRat(1)) {}
    VFunc(BigRat c);  // NOLINT(google-explicit-constructor)
    VFunc(long c) : VFunc(BigRat(c)) {}  // NOLINT(google-explicit-constructor)
    VFunc(int c) : VFunc(BigRat(c)) {}  // NOLINT(google-explicit-constructor)
    /// Reduces num/den to canonical form; throws std::domain_error if den is zero.
    VFunc(VPoly num, VPoly den);

    /// c * v^k for any integer k.
    static VFunc v_power(int k, BigRat c = 1);
    /// Sum of c_k v^k over the given Laurent terms.
    static VFunc laurent(const std::vector<std::pair<int, BigRat>>& terms);

    const VPoly& num() const { return num_; }
    const VPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    /// True when den is a power of v, i.e. the value is a Laurent polynomial.
    bool is_laurent() const { return den_.is_monomial(); }

    VFunc operator-() const;
    friend VFunc operator+(const VFunc& a, const VFunc& b);
    friend VFunc operator-(const VFunc& a, const VFunc& b);
    friend VFunc operator*(const VFunc& a, const VFunc& b);
    friend VFunc operator/(const VFunc& a, const VFunc& b);
    VFunc& operator+=(const VFunc& b) { return *this = *this + b; }
    VFunc& operator-=(const VFunc& b) { return *this = *this - b; }
    VFunc& operator*=(const VFunc& b) { return *this = *this * b; }

    /// Multiplicative inverse; throws std::domain_error for zero.
    VFunc inv() const;
    /// sign * v^k * this, without a general multiplication.
    VFunc times_power(int k, int sign = 1) const;
    VFunc pow(int e) const;

    friend bool operator==(const VFunc& a, const VFunc& b) = default;

    /// Exact value at v = q; throws std::domain_error at a pole.
    BigRat evaluate(const BigRat& q) const;

    /// Laurent polynomials print as "v^2 + 1 + v^-2", the rest as "(num)/(den)".
    std::string to_string() const;

    /// If the value is +-v^c returns {sign, c}.
    struct SignedPower {
        int sign;
        int exponent;
    };
    bool as_signed_power(SignedPower& out) const;

private:
    // num * v^{-shift} for a polynomial num; skips the gcd.
    static VFunc from_laurent(VPoly num, int shift);

    VPoly num_;
    VPoly den_;
};

/// [i] = v^{i-1} + v^{i-3} + ... + v^{1-i}; [0] = 0. Rejects i < 0.
VFunc quantum_integer(int i);
/// [a]! = [1][2]...[a]; [0]! = 1.
VFunc quantum_factorial(int a);
/// (-1)^e as a coefficient.
inline VFunc sign_power(long e) { return VFunc((e % 2 == 0) ? 1 : -1); }
inline int sign_of(long e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace uglmn
