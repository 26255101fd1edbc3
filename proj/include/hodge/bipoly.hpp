#pragma once

#include <compare>
#include <map>
#include <string>

#include <gmpxx.h>

#include "hodge/errors.hpp"

namespace hodge {

/// Arbitrary-precision integer used for all coefficients and counts.
using Int = mpz_class;

/// Exponent pair (e_u, e_v) of a monomial u^{e_u} v^{e_v}.
/// Ordered lexicographically; this ordering is part of the JSON contract.
struct ExpPair {
    int u = 0;
    int v = 0;
    friend auto operator<=>(const ExpPair&, const ExpPair&) = default;
};

/// Sparse bivariate polynomial over Int, Laurent-capable (exponents may be
/// negative in transit through dual_transform). Values are canonical: no
/// stored coefficient is zero, so equality is term-map equality.
class BiPoly {
public:
    using TermMap = std::map<ExpPair, Int>;

    BiPoly() = default;
    explicit BiPoly(long c) { add_term({0, 0}, Int(c)); }
    explicit BiPoly(const Int& c) { add_term({0, 0}, c); }

    static BiPoly monomial(Int c, int eu, int ev);
    static BiPoly one() { return BiPoly(1); }
    /// (uv)^e; the abbreviation t = uv used by every closed formula.
    static BiPoly t(int e = 1) { return monomial(1, e, e); }
    static BiPoly u(int e = 1) { return monomial(1, e, 0); }
    static BiPoly v(int e = 1) { return monomial(1, 0, e); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// True when every exponent is >= 0.
    bool is_polynomial() const;
    /// True when every term has e_u == e_v (a polynomial in t = uv).
    bool is_pure_t() const;
    /// True when the term map is invariant under swapping u and v.
    bool is_symmetric_uv() const;

    /// Max of e_u + e_v over terms; -1 for the zero polynomial.
    int total_degree() const;
    int degree_u() const;
    int degree_v() const;

    Int coeff(int eu, int ev) const;
    Int constant_term() const { return coeff(0, 0); }

    BiPoly& operator+=(const BiPoly& rhs);
    BiPoly& operator-=(const BiPoly& rhs);
    BiPoly& operator*=(const BiPoly& rhs) { *this = *this * rhs; return *this; }
    BiPoly operator-() const;

    friend BiPoly operator+(BiPoly a, const BiPoly& b) { a += b; return a; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { a -= b; return a; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const Int& c, const BiPoly& a);

    /// Nonnegative integer power by repeated squaring.
    BiPoly pow(int e) const;

    friend bool operator==(const BiPoly&, const BiPoly&) = default;

    /// Insert c * u^eu v^ev, dropping the term if it cancels to zero.
    void add_term(const ExpPair& e, const Int& c);

private:
    TermMap terms_;
};

/// Exact division failed; `remainder` is what was left over (nonzero).
/// The remainder localizes transcription errors in a closed formula.
struct NotDivisible : Error {
    BiPoly remainder;
    NotDivisible(const std::string& msg, BiPoly rem)
        : Error(msg), remainder(std::move(rem)) {}
};

/// Sparse univariate polynomial over Int, exponents >= 0.
class UniPoly {
public:
    using CoeffMap = std::map<int, Int>;

    UniPoly() = default;
    explicit UniPoly(long c) { add_term(0, Int(c)); }

    static UniPoly monomial(Int c, int e);

    const CoeffMap& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
    Int coeff(int e) const;
    bool has_negative_coeff() const;

    UniPoly& operator+=(const UniPoly& rhs);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { a += b; return a; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);

    Int eval(const Int& x) const;

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    void add_term(int e, const Int& c);

private:
    CoeffMap coeffs_;
};

/// Exact quotient a / b; throws NotDivisible (with the remainder) when b does
/// not divide a, DivisionByZero when b == 0. Division runs in the
/// total-degree-then-lex term order with remainder tracking.
BiPoly div_exact(const BiPoly& a, const BiPoly& b);

/// a / c with every coefficient divisible by c; throws OddCoefficient.
BiPoly div_scalar_exact(const BiPoly& a, const Int& c);

/// a / 2. All final Hodge polynomials are integral, so a parity failure
/// signals a bug rather than a fractional value.
inline BiPoly half_exact(const BiPoly& a) { return div_scalar_exact(a, Int(2)); }

/// Substitute u = v = t. Throws LaurentInput on negative exponents.
UniPoly diag(const BiPoly& a);

/// Substitute u -> -u^2, v -> -v^2.
BiPoly twist_sym(const BiPoly& a);

/// (uv)^m * a(1/u, 1/v). The result may be Laurent; callers assert
/// polynomiality where the geometry demands it.
BiPoly dual_transform(const BiPoly& a, int m);

/// Gaussian binomial [N choose k]_t as a polynomial in t = uv,
/// built by exact division of prod (1 - t^{N-k+i}) by prod (1 - t^i).
BiPoly gauss(int k, int N);

/// Value of a pure-t polynomial at uv = q. Throws NotPureT otherwise.
Int eval_t(const BiPoly& a, const Int& q);

/// Gate for module boundaries: throws NonPolynomialResult if any exponent
/// is negative, otherwise returns its argument.
const BiPoly& assert_polynomial(const BiPoly& a, const std::string& context);

/// 1 + t + ... + t^{e-1} (the polynomial (1 - t^e)/(1 - t)); e >= 0.
BiPoly geometric_sum_t(int e);

} // namespace hodge
