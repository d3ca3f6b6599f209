#ifndef FREELOG_RATFUNC_HPP
#define FREELOG_RATFUNC_HPP

#include "freelog/numeric.hpp"

#include <vector>

namespace freelog {

/// Univariate polynomial over the rationals, coefficients in increasing
/// degree order with no trailing zeros. The zero polynomial has no
/// coefficients and degree -1.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::vector<Rational> coeffs);
    Polynomial(const Rational& constant);

    static Polynomial monomial(int degree, const Rational& coeff = 1);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    /// Coefficient of u^i; zero beyond the degree.
    Rational coefficient(int i) const;
    Rational leading_coefficient() const;

    Rational evaluate(const Rational& u) const;
    Polynomial derivative() const;

    Polynomial operator+(const Polynomial&) const;
    Polynomial operator-(const Polynomial&) const;
    Polynomial operator*(const Polynomial&) const;
    Polynomial operator-() const;
    Polynomial operator*(const Rational&) const;

    bool operator==(const Polynomial&) const = default;

    struct DivMod;
    /// Euclidean division; throws on a zero divisor.
    DivMod divmod(const Polynomial& divisor) const;

    /// Coefficients of P(u + shift) in powers of u, by synthetic division.
    Polynomial taylor_shift(const Rational& shift) const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

struct Polynomial::DivMod {
    Polynomial quotient;
    Polynomial remainder;
};

/// Monic greatest common divisor; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);

/// Quotient of two polynomials, kept canonical: numerator and denominator
/// coprime, denominator monic (never zero).
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Rational(1)) {}
    RationalFunction(Polynomial numerator, Polynomial denominator);
    RationalFunction(const Polynomial& p) : RationalFunction(p, Polynomial(Rational(1))) {}
    RationalFunction(const Rational& c) : RationalFunction(Polynomial(c)) {}

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator+(const RationalFunction&) const;
    RationalFunction operator-(const RationalFunction&) const;
    RationalFunction operator*(const RationalFunction&) const;
    RationalFunction operator/(const RationalFunction&) const;
    RationalFunction operator-() const;

    RationalFunction derivative() const;

    /// Value at a point that is not a pole; throws std::domain_error at poles.
    Rational evaluate(const Rational& u) const;

    /// True when the reduced denominator vanishes at u.
    bool has_pole_at(const Rational& u) const;

    /// Quotient in the Euclidean division of numerator by denominator; the
    /// function minus this is proper (numerator degree < denominator degree).
    Polynomial polynomial_part() const;

    bool operator==(const RationalFunction&) const = default;

private:
    Polynomial num_;
    Polynomial den_;
};

/// First max_len + 1 Taylor coefficients at u = 0. Requires the function to
/// be regular at 0 (reduced denominator nonzero there); computed by the
/// linear recurrence the denominator imposes on the coefficients.
std::vector<Rational> series_coefficients(const RationalFunction& f, int max_len);

/// The singular part of a rational function at one pole p:
///   sum_{k=1..order} coeff[k-1] / (u - p)^k
/// with coeff[order-1] != 0. order == 0 means the function is regular at p.
struct SingularPart {
    Rational pole;
    std::vector<Rational> coefficients;

    int order() const { return static_cast<int>(coefficients.size()); }
    Rational leading() const;

    /// Taylor coefficient of u^m of this singular part alone (valid for
    /// |u| < |pole|), summed over its terms.
    Rational series_coefficient(int m) const;
};

/// Exact Laurent data of f at the candidate pole p (order 0 if regular).
/// Works by clearing the pole from the denominator and Taylor-expanding the
/// regular quotient at p, all in rational arithmetic.
SingularPart singular_part(const RationalFunction& f, const Rational& p);

/// Taylor coefficient of u^m of 1/(u - p)^k at u = 0 for p != 0:
///   (-1)^k p^{-k-m} (k)_m / m!
/// where (k)_m is the rising factorial.
Rational simple_pole_series_coefficient(int k, const Rational& p, int m);

/// Partial sum over m = 0..max_len of the series coefficients of a singular
/// part, exactly. Summing the singular parts at all poles (plus the
/// polynomial part's coefficients) reconstructs the partial sums of f.
Rational singular_partial_sum(const SingularPart& part, int max_len);

}  // namespace freelog

#endif
