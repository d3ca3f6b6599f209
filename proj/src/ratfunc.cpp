#include "freelog/ratfunc.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace freelog {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(const Rational& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

Polynomial Polynomial::monomial(int degree, const Rational& coeff) {
    if (degree < 0) throw std::domain_error("monomial degree must be nonnegative");
    if (coeff == 0) return Polynomial();
    std::vector<Rational> c(static_cast<size_t>(degree) + 1);
    c.back() = coeff;
    return Polynomial(std::move(c));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(int i) const {
    if (i < 0 || i > degree()) return 0;
    return coeffs_[static_cast<size_t>(i)];
}

Rational Polynomial::leading_coefficient() const {
    if (is_zero()) return 0;
    return coeffs_.back();
}

Rational Polynomial::evaluate(const Rational& u) const {
    Rational v = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * u + *it;
    return v;
}

Polynomial Polynomial::derivative() const {
    if (degree() < 1) return Polynomial();
    std::vector<Rational> out(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rational(i);
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    std::vector<Rational> out(std::max(coeffs_.size(), other.coeffs_.size()));
    for (size_t i = 0; i < out.size(); ++i) {
        if (i < coeffs_.size()) out[i] += coeffs_[i];
        if (i < other.coeffs_.size()) out[i] += other.coeffs_[i];
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator-() const {
    std::vector<Rational> out(coeffs_);
    for (auto& c : out) c = -c;
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (is_zero() || other.is_zero()) return Polynomial();
    std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Rational& c) const {
    if (c == 0) return Polynomial();
    std::vector<Rational> out(coeffs_);
    for (auto& x : out) x *= c;
    return Polynomial(std::move(out));
}

Polynomial::DivMod Polynomial::divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem(coeffs_);
    const int dd = divisor.degree();
    const Rational lead = divisor.leading_coefficient();
    if (degree() < dd) return {Polynomial(), *this};
    std::vector<Rational> quot(static_cast<size_t>(degree() - dd) + 1);
    for (int i = degree(); i >= dd; --i) {
        Rational c = rem[static_cast<size_t>(i)] / lead;
        if (c == 0) continue;
        quot[static_cast<size_t>(i - dd)] = c;
        for (int k = 0; k <= dd; ++k)
            rem[static_cast<size_t>(i - dd + k)] -= c * divisor.coeffs_[static_cast<size_t>(k)];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::taylor_shift(const Rational& shift) const {
    // Repeated synthetic division by (u - shift); the remainders are the
    // coefficients of P(u + shift) from the constant term up.
    std::vector<Rational> work(coeffs_);
    std::vector<Rational> out;
    out.reserve(coeffs_.size());
    for (size_t round = 0; round < coeffs_.size(); ++round) {
        Rational carry = 0;
        for (size_t i = work.size(); i-- > round;) {
            work[i] += carry;
            carry = work[i] * shift;
        }
        out.push_back(work[round]);
    }
    return Polynomial(std::move(out));
}

Polynomial gcd(Polynomial a, Polynomial b) {
    auto monic = [](Polynomial p) {
        if (p.is_zero()) return p;
        return p * (Rational(1) / p.leading_coefficient());
    };
    while (!b.is_zero()) {
        Polynomial r = a.divmod(b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(std::move(a));
}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Polynomial(Rational(1));
        return;
    }
    Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divmod(g).quotient;
        den_ = den_.divmod(g).quotient;
    }
    Rational lead = den_.leading_coefficient();
    if (lead != 1) {
        Rational inv = Rational(1) / lead;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw std::domain_error("division by the zero function");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_); }

RationalFunction RationalFunction::derivative() const {
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Rational RationalFunction::evaluate(const Rational& u) const {
    Rational d = den_.evaluate(u);
    if (d == 0) throw std::domain_error("evaluation at a pole");
    return num_.evaluate(u) / d;
}

bool RationalFunction::has_pole_at(const Rational& u) const { return den_.evaluate(u) == 0; }

Polynomial RationalFunction::polynomial_part() const { return num_.divmod(den_).quotient; }

std::vector<Rational> series_coefficients(const RationalFunction& f, int max_len) {
    if (max_len < 0) throw std::domain_error("series length must be nonnegative");
    const Polynomial& num = f.numerator();
    const Polynomial& den = f.denominator();
    Rational d0 = den.coefficient(0);
    if (d0 == 0) throw std::domain_error("series at a pole of the function");
    std::vector<Rational> c(static_cast<size_t>(max_len) + 1);
    for (int m = 0; m <= max_len; ++m) {
        Rational v = num.coefficient(m);
        int top = std::min(m, den.degree());
        for (int i = 1; i <= top; ++i) v -= den.coefficient(i) * c[static_cast<size_t>(m - i)];
        c[static_cast<size_t>(m)] = v / d0;
    }
    return c;
}

Rational SingularPart::leading() const {
    if (coefficients.empty()) return 0;
    return coefficients.back();
}

Rational SingularPart::series_coefficient(int m) const {
    Rational total = 0;
    for (int k = 1; k <= order(); ++k) {
        const Rational& c = coefficients[static_cast<size_t>(k - 1)];
        if (c != 0) total += c * simple_pole_series_coefficient(k, pole, m);
    }
    return total;
}

SingularPart singular_part(const RationalFunction& f, const Rational& p) {
    SingularPart out;
    out.pole = p;
    if (!f.has_pole_at(p)) return out;

    // Split off (u - p)^K from the denominator by repeated exact division.
    Polynomial reduced = f.denominator();
    Polynomial linear({-p, Rational(1)});
    int order = 0;
    while (reduced.evaluate(p) == 0) {
        auto [q, r] = reduced.divmod(linear);
        if (!r.is_zero()) throw std::logic_error("nonzero remainder while clearing a root");
        reduced = std::move(q);
        ++order;
    }

    // f = N / ((u-p)^K * reduced) with N(p) != 0 and reduced(p) != 0. Expand
    // N/reduced at p to order K-1; those Taylor coefficients t_i give the
    // Laurent coefficients a_{K-i} = t_i of f at p.
    RationalFunction shifted(f.numerator().taylor_shift(p), reduced.taylor_shift(p));
    std::vector<Rational> taylor = series_coefficients(shifted, order - 1);
    out.coefficients.assign(static_cast<size_t>(order), Rational(0));
    for (int i = 0; i < order; ++i)
        out.coefficients[static_cast<size_t>(order - 1 - i)] = taylor[static_cast<size_t>(i)];
    return out;
}

Rational simple_pole_series_coefficient(int k, const Rational& p, int m) {
    if (k < 1) throw std::domain_error("pole order must be at least 1");
    if (m < 0) throw std::domain_error("series index must be nonnegative");
    if (p == 0) throw std::domain_error("pole at the expansion point");
    Rational value = rational_pow(p, -(k + m));
    value *= Rational(rising_factorial(Int(k), static_cast<unsigned>(m)), factorial(static_cast<unsigned>(m)));
    if (k % 2 != 0) value = -value;
    return value;
}

Rational singular_partial_sum(const SingularPart& part, int max_len) {
    if (max_len < 0) throw std::domain_error("partial sum length must be nonnegative");
    Rational total = 0;
    for (int k = 1; k <= part.order(); ++k) {
        const Rational& c = part.coefficients[static_cast<size_t>(k - 1)];
        if (c == 0) continue;
        // sum_{m<=L} coeff of u^m in 1/(u-p)^k, with the rising factorial
        // term updated incrementally.
        Rational term = rational_pow(part.pole, -k);
        if (k % 2 != 0) term = -term;
        Rational acc = 0;
        for (int m = 0; m <= max_len; ++m) {
            acc += term;
            term *= Rational(k + m, m + 1) / part.pole;
        }
        total += c * acc;
    }
    return total;
}

}  // namespace freelog
