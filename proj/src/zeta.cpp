#include "freelog/zeta.hpp"

#include "freelog/words.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace freelog {

BouquetParams::BouquetParams(int rank_, int j_) : rank(rank_), j(j_) {
    if (rank < 2) throw std::domain_error("rank must be at least 2");
    if (j < 1 || j > rank) throw std::domain_error("generator index out of range");
}

Rational a_derivative(const BouquetParams& params, int l) {
    if (l < 0) throw std::domain_error("derivative order must be nonnegative");
    if (l == 0) return Rational(2 * params.rank);
    if (l % 2 != 0) return 0;
    return (l / 2) % 2 == 0 ? Rational(2) : Rational(-2);
}

namespace {

// 1 - u*a(0) + q*u^2, which factors as (1 - q*u)(1 - u); its root 1/q is the
// dominant pole of everything in this module.
Polynomial determinant_polynomial(const BouquetParams& params) {
    return Polynomial({Rational(1), Rational(-2 * params.rank), Rational(params.q())});
}

RationalFunction monomial_u() { return RationalFunction(Polynomial::monomial(1)); }

}  // namespace

RationalFunction inverse_determinant_derivative(const BouquetParams& params, int l) {
    if (l < 0) throw std::domain_error("derivative order must be nonnegative");
    if (l % 2 != 0) return RationalFunction();

    static std::mutex memo_mutex;
    static std::map<std::pair<int, int>, RationalFunction> memo;
    std::lock_guard<std::mutex> lock(memo_mutex);
    if (auto it = memo.find({params.rank, l}); it != memo.end()) return it->second;

    RationalFunction inv_det(Polynomial(Rational(1)), determinant_polynomial(params));
    memo.insert({{params.rank, 0}, inv_det});
    RationalFunction u = monomial_u();
    // Differentiating (1 - u*a(e) + q*u^2) * inv(e) = 1 a total of `order`
    // times in e and solving for the top derivative of inv:
    //   inv^(order) = inv(0) * sum_{r<order} C(order, r) * a^(order-r)(0) * u * inv^(r),
    // where only even r and even order-r contribute.
    for (int order = 2; order <= l; order += 2) {
        if (memo.contains({params.rank, order})) continue;
        RationalFunction total;
        for (int r = 0; r <= order - 2; r += 2) {
            Rational a_der = a_derivative(params, order - r);
            if (a_der == 0) continue;
            Rational weight =
                Rational(binomial(static_cast<unsigned>(order), static_cast<unsigned>(r))) * a_der;
            total = total + memo.at({params.rank, r}) * u * RationalFunction(weight);
        }
        memo.insert({{params.rank, order}, inv_det * total});
    }
    return memo.at({params.rank, l});
}

RationalFunction generating_function(const BouquetParams& params) {
    return generating_function_derivative(params, 0);
}

RationalFunction generating_function_derivative(const BouquetParams& params, int k) {
    if (k < 0) throw std::domain_error("derivative order must be nonnegative");
    if (k % 2 != 0) return RationalFunction();

    const Rational q(params.q());
    RationalFunction u = monomial_u();
    RationalFunction u2 = u * u;

    // Leibniz over the product (u*a(e) - 2*q*u^2) * inv(e); the first factor
    // has e-derivatives u * a^(i)(0) for i >= 1.
    RationalFunction total;
    for (int i = 0; i <= k; i += 2) {
        RationalFunction factor;
        if (i == 0)
            factor = u * RationalFunction(a_derivative(params, 0)) - u2 * RationalFunction(2 * q);
        else
            factor = u * RationalFunction(a_derivative(params, i));
        if (factor.is_zero()) continue;
        Rational weight(binomial(static_cast<unsigned>(k), static_cast<unsigned>(i)));
        total = total +
                RationalFunction(weight) * factor * inverse_determinant_derivative(params, k - i);
    }

    if (k == 0) {
        RationalFunction one_minus_u2(Polynomial({Rational(1), Rational(0), Rational(-1)}));
        RationalFunction circle = RationalFunction(Rational(2 * params.g())) * u2 / one_minus_u2;
        total = total + circle;
    }
    return total;
}

PowerSumTable power_sums(const BouquetParams& params, int k, int max_len) {
    if (k < 0) throw std::domain_error("power sum order must be nonnegative");
    if (max_len < 1) throw std::domain_error("power sums need length at least 1");
    PowerSumTable table;
    table.k = k;
    if (k % 2 != 0) {
        table.values.assign(static_cast<size_t>(max_len), Int(0));
        return table;
    }

    RationalFunction gk = generating_function_derivative(params, k);
    std::vector<Rational> coeffs = series_coefficients(gk, max_len);
    const bool negate = (k / 2) % 2 != 0;  // the factor (-1)^{k/2}
    table.values.reserve(static_cast<size_t>(max_len));
    for (int m = 1; m <= max_len; ++m) {
        Rational v = coeffs[static_cast<size_t>(m)];
        if (negate) v = -v;
        if (denominator(v) != 1) throw std::logic_error("power sum coefficient is not an integer");
        table.values.push_back(numerator(v));
    }
    return table;
}

std::vector<Int> counts_from_series(const BouquetParams& params, int max_len) {
    return power_sums(params, 0, max_len).values;
}

Int count_cyclic(const BouquetParams& params, int m) {
    if (m < 1) throw std::domain_error("count needs length at least 1");
    return cyclic_word_count(params.rank, m);
}

LaurentCheck laurent_check(const BouquetParams& params, int k) {
    if (k < 2 || k % 2 != 0) throw std::domain_error("Laurent check needs even order k >= 2");
    LaurentCheck out;
    const Rational q(params.q());
    out.expansion = singular_part(generating_function_derivative(params, k), Rational(1) / q);
    out.predicted_order = k / 2 + 1;
    out.predicted_leading = -Rational(factorial(static_cast<unsigned>(k))) /
                            (rational_pow(q, k / 2 + 1) * rational_pow(q - 1, k / 2));
    out.order_matches = out.expansion.order() == out.predicted_order;
    out.leading_matches = out.expansion.leading() == out.predicted_leading;
    return out;
}

RationalFunction ihara_zeta_function(const BouquetParams& params) {
    RationalFunction one_minus_u2(Polynomial({Rational(1), Rational(0), Rational(-1)}));
    RationalFunction circle_factor(Polynomial(Rational(1)));
    for (int i = 0; i < params.g(); ++i) circle_factor = circle_factor * one_minus_u2;
    RationalFunction det(determinant_polynomial(params));
    return RationalFunction(Rational(1)) / (circle_factor * det);
}

Rational ihara_zeta(const BouquetParams& params, const Rational& u) {
    return ihara_zeta_function(params).evaluate(u);
}

}  // namespace freelog
