#include "freelog/asymptotics.hpp"

#include <stdexcept>

namespace freelog {

namespace {

void check_pochhammer_args(int k, int max_len, const Rational& q) {
    if (k < 1) throw std::domain_error("rising factorial order must be at least 1");
    if (max_len < 0) throw std::domain_error("partial sum length must be nonnegative");
    if (q <= 1) throw std::domain_error("weight base must exceed 1");
}

}  // namespace

Rational pochhammer_sum(int k, int max_len, const Rational& q, bool weighted) {
    check_pochhammer_args(k, max_len, q);
    Rational term = 1;  // (k)_0 / 0! (times q^0)
    Rational sum = 0;
    for (int m = 0; m <= max_len; ++m) {
        sum += term;
        term *= Rational(k + m, m + 1);
        if (weighted) term *= q;
    }
    return sum;
}

Rational pochhammer_asymptotic(int k, int max_len, const Rational& q, bool weighted) {
    check_pochhammer_args(k, max_len, q);
    if (max_len < 1) throw std::domain_error("main term needs length at least 1");
    const Rational l(max_len);
    if (weighted)
        return rational_pow(q, max_len + 1) * rational_pow(l, k - 1) /
               ((q - 1) * Rational(factorial(static_cast<unsigned>(k - 1))));
    return rational_pow(l, k) / Rational(factorial(static_cast<unsigned>(k)));
}

PartialSumPrediction pochhammer_check(int k, int max_len, const Rational& q, bool weighted) {
    PartialSumPrediction out;
    out.max_len = max_len;
    out.exact = pochhammer_sum(k, max_len, q, weighted);
    out.main_term = pochhammer_asymptotic(k, max_len, q, weighted);
    out.ratio = out.exact / out.main_term;
    return out;
}

Rational partial_sum_main_term(const SingularPart& dominant, int max_len) {
    if (max_len < 1) throw std::domain_error("partial sum length must be at least 1");
    const int order = dominant.order();
    if (order == 0) return 0;
    if (dominant.pole <= 0 || dominant.pole >= 1)
        throw std::domain_error("main term needs a dominant pole in (0, 1)");

    const Rational q = Rational(1) / dominant.pole;
    Rational value = dominant.leading() * rational_pow(q, order);  // a_K * q^K
    if (order % 2 != 0) value = -value;                            // ... * (-1)^K
    value *= rational_pow(q, max_len + 1);
    value *= rational_pow(Rational(max_len), order - 1);
    value /= (q - 1) * Rational(factorial(static_cast<unsigned>(order - 1)));
    return value;
}

PartialSumPrediction powersum_partial_check(const BouquetParams& params, int k, int max_len) {
    if (k < 0) throw std::domain_error("power sum order must be nonnegative");
    if (max_len < 1) throw std::domain_error("partial sum length must be at least 1");

    PartialSumPrediction out;
    out.max_len = max_len;
    if (k % 2 != 0) {
        out.exact = 0;
        out.main_term = 0;
        out.ratio = 1;  // both sides vanish identically for odd k
        return out;
    }

    PowerSumTable table = power_sums(params, k, max_len);
    out.exact = 0;
    for (const Int& s : table.values) out.exact += Rational(s);

    const Rational q(params.q());
    const int half = k / 2;
    out.main_term =
        Rational(factorial(static_cast<unsigned>(k)), factorial(static_cast<unsigned>(half)));
    out.main_term *= rational_pow(q, max_len + 1);
    out.main_term *= rational_pow(Rational(max_len), half);
    out.main_term /= rational_pow(q - 1, half + 1);
    out.ratio = out.exact / out.main_term;
    return out;
}

}  // namespace freelog
