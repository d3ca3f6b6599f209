#include "doctest.h"

#include "freelog/words.hpp"
#include "freelog/zeta.hpp"
#include "oracles.hpp"

#include <cmath>
#include <future>
#include <vector>

using namespace freelog;

namespace {

const Polynomial u = Polynomial::monomial(1);
const Polynomial one(Rational(1));

// 1 - 2n u + q u^2, the untwisted determinant.
Polynomial base_determinant(int n) {
    return one - u * Rational(2 * n) + Polynomial::monomial(2, Rational(2 * n - 1));
}

}  // namespace

TEST_CASE("bouquet parameters") {
    BouquetParams p(3, 2);
    CHECK(p.q() == 5);
    CHECK(p.g() == 2);
    CHECK_THROWS_AS(BouquetParams(1, 1), std::domain_error);
    CHECK_THROWS_AS(BouquetParams(2, 0), std::domain_error);
    CHECK_THROWS_AS(BouquetParams(2, 3), std::domain_error);
}

TEST_CASE("adjacency derivatives") {
    BouquetParams p(2, 1);
    CHECK(a_derivative(p, 0) == 4);
    CHECK(a_derivative(p, 1) == 0);
    CHECK(a_derivative(p, 2) == -2);
    CHECK(a_derivative(p, 3) == 0);
    CHECK(a_derivative(p, 4) == 2);
    CHECK(a_derivative(p, 6) == -2);
    CHECK(a_derivative(BouquetParams(4, 1), 0) == 8);
}

TEST_CASE("inverse determinant derivatives: closed forms") {
    BouquetParams p(2, 1);
    Polynomial d = base_determinant(2);

    CHECK(inverse_determinant_derivative(p, 0) == RationalFunction(one, d));
    for (int l = 1; l <= 9; l += 2) CHECK(inverse_determinant_derivative(p, l).is_zero());
    // One recurrence step: second derivative is -2u/D^2.
    CHECK(inverse_determinant_derivative(p, 2) == RationalFunction(u * Rational(-2), d * d));
    // Two steps: fourth derivative is 2u/D^2 + 24u^2/D^3.
    RationalFunction expected4 = RationalFunction(u * Rational(2), d * d) +
                                 RationalFunction(Polynomial::monomial(2, Rational(24)), d * d * d);
    CHECK(inverse_determinant_derivative(p, 4) == expected4);
}

TEST_CASE("inverse determinant derivatives match the symbolic series oracle") {
    for (int n : {2, 3}) {
        BouquetParams p(n, 1);
        for (int l = 0; l <= 10; ++l) {
            CAPTURE(n);
            CAPTURE(l);
            REQUIRE(inverse_determinant_derivative(p, l) ==
                    oracle::inverse_determinant_derivative_oracle(p, l));
        }
    }
}

TEST_CASE("memoized derivatives are stable under concurrent access") {
    BouquetParams p(4, 1);
    std::vector<std::future<RationalFunction>> jobs;
    for (int i = 0; i < 8; ++i)
        jobs.push_back(std::async(std::launch::async,
                                  [&p] { return inverse_determinant_derivative(p, 8); }));
    RationalFunction direct = inverse_determinant_derivative(p, 8);
    for (auto& job : jobs) REQUIRE(job.get() == direct);
}

TEST_CASE("generating function at epsilon zero") {
    BouquetParams p(2, 1);
    RationalFunction g0 = generating_function(p);

    RationalFunction expected =
        RationalFunction(Polynomial::monomial(2, Rational(2)), one - Polynomial::monomial(2)) +
        RationalFunction(u * Rational(4) - Polynomial::monomial(2, Rational(6)),
                         base_determinant(2));
    CHECK(g0 == expected);

    std::vector<Rational> series = series_coefficients(g0, 4);
    CHECK(series == std::vector<Rational>{0, 4, 12, 28, 84});

    // Oracle route through the epsilon series agrees.
    CHECK(g0 == oracle::generating_function_derivative_oracle(p, 0));
}

TEST_CASE("generating function poles are exactly 1/q, 1, -1") {
    for (int n : {2, 3, 4}) {
        BouquetParams p(n, 1);
        RationalFunction g0 = generating_function(p);
        const Rational inv_q(1, p.q());
        CAPTURE(n);
        REQUIRE(g0.has_pole_at(inv_q));
        REQUIRE(g0.has_pole_at(Rational(1)));
        REQUIRE(g0.has_pole_at(Rational(-1)));

        // Divide out each linear factor once; nothing may remain.
        Polynomial den = g0.denominator();
        for (const Rational& root : {inv_q, Rational(1), Rational(-1)}) {
            auto [quot, rem] = den.divmod(u - Polynomial(root));
            REQUIRE(rem.is_zero());
            den = quot;
        }
        REQUIRE(den.degree() == 0);
    }
}

TEST_CASE("residue of the generating function at 1/q") {
    for (int n : {2, 3, 4}) {
        BouquetParams p(n, 1);
        SingularPart part = singular_part(generating_function(p), Rational(1, p.q()));
        CAPTURE(n);
        REQUIRE(part.order() == 1);
        REQUIRE(part.leading() == Rational(-1, p.q()));
    }
}

TEST_CASE("epsilon derivatives of the generating function") {
    BouquetParams p(2, 1);
    for (int k : {1, 3, 5, 7}) CHECK(generating_function_derivative(p, k).is_zero());
    CHECK(generating_function_derivative(p, 0) == generating_function(p));

    // Hand-expanded k=2 case.
    Polynomial d = base_determinant(2);
    RationalFunction expected2 =
        RationalFunction(u * Rational(-2), d) -
        RationalFunction((u * Rational(2)) * (u * Rational(4) - Polynomial::monomial(2, Rational(6))),
                         d * d);
    CHECK(generating_function_derivative(p, 2) == expected2);

    std::vector<Rational> series2 = series_coefficients(generating_function_derivative(p, 2), 3);
    CHECK(series2 == std::vector<Rational>{0, -2, -16, -78});

    for (int n : {2, 3}) {
        BouquetParams params(n, 1);
        for (int k = 0; k <= 8; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            REQUIRE(generating_function_derivative(params, k) ==
                    oracle::generating_function_derivative_oracle(params, k));
        }
    }
}

TEST_CASE("power sums: enumeration, histograms, and series coefficients agree") {
    BouquetParams p(2, 1);
    for (int k = 1; k <= 6; ++k) {
        PowerSumTable table = power_sums(p, k, 8);
        for (int m = 1; m <= 8; ++m) {
            Int brute = 0;
            for (const auto& [v, c] : oracle::histogram_by_enumeration(2, 1, m))
                brute += int_pow(Int(v), static_cast<unsigned>(k)) * c;
            CAPTURE(k);
            CAPTURE(m);
            REQUIRE(table.at_length(m) == brute);
        }
    }
}

TEST_CASE("power sums against histograms out to length 30") {
    for (int n : {2, 3}) {
        BouquetParams p(n, 1);
        std::vector<LogHistogram> table = histogram_table(n, 1, 30);
        for (int k = 0; k <= 6; k += 2) {
            PowerSumTable sums = power_sums(p, k, 30);
            for (int m = 1; m <= 30; ++m) {
                CAPTURE(n);
                CAPTURE(k);
                CAPTURE(m);
                REQUIRE(sums.at_length(m) ==
                        power_sum_from_histogram(table[static_cast<size_t>(m - 1)], k));
            }
        }
    }
}

TEST_CASE("power sum table shape and anchors") {
    BouquetParams p(2, 1);
    PowerSumTable s2 = power_sums(p, 2, 3);
    CHECK(s2.values == std::vector<Int>{2, 16, 78});

    PowerSumTable odd = power_sums(p, 3, 10);
    for (const Int& v : odd.values) CHECK(v == 0);

    PowerSumTable s0 = power_sums(p, 0, 10);
    CHECK(s0.at_length(10) == 59052);
    for (int m = 1; m <= 10; ++m) CHECK(s0.at_length(m) == count_cyclic(p, m));

    // Crude bound: |v| <= m on every word, so |S_k(m)| <= m^k * S_0(m).
    PowerSumTable s0_long = power_sums(p, 0, 20);
    for (int k : {2, 4, 6}) {
        PowerSumTable sk = power_sums(p, k, 20);
        for (int m = 1; m <= 20; ++m) {
            Int bound = int_pow(Int(m), static_cast<unsigned>(k)) * s0_long.at_length(m);
            Int value = sk.at_length(m);
            if (value < 0) value = -value;
            CAPTURE(k);
            CAPTURE(m);
            REQUIRE(value <= bound);
        }
    }
}

TEST_CASE("counts") {
    BouquetParams p2(2, 1);
    CHECK(count_cyclic(p2, 1) == 4);
    CHECK(count_cyclic(p2, 2) == 12);
    CHECK(count_cyclic(BouquetParams(3, 1), 2) == 30);
    CHECK(counts_from_series(p2, 4) == std::vector<Int>{4, 12, 28, 84});
}

TEST_CASE("generator choice does not change any power sum") {
    for (int n : {2, 3}) {
        std::vector<LogHistogram> first = histogram_table(n, 1, 8);
        std::vector<LogHistogram> second = histogram_table(n, 2, 8);
        CAPTURE(n);
        REQUIRE(first == second);
        REQUIRE(power_sums(BouquetParams(n, 1), 4, 12).values ==
                power_sums(BouquetParams(n, 2), 4, 12).values);
    }
}

TEST_CASE("laurent expansions match the predicted order and leading coefficient") {
    for (int n : {2, 3})
        for (int k : {2, 4, 6, 8}) {
            LaurentCheck check = laurent_check(BouquetParams(n, 1), k);
            CAPTURE(n);
            CAPTURE(k);
            REQUIRE(check.order_matches);
            REQUIRE(check.leading_matches);
            REQUIRE(check.expansion.order() == k / 2 + 1);
        }

    LaurentCheck c22 = laurent_check(BouquetParams(2, 1), 2);
    CHECK(c22.expansion.leading() == Rational(-1, 9));
    LaurentCheck c42 = laurent_check(BouquetParams(2, 1), 4);
    CHECK(c42.expansion.leading() == Rational(-2, 9));
    LaurentCheck c23 = laurent_check(BouquetParams(3, 1), 2);
    CHECK(c23.expansion.leading() == Rational(-1, 50));

    CHECK_THROWS_AS(laurent_check(BouquetParams(2, 1), 3), std::domain_error);
    CHECK_THROWS_AS(laurent_check(BouquetParams(2, 1), 0), std::domain_error);
}

TEST_CASE("zeta function values and the log-derivative identity") {
    BouquetParams p(2, 1);
    CHECK(ihara_zeta(p, Rational(0)) == 1);
    CHECK(ihara_zeta(p, Rational(1, 10)) == Rational(100, 99) * Rational(100, 63));
    CHECK_THROWS_AS(ihara_zeta(p, Rational(1, 3)), std::domain_error);
    CHECK_THROWS_AS(ihara_zeta(p, Rational(1)), std::domain_error);

    for (int n : {2, 3}) {
        BouquetParams params(n, 1);
        RationalFunction z = ihara_zeta_function(params);
        RationalFunction log_deriv = RationalFunction(u) * z.derivative() / z;
        CAPTURE(n);
        REQUIRE(log_deriv == generating_function(params));
        std::vector<Rational> series = series_coefficients(log_deriv, 10);
        for (int m = 1; m <= 10; ++m)
            REQUIRE(series[static_cast<size_t>(m)] == Rational(count_cyclic(params, m)));
    }
}

TEST_CASE("finite differences of the twisted trace recover the power sums") {
    // f(eps) = sum_v counts(v) cos(v*eps) has k-th derivative (-1)^{k/2} S_k
    // at zero for even k; central differences approximate it well at h=1e-3.
    std::vector<LogHistogram> table = histogram_table(2, 1, 20);
    PowerSumTable s2 = power_sums(BouquetParams(2, 1), 2, 20);
    PowerSumTable s4 = power_sums(BouquetParams(2, 1), 4, 20);

    // The fourth difference divides by h^4 = 1e-12, which amplifies rounding
    // in f by 1e12; double precision would drown S_4 at small m, so the
    // quadrature runs in long double (the counts here are < 2^53, exact).
    const long double h = 1e-3L;
    for (int m = 1; m <= 20; ++m) {
        const LogHistogram& hist = table[static_cast<size_t>(m - 1)];
        auto f = [&hist](long double eps) {
            long double acc = 0;
            for (const auto& [v, c] : hist)
                acc += static_cast<long double>(to_double(Int(c))) * std::cos(v * eps);
            return acc;
        };
        long double second = (f(h) - 2 * f(0) + f(-h)) / (h * h);
        long double fourth =
            (f(2 * h) - 4 * f(h) + 6 * f(0) - 4 * f(-h) + f(-2 * h)) / (h * h * h * h);

        double expected2 = -to_double(s2.at_length(m));
        double expected4 = to_double(s4.at_length(m));
        CAPTURE(m);
        REQUIRE(std::abs(static_cast<double>(second) - expected2) <= 1e-4 * std::abs(expected2));
        REQUIRE(std::abs(static_cast<double>(fourth) - expected4) <= 1e-4 * std::abs(expected4));
    }
}

TEST_CASE("partial fractions reconstruct the series exactly") {
    // Both G and its second derivative split into singular parts plus a
    // polynomial; the split must reproduce every series coefficient.
    for (int n : {2, 3}) {
        BouquetParams params(n, 1);
        const Rational inv_q(1, params.q());
        for (int k : {0, 2}) {
            RationalFunction f = generating_function_derivative(params, k);
            std::vector<SingularPart> parts;
            for (const Rational& p : {inv_q, Rational(1), Rational(-1)}) {
                SingularPart part = singular_part(f, p);
                if (part.order() > 0) parts.push_back(part);
            }
            Polynomial poly_part = f.polynomial_part();
            std::vector<Rational> series = series_coefficients(f, 40);
            for (int m = 0; m <= 40; ++m) {
                Rational rebuilt = poly_part.coefficient(m);
                for (const SingularPart& part : parts) rebuilt += part.series_coefficient(m);
                CAPTURE(n);
                CAPTURE(k);
                CAPTURE(m);
                REQUIRE(rebuilt == series[static_cast<size_t>(m)]);
            }
        }
    }
}

TEST_CASE("the constant part of the generating function at n=2 is -4") {
    // Numerator and denominator have equal degree, so the polynomial part is
    // the ratio of leading coefficients.
    Polynomial part = generating_function(BouquetParams(2, 1)).polynomial_part();
    CHECK(part == Polynomial(Rational(-4)));
}
