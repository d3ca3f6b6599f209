#include "doctest.h"

#include "freelog/asymptotics.hpp"
#include "freelog/zeta.hpp"

#include <stdexcept>
#include <vector>

using namespace freelog;

namespace {

Rational rational_abs(const Rational& x) { return x < 0 ? -x : x; }

// (k)_m q^m / m!, written out directly rather than incrementally.
Rational direct_term(int k, int m, const Rational& q, bool weighted) {
    Rational rising = 1;
    for (int i = 0; i < m; ++i) rising *= Rational(k + i);
    Rational term = rising / Rational(Int(factorial(static_cast<unsigned>(m))));
    if (weighted) term *= rational_pow(q, m);
    return term;
}

}  // namespace

TEST_CASE("rising factorial sums: fixed examples") {
    CHECK(pochhammer_sum(1, 7, Rational(3), false) == 8);
    CHECK(pochhammer_sum(1, 3, Rational(3), true) == 40);
    CHECK(pochhammer_sum(2, 4, Rational(3), false) == 15);
    CHECK_THROWS_AS(pochhammer_sum(0, 3, Rational(3), false), std::domain_error);
    CHECK_THROWS_AS(pochhammer_sum(1, 3, Rational(1), true), std::domain_error);
}

TEST_CASE("rising factorial sums: closed forms") {
    for (int l = 0; l <= 60; ++l) {
        // Unweighted k=2 terms are m+1, so the sum telescopes to a triangle.
        CHECK(pochhammer_sum(2, l, Rational(3), false) == Rational((l + 1) * (l + 2), 2));
        // Weighted k=1 is plain geometric.
        for (int q : {3, 5})
            CHECK(pochhammer_sum(1, l, Rational(q), true) ==
                  Rational(int_pow(Int(q), static_cast<unsigned>(l + 1)) - 1, Int(q - 1)));
    }
}

TEST_CASE("termwise ratio identity across orders") {
    for (bool weighted : {false, true})
        for (int k = 2; k <= 6; ++k)
            for (int m = 0; m <= 50; ++m) {
                const Rational q(3);
                CAPTURE(weighted);
                CAPTURE(k);
                CAPTURE(m);
                REQUIRE(direct_term(k, m, q, weighted) * Rational(k - 1) ==
                        Rational(k + m - 1) * direct_term(k - 1, m, q, weighted));
            }
}

TEST_CASE("sum terms match the direct product formula") {
    // The incremental computation inside pochhammer_sum must reproduce the
    // explicit rising-factorial terms: check via first differences.
    for (bool weighted : {false, true})
        for (int k : {1, 2, 3, 5}) {
            Rational prev = 0;
            for (int l = 0; l <= 25; ++l) {
                Rational sum = pochhammer_sum(k, l, Rational(5), weighted);
                REQUIRE(sum - prev == direct_term(k, l, Rational(5), weighted));
                prev = sum;
            }
        }
}

TEST_CASE("main terms and their ratios") {
    CHECK(pochhammer_asymptotic(2, 100, Rational(3), false) == 5000);
    // Exact ratio at l=100, k=2: (101*102/2)/5000. Just outside a 3% band,
    // inside 3.1%.
    Rational ratio = pochhammer_sum(2, 100, Rational(3), false) /
                     pochhammer_asymptotic(2, 100, Rational(3), false);
    CHECK(ratio == Rational(5151, 5000));
    CHECK(rational_abs(ratio - 1) <= Rational(31, 1000));

    // Weighted k=1: exact ratio is 1 - q^{-(l+1)}.
    Rational weighted_ratio = pochhammer_sum(1, 10, Rational(3), true) /
                              pochhammer_asymptotic(1, 10, Rational(3), true);
    CHECK(weighted_ratio == 1 - Rational(1, int_pow(Int(3), 11)));

    Rational heavy = pochhammer_sum(3, 60, Rational(3), true) /
                     pochhammer_asymptotic(3, 60, Rational(3), true);
    CHECK(rational_abs(heavy - 1) < Rational(1, 10));
}

TEST_CASE("prediction struct wiring") {
    PartialSumPrediction p = pochhammer_check(2, 100, Rational(3), false);
    CHECK(p.max_len == 100);
    CHECK(p.ratio == p.exact / p.main_term);
    CHECK(p.exact_value() == doctest::Approx(5151.0));
    CHECK(p.ratio_value() == doctest::Approx(1.0302));
}

TEST_CASE("ratios approach one monotonically") {
    const std::vector<int> lens{20, 40, 80, 160};
    for (bool weighted : {false, true})
        for (int k : {1, 2, 3}) {
            Rational prev_gap = -1;
            for (int l : lens) {
                Rational ratio = pochhammer_sum(k, l, Rational(3), weighted) /
                                 pochhammer_asymptotic(k, l, Rational(3), weighted);
                Rational gap = rational_abs(ratio - 1);
                CAPTURE(weighted);
                CAPTURE(k);
                CAPTURE(l);
                if (prev_gap >= 0) REQUIRE(gap < prev_gap);
                prev_gap = gap;
            }
        }
}

TEST_CASE("main term from a singular part") {
    BouquetParams p2(2, 1);

    // Zero singular part contributes nothing.
    CHECK(partial_sum_main_term(SingularPart{}, 10) == 0);

    // Simple pole of G at 1/3: main term is 3^{l+1}/2.
    SingularPart g0_part = singular_part(generating_function(p2), Rational(1, 3));
    for (int l : {5, 20})
        CHECK(partial_sum_main_term(g0_part, l) ==
              Rational(int_pow(Int(3), static_cast<unsigned>(l + 1)), 2));

    // Exact count partial sums sit within 0.1% of it at l=20.
    Rational exact = 0;
    for (int m = 1; m <= 20; ++m) exact += Rational(count_cyclic(p2, m));
    Rational ratio = exact / partial_sum_main_term(g0_part, 20);
    CHECK(rational_abs(ratio - 1) <= Rational(1, 1000));

    // Double pole of the second derivative at 1/3: main term -3^{l+1} l / 2,
    // the sign carried by the derivative's coefficients (-1)^{k/2} S_k(m).
    SingularPart g2_part =
        singular_part(generating_function_derivative(p2, 2), Rational(1, 3));
    REQUIRE(g2_part.order() == 2);
    CHECK(g2_part.leading() == Rational(-1, 9));
    for (int l : {7, 12})
        CHECK(partial_sum_main_term(g2_part, l) ==
              -Rational(int_pow(Int(3), static_cast<unsigned>(l + 1)) * l, 2));

    // Poles on the unit circle are excluded from the main term.
    SingularPart at_one = singular_part(generating_function(p2), Rational(1));
    CHECK(at_one.order() == 1);
    CHECK_THROWS_AS(partial_sum_main_term(at_one, 10), std::domain_error);
}

TEST_CASE("singular-part main term equals the closed power-sum form") {
    // The two routes to the main term of sum_{m<=l} S_k(m) must agree
    // exactly: through the Laurent data of the k-th derivative, and through
    // the closed form k!/((k/2)!) q^{l+1} l^{k/2}/(q-1)^{k/2+1}.
    for (int n : {2, 3})
        for (int k : {2, 4, 6}) {
            BouquetParams params(n, 1);
            SingularPart part = singular_part(generating_function_derivative(params, k),
                                              Rational(1, params.q()));
            const int l = 10;
            Rational via_laurent = partial_sum_main_term(part, l);
            if ((k / 2) % 2 != 0) via_laurent = -via_laurent;
            CAPTURE(n);
            CAPTURE(k);
            REQUIRE(via_laurent == powersum_partial_check(params, k, l).main_term);
        }
}

TEST_CASE("power-sum partial sums against the predicted main term") {
    BouquetParams p2(2, 1);

    PartialSumPrediction at3 = powersum_partial_check(p2, 2, 3);
    CHECK(at3.exact == 96);
    CHECK(at3.main_term == Rational(243, 2));
    CHECK(at3.ratio == Rational(64, 81));

    PartialSumPrediction odd = powersum_partial_check(p2, 3, 10);
    CHECK(odd.exact == 0);
    CHECK(odd.main_term == 0);
    CHECK(odd.ratio == 1);

    for (int n : {2, 3})
        for (int k : {2, 4}) {
            BouquetParams params(n, 1);
            Rational prev_gap = -1;
            for (int l : {10, 20, 40}) {
                Rational gap = rational_abs(powersum_partial_check(params, k, l).ratio - 1);
                CAPTURE(n);
                CAPTURE(k);
                CAPTURE(l);
                if (prev_gap >= 0) REQUIRE(gap < prev_gap);
                prev_gap = gap;
            }
            CHECK(rational_abs(powersum_partial_check(params, k, 40).ratio - 1) <
                  Rational(1, 10));
        }
}

TEST_CASE("zeroth power-sum partial check reduces to counts") {
    BouquetParams p2(2, 1);
    PartialSumPrediction counts = powersum_partial_check(p2, 0, 20);
    Rational exact = 0;
    for (int m = 1; m <= 20; ++m) exact += Rational(count_cyclic(p2, m));
    CHECK(counts.exact == exact);
    CHECK(rational_abs(counts.ratio - 1) <= Rational(1, 1000));
}
