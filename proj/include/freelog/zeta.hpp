#ifndef FREELOG_ZETA_HPP
#define FREELOG_ZETA_HPP

#include "freelog/numeric.hpp"
#include "freelog/ratfunc.hpp"

#include <vector>

namespace freelog {

/// Parameters of the one-vertex rose graph behind the free group of the
/// given rank: the vertex has degree 2*rank, so q = 2*rank - 1 is the
/// branching number, and g = rank - 1 is the exponent of the (1 - u^2)
/// factor. The tracked generator is j.
struct BouquetParams {
    int rank;
    int j;

    BouquetParams(int rank_, int j_);

    int q() const { return 2 * rank - 1; }
    int g() const { return rank - 1; }
};

/// l-th derivative at 0 of the twisted vertex weight
///   a(e) = 2*(rank-1) + 2*cos(e),
/// the diagonal entry of the twisted adjacency operator: 2*rank for l = 0,
/// zero for odd l, 2*(-1)^{l/2} for even l >= 2.
Rational a_derivative(const BouquetParams& params, int l);

/// l-th derivative in e, at e = 0, of 1/(1 - u*a(e) + q*u^2), as a rational
/// function of u. Zero for odd l. Built bottom-up from the recurrence that
/// differentiating the identity (1 - u*a(e) + q*u^2) * inv(e) = 1 produces,
/// and memoized per (rank, l) behind a lock so repeated Leibniz expansions
/// share the ladder.
RationalFunction inverse_determinant_derivative(const BouquetParams& params, int l);

/// The closed-walk generating function at e = 0:
///   G(u) = 2*g*u^2 / (1 - u^2) + (u*a(0) - 2*q*u^2) / (1 - u*a(0) + q*u^2).
/// Its u^m Taylor coefficient is the number of cyclically reduced words of
/// length m (for m >= 1).
RationalFunction generating_function(const BouquetParams& params);

/// k-th derivative of the twisted generating function in e at e = 0, by the
/// Leibniz rule over u*a(e) - 2*q*u^2 and the inverse determinant. Zero for
/// odd k >= 1; the (1 - u^2) term only survives at k = 0. Any k is accepted;
/// beyond k = 12 the numerator degrees make this noticeably slower, which
/// the CLI warns about.
RationalFunction generating_function_derivative(const BouquetParams& params, int k);

/// Power sums S_k(m) over cyclically reduced words of length m of the signed
/// generator-j count to the k-th power, for m = 1..max_len.
struct PowerSumTable {
    int k;
    std::vector<Int> values;  // values[m-1] = S_k(m)

    const Int& at_length(int m) const { return values.at(static_cast<size_t>(m - 1)); }
};

/// Extracts S_k(m) = (-1)^{k/2} [u^m] G^(k) for even k (identically zero for
/// odd k, plain counts for k = 0). Every coefficient is checked to be an
/// integer; a failure would mean the algebra above is wrong, so it throws
/// std::logic_error.
PowerSumTable power_sums(const BouquetParams& params, int k, int max_len);

/// Word counts for m = 1..max_len from the k = 0 series.
std::vector<Int> counts_from_series(const BouquetParams& params, int max_len);

/// The closed-form count (2n-1)^m + 1 + (n-1)(1 + (-1)^m) for m >= 1; the
/// series route and the transfer-matrix trace must reproduce it.
Int count_cyclic(const BouquetParams& params, int m);

/// Laurent expansion of G^(k) at u = 1/q compared against the predicted
/// order k/2 + 1 and predicted leading coefficient
///   -k! / (q^{k/2+1} (q-1)^{k/2}).
/// Requires even k >= 2. No throwing on mismatch; callers inspect the flags.
struct LaurentCheck {
    SingularPart expansion;
    int predicted_order;
    Rational predicted_leading;
    bool order_matches;
    bool leading_matches;
};
LaurentCheck laurent_check(const BouquetParams& params, int k);

/// The vertex-counting zeta function of the rose graph,
///   Z(u) = (1 - u^2)^{-g} / (1 - u*a(0) + q*u^2),
/// as an exact rational function. G above is u * (log Z)'; a test ties the
/// two together.
RationalFunction ihara_zeta_function(const BouquetParams& params);

/// Z evaluated at an exact rational point; throws std::domain_error at the
/// poles (u = 1/q, 1, -1 and, for rank > 2, the zeros of (1-u^2)^g).
Rational ihara_zeta(const BouquetParams& params, const Rational& u);

}  // namespace freelog

#endif
