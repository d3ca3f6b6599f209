#ifndef FREELOG_ASYMPTOTICS_HPP
#define FREELOG_ASYMPTOTICS_HPP

#include "freelog/numeric.hpp"
#include "freelog/ratfunc.hpp"
#include "freelog/zeta.hpp"

namespace freelog {

/// An exact partial sum next to its predicted main term. The ratio is kept
/// rational on purpose: the interesting deviations shrink geometrically and
/// fall below double precision long before the trends stop being monotone,
/// so trend checks must never round. The _value accessors render decimals.
struct PartialSumPrediction {
    int max_len = 0;
    Rational exact;
    Rational main_term;
    Rational ratio;  // exact / main_term; 1 when both sides vanish

    double exact_value() const { return to_double(exact); }
    double main_term_value() const { return to_double(main_term); }
    double ratio_value() const { return to_double(ratio); }
};

/// Partial sum of the rising-factorial series, exactly:
///   unweighted: sum_{m=0..l} (k)_m / m!
///   weighted:   sum_{m=0..l} (k)_m q^m / m!
/// Requires k >= 1, l >= 0, q > 1.
Rational pochhammer_sum(int k, int max_len, const Rational& q, bool weighted);

/// The predicted main term for the sums above:
///   unweighted: l^k / k!
///   weighted:   q^{l+1} l^{k-1} / ((q-1) (k-1)!)
/// Returned exactly so callers can form exact ratios; render as needed.
Rational pochhammer_asymptotic(int k, int max_len, const Rational& q, bool weighted);

/// Both of the above as one prediction row.
PartialSumPrediction pochhammer_check(int k, int max_len, const Rational& q, bool weighted);

/// Main term of sum_{m=0..l} [u^m] f for a function whose rightmost
/// singularity is the given singular part at a pole 1/q with q > 1:
///   a_K * (-q)^K * q^{l+1} * l^{K-1} / ((q-1) * (K-1)!)
/// where K is the order and a_K the leading coefficient. Poles on |u| = 1
/// carry no q^l factor; their exact contributions are available separately
/// through singular_partial_sum. The zero singular part gives 0.
Rational partial_sum_main_term(const SingularPart& dominant, int max_len);

/// Exact partial sum of S_k(m) over m = 1..max_len against the predicted
/// main term
///   k!/((k/2)!) * q^{l+1} * l^{k/2} / (q-1)^{k/2+1}.
/// k = 0 is the plain word count with main term q^{l+1}/(q-1). Odd k has
/// both sides identically zero and the ratio is reported as 1.
PartialSumPrediction powersum_partial_check(const BouquetParams& params, int k, int max_len);

}  // namespace freelog

#endif
