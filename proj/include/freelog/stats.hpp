#ifndef FREELOG_STATS_HPP
#define FREELOG_STATS_HPP

#include "freelog/numeric.hpp"
#include "freelog/words.hpp"
#include "freelog/zeta.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

namespace freelog {

/// k-th moment of the standard Gaussian: k!/(2^{k/2} (k/2)!) for even k,
/// zero for odd k.
Rational gaussian_moment(int k);

/// Exact k-th moment of the normalized signed generator count over the
/// uniform ensemble of cyclically reduced words of length 1..max_len:
///   M_k = (1/N) * sum_{m=1..max_len} (g/m)^{k/2} * S_k(m),
/// computed through the generating-function power sums. Odd k is exactly
/// zero (every S_k(m) vanishes), even k is rational because only integer
/// powers of g/m appear.
Rational moment(const BouquetParams& params, int k, int max_len);

/// Sign of value * sqrt(g/m) - threshold, decided exactly: compare signs
/// first, then squares as rationals. Returns -1, 0, or +1.
int compare_normalized(long long value, int g, int m, const Rational& threshold);

/// The full distribution of the normalized signed count over words of
/// length 1..max_len: one atom per (length m, raw signed count v) pair with
/// positive multiplicity, located at v * sqrt(g/m).
class DistributionTable {
public:
    struct Atom {
        int m;
        long long value;  // raw signed count; the atom sits at value*sqrt(g/m)
        Int count;
    };

    DistributionTable(const BouquetParams& params, int max_len);

    /// The conditional law at one exact length instead of the cumulative
    /// ensemble; the limit theorem does not distinguish the two, so both are
    /// observable.
    static DistributionTable at_fixed_length(const BouquetParams& params, int m);

    int rank() const { return rank_; }
    int generator() const { return j_; }
    int max_len() const { return max_len_; }
    int g() const { return rank_ - 1; }
    const std::vector<Atom>& atoms() const { return atoms_; }
    const Int& total() const { return total_; }

    /// Exact probability mass of the closed interval [lo, hi].
    Rational probability(const Rational& lo, const Rational& hi) const;

    /// k-th moment recomputed from the atoms; agrees with moment() above but
    /// runs through the histogram pipeline instead of the power sums. Odd k
    /// is exactly zero by the word <-> inverse-word symmetry of the atoms.
    Rational moment(int k) const;

private:
    DistributionTable() = default;

    int rank_ = 0;
    int j_ = 0;
    int max_len_ = 0;
    std::vector<Atom> atoms_;
    Int total_;
};

/// Standard Gaussian CDF via erfc; absolute error below 1e-12 over the grid
/// range used here (a test pins reference values).
double gaussian_cdf(double x);

/// One comparison row: exact mass of [lo, hi] against the Gaussian mass.
struct IntervalRow {
    Rational lo;
    Rational hi;
    Rational probability;
    double gaussian_mass;
    double abs_difference;
};

/// Endpoints -4, -3.5, ..., 4 (step 1/2) as exact rationals.
std::vector<Rational> default_grid();

/// Comparison rows over a sorted endpoint grid: consecutive cells only, or
/// every endpoint pair lo <= hi including the degenerate single points.
/// Cumulative masses are computed once per endpoint, so this is much cheaper
/// than calling probability() per interval.
std::vector<IntervalRow> interval_table(const DistributionTable& table,
                                        const std::vector<Rational>& grid, bool all_pairs);

/// Worst interval over all endpoint pairs of the grid.
struct DiscrepancyResult {
    double value;
    Rational lo;
    Rational hi;
};
DiscrepancyResult gaussian_discrepancy(const DistributionTable& table,
                                       const std::vector<Rational>& grid);

/// Convenience overload that builds the cumulative table itself; prefer the
/// table form when the same table feeds several grids.
DiscrepancyResult gaussian_discrepancy(const BouquetParams& params, int max_len,
                                       const std::vector<Rational>& grid);

/// Moments against their Gaussian targets across cutoffs and orders.
struct MomentReport {
    struct Row {
        int max_len;
        int k;
        Rational value;
        Rational target;
        double decimal() const { return to_double(value); }
        double target_value() const { return to_double(target); }
        double deviation() const { return std::abs(to_double(value - target)); }
    };
    std::vector<Row> rows;
};

/// One row per even k <= k_max and cutoff in lens (which must be increasing).
MomentReport moment_convergence(const BouquetParams& params, int k_max,
                                const std::vector<int>& lens);

/// Goodness-of-fit of the sampler against the exact distribution at one
/// length: draws `samples` words, bins them by raw signed count, and runs a
/// chi-square test over the exact category probabilities.
struct ChiSquareResult {
    double statistic;
    int degrees_of_freedom;
    double p_value;
    std::vector<long long> category_values;
    std::vector<long long> observed;
    std::vector<Rational> expected;
};
ChiSquareResult sampler_chi_square(const BouquetParams& params, int m, int samples,
                                   std::uint64_t seed);

}  // namespace freelog

#endif
