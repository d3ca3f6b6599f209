#include "freelog/stats.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace freelog {

Rational gaussian_moment(int k) {
    if (k < 0) throw std::domain_error("moment order must be nonnegative");
    if (k % 2 != 0) return 0;
    const unsigned half = static_cast<unsigned>(k / 2);
    return Rational(factorial(static_cast<unsigned>(k)),
                    int_pow(Int(2), half) * factorial(half));
}

Rational moment(const BouquetParams& params, int k, int max_len) {
    if (k < 0) throw std::domain_error("moment order must be nonnegative");
    if (max_len < 1) throw std::domain_error("moment needs length at least 1");
    if (k % 2 != 0) return 0;

    PowerSumTable sums = power_sums(params, k, max_len);
    const Rational g(params.g());
    Rational acc = 0;
    Int total = 0;
    for (int m = 1; m <= max_len; ++m) {
        acc += rational_pow(g / m, k / 2) * Rational(sums.at_length(m));
        total += cyclic_word_count(params.rank, m);
    }
    return acc / Rational(total);
}

int compare_normalized(long long value, int g, int m, const Rational& threshold) {
    if (g < 1 || m < 1) throw std::domain_error("scale parameters must be positive");
    const int sign_x = value > 0 ? 1 : value < 0 ? -1 : 0;
    const int sign_t = threshold > 0 ? 1 : threshold < 0 ? -1 : 0;
    if (sign_x != sign_t) return sign_x < sign_t ? -1 : 1;
    if (sign_x == 0) return 0;
    // Same strict sign: compare squares, flipping the answer on the negative
    // side. x^2 = g*v^2/m is rational, so this is exact.
    Rational x2(Int(g) * value * value, Int(m));
    Rational t2 = threshold * threshold;
    int square_cmp = x2 < t2 ? -1 : x2 > t2 ? 1 : 0;
    return sign_x > 0 ? square_cmp : -square_cmp;
}

DistributionTable::DistributionTable(const BouquetParams& params, int max_len)
    : rank_(params.rank), j_(params.j), max_len_(max_len), total_(0) {
    if (max_len < 1) throw std::domain_error("distribution needs length at least 1");
    std::vector<LogHistogram> table = histogram_table(rank_, j_, max_len);
    for (int m = 1; m <= max_len; ++m) {
        for (const auto& [value, count] : table[static_cast<size_t>(m - 1)]) {
            atoms_.push_back({m, value, count});
            total_ += count;
        }
    }
}

DistributionTable DistributionTable::at_fixed_length(const BouquetParams& params, int m) {
    if (m < 1) throw std::domain_error("distribution needs length at least 1");
    DistributionTable out;
    out.rank_ = params.rank;
    out.j_ = params.j;
    out.max_len_ = m;
    out.total_ = 0;
    for (const auto& [value, count] : histogram_at_length(params.rank, params.j, m)) {
        out.atoms_.push_back({m, value, count});
        out.total_ += count;
    }
    return out;
}

Rational DistributionTable::probability(const Rational& lo, const Rational& hi) const {
    if (lo > hi) throw std::domain_error("interval endpoints out of order");
    Int mass = 0;
    for (const Atom& atom : atoms_) {
        if (compare_normalized(atom.value, g(), atom.m, lo) < 0) continue;
        if (compare_normalized(atom.value, g(), atom.m, hi) > 0) continue;
        mass += atom.count;
    }
    return Rational(mass, total_);
}

Rational DistributionTable::moment(int k) const {
    if (k < 0) throw std::domain_error("moment order must be nonnegative");
    if (k % 2 != 0) return 0;
    Rational acc = 0;
    const Rational gr(g());
    for (const Atom& atom : atoms_) {
        Rational v = rational_pow(gr / atom.m, k / 2);
        v *= Rational(int_pow(Int(atom.value), static_cast<unsigned>(k)));
        acc += v * Rational(atom.count);
    }
    return acc / Rational(total_);
}

double gaussian_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

std::vector<Rational> default_grid() {
    std::vector<Rational> grid;
    grid.reserve(17);
    for (int i = -8; i <= 8; ++i) grid.emplace_back(i, 2);
    return grid;
}

std::vector<IntervalRow> interval_table(const DistributionTable& table,
                                        const std::vector<Rational>& grid, bool all_pairs) {
    if (grid.size() < 2) throw std::domain_error("grid needs at least two endpoints");
    if (!std::is_sorted(grid.begin(), grid.end()))
        throw std::domain_error("grid endpoints must be sorted");

    // Cumulative mass strictly below and weakly below each endpoint; the mass
    // of the closed interval [grid[i], grid[j]] is then le[j] - lt[i].
    const size_t n_points = grid.size();
    std::vector<Int> mass_lt(n_points, Int(0));
    std::vector<Int> mass_le(n_points, Int(0));
    for (const auto& atom : table.atoms()) {
        for (size_t e = 0; e < n_points; ++e) {
            int cmp = compare_normalized(atom.value, table.g(), atom.m, grid[e]);
            if (cmp < 0) mass_lt[e] += atom.count;
            if (cmp <= 0) mass_le[e] += atom.count;
        }
    }

    std::vector<IntervalRow> rows;
    for (size_t i = 0; i < grid.size(); ++i) {
        const size_t j_begin = all_pairs ? i : i + 1;
        const size_t j_end = all_pairs ? grid.size() : std::min(i + 2, grid.size());
        for (size_t j = j_begin; j < j_end; ++j) {
            IntervalRow row;
            row.lo = grid[i];
            row.hi = grid[j];
            row.probability = Rational(mass_le[j] - mass_lt[i], table.total());
            row.gaussian_mass = gaussian_cdf(to_double(grid[j])) - gaussian_cdf(to_double(grid[i]));
            row.abs_difference = std::abs(to_double(row.probability) - row.gaussian_mass);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

DiscrepancyResult gaussian_discrepancy(const DistributionTable& table,
                                       const std::vector<Rational>& grid) {
    std::vector<IntervalRow> rows = interval_table(table, grid, true);
    const IntervalRow* worst = &rows.front();
    for (const IntervalRow& row : rows)
        if (row.abs_difference > worst->abs_difference) worst = &row;
    return {worst->abs_difference, worst->lo, worst->hi};
}

DiscrepancyResult gaussian_discrepancy(const BouquetParams& params, int max_len,
                                       const std::vector<Rational>& grid) {
    return gaussian_discrepancy(DistributionTable(params, max_len), grid);
}

MomentReport moment_convergence(const BouquetParams& params, int k_max,
                                const std::vector<int>& lens) {
    if (k_max < 0) throw std::domain_error("moment order bound must be nonnegative");
    if (lens.empty() || !std::is_sorted(lens.begin(), lens.end()))
        throw std::domain_error("cutoffs must be increasing");
    MomentReport report;
    for (int l : lens)
        for (int k = 0; k <= k_max; k += 2)
            report.rows.push_back({l, k, moment(params, k, l), gaussian_moment(k)});
    return report;
}

ChiSquareResult sampler_chi_square(const BouquetParams& params, int m, int samples,
                                   std::uint64_t seed) {
    if (samples < 1) throw std::domain_error("need at least one sample");
    LogHistogram exact = histogram_at_length(params.rank, params.j, m);
    Int total = 0;
    for (const auto& [value, count] : exact) total += count;

    CyclicWordSampler sampler(params.rank, m, seed);
    std::map<long long, long long> observed;
    for (int i = 0; i < samples; ++i) {
        CyclicWord w = sampler.sample();
        ++observed[discrete_log(w, params.j)];
    }

    ChiSquareResult out;
    out.statistic = 0.0;
    for (const auto& [value, count] : exact) {
        Rational expected = Rational(count, total) * samples;
        long long seen = 0;
        if (auto it = observed.find(value); it != observed.end()) {
            seen = it->second;
            observed.erase(it);
        }
        double e = to_double(expected);
        double d = static_cast<double>(seen) - e;
        out.statistic += d * d / e;
        out.category_values.push_back(value);
        out.observed.push_back(seen);
        out.expected.push_back(std::move(expected));
    }
    if (!observed.empty())
        throw std::logic_error("sampler produced a signed count outside the exact support");

    out.degrees_of_freedom = static_cast<int>(out.category_values.size()) - 1;
    out.p_value = boost::math::gamma_q(out.degrees_of_freedom / 2.0, out.statistic / 2.0);
    return out;
}

}  // namespace freelog
