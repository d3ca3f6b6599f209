// Command-line front end: exact counts, power sums, generating-function
// derivatives, Laurent data, Tauberian ratios, Gaussian-limit diagnostics,
// uniform sampling, and the self-verification suite. Machine output is CSV
// or JSON on stdout; notices and failure lists go to stderr.

#include "CLI11.hpp"

#include "freelog/asymptotics.hpp"
#include "freelog/format.hpp"
#include "freelog/numeric.hpp"
#include "freelog/stats.hpp"
#include "freelog/verify.hpp"
#include "freelog/words.hpp"
#include "freelog/zeta.hpp"

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace freelog;

struct OutputOptions {
    std::string format = "csv";
    int precision = 12;
};

void attach_output_options(CLI::App* sub, OutputOptions& out) {
    sub->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--precision", out.precision, "Significant digits for real columns")
        ->check(CLI::Range(6, 18))
        ->capture_default_str();
}

void emit(const OutputTable& table, const OutputOptions& out) {
    if (out.format == "json")
        std::cout << table.to_json(out.precision) << '\n';
    else
        std::cout << table.to_csv(out.precision);
}

/// Exact rational from "p/q", an integer, or a plain decimal like "-3.5".
Rational parse_rational(const std::string& text) {
    try {
        if (auto slash = text.find('/'); slash != std::string::npos) {
            Int num(text.substr(0, slash));
            Int den(text.substr(slash + 1));
            if (den == 0) throw std::domain_error("zero denominator");
            return Rational(num, den);
        }
        if (auto dot = text.find('.'); dot != std::string::npos) {
            std::string digits = text.substr(0, dot) + text.substr(dot + 1);
            Int den = int_pow(Int(10), static_cast<unsigned>(text.size() - dot - 1));
            return Rational(Int(digits), den);
        }
        return Rational(Int(text));
    } catch (const std::runtime_error&) {
        throw std::domain_error("not a number: " + text);
    }
}

int cmd_count(int n, int max_len, const OutputOptions& out) {
    BouquetParams params(n, 1);
    std::vector<Int> series = counts_from_series(params, max_len);
    OutputTable table({"m", "count", "formula_count", "trace_count", "agree"});
    table.add_meta("command", std::string("count"));
    table.add_meta("n", static_cast<long long>(n));
    bool all_agree = true;
    for (int m = 1; m <= max_len; ++m) {
        Int from_series = series[static_cast<size_t>(m - 1)];
        Int formula = count_cyclic(params, m);
        Int trace = count_via_trace(n, m);
        bool agree = from_series == formula && formula == trace;
        all_agree = all_agree && agree;
        table.add_row({static_cast<long long>(m), from_series, formula, trace, agree});
    }
    emit(table, out);
    return all_agree ? 0 : 1;
}

int cmd_powersum(int n, int j, int k, int max_len, const OutputOptions& out) {
    BouquetParams params(n, j);
    if (k % 2 != 0) std::cerr << "note: odd k, power sums vanish identically\n";
    PowerSumTable sums = power_sums(params, k, max_len);
    OutputTable table({"m", "power_sum"});
    table.add_meta("command", std::string("powersum"));
    table.add_meta("n", static_cast<long long>(n));
    table.add_meta("j", static_cast<long long>(j));
    table.add_meta("k", static_cast<long long>(k));
    for (int m = 1; m <= max_len; ++m)
        table.add_row({static_cast<long long>(m), sums.at_length(m)});
    emit(table, out);
    return 0;
}

int cmd_gk(int n, int k, const OutputOptions& out) {
    if (k > 12)
        std::cerr << "note: k above 12, numerator degree grows linearly in k and this gets slow\n";
    BouquetParams params(n, 1);
    RationalFunction gk = generating_function_derivative(params, k);
    OutputTable table({"part", "index", "coefficient"});
    table.add_meta("command", std::string("gk"));
    table.add_meta("n", static_cast<long long>(n));
    table.add_meta("k", static_cast<long long>(k));
    auto add_part = [&](const char* part, const Polynomial& poly) {
        const auto& coeffs = poly.coefficients();
        if (coeffs.empty()) table.add_row({std::string(part), 0LL, Rational(0)});
        for (size_t i = 0; i < coeffs.size(); ++i)
            table.add_row({std::string(part), static_cast<long long>(i), coeffs[i]});
    };
    add_part("numerator", gk.numerator());
    add_part("denominator", gk.denominator());
    emit(table, out);
    return 0;
}

int cmd_laurent(int n, int k, const OutputOptions& out) {
    BouquetParams params(n, 1);
    LaurentCheck check = laurent_check(params, k);
    OutputTable table(
        {"pole", "order", "leading", "predicted_order", "predicted_leading", "match", "coefficients"});
    table.add_meta("command", std::string("laurent"));
    table.add_meta("n", static_cast<long long>(n));
    table.add_meta("k", static_cast<long long>(k));
    std::string coeff_list;
    for (int i = 0; i < check.expansion.order(); ++i) {
        if (i) coeff_list += ' ';
        coeff_list += render_rational(check.expansion.coefficients[static_cast<size_t>(i)]);
    }
    const bool match = check.order_matches && check.leading_matches;
    table.add_row({check.expansion.pole, static_cast<long long>(check.expansion.order()),
                   check.expansion.leading(), static_cast<long long>(check.predicted_order),
                   check.predicted_leading, match, coeff_list});
    emit(table, out);
    return match ? 0 : 1;
}

int cmd_tauberian(int n, int j, int k, const std::vector<int>& lens, const OutputOptions& out) {
    BouquetParams params(n, j);
    OutputTable table({"k", "max_len", "exact", "main_term", "ratio", "ratio_decimal"});
    table.add_meta("command", std::string("tauberian"));
    table.add_meta("n", static_cast<long long>(n));
    table.add_meta("j", static_cast<long long>(j));
    for (int l : lens) {
        PartialSumPrediction p = powersum_partial_check(params, k, l);
        table.add_row({static_cast<long long>(k), static_cast<long long>(l), p.exact, p.main_term,
                       p.ratio, p.ratio_value()});
    }
    emit(table, out);
    return 0;
}

int cmd_moments(int n, int j, int k_max, const std::vector<int>& lens, const OutputOptions& out) {
    BouquetParams params(n, j);
    MomentReport report = moment_convergence(params, k_max, lens);
    OutputTable table({"max_len", "k", "value", "decimal", "target", "deviation"});
    table.add_meta("command", std::string("moments"));
    table.add_meta("n", static_cast<long long>(n));
    table.add_meta("j", static_cast<long long>(j));
    for (const auto& row : report.rows)
        table.add_row({static_cast<long long>(row.max_len), static_cast<long long>(row.k),
                       row.value, row.decimal(), row.target_value(), row.deviation()});
    emit(table, out);
    return 0;
}

int cmd_dist(int n, int j, int max_len, bool fixed_length, bool all_pairs,
             const std::vector<std::string>& grid_tokens, const OutputOptions& out) {
    BouquetParams params(n, j);
    std::vector<Rational> grid;
    if (grid_tokens.empty()) {
        grid = default_grid();
    } else {
        for (const std::string& tok : grid_tokens) grid.push_back(parse_rational(tok));
        if (grid.size() < 2 || !std::is_sorted(grid.begin(), grid.end()))
            throw std::domain_error("grid must be at least two endpoints, sorted");
    }
    DistributionTable dist = fixed_length ? DistributionTable::at_fixed_length(params, max_len)
                                          : DistributionTable(params, max_len);
    OutputTable table({"row_type", "lo", "hi", "probability", "probability_decimal",
                       "gaussian_mass", "abs_difference"});
    table.add_meta("command", std::string("dist"));
    table.add_meta("n", static_cast<long long>(n));
    table.add_meta("j", static_cast<long long>(j));
    table.add_meta("max_len", static_cast<long long>(max_len));
    table.add_meta("fixed_length", fixed_length);
    table.add_meta("total_words", dist.total());
    for (const IntervalRow& row : interval_table(dist, grid, all_pairs))
        table.add_row({std::string("interval"), row.lo, row.hi, row.probability,
                       to_double(row.probability), row.gaussian_mass, row.abs_difference});
    DiscrepancyResult worst = gaussian_discrepancy(dist, grid);
    Rational worst_mass = dist.probability(worst.lo, worst.hi);
    table.add_row({std::string("discrepancy"), worst.lo, worst.hi, worst_mass,
                   to_double(worst_mass),
                   gaussian_cdf(to_double(worst.hi)) - gaussian_cdf(to_double(worst.lo)),
                   worst.value});
    emit(table, out);
    return 0;
}

int cmd_sample(int n, int m, int count, std::uint64_t seed, const OutputOptions& out) {
    CyclicWordSampler sampler(n, m, seed);
    OutputTable table({"index", "word", "log_1", "normalized_log_1"});
    table.add_meta("command", std::string("sample"));
    table.add_meta("n", static_cast<long long>(n));
    table.add_meta("m", static_cast<long long>(m));
    table.add_meta("seed", static_cast<long long>(seed));
    for (int i = 0; i < count; ++i) {
        CyclicWord w = sampler.sample();
        table.add_row({static_cast<long long>(i), format_word(w), discrete_log(w, 1),
                       normalized_log(w, 1)});
    }
    emit(table, out);
    return 0;
}

int cmd_verify(bool quick, const OutputOptions& out) {
    std::vector<CheckResult> results = run_acceptance_checks(quick);
    OutputTable table({"id", "name", "passed", "seconds", "detail"});
    table.add_meta("command", std::string("verify"));
    table.add_meta("quick", quick);
    std::vector<std::string> failures;
    for (const CheckResult& r : results) {
        table.add_row({static_cast<long long>(r.id), r.name, r.passed, r.seconds, r.detail});
        if (!r.passed) failures.push_back(r.name);
    }
    emit(table, out);
    if (!failures.empty()) {
        std::cerr << "{\"failed\": [";
        for (size_t i = 0; i < failures.size(); ++i) {
            if (i) std::cerr << ", ";
            std::cerr << '"' << failures[i] << '"';
        }
        std::cerr << "]}\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact word counts, signed-count power sums, and Gaussian-limit checks\n"
                 "for cyclically reduced words in a free group."};
    app.require_subcommand(1);

    int exit_code = 0;
    OutputOptions out;

    int n = 2, j = 1, k = 2, max_len = 10, k_max = 6, count = 10, m = 6;
    bool quick = false, fixed_length = false, all_pairs = false;
    std::uint64_t seed = 1;
    std::vector<int> lens;
    std::vector<std::string> grid_tokens;

    auto* count_cmd = app.add_subcommand("count", "Cyclically reduced word counts, three routes");
    count_cmd->add_option("--n", n, "Free group rank")->required()->check(CLI::Range(2, 30));
    count_cmd->add_option("--max-len", max_len, "Largest word length")
        ->check(CLI::Range(1, 2000))
        ->capture_default_str();
    attach_output_options(count_cmd, out);
    count_cmd->callback([&] { exit_code = cmd_count(n, max_len, out); });

    auto* powersum_cmd = app.add_subcommand("powersum", "Power sums S_k(m) of the signed count");
    powersum_cmd->add_option("--n", n, "Free group rank")->required()->check(CLI::Range(2, 30));
    powersum_cmd->add_option("--j", j, "Tracked generator")->check(CLI::Range(1, 30))
        ->capture_default_str();
    powersum_cmd->add_option("--k", k, "Power")->required()->check(CLI::Range(0, 40));
    powersum_cmd->add_option("--max-len", max_len, "Largest word length")
        ->check(CLI::Range(1, 2000))
        ->capture_default_str();
    attach_output_options(powersum_cmd, out);
    powersum_cmd->callback([&] { exit_code = cmd_powersum(n, j, k, max_len, out); });

    auto* gk_cmd = app.add_subcommand("gk", "Generating-function derivative G^(k) coefficients");
    gk_cmd->add_option("--n", n, "Free group rank")->required()->check(CLI::Range(2, 30));
    gk_cmd->add_option("--k", k, "Derivative order")->required()->check(CLI::Range(0, 40));
    attach_output_options(gk_cmd, out);
    gk_cmd->callback([&] { exit_code = cmd_gk(n, k, out); });

    auto* laurent_cmd =
        app.add_subcommand("laurent", "Laurent expansion of G^(k) at 1/q vs prediction");
    laurent_cmd->add_option("--n", n, "Free group rank")->required()->check(CLI::Range(2, 30));
    laurent_cmd->add_option("--k", k, "Derivative order (even, >= 2)")
        ->required()
        ->check(CLI::Range(2, 40));
    attach_output_options(laurent_cmd, out);
    laurent_cmd->callback([&] { exit_code = cmd_laurent(n, k, out); });

    auto* tauberian_cmd =
        app.add_subcommand("tauberian", "Partial sums of S_k(m) vs predicted main term");
    tauberian_cmd->add_option("--n", n, "Free group rank")->required()->check(CLI::Range(2, 30));
    tauberian_cmd->add_option("--j", j, "Tracked generator")->check(CLI::Range(1, 30))
        ->capture_default_str();
    tauberian_cmd->add_option("--k", k, "Power")->required()->check(CLI::Range(0, 40));
    tauberian_cmd
        ->add_option("--lens", lens, "Cutoff lengths")
        ->delimiter(',')
        ->check(CLI::Range(1, 2000));
    attach_output_options(tauberian_cmd, out);
    tauberian_cmd->callback([&] {
        if (lens.empty()) lens = {10, 20, 40};
        exit_code = cmd_tauberian(n, j, k, lens, out);
    });

    auto* moments_cmd = app.add_subcommand("moments", "Normalized moments vs Gaussian targets");
    moments_cmd->add_option("--n", n, "Free group rank")->required()->check(CLI::Range(2, 30));
    moments_cmd->add_option("--j", j, "Tracked generator")->check(CLI::Range(1, 30))
        ->capture_default_str();
    moments_cmd->add_option("--k-max", k_max, "Largest moment order")
        ->check(CLI::Range(0, 20))
        ->capture_default_str();
    moments_cmd
        ->add_option("--lens", lens, "Cutoff lengths")
        ->delimiter(',')
        ->check(CLI::Range(1, 2000));
    attach_output_options(moments_cmd, out);
    moments_cmd->callback([&] {
        if (lens.empty()) lens = {25, 50, 100, 200};
        exit_code = cmd_moments(n, j, k_max, lens, out);
    });

    auto* dist_cmd =
        app.add_subcommand("dist", "Exact law of the normalized count vs the Gaussian");
    dist_cmd->add_option("--n", n, "Free group rank")->required()->check(CLI::Range(2, 30));
    dist_cmd->add_option("--j", j, "Tracked generator")->check(CLI::Range(1, 30))
        ->capture_default_str();
    dist_cmd->add_option("--max-len", max_len, "Length cutoff")
        ->check(CLI::Range(1, 2000))
        ->capture_default_str();
    dist_cmd->add_flag("--fixed-length", fixed_length,
                       "Condition on words of exactly max-len letters");
    dist_cmd->add_flag("--all-pairs", all_pairs, "One row per endpoint pair, not just cells");
    dist_cmd->add_option("--grid", grid_tokens,
                         "Interval endpoints (rationals like -4, -7/2, 3.5)")
        ->delimiter(',');
    attach_output_options(dist_cmd, out);
    dist_cmd->callback(
        [&] { exit_code = cmd_dist(n, j, max_len, fixed_length, all_pairs, grid_tokens, out); });

    auto* sample_cmd = app.add_subcommand("sample", "Uniform cyclically reduced words");
    sample_cmd->add_option("--n", n, "Free group rank")->required()->check(CLI::Range(2, 30));
    sample_cmd->add_option("--m", m, "Word length")->required()->check(CLI::Range(1, 5000));
    sample_cmd->add_option("--count", count, "Number of samples")
        ->check(CLI::Range(1, 10'000'000))
        ->capture_default_str();
    sample_cmd->add_option("--seed", seed, "RNG seed")->capture_default_str();
    attach_output_options(sample_cmd, out);
    sample_cmd->callback([&] { exit_code = cmd_sample(n, m, count, seed, out); });

    auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance checks");
    verify_cmd->add_flag("--quick", quick, "Smaller parameter ranges, a few seconds total");
    attach_output_options(verify_cmd, out);
    verify_cmd->callback([&] { exit_code = cmd_verify(quick, out); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return exit_code;
}
