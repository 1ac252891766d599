#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "partnorm/expectation.hpp"
#include "partnorm/fixtures.hpp"
#include "partnorm/indicators.hpp"
#include "partnorm/io.hpp"
#include "partnorm/partition.hpp"
#include "partnorm/reproduce.hpp"
#include "partnorm/stats.hpp"
#include "partnorm/types.hpp"
#include "partnorm/universe.hpp"

namespace {

using namespace partnorm;

std::string join_ids(const std::vector<JournalId>& ids) {
    std::string out;
    for (const auto& id : ids) {
        if (!out.empty()) out += ';';
        out += id;
    }
    return out;
}

// Rates and scores show rounded in the text table and full-precision in the
// machine formats, which feed back into `correlate`.
std::string format_value(double value, const RunConfig& config) {
    return config.format == OutputFormat::text ? format_rounded(value, config.digits)
                                               : format_full(value);
}

int run_partition(const std::string& journals_path, const RunConfig& config) {
    auto universe = Universe::validate(parse_journals_file(journals_path), {});
    auto partition = Partition::build(universe);

    Report report;
    report.columns = {"cell", "size", "members"};
    for (const auto& [key, members] : partition.cells())
        report.rows.push_back({key.str(), std::to_string(members.size()), join_ids(members)});
    std::cout << emit_report(report, config);
    return 0;
}

int run_expect(const std::string& journals_path, const std::string& stats_path,
               const std::string& scope, std::optional<int> year, const RunConfig& config) {
    auto universe =
        Universe::validate(parse_journals_file(journals_path), parse_stats_file(stats_path));
    auto partition = Partition::build(universe);
    auto table = build_rate_table(universe, partition);

    auto rate_text = [&](const std::optional<double>& rate) {
        return rate ? format_value(*rate, config) : std::string("undefined");
    };

    Report report;
    report.columns = {"scope", "key", "year", "rate"};
    if (scope != "category")
        for (const auto& [key, rate] : table.cell_rates) {
            if (year && key.second != *year) continue;
            report.rows.push_back(
                {"cell", key.first.str(), std::to_string(key.second), rate_text(rate)});
        }
    if (scope != "cell")
        for (const auto& [key, rate] : table.category_rates) {
            if (year && key.second != *year) continue;
            report.rows.push_back(
                {"category", key.first, std::to_string(key.second), rate_text(rate)});
        }
    std::cout << emit_report(report, config);
    return 0;
}

std::vector<Variant> selected_variants(const std::string& token) {
    if (token == "all")
        return {Variant::p_nmcr, Variant::nmcr, Variant::p_mncr, Variant::mncr};
    return {variant_from_string(token)};
}

int run_score(const std::string& journals_path, const std::string& stats_path,
              const std::string& pubs_path, const std::string& variant_token,
              const RunConfig& config) {
    auto universe =
        Universe::validate(parse_journals_file(journals_path), parse_stats_file(stats_path));
    auto partition = Partition::build(universe);
    auto records = parse_pubs_file(pubs_path);

    std::vector<IndicatorResult> results;
    for (const auto& record : records)
        for (Variant v : selected_variants(variant_token))
            results.push_back(compute_indicator(record, v, universe, partition, config.strict));

    if (config.format == OutputFormat::json) {
        std::cout << indicator_results_json(results);
        return 0;
    }
    Report report;
    report.columns = {"record_id", "variant", "value", "n_used", "n_excluded"};
    for (const auto& r : results) {
        for (const auto& warning : r.warnings) std::cerr << "warning: " << warning << "\n";
        report.rows.push_back({r.record_id, to_string(r.variant), format_value(r.value, config),
                               std::to_string(r.n_used), std::to_string(r.n_excluded)});
    }
    std::cout << emit_report(report, config);
    return 0;
}

int run_correlate(const std::string& scores_path, const std::string& ratings_path,
                  const std::string& method, const RunConfig& config) {
    auto scores = parse_scores_file(scores_path);
    auto ratings = parse_ratings_file(ratings_path);

    // Record order per variant follows the scores file.
    std::map<Variant, std::vector<IndicatorResult>> by_variant;
    for (const auto& s : scores) by_variant[s.variant].push_back(s);

    std::vector<CorrelationMethod> methods;
    if (method != "spearman") methods.push_back(CorrelationMethod::pearson);
    if (method != "pearson") methods.push_back(CorrelationMethod::spearman);

    Report report;
    report.columns = {"method", "aspect", "variant", "n", "r", "p"};
    for (CorrelationMethod m : methods) {
        for (const auto& rating : ratings) {
            for (const auto& [variant, rows] : by_variant) {
                std::vector<double> x, y;
                for (const auto& row : rows) {
                    auto it = rating.values.find(row.record_id);
                    if (it == rating.values.end()) continue;
                    x.push_back(row.value);
                    y.push_back(it->second);
                }
                auto result = m == CorrelationMethod::pearson ? pearson(x, y) : spearman(x, y);
                report.rows.push_back({to_string(m), rating.aspect, to_string(variant),
                                       std::to_string(result.n), format_value(result.r, config),
                                       format_value(result.p_one_tailed, config)});
            }
        }
    }
    std::cout << emit_report(report, config);
    return 0;
}

int run_reproduce(const std::string& example, const RunConfig& config) {
    auto report = reproduce(example);
    std::cout << render(report, config);
    return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"partnorm: field-normalized citation rates, standard and partition-based"};
    app.require_subcommand(1);

    std::string format = "text";
    bool strict = false;
    int digits = 2;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    app.add_flag("--strict", strict, "treat skipped publications as errors");
    app.add_option("--digits", digits, "display rounding digits for text output")
        ->check(CLI::Range(0, 12))
        ->capture_default_str();

    std::string journals_path, stats_path, pubs_path, scores_path, ratings_path;
    std::string scope = "all", variant = "all", method = "both", example;
    std::optional<int> year;

    auto* cmd_partition =
        app.add_subcommand("partition", "emit the partition cell table of a journal universe");
    cmd_partition->fallthrough();
    cmd_partition->add_option("--journals", journals_path, "journal classification file")
        ->required();

    auto* cmd_expect = app.add_subcommand("expect", "emit expected citation rates");
    cmd_expect->fallthrough();
    cmd_expect->add_option("--journals", journals_path, "journal classification file")
        ->required();
    cmd_expect->add_option("--stats", stats_path, "per-year item/citation counts")->required();
    cmd_expect->add_option("--scope", scope, "which rates to emit")
        ->check(CLI::IsMember({"cell", "category", "all"}))
        ->capture_default_str();
    cmd_expect->add_option("--year", year, "restrict to one year");

    auto* cmd_score =
        app.add_subcommand("score", "score publication records under the normalization variants");
    cmd_score->fallthrough();
    cmd_score->add_option("--journals", journals_path, "journal classification file")->required();
    cmd_score->add_option("--stats", stats_path, "per-year item/citation counts")->required();
    cmd_score->add_option("--pubs", pubs_path, "publication records")->required();
    cmd_score->add_option("--variant", variant, "variant to compute")
        ->check(CLI::IsMember({"p-nmcr", "nmcr", "p-mncr", "mncr", "all"}))
        ->capture_default_str();

    auto* cmd_correlate =
        app.add_subcommand("correlate", "correlate indicator scores with rating vectors");
    cmd_correlate->fallthrough();
    cmd_correlate->add_option("--scores", scores_path, "scores file as emitted by `score`")
        ->required();
    cmd_correlate->add_option("--ratings", ratings_path, "per-record rating file")->required();
    cmd_correlate->add_option("--method", method, "correlation method")
        ->check(CLI::IsMember({"pearson", "spearman", "both"}))
        ->capture_default_str();

    auto* cmd_reproduce =
        app.add_subcommand("reproduce", "recompute an embedded worked example and compare");
    cmd_reproduce->fallthrough();
    cmd_reproduce->add_option("example", example, "which example to reproduce")
        ->check(CLI::IsMember({"table5", "table8", "table9-nesting"}))
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    partnorm::RunConfig config;
    config.strict = strict;
    config.digits = digits;
    config.format = partnorm::output_format_from_string(format);

    try {
        if (cmd_partition->parsed()) return run_partition(journals_path, config);
        if (cmd_expect->parsed()) return run_expect(journals_path, stats_path, scope, year, config);
        if (cmd_score->parsed())
            return run_score(journals_path, stats_path, pubs_path, variant, config);
        if (cmd_correlate->parsed())
            return run_correlate(scores_path, ratings_path, method, config);
        if (cmd_reproduce->parsed()) return run_reproduce(example, config);
    } catch (const partnorm::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
