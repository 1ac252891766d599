#include "partnorm/reproduce.hpp"

#include <cmath>

#include "partnorm/fixtures.hpp"
#include "partnorm/indicators.hpp"
#include "partnorm/stats.hpp"

namespace partnorm {

bool ReproReport::all_pass() const {
    for (const auto& cell : cells)
        if (!cell.pass) return false;
    return true;
}

namespace {

// Numeric twin of format_rounded: half up, away from zero at ties.
double round_half_up(double value, int digits) {
    double scale = std::pow(10.0, digits);
    double r = static_cast<double>(std::llround(std::abs(value) * scale)) / scale;
    return value < 0 ? -r : r;
}

// Guard for the representation error of the decimal tolerances themselves.
constexpr double kEps = 1e-9;

ReproCell raw_cell(std::string label, double computed, double published, double tolerance) {
    return {std::move(label), computed, published, tolerance,
            std::abs(computed - published) <= tolerance + kEps};
}

// Published values are displayed at two decimals, so the comparison happens
// after the same display rounding.
ReproCell rounded_cell(std::string label, double computed, double published, double tolerance) {
    return {std::move(label), computed, published, tolerance,
            std::abs(round_half_up(computed, 2) - published) <= tolerance + kEps};
}

ReproCell bool_cell(std::string label, bool holds) {
    return {std::move(label), holds ? 1.0 : 0.0, 1.0, 0.0, holds};
}

}  // namespace

ReproReport reproduce_table5() {
    const auto rates = fixtures::fictive_rates();
    const auto published = fixtures::fictive_published();
    const double a = 1.0;

    // A record is n_int publications in the intersection cell plus n_side
    // publications in the second category's one-category cell, each cited
    // exactly A times its cell's expected rate.
    auto score_all = [&](int n_int, int n_side) {
        std::vector<WeightedPub> cell_based, arith_based, harm_based;
        double blend_arith = (rates.category_1 + rates.category_2) / 2.0;
        double blend_harm = 2.0 / (1.0 / rates.category_1 + 1.0 / rates.category_2);
        for (int i = 0; i < n_int; ++i) {
            double c = a * rates.cell_intersection;
            cell_based.push_back({c, rates.cell_intersection, 1.0});
            arith_based.push_back({c, blend_arith, 1.0});
            harm_based.push_back({c, blend_harm, 1.0});
        }
        for (int i = 0; i < n_side; ++i) {
            double c = a * rates.cell_s2_only;
            cell_based.push_back({c, rates.cell_s2_only, 1.0});
            arith_based.push_back({c, rates.category_2, 1.0});
            harm_based.push_back({c, rates.category_2, 1.0});
        }
        return std::array<double, 4>{
            weighted_global_score(cell_based),
            weighted_global_score(arith_based),
            weighted_per_publication_score(cell_based),
            weighted_per_publication_score(harm_based),
        };
    };

    auto r1 = score_all(2, 1);
    auto r2 = score_all(1, 2);

    ReproReport report;
    report.example = "table5";
    const char* names[4] = {"P-NMCR", "NMCR", "P-MNCR", "MNCR"};
    for (int k = 0; k < 4; ++k)
        report.cells.push_back(raw_cell(std::string("record 1 ") + names[k], r1[k],
                                        published.record1[k], 0.005));
    for (int k = 0; k < 4; ++k)
        report.cells.push_back(raw_cell(std::string("record 2 ") + names[k], r2[k],
                                        published.record2[k], 0.005));
    for (int k = 0; k < 4; ++k)
        report.cells.push_back(
            raw_cell(std::string("Q ") + names[k], r1[k] / r2[k], published.q[k], 0.005));
    return report;
}

ReproReport reproduce_table8() {
    const auto universe = fixtures::demo_universe();
    const auto partition = Partition::build(universe);
    const auto records = fixtures::demo_records();
    const auto& published = fixtures::demo_published_indicators();

    ReproReport report;
    report.example = "table8";

    const Variant variants[4] = {Variant::p_nmcr, Variant::nmcr, Variant::p_mncr, Variant::mncr};
    std::map<Variant, std::vector<double>> columns;
    for (std::size_t i = 0; i < records.size(); ++i) {
        for (int k = 0; k < 4; ++k) {
            auto result = compute_indicator(records[i], variants[k], universe, partition);
            columns[variants[k]].push_back(result.value);
            report.cells.push_back(rounded_cell(records[i].record_id + " " +
                                                    to_string(variants[k]),
                                                result.value, published[i].values[k], 0.02));
        }
    }

    auto q_published = fixtures::demo_published_q();
    for (int k = 0; k < 4; ++k) {
        double q = columns[variants[k]][0] / columns[variants[k]][1];
        report.cells.push_back(rounded_cell(std::string("Q ") + to_string(variants[k]), q,
                                            q_published[k], 0.01));
    }

    std::map<std::string, std::vector<double>> rating_columns;
    for (const auto& vec : fixtures::demo_ratings()) {
        auto& column = rating_columns[vec.aspect];
        for (const auto& record : records) column.push_back(vec.values.at(record.record_id));
    }

    for (const auto& pub : fixtures::demo_published_correlations()) {
        const auto& x = columns.at(pub.variant);
        const auto& y = rating_columns.at(pub.aspect);
        auto result = pub.method == CorrelationMethod::pearson ? pearson(x, y) : spearman(x, y);
        std::string base = std::string(to_string(pub.method)) + " " + pub.aspect + " " +
                           to_string(pub.variant);
        report.cells.push_back(rounded_cell(base + " r", result.r, pub.r, 0.01));
        report.cells.push_back(rounded_cell(base + " p", result.p_one_tailed, pub.p, 0.01));
    }
    return report;
}

ReproReport reproduce_table9_nesting() {
    const auto universe = fixtures::demo_universe();
    const auto partition = Partition::build(universe);

    auto within = [](const ReferenceDomain& inner, const ReferenceDomain& outer) {
        for (const auto& [id, w] : inner.weights)
            if (!outer.contains(id)) return false;
        return true;
    };

    ReproReport report;
    report.example = "table9-nesting";
    for (const auto& record : fixtures::demo_records()) {
        auto dj = reference_domain(record, partition, universe, DomainKind::journal);
        auto dp = reference_domain(record, partition, universe, DomainKind::partition);
        auto df = reference_domain(record, partition, universe, DomainKind::field);
        report.cells.push_back(bool_cell(record.record_id + " D_j(" +
                                             std::to_string(dj.size()) + ") within D_p(" +
                                             std::to_string(dp.size()) + ")",
                                         within(dj, dp) && dj.size() <= dp.size()));
        report.cells.push_back(bool_cell(record.record_id + " D_p(" +
                                             std::to_string(dp.size()) + ") within D_f(" +
                                             std::to_string(df.size()) + ")",
                                         within(dp, df) && dp.size() <= df.size()));
    }
    return report;
}

ReproReport reproduce(const std::string& example) {
    if (example == "table5") return reproduce_table5();
    if (example == "table8") return reproduce_table8();
    if (example == "table9-nesting") return reproduce_table9_nesting();
    throw Error(ErrorCode::parse_error, "unknown example '" + example +
                                            "' (expected table5, table8 or table9-nesting)");
}

std::string render(const ReproReport& report, const RunConfig& config) {
    Report table;
    table.columns = {"check", "computed", "published", "tolerance", "status"};
    std::size_t passed = 0;
    for (const auto& cell : report.cells) {
        if (cell.pass) ++passed;
        table.rows.push_back({cell.label, format_rounded(cell.computed, config.digits + 2),
                              format_full(cell.published), format_full(cell.tolerance),
                              cell.pass ? "PASS" : "FAIL"});
    }
    std::string out = emit_report(table, config);
    if (config.format == OutputFormat::text)
        out += report.example + ": " + std::to_string(passed) + "/" +
               std::to_string(report.cells.size()) + " checks pass\n";
    return out;
}

}  // namespace partnorm
