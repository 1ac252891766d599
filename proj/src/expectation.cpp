#include "partnorm/expectation.hpp"

#include <algorithm>
#include <set>

namespace partnorm {

const char* to_string(RateScope scope) {
    switch (scope) {
        case RateScope::cell: return "cell";
        case RateScope::category: return "category";
        case RateScope::publication: return "publication";
    }
    return "?";
}

namespace {

// Pooled counts of a cell for one year. Journals without a stats row
// contribute nothing, which is the same as an explicit (0, 0) row.
YearCounts pooled_cell_counts(const std::vector<JournalId>& members, int year,
                              const Universe& universe) {
    YearCounts total;
    for (const auto& id : members) {
        auto c = universe.counts(id, year);
        total.items += c.items;
        total.citations += c.citations;
    }
    return total;
}

}  // namespace

ExpectedRate cell_expected_rate(const CellKey& cell, int year, const Universe& universe,
                                const Partition& partition) {
    auto it = partition.cells().find(cell);
    if (it == partition.cells().end())
        throw Error(ErrorCode::unknown_cell, "cell '" + cell.str() + "' not in partition");
    auto total = pooled_cell_counts(it->second, year, universe);
    if (total.items == 0)
        throw Error(ErrorCode::undefined_rate, "cell '" + cell.str() + "' has no items in " +
                                                   std::to_string(year));
    return ExpectedRate{static_cast<double>(total.citations) / static_cast<double>(total.items),
                        RateScope::cell, cell.str(), year};
}

ExpectedRate category_expected_rate_fractional(const SubjectCategoryId& category, int year,
                                               const Universe& universe) {
    if (!universe.has_category(category))
        throw Error(ErrorCode::unknown_category,
                    "category '" + category + "' occurs nowhere in the universe");
    // Journals are iterated in sorted id order, so the sums are reproducible
    // bit for bit across runs and input orderings.
    double items = 0.0, citations = 0.0;
    for (const auto& jc : universe.journals()) {
        if (std::find(jc.categories.begin(), jc.categories.end(), category) ==
            jc.categories.end())
            continue;
        double w = 1.0 / static_cast<double>(jc.categories.size());
        auto c = universe.counts(jc.journal, year);
        items += w * static_cast<double>(c.items);
        citations += w * static_cast<double>(c.citations);
    }
    if (items == 0.0)
        throw Error(ErrorCode::undefined_rate, "category '" + category +
                                                   "' has no weighted items in " +
                                                   std::to_string(year));
    return ExpectedRate{citations / items, RateScope::category, category, year};
}

ExpectedRate partition_expected_for_publication(const Publication& pub, const Partition& partition,
                                                const Universe& universe) {
    auto rate = cell_expected_rate(partition.cell_of(pub.journal), pub.pub_year, universe,
                                   partition);
    rate.scope = RateScope::publication;
    return rate;
}

ExpectedRate standard_expected_for_publication(const Publication& pub, const Universe& universe,
                                               MeanKind mean_kind) {
    const auto& cats = universe.classification(pub.journal).categories;
    double value;
    if (cats.size() == 1) {
        value = category_expected_rate_fractional(cats.front(), pub.pub_year, universe).value;
    } else if (mean_kind == MeanKind::arithmetic) {
        double sum = 0.0;
        for (const auto& c : cats)
            sum += category_expected_rate_fractional(c, pub.pub_year, universe).value;
        value = sum / static_cast<double>(cats.size());
    } else {
        double inv_sum = 0.0;
        for (const auto& c : cats) {
            double rate = category_expected_rate_fractional(c, pub.pub_year, universe).value;
            if (rate == 0.0)
                throw Error(ErrorCode::harmonic_zero,
                            "category '" + c + "' rate is 0 in " + std::to_string(pub.pub_year) +
                                "; harmonic mean undefined");
            inv_sum += 1.0 / rate;
        }
        value = static_cast<double>(cats.size()) / inv_sum;
    }
    return ExpectedRate{value, RateScope::publication, pub.journal, pub.pub_year};
}

std::optional<double> try_cell_rate(const CellKey& cell, int year, const Universe& universe) {
    YearCounts total;
    // Resolve membership directly from classifications so callers do not need
    // a Partition in hand; a cell key that matches no journal is undefined.
    bool any = false;
    for (const auto& jc : universe.journals()) {
        if (jc.categories != cell.categories) continue;
        any = true;
        auto c = universe.counts(jc.journal, year);
        total.items += c.items;
        total.citations += c.citations;
    }
    if (!any || total.items == 0) return std::nullopt;
    return static_cast<double>(total.citations) / static_cast<double>(total.items);
}

std::optional<double> try_category_rate(const SubjectCategoryId& category, int year,
                                        const Universe& universe) {
    if (!universe.has_category(category)) return std::nullopt;
    double items = 0.0, citations = 0.0;
    for (const auto& jc : universe.journals()) {
        if (std::find(jc.categories.begin(), jc.categories.end(), category) ==
            jc.categories.end())
            continue;
        double w = 1.0 / static_cast<double>(jc.categories.size());
        auto c = universe.counts(jc.journal, year);
        items += w * static_cast<double>(c.items);
        citations += w * static_cast<double>(c.citations);
    }
    if (items == 0.0) return std::nullopt;
    return citations / items;
}

std::optional<double> try_partition_expected(const Publication& pub, const Partition& partition,
                                             const Universe& universe) {
    if (!universe.contains(pub.journal)) return std::nullopt;
    return try_cell_rate(partition.cell_of(pub.journal), pub.pub_year, universe);
}

std::optional<double> try_standard_expected(const Publication& pub, const Universe& universe,
                                            MeanKind mean_kind) {
    if (!universe.contains(pub.journal)) return std::nullopt;
    const auto& cats = universe.classification(pub.journal).categories;
    if (cats.size() == 1) return try_category_rate(cats.front(), pub.pub_year, universe);
    if (mean_kind == MeanKind::arithmetic) {
        double sum = 0.0;
        for (const auto& c : cats) {
            auto rate = try_category_rate(c, pub.pub_year, universe);
            if (!rate) return std::nullopt;
            sum += *rate;
        }
        return sum / static_cast<double>(cats.size());
    }
    double inv_sum = 0.0;
    for (const auto& c : cats) {
        auto rate = try_category_rate(c, pub.pub_year, universe);
        if (!rate) return std::nullopt;
        // Limit of the harmonic mean as any term tends to 0 from above.
        if (*rate == 0.0) return 0.0;
        inv_sum += 1.0 / *rate;
    }
    return static_cast<double>(cats.size()) / inv_sum;
}

double aggregate_impact_factor(const std::vector<JournalId>& journals,
                               const std::map<JournalId, IfCounts>& if_stats) {
    std::uint64_t items = 0, citations = 0;
    for (const auto& id : journals) {
        auto it = if_stats.find(id);
        if (it == if_stats.end())
            throw Error(ErrorCode::missing_if_stats,
                        "no impact-factor counts for journal '" + id + "'");
        items += it->second.items;
        citations += it->second.citations;
    }
    if (items == 0)
        throw Error(ErrorCode::undefined_rate, "journal set has zero pooled items");
    return static_cast<double>(citations) / static_cast<double>(items);
}

RateTable build_rate_table(const Universe& universe, const Partition& partition) {
    // Which (cell, year) and (category, year) pairs have at least one stats
    // row behind them. Pairs without any row get no entry at all; pairs whose
    // rows pool to zero items get an explicitly-undefined entry.
    std::set<std::pair<CellKey, int>> cell_years;
    std::set<std::pair<SubjectCategoryId, int>> category_years;
    for (const auto& row : universe.stats_rows()) {
        const auto& cell = partition.cell_of(row.journal);
        cell_years.emplace(cell, row.year);
        for (const auto& cat : cell.categories) category_years.emplace(cat, row.year);
    }

    RateTable table;
    for (const auto& [cell, year] : cell_years)
        table.cell_rates.emplace(std::make_pair(cell, year), try_cell_rate(cell, year, universe));
    for (const auto& [cat, year] : category_years)
        table.category_rates.emplace(std::make_pair(cat, year),
                                     try_category_rate(cat, year, universe));
    return table;
}

}  // namespace partnorm
