#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "partnorm/partition.hpp"
#include "partnorm/types.hpp"
#include "partnorm/universe.hpp"

namespace partnorm {

enum class RateScope { cell, category, publication };

const char* to_string(RateScope scope);

// An expected citation rate (citations per item) for one reference set and
// year. value is finite and >= 0; zero item mass is never encoded as 0.0 but
// raised as undefined_rate (or carried as nullopt by the try_* forms).
struct ExpectedRate {
    double value = 0.0;
    RateScope scope = RateScope::cell;
    std::string key;  // rendered cell key, category token, or publication index
    int year = 0;
};

enum class MeanKind { arithmetic, harmonic };

// Pooled rate over the cell's member journals for one year: sum of citations
// over sum of items; journals without a stats row contribute (0, 0).
// Throws undefined_rate when the pooled item count is zero, unknown_cell when
// the cell is not part of the partition.
ExpectedRate cell_expected_rate(const CellKey& cell, int year, const Universe& universe,
                                const Partition& partition);

// Fractionally counted category rate: items and citations of a journal in N
// categories both enter with weight 1/N. Throws undefined_rate when the
// weighted item mass is zero, unknown_category for a token that occurs
// nowhere in the universe.
ExpectedRate category_expected_rate_fractional(const SubjectCategoryId& category, int year,
                                               const Universe& universe);

// Expected rate for one publication under the partition approach: the rate of
// the cell its journal lives in, for the publication year.
ExpectedRate partition_expected_for_publication(const Publication& pub, const Partition& partition,
                                                const Universe& universe);

// Expected rate for one publication under standard field normalization: the
// arithmetic or harmonic mean of its journal's per-category fractional rates.
// Single-category journals return the category rate unchanged for either mean
// kind. Throws undefined_rate if any contributing category rate is undefined,
// harmonic_zero for a zero rate under the harmonic mean.
ExpectedRate standard_expected_for_publication(const Publication& pub, const Universe& universe,
                                               MeanKind mean_kind);

// Non-throwing forms used by the scoring layer; nullopt = undefined rate.
// A zero category rate under the harmonic mean resolves to 0.0 (its limit).
std::optional<double> try_cell_rate(const CellKey& cell, int year, const Universe& universe);
std::optional<double> try_category_rate(const SubjectCategoryId& category, int year,
                                        const Universe& universe);
std::optional<double> try_partition_expected(const Publication& pub, const Partition& partition,
                                             const Universe& universe);
std::optional<double> try_standard_expected(const Publication& pub, const Universe& universe,
                                            MeanKind mean_kind);

// Impact-factor style inputs for a journal set: citable items of the two
// prior years and citations received to them.
struct IfCounts {
    std::uint64_t items = 0;
    std::uint64_t citations = 0;
};

// Pooled citations over pooled items for the set (not the mean of individual
// factors). Throws missing_if_stats for a journal without a row,
// undefined_rate when the pooled item count is zero.
double aggregate_impact_factor(const std::vector<JournalId>& journals,
                               const std::map<JournalId, IfCounts>& if_stats);

// All defined and explicitly-undefined rates of a universe. An entry exists
// for a (key, year) pair iff at least one member journal has a stats row for
// that year; nullopt marks zero item mass.
struct RateTable {
    std::map<std::pair<CellKey, int>, std::optional<double>> cell_rates;
    std::map<std::pair<SubjectCategoryId, int>, std::optional<double>> category_rates;
};

RateTable build_rate_table(const Universe& universe, const Partition& partition);

}  // namespace partnorm
