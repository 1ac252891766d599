#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "partnorm/types.hpp"

namespace partnorm {

struct YearCounts {
    std::uint64_t items = 0;
    std::uint64_t citations = 0;

    bool operator==(const YearCounts&) const = default;
};

// A validated, immutable journal universe: classifications plus per-year
// item/citation counts. Safe for unlimited concurrent reads once built.
class Universe {
public:
    // Validates and canonicalizes the inputs. Category sets are trimmed,
    // sorted and deduplicated. Throws Error with codes duplicate_journal,
    // unknown_journal_in_stats, empty_category_set, duplicate_stats_row.
    static Universe validate(std::vector<JournalClassification> classifications,
                             std::vector<JournalYearStats> stats);

    // Journals in sorted id order.
    const std::vector<JournalClassification>& journals() const { return journals_; }

    std::size_t journal_count() const { return journals_.size(); }

    bool contains(const JournalId& id) const { return index_.count(id) != 0; }

    // Throws unknown_journal.
    const JournalClassification& classification(const JournalId& id) const;

    // Counts for (journal, year); a journal with no stats row for that year
    // contributes (0, 0). Journal must exist in the universe.
    YearCounts counts(const JournalId& id, int year) const;

    // Distinct years with at least one stats row, sorted.
    const std::vector<int>& years() const { return years_; }

    // Distinct category tokens, sorted.
    const std::vector<SubjectCategoryId>& categories() const { return categories_; }

    bool has_category(const SubjectCategoryId& category) const;

    // Stats rows in canonical (journal, year) order; zero-count rows that were
    // present in the input are preserved.
    std::vector<JournalYearStats> stats_rows() const;

    bool operator==(const Universe& other) const {
        return journals_ == other.journals_ && stats_ == other.stats_;
    }

private:
    Universe() = default;

    std::vector<JournalClassification> journals_;
    std::unordered_map<JournalId, std::size_t> index_;
    std::map<std::pair<JournalId, int>, YearCounts> stats_;
    std::vector<int> years_;
    std::vector<SubjectCategoryId> categories_;
};

}  // namespace partnorm
