#include "partnorm/universe.hpp"

#include <algorithm>
#include <set>

namespace partnorm {

namespace {

std::string trimmed(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

Universe Universe::validate(std::vector<JournalClassification> classifications,
                            std::vector<JournalYearStats> stats) {
    Universe u;
    u.journals_ = std::move(classifications);

    for (auto& jc : u.journals_) jc.journal = trimmed(jc.journal);
    std::sort(u.journals_.begin(), u.journals_.end(),
              [](const auto& a, const auto& b) { return a.journal < b.journal; });

    std::set<SubjectCategoryId> all_categories;
    for (auto& jc : u.journals_) {
        if (jc.journal.empty())
            throw Error(ErrorCode::empty_category_set, "journal with empty id");
        for (auto& c : jc.categories) c = trimmed(c);
        std::erase_if(jc.categories, [](const auto& c) { return c.empty(); });
        std::sort(jc.categories.begin(), jc.categories.end());
        jc.categories.erase(std::unique(jc.categories.begin(), jc.categories.end()),
                            jc.categories.end());
        if (jc.categories.empty())
            throw Error(ErrorCode::empty_category_set,
                        "journal '" + jc.journal + "' has no subject categories");
        all_categories.insert(jc.categories.begin(), jc.categories.end());

        auto [it, inserted] = u.index_.emplace(jc.journal, 0);
        if (!inserted)
            throw Error(ErrorCode::duplicate_journal, "journal '" + jc.journal + "' listed twice");
    }
    for (std::size_t i = 0; i < u.journals_.size(); ++i) u.index_[u.journals_[i].journal] = i;
    u.categories_.assign(all_categories.begin(), all_categories.end());

    std::set<int> years;
    for (const auto& row : stats) {
        if (!u.contains(row.journal))
            throw Error(ErrorCode::unknown_journal_in_stats,
                        "stats row for unclassified journal '" + row.journal + "' (year " +
                            std::to_string(row.year) + ")");
        auto [it, inserted] =
            u.stats_.emplace(std::make_pair(row.journal, row.year),
                             YearCounts{row.items, row.citations});
        if (!inserted)
            throw Error(ErrorCode::duplicate_stats_row,
                        "second stats row for ('" + row.journal + "', " +
                            std::to_string(row.year) + ")");
        years.insert(row.year);
    }
    u.years_.assign(years.begin(), years.end());
    return u;
}

const JournalClassification& Universe::classification(const JournalId& id) const {
    auto it = index_.find(id);
    if (it == index_.end())
        throw Error(ErrorCode::unknown_journal, "journal '" + id + "' not in universe");
    return journals_[it->second];
}

YearCounts Universe::counts(const JournalId& id, int year) const {
    auto it = stats_.find(std::make_pair(id, year));
    return it == stats_.end() ? YearCounts{} : it->second;
}

bool Universe::has_category(const SubjectCategoryId& category) const {
    return std::binary_search(categories_.begin(), categories_.end(), category);
}

std::vector<JournalYearStats> Universe::stats_rows() const {
    std::vector<JournalYearStats> rows;
    rows.reserve(stats_.size());
    for (const auto& [key, counts] : stats_)
        rows.push_back({key.first, key.second, counts.items, counts.citations});
    return rows;
}

}  // namespace partnorm
