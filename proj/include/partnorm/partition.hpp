#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "partnorm/types.hpp"
#include "partnorm/universe.hpp"

namespace partnorm {

// Canonical key of a partition cell: the exact set of subject categories,
// sorted lexicographically so equality and ordering are order-independent.
struct CellKey {
    std::vector<SubjectCategoryId> categories;

    // Canonicalizes (sorts, deduplicates). Throws empty_category_set.
    static CellKey of(std::vector<SubjectCategoryId> cats);

    std::size_t size() const { return categories.size(); }
    bool contains(const SubjectCategoryId& c) const;

    // Render as "S_1+S_2" for reports and warnings.
    std::string str() const;

    auto operator<=>(const CellKey&) const = default;
};

// The partition of the universe induced by exact category combinations:
// one cell per occurring combination, cells disjoint, union = universe.
class Partition {
public:
    static Partition build(const Universe& universe);

    // Cells in canonical key order; member lists sorted by journal id.
    const std::map<CellKey, std::vector<JournalId>>& cells() const { return cells_; }

    // The unique cell containing the journal. Throws unknown_journal.
    const CellKey& cell_of(const JournalId& journal) const;

    bool contains(const CellKey& key) const { return cells_.count(key) != 0; }

    bool operator==(const Partition& other) const { return cells_ == other.cells_; }

private:
    Partition() = default;

    std::map<CellKey, std::vector<JournalId>> cells_;
    std::map<JournalId, CellKey> index_;
};

// D_j / D_p / D_f of the normalization-variant comparison: the journal sets
// that determine expected citation rates under journal, partition-based, and
// standard field normalization. Nested: journal ⊆ partition ⊆ field.
enum class DomainKind { journal, partition, field };

const char* to_string(DomainKind kind);

struct ReferenceDomain {
    DomainKind kind = DomainKind::journal;
    // Weight 1 for the journal and partition domains; for the field domain,
    // (number of touched categories the journal is classified in) / N.
    std::map<JournalId, double> weights;

    std::vector<JournalId> journals() const;
    bool contains(const JournalId& id) const { return weights.count(id) != 0; }
    std::size_t size() const { return weights.size(); }
};

// Throws unknown_journal if the record references a journal outside the
// universe.
ReferenceDomain reference_domain(const PublicationRecord& record, const Partition& partition,
                                 const Universe& universe, DomainKind kind);

}  // namespace partnorm
