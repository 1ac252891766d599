#include "partnorm/partition.hpp"

#include <algorithm>
#include <set>

namespace partnorm {

CellKey CellKey::of(std::vector<SubjectCategoryId> cats) {
    std::sort(cats.begin(), cats.end());
    cats.erase(std::unique(cats.begin(), cats.end()), cats.end());
    if (cats.empty()) throw Error(ErrorCode::empty_category_set, "cell key with no categories");
    return CellKey{std::move(cats)};
}

bool CellKey::contains(const SubjectCategoryId& c) const {
    return std::binary_search(categories.begin(), categories.end(), c);
}

std::string CellKey::str() const {
    std::string out;
    for (const auto& c : categories) {
        if (!out.empty()) out += '+';
        out += c;
    }
    return out;
}

Partition Partition::build(const Universe& universe) {
    Partition p;
    for (const auto& jc : universe.journals()) {
        // Classifications are already canonical, so the category vector is a
        // valid key as-is.
        CellKey key{jc.categories};
        p.cells_[key].push_back(jc.journal);
        p.index_.emplace(jc.journal, key);
    }
    // Journals arrive in sorted id order, so member lists are already sorted.
    return p;
}

const CellKey& Partition::cell_of(const JournalId& journal) const {
    auto it = index_.find(journal);
    if (it == index_.end())
        throw Error(ErrorCode::unknown_journal, "journal '" + journal + "' not in partition");
    return it->second;
}

const char* to_string(DomainKind kind) {
    switch (kind) {
        case DomainKind::journal: return "journal";
        case DomainKind::partition: return "partition";
        case DomainKind::field: return "field";
    }
    return "?";
}

std::vector<JournalId> ReferenceDomain::journals() const {
    std::vector<JournalId> out;
    out.reserve(weights.size());
    for (const auto& [id, w] : weights) out.push_back(id);
    return out;
}

ReferenceDomain reference_domain(const PublicationRecord& record, const Partition& partition,
                                 const Universe& universe, DomainKind kind) {
    std::set<JournalId> own;
    for (const auto& pub : record.publications) {
        if (!universe.contains(pub.journal))
            throw Error(ErrorCode::unknown_journal,
                        "record '" + record.record_id + "' publishes in unknown journal '" +
                            pub.journal + "'");
        own.insert(pub.journal);
    }

    ReferenceDomain domain;
    domain.kind = kind;
    switch (kind) {
        case DomainKind::journal:
            for (const auto& id : own) domain.weights.emplace(id, 1.0);
            break;
        case DomainKind::partition: {
            std::set<CellKey> touched;
            for (const auto& id : own) touched.insert(partition.cell_of(id));
            for (const auto& key : touched)
                for (const auto& id : partition.cells().at(key)) domain.weights.emplace(id, 1.0);
            break;
        }
        case DomainKind::field: {
            std::set<SubjectCategoryId> touched;
            for (const auto& id : own) {
                const auto& cats = universe.classification(id).categories;
                touched.insert(cats.begin(), cats.end());
            }
            for (const auto& jc : universe.journals()) {
                std::size_t hits = 0;
                for (const auto& c : jc.categories)
                    if (touched.count(c)) ++hits;
                if (hits > 0)
                    domain.weights.emplace(jc.journal,
                                           static_cast<double>(hits) / jc.categories.size());
            }
            break;
        }
    }
    return domain;
}

}  // namespace partnorm
