#include "partnorm/indicators.hpp"

#include <algorithm>
#include <tuple>

namespace partnorm {

VariantSpec VariantSpec::of(Variant v) {
    switch (v) {
        case Variant::p_nmcr:
            return {v, ExpectationSource::partition_cell, Aggregation::global,
                    MeanKind::arithmetic};
        case Variant::nmcr:
            return {v, ExpectationSource::category_fractional, Aggregation::global,
                    MeanKind::arithmetic};
        case Variant::p_mncr:
            return {v, ExpectationSource::partition_cell, Aggregation::per_publication,
                    MeanKind::harmonic};
        case Variant::mncr:
            return {v, ExpectationSource::category_fractional, Aggregation::per_publication,
                    MeanKind::harmonic};
    }
    throw Error(ErrorCode::parse_error, "unreachable variant");
}

namespace {

// Fix the summation order so scores are bit-identical under any permutation
// of the input.
void sort_contributions(std::vector<WeightedPub>& pubs) {
    std::sort(pubs.begin(), pubs.end(), [](const WeightedPub& a, const WeightedPub& b) {
        return std::tie(a.expected, a.citations, a.weight) <
               std::tie(b.expected, b.citations, b.weight);
    });
}

std::string pub_label(const Publication& pub) {
    return "publication in '" + pub.journal + "' (" + std::to_string(pub.pub_year) + ")";
}

}  // namespace

double weighted_global_score(std::vector<WeightedPub> pubs) {
    if (pubs.empty()) throw Error(ErrorCode::all_excluded, "no contributions to score");
    sort_contributions(pubs);
    double num = 0.0, den = 0.0;
    for (const auto& p : pubs) {
        num += p.weight * p.citations;
        den += p.weight * p.expected;
    }
    if (den == 0.0) {
        if (num == 0.0) return 0.0;
        throw Error(ErrorCode::zero_expected_mass, "expected mass is 0 but citations remain");
    }
    return num / den;
}

double weighted_per_publication_score(std::vector<WeightedPub> pubs) {
    if (pubs.empty()) throw Error(ErrorCode::all_excluded, "no contributions to score");
    sort_contributions(pubs);
    double num = 0.0, den = 0.0;
    for (const auto& p : pubs) {
        if (p.expected == 0.0)
            throw Error(ErrorCode::division_undefined,
                        "contribution with expected rate 0 in a per-publication mean");
        num += p.weight * (p.citations / p.expected);
        den += p.weight;
    }
    return num / den;
}

IndicatorResult score_global(const PublicationRecord& record, const ExpectedFn& expected_fn,
                             bool strict) {
    IndicatorResult result;
    result.record_id = record.record_id;
    if (record.publications.empty())
        throw Error(ErrorCode::all_excluded, "record '" + record.record_id + "' is empty");

    std::vector<WeightedPub> included;
    for (const auto& pub : record.publications) {
        auto e = expected_fn(pub);
        if (!e) {
            if (strict)
                throw Error(ErrorCode::undefined_rate,
                            "record '" + record.record_id + "': " + pub_label(pub) +
                                " has an undefined expected rate");
            ++result.n_excluded;
            result.warnings.push_back(pub_label(pub) +
                                      ": undefined expected rate, excluded from the sum");
            continue;
        }
        included.push_back({static_cast<double>(pub.citations), *e, 1.0});
        ++result.n_used;
    }
    if (included.empty())
        throw Error(ErrorCode::all_excluded,
                    "record '" + record.record_id + "': every publication was excluded");

    double expected_mass = 0.0, citation_mass = 0.0;
    for (const auto& p : included) {
        expected_mass += p.expected;
        citation_mass += p.citations;
    }
    if (expected_mass == 0.0 && citation_mass == 0.0) {
        result.value = 0.0;
        result.warnings.push_back("record '" + record.record_id +
                                  "': zero expected mass and zero citations, score is 0");
        return result;
    }
    if (expected_mass == 0.0)
        throw Error(ErrorCode::zero_expected_mass,
                    "record '" + record.record_id +
                        "': expected mass is 0 but citations remain");
    result.value = weighted_global_score(std::move(included));
    return result;
}

IndicatorResult score_per_publication(const PublicationRecord& record,
                                      const ExpectedFn& expected_fn, bool strict) {
    IndicatorResult result;
    result.record_id = record.record_id;
    if (record.publications.empty())
        throw Error(ErrorCode::all_excluded, "record '" + record.record_id + "' is empty");

    std::vector<WeightedPub> included;
    for (const auto& pub : record.publications) {
        auto e = expected_fn(pub);
        if (!e) {
            if (strict)
                throw Error(ErrorCode::undefined_rate,
                            "record '" + record.record_id + "': " + pub_label(pub) +
                                " has an undefined expected rate");
            ++result.n_excluded;
            result.warnings.push_back(pub_label(pub) +
                                      ": undefined expected rate, excluded from the mean");
            continue;
        }
        if (*e == 0.0) {
            if (strict && pub.citations > 0)
                throw Error(ErrorCode::division_undefined,
                            "record '" + record.record_id + "': " + pub_label(pub) +
                                " has expected rate 0 with citations present");
            ++result.n_excluded;
            result.warnings.push_back(pub_label(pub) +
                                      ": expected rate 0, ratio undefined, excluded from the mean");
            continue;
        }
        included.push_back({static_cast<double>(pub.citations), *e, 1.0});
        ++result.n_used;
    }
    if (included.empty())
        throw Error(ErrorCode::all_excluded,
                    "record '" + record.record_id + "': every publication was excluded");
    result.value = weighted_per_publication_score(std::move(included));
    return result;
}

IndicatorResult compute_indicator(const PublicationRecord& record, Variant variant,
                                  const Universe& universe, const Partition& partition,
                                  bool strict) {
    // Data errors first: a journal outside the universe is a broken record,
    // not an undefined rate, so it is never downgraded to a warning.
    for (const auto& pub : record.publications)
        if (!universe.contains(pub.journal))
            throw Error(ErrorCode::unknown_journal,
                        "record '" + record.record_id + "' publishes in unknown journal '" +
                            pub.journal + "'");

    auto spec = VariantSpec::of(variant);
    ExpectedFn expected_fn;
    if (spec.source == ExpectationSource::partition_cell)
        expected_fn = [&](const Publication& pub) {
            return try_partition_expected(pub, partition, universe);
        };
    else
        expected_fn = [&](const Publication& pub) {
            return try_standard_expected(pub, universe, spec.intersection_mean);
        };

    auto result = spec.aggregation == Aggregation::global
                      ? score_global(record, expected_fn, strict)
                      : score_per_publication(record, expected_fn, strict);
    result.variant = variant;
    return result;
}

double ratio_q(const IndicatorResult& r1, const IndicatorResult& r2) {
    if (r1.variant != r2.variant)
        throw Error(ErrorCode::variant_mismatch,
                    std::string("Q compares like with like, got ") + to_string(r1.variant) +
                        " vs " + to_string(r2.variant));
    if (r2.value == 0.0)
        throw Error(ErrorCode::division_by_zero, "Q undefined: divisor score is 0");
    return r1.value / r2.value;
}

namespace {

// Item-weighted contributions of one set of journals against the given
// per-publication expected rate. One entry per (journal, year) with items;
// citations enter as the per-item citation mass.
void append_world_entries(std::vector<WeightedPub>& out, const std::vector<JournalId>& journals,
                          const Universe& universe, Aggregation aggregation,
                          const std::function<std::optional<double>(const JournalId&, int)>& rate_fn) {
    for (const auto& id : journals) {
        for (int year : universe.years()) {
            auto counts = universe.counts(id, year);
            if (counts.items == 0) continue;
            auto rate = rate_fn(id, year);
            if (!rate) continue;
            // A zero rate forces zero citations on every member, so the
            // per-publication ratio is 0/0; those rows carry no signal.
            if (aggregation == Aggregation::per_publication && *rate == 0.0) continue;
            out.push_back({static_cast<double>(counts.citations) /
                               static_cast<double>(counts.items),
                           *rate, static_cast<double>(counts.items)});
        }
    }
}

double score_world(std::vector<WeightedPub> entries, Aggregation aggregation) {
    return aggregation == Aggregation::global
               ? weighted_global_score(std::move(entries))
               : weighted_per_publication_score(std::move(entries));
}

}  // namespace

double world_average(const Universe& universe, const Partition& partition,
                     Aggregation aggregation) {
    std::vector<WeightedPub> entries;
    std::vector<JournalId> all;
    for (const auto& jc : universe.journals()) all.push_back(jc.journal);
    append_world_entries(entries, all, universe, aggregation, [&](const JournalId& id, int year) {
        return try_cell_rate(partition.cell_of(id), year, universe);
    });
    return score_world(std::move(entries), aggregation);
}

double world_average_cell(const Universe& universe, const Partition& partition,
                          const CellKey& cell, Aggregation aggregation) {
    auto it = partition.cells().find(cell);
    if (it == partition.cells().end())
        throw Error(ErrorCode::unknown_cell, "cell '" + cell.str() + "' not in partition");
    std::vector<WeightedPub> entries;
    append_world_entries(entries, it->second, universe, aggregation,
                         [&](const JournalId&, int year) {
                             return try_cell_rate(cell, year, universe);
                         });
    return score_world(std::move(entries), aggregation);
}

double world_average_category_reduced(const Universe& universe, const SubjectCategoryId& category,
                                      Aggregation aggregation) {
    if (!universe.has_category(category))
        throw Error(ErrorCode::unknown_category,
                    "category '" + category + "' occurs nowhere in the universe");
    std::map<int, std::optional<double>> rate_by_year;
    for (int year : universe.years())
        rate_by_year.emplace(year, try_category_rate(category, year, universe));

    std::vector<WeightedPub> entries;
    for (const auto& jc : universe.journals()) {
        if (std::find(jc.categories.begin(), jc.categories.end(), category) ==
            jc.categories.end())
            continue;
        double n = static_cast<double>(jc.categories.size());
        for (int year : universe.years()) {
            auto counts = universe.counts(jc.journal, year);
            if (counts.items == 0) continue;
            auto rate = rate_by_year.at(year);
            if (!rate) continue;
            if (aggregation == Aggregation::per_publication && *rate == 0.0) continue;
            // Reduced counting: this journal's masses enter the category with
            // weight 1/N, the same weight its rows carry inside the rate.
            entries.push_back({static_cast<double>(counts.citations) /
                                   static_cast<double>(counts.items),
                               *rate, static_cast<double>(counts.items) / n});
        }
    }
    return score_world(std::move(entries), aggregation);
}

}  // namespace partnorm
