#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "partnorm/expectation.hpp"
#include "partnorm/partition.hpp"
#include "partnorm/types.hpp"
#include "partnorm/universe.hpp"

namespace partnorm {

enum class ExpectationSource { category_fractional, partition_cell };
enum class Aggregation { global, per_publication };

// The four variants differ in where expected rates come from, at which level
// citations are normalized, and which mean blends intersecting categories.
struct VariantSpec {
    Variant name = Variant::p_nmcr;
    ExpectationSource source = ExpectationSource::partition_cell;
    Aggregation aggregation = Aggregation::global;
    // Meaningful for the category-fractional source only: NMCR blends
    // intersecting category rates arithmetically, MNCR harmonically.
    MeanKind intersection_mean = MeanKind::arithmetic;

    static VariantSpec of(Variant v);
};

// Resolves one publication to its expected rate; nullopt = undefined.
using ExpectedFn = std::function<std::optional<double>(const Publication&)>;

// One entry of the real-valued scoring core. Record scoring wraps integer
// publications with weight 1; the world-average and fictive-record paths feed
// fractional citation masses directly.
struct WeightedPub {
    double citations = 0.0;
    double expected = 0.0;
    double weight = 1.0;
};

// Global normalization: sum of weighted citations over sum of weighted
// expected rates. Contributions are summed in sorted order, so the result is
// independent of input order.
double weighted_global_score(std::vector<WeightedPub> pubs);

// Normalization per publication: weighted mean of citations/expected.
double weighted_per_publication_score(std::vector<WeightedPub> pubs);

// R = (sum of citations) / (sum of expected rates) over publications with a
// defined expected rate. Undefined rates exclude the publication with a
// warning (strict mode: undefined_rate). Throws all_excluded when nothing
// remains, zero_expected_mass when the denominator is 0 with citations left.
IndicatorResult score_global(const PublicationRecord& record, const ExpectedFn& expected_fn,
                             bool strict = false);

// R = mean over publications of citations/expected. Publications with an
// undefined or zero expected rate are excluded with a warning (strict mode:
// undefined_rate / division_undefined).
IndicatorResult score_per_publication(const PublicationRecord& record,
                                      const ExpectedFn& expected_fn, bool strict = false);

// Dispatches to the global or per-publication form with the variant's
// expectation source and intersection mean.
IndicatorResult compute_indicator(const PublicationRecord& record, Variant variant,
                                  const Universe& universe, const Partition& partition,
                                  bool strict = false);

// Q = r1.value / r2.value. Throws variant_mismatch, division_by_zero.
double ratio_q(const IndicatorResult& r1, const IndicatorResult& r2);

// Score of the all-publications record of the universe (each journal-year's
// item mass entering item-weighted) under partition-cell expectations.
// Equals 1 for any universe: the world average.
double world_average(const Universe& universe, const Partition& partition, Aggregation aggregation);

// Same, restricted to the publications of one partition cell.
double world_average_cell(const Universe& universe, const Partition& partition,
                          const CellKey& cell, Aggregation aggregation);

// Standard field normalization's world average per subject category in its
// 1/N-reduced form; equals 1 for every category-year with item mass.
double world_average_category_reduced(const Universe& universe, const SubjectCategoryId& category,
                                      Aggregation aggregation);

}  // namespace partnorm
