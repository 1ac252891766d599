#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "partnorm/expectation.hpp"
#include "partnorm/types.hpp"
#include "partnorm/universe.hpp"

// Embedded data of the two worked examples and the two-category intersection
// study, so `reproduce` runs without input files.
namespace partnorm::fixtures {

// The 18-journal demonstration universe: the 11 journals holding the ten
// records' most cited articles plus one synthetic REST_S_k journal per
// subject category aggregating all other single-category journals.
Universe demo_universe();

// The ten five-publication records the demonstration universe was built for.
std::vector<PublicationRecord> demo_records();

// Peer ratings for the ten records (range 1-5, best = 1).
std::vector<RatingVector> demo_ratings();

struct PublishedIndicator {
    const char* record_id;
    // order: P-NMCR, NMCR, P-MNCR, MNCR
    std::array<double, 4> values;
};

// The published normalized citation rates for the ten records.
const std::vector<PublishedIndicator>& demo_published_indicators();

// Published ratios R_1/R_2 for the two shortlisted records, order as above.
std::array<double, 4> demo_published_q();

struct PublishedCorrelation {
    CorrelationMethod method;
    const char* aspect;
    Variant variant;
    double r;
    double p;
};

// The sixteen published (r, p) cells: method x aspect x variant.
const std::vector<PublishedCorrelation>& demo_published_correlations();

// Expected citation rates of the fictive two-record example, 2009 only:
// per partition cell and per whole category with 1/2 counting of the
// intersection.
struct FictiveRates {
    double cell_s1_only = 1.618;      // E_1e
    double cell_intersection = 2.659; // E_I
    double cell_s2_only = 1.191;      // E_2e
    double category_1 = 1.633;        // E_1
    double category_2 = 1.265;        // E_2
};

FictiveRates fictive_rates();

struct FictivePublished {
    // record 1 and record 2, order: P-NMCR, NMCR, P-MNCR, MNCR, at A = 1
    std::array<double, 4> record1{1.000, 1.564, 1.000, 1.557};
    std::array<double, 4> record2{1.000, 1.267, 1.000, 1.250};
    std::array<double, 4> q{1.00, 1.23, 1.00, 1.25};
};

FictivePublished fictive_published();

// Synthetic two-category universe reproducing the published intersection
// study: one aggregate S_1-only journal, three intersection journals, one
// aggregate S_2-only journal, with item masses back-solved from the published
// aggregate impact factors (cell rates 1.618 / 2.659 / 1.191, whole-category
// rates 1.649 / 1.331, fractional rates 1.633 / 1.265). Single year, 2009.
Universe intersection_universe();

constexpr int kIntersectionYear = 2009;

struct IntersectionPublished {
    double aggregate_s1 = 1.649;       // whole category, intersection fully counted
    double aggregate_s1_only = 1.618;  // cell excluding the intersection
    double aggregate_both = 2.659;     // the intersection cell
    double aggregate_s2_only = 1.191;
    double aggregate_s2 = 1.331;
    double fractional_s1 = 1.633;  // 1/2-counted category rates
    double fractional_s2 = 1.265;
    // % of intersection authors in common with each side (report fixture)
    double authors_only_first = 0.174;
    double authors_only_second = 0.075;
    double authors_both = 0.164;
    double authors_neither = 0.586;
};

IntersectionPublished intersection_published();

// Impact-factor inputs matching intersection_universe, keyed by journal.
std::map<JournalId, IfCounts> intersection_if_stats();

}  // namespace partnorm::fixtures
