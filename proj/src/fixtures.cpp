#include "partnorm/fixtures.hpp"

namespace partnorm::fixtures {

Universe demo_universe() {
    std::vector<JournalClassification> journals = {
        {"J_1", "", {"S_1", "S_2", "S_3", "S_4"}},
        {"J_2", "", {"S_5"}},
        {"J_3", "", {"S_6"}},
        {"J_4", "", {"S_5"}},
        {"J_5", "", {"S_2", "S_7"}},
        {"J_6", "", {"S_2", "S_7"}},
        {"J_7", "", {"S_2"}},
        {"J_8", "", {"S_5"}},
        {"J_9", "", {"S_5"}},
        {"J_10", "", {"S_1"}},
        {"J_11", "", {"S_2", "S_7"}},
        {"REST_S_1", "", {"S_1"}},
        {"REST_S_2", "", {"S_2"}},
        {"REST_S_3", "", {"S_3"}},
        {"REST_S_4", "", {"S_4"}},
        {"REST_S_5", "", {"S_5"}},
        {"REST_S_6", "", {"S_6"}},
        {"REST_S_7", "", {"S_7"}},
    };
    // Per-year items and citations. The REST_S_k journals aggregate all other
    // journals of one category so every category's mass is fully accounted
    // for. Zero rows (J_8 2007-2008, J_10 2004-2005) are genuine data: the
    // journals published nothing those years.
    std::vector<JournalYearStats> stats = {
        {"J_1", 2004, 1721, 11048},  {"J_1", 2005, 1355, 8990},
        {"J_1", 2006, 1643, 7259},   {"J_1", 2007, 1886, 6541},
        {"J_1", 2008, 871, 2434},

        {"J_2", 2004, 3575, 145480}, {"J_2", 2005, 3692, 125678},
        {"J_2", 2006, 3758, 105279}, {"J_2", 2007, 3545, 78090},
        {"J_2", 2008, 3905, 64803},

        {"J_3", 2004, 916, 136688},

        {"J_4", 2004, 1036, 22966},  {"J_4", 2005, 953, 18003},
        {"J_4", 2006, 997, 15271},   {"J_4", 2007, 837, 11505},
        {"J_4", 2008, 918, 9174},

        {"J_5", 2004, 2206, 51808},  {"J_5", 2005, 2161, 44028},
        {"J_5", 2006, 2287, 39834},  {"J_5", 2007, 2177, 32220},
        {"J_5", 2008, 2750, 29020},

        {"J_6", 2004, 131, 2916},    {"J_6", 2005, 147, 3145},
        {"J_6", 2006, 203, 3923},    {"J_6", 2007, 262, 3691},
        {"J_6", 2008, 321, 3600},

        {"J_7", 2004, 649, 4730},    {"J_7", 2005, 342, 4180},
        {"J_7", 2006, 270, 2531},    {"J_7", 2007, 359, 2557},
        {"J_7", 2008, 314, 1853},

        {"J_8", 2004, 547, 1125},    {"J_8", 2005, 299, 587},
        {"J_8", 2006, 570, 817},     {"J_8", 2007, 0, 0},
        {"J_8", 2008, 0, 0},

        {"J_9", 2004, 246, 1128},    {"J_9", 2005, 309, 1149},
        {"J_9", 2006, 298, 734},     {"J_9", 2007, 363, 903},
        {"J_9", 2008, 274, 299},

        {"J_10", 2004, 0, 0},        {"J_10", 2005, 0, 0},
        {"J_10", 2006, 43, 136},     {"J_10", 2007, 79, 198},
        {"J_10", 2008, 93, 468},

        {"J_11", 2004, 103, 2138},   {"J_11", 2005, 90, 1758},
        {"J_11", 2006, 87, 1101},    {"J_11", 2007, 107, 1263},
        {"J_11", 2008, 88, 782},

        {"REST_S_1", 2004, 101, 701},     {"REST_S_1", 2005, 161, 836},
        {"REST_S_1", 2006, 166, 843},     {"REST_S_1", 2007, 243, 1887},
        {"REST_S_1", 2008, 250, 1846},

        {"REST_S_2", 2004, 1357, 27149},  {"REST_S_2", 2005, 1380, 24556},
        {"REST_S_2", 2006, 1407, 20283},  {"REST_S_2", 2007, 1523, 18938},
        {"REST_S_2", 2008, 1589, 17527},

        {"REST_S_3", 2004, 1535, 13058},  {"REST_S_3", 2005, 1797, 15080},
        {"REST_S_3", 2006, 1400, 9487},   {"REST_S_3", 2007, 1717, 9051},
        {"REST_S_3", 2008, 1675, 6487},

        {"REST_S_4", 2004, 1500, 5467},   {"REST_S_4", 2005, 2184, 6953},
        {"REST_S_4", 2006, 2024, 6154},   {"REST_S_4", 2007, 2301, 4986},
        {"REST_S_4", 2008, 2827, 4020},

        {"REST_S_5", 2004, 8450, 49897},  {"REST_S_5", 2005, 9025, 51516},
        {"REST_S_5", 2006, 9376, 50736},  {"REST_S_5", 2007, 11276, 48096},
        {"REST_S_5", 2008, 12839, 43789},

        {"REST_S_6", 2004, 7418, 366766},

        {"REST_S_7", 2004, 8324, 194774}, {"REST_S_7", 2005, 8345, 163913},
        {"REST_S_7", 2006, 9095, 156132}, {"REST_S_7", 2007, 9184, 121031},
        {"REST_S_7", 2008, 8309, 71890},
    };
    return Universe::validate(std::move(journals), std::move(stats));
}

std::vector<PublicationRecord> demo_records() {
    // Ten researchers, five most cited publications each: journal, year,
    // citations received until the observation cutoff.
    return {
        {"Researcher 1",
         {{"J_1", 2006, 226}, {"J_2", 2004, 180}, {"J_3", 2004, 125}, {"J_2", 2008, 74},
          {"J_2", 2007, 71}}},
        {"Researcher 2",
         {{"J_4", 2004, 298}, {"J_2", 2005, 278}, {"J_5", 2005, 133}, {"J_2", 2004, 86},
          {"J_6", 2007, 40}}},
        {"Researcher 3",
         {{"J_1", 2006, 226}, {"J_2", 2004, 180}, {"J_2", 2008, 74}, {"J_2", 2007, 71},
          {"J_2", 2007, 59}}},
        {"Researcher 4",
         {{"J_1", 2006, 226}, {"J_2", 2004, 180}, {"J_2", 2004, 58}, {"J_2", 2005, 54},
          {"J_2", 2005, 36}}},
        {"Researcher 5",
         {{"J_7", 2006, 9}, {"J_1", 2005, 2}, {"J_8", 2005, 1}, {"J_9", 2007, 0},
          {"J_10", 2008, 0}}},
        {"Researcher 6",
         {{"J_2", 2004, 276}, {"J_4", 2004, 136}, {"J_7", 2005, 69}, {"J_7", 2006, 66},
          {"J_7", 2006, 64}}},
        {"Researcher 7",
         {{"J_4", 2004, 136}, {"J_7", 2005, 69}, {"J_7", 2006, 66}, {"J_7", 2006, 64},
          {"J_7", 2005, 63}}},
        {"Researcher 8",
         {{"J_11", 2008, 144}, {"J_2", 2008, 139}, {"J_2", 2008, 96}, {"J_11", 2008, 63},
          {"J_2", 2008, 50}}},
        {"Researcher 9",
         {{"J_5", 2005, 329}, {"J_2", 2004, 249}, {"J_2", 2006, 170}, {"J_5", 2005, 125},
          {"J_2", 2008, 96}}},
        {"Researcher 10",
         {{"J_7", 2007, 51}, {"J_7", 2004, 48}, {"J_7", 2004, 24}, {"J_4", 2005, 23},
          {"J_4", 2005, 14}}},
    };
}

std::vector<RatingVector> demo_ratings() {
    return {
        {"Scientific background",
         {{"Researcher 1", 1.67},
          {"Researcher 2", 2.00},
          {"Researcher 3", 2.00},
          {"Researcher 4", 2.00},
          {"Researcher 5", 2.67},
          {"Researcher 6", 2.33},
          {"Researcher 7", 2.00},
          {"Researcher 8", 2.67},
          {"Researcher 9", 2.50},
          {"Researcher 10", 4.00}}},
        {"All aspects",
         {{"Researcher 1", 1.44},
          {"Researcher 2", 1.70},
          {"Researcher 3", 1.70},
          {"Researcher 4", 1.78},
          {"Researcher 5", 1.96},
          {"Researcher 6", 2.04},
          {"Researcher 7", 2.06},
          {"Researcher 8", 2.30},
          {"Researcher 9", 2.33},
          {"Researcher 10", 2.44}}},
    };
}

const std::vector<PublishedIndicator>& demo_published_indicators() {
    static const std::vector<PublishedIndicator> published = {
        {"Researcher 1", {7.04, 6.86, 16.80, 15.15}},
        {"Researcher 2", {10.35, 10.92, 10.71, 10.96}},
        {"Researcher 3", {13.79, 13.04, 17.75, 16.10}},
        {"Researcher 4", {8.68, 8.34, 14.52, 12.87}},
        {"Researcher 5", {0.24, 0.24, 0.21, 0.21}},
        {"Researcher 6", {8.07, 7.96, 7.91, 7.85}},
        {"Researcher 7", {5.20, 5.11, 5.20, 5.13}},
        {"Researcher 8", {12.03, 12.74, 12.57, 13.06}},
        {"Researcher 9", {12.95, 13.69, 13.44, 13.96}},
        {"Researcher 10", {2.26, 2.17, 2.34, 2.26}},
    };
    return published;
}

std::array<double, 4> demo_published_q() { return {0.68, 0.63, 1.57, 1.38}; }

const std::vector<PublishedCorrelation>& demo_published_correlations() {
    static const std::vector<PublishedCorrelation> published = {
        {CorrelationMethod::pearson, "Scientific background", Variant::p_nmcr, -0.43, 0.11},
        {CorrelationMethod::pearson, "Scientific background", Variant::nmcr, -0.40, 0.13},
        {CorrelationMethod::pearson, "Scientific background", Variant::p_mncr, -0.61, 0.03},
        {CorrelationMethod::pearson, "Scientific background", Variant::mncr, -0.59, 0.04},
        {CorrelationMethod::pearson, "All aspects", Variant::p_nmcr, -0.12, 0.37},
        {CorrelationMethod::pearson, "All aspects", Variant::nmcr, -0.07, 0.43},
        {CorrelationMethod::pearson, "All aspects", Variant::p_mncr, -0.50, 0.07},
        {CorrelationMethod::pearson, "All aspects", Variant::mncr, -0.42, 0.11},
        {CorrelationMethod::spearman, "Scientific background", Variant::p_nmcr, -0.23, 0.27},
        {CorrelationMethod::spearman, "Scientific background", Variant::nmcr, -0.18, 0.31},
        {CorrelationMethod::spearman, "Scientific background", Variant::p_mncr, -0.63, 0.03},
        {CorrelationMethod::spearman, "Scientific background", Variant::mncr, -0.52, 0.06},
        {CorrelationMethod::spearman, "All aspects", Variant::p_nmcr, -0.13, 0.36},
        {CorrelationMethod::spearman, "All aspects", Variant::nmcr, -0.05, 0.44},
        {CorrelationMethod::spearman, "All aspects", Variant::p_mncr, -0.52, 0.06},
        {CorrelationMethod::spearman, "All aspects", Variant::mncr, -0.41, 0.12},
    };
    return published;
}

FictiveRates fictive_rates() { return {}; }

FictivePublished fictive_published() { return {}; }

Universe intersection_universe() {
    // Item masses are chosen so the pooled rates land exactly on the
    // published aggregates: 29249/11000 = 2.659 for each intersection
    // journal, and the two one-category aggregates pool with the
    // intersection to 1.649 and 1.331.
    std::vector<JournalClassification> journals = {
        {"AGG_S_1", "rest of S_1, aggregated", {"S_1"}},
        {"AGG_S_2", "rest of S_2, aggregated", {"S_2"}},
        {"INT_1", "", {"S_1", "S_2"}},
        {"INT_2", "", {"S_1", "S_2"}},
        {"INT_3", "", {"S_1", "S_2"}},
    };
    std::vector<JournalYearStats> stats = {
        {"AGG_S_1", kIntersectionYear, 1075161, 1739610},
        {"AGG_S_2", kIntersectionYear, 313029, 372818},
        {"INT_1", kIntersectionYear, 11000, 29249},
        {"INT_2", kIntersectionYear, 11000, 29249},
        {"INT_3", kIntersectionYear, 11000, 29249},
    };
    return Universe::validate(std::move(journals), std::move(stats));
}

IntersectionPublished intersection_published() { return {}; }

std::map<JournalId, IfCounts> intersection_if_stats() {
    return {
        {"AGG_S_1", {1075161, 1739610}},
        {"AGG_S_2", {313029, 372818}},
        {"INT_1", {11000, 29249}},
        {"INT_2", {11000, 29249}},
        {"INT_3", {11000, 29249}},
    };
}

}  // namespace partnorm::fixtures
