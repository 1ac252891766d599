#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace partnorm {

// Identifiers are exact, case-sensitive tokens; uniqueness is enforced per
// loaded universe by Universe::validate.
using JournalId = std::string;
using SubjectCategoryId = std::string;

enum class ErrorCode {
    duplicate_journal,
    unknown_journal_in_stats,
    empty_category_set,
    duplicate_stats_row,
    unknown_journal,
    unknown_category,
    unknown_cell,
    undefined_rate,
    harmonic_zero,
    all_excluded,
    zero_expected_mass,
    division_undefined,
    division_by_zero,
    variant_mismatch,
    length_mismatch,
    constant_vector,
    too_few_points,
    empty_target,
    parse_error,
    negative_count,
    missing_if_stats,
    io_error,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// A journal and the non-empty set of subject categories it is classified in.
// `categories` is canonical: sorted, duplicate-free. Its size N is the
// multiplicity used for 1/N fractional counting.
struct JournalClassification {
    JournalId journal;
    std::string name;  // display name, may be empty
    std::vector<SubjectCategoryId> categories;

    bool operator==(const JournalClassification&) const = default;
};

// Items published by one journal in one calendar year and the citations those
// items received within the dataset's observation window.
struct JournalYearStats {
    JournalId journal;
    int year = 0;
    std::uint64_t items = 0;
    std::uint64_t citations = 0;

    bool operator==(const JournalYearStats&) const = default;
};

struct Publication {
    JournalId journal;
    int pub_year = 0;
    std::uint64_t citations = 0;

    bool operator==(const Publication&) const = default;
};

struct PublicationRecord {
    std::string record_id;
    std::vector<Publication> publications;

    bool operator==(const PublicationRecord&) const = default;
};

enum class Variant { p_nmcr, nmcr, p_mncr, mncr };

const char* to_string(Variant v);
Variant variant_from_string(const std::string& token);  // throws parse_error

struct IndicatorResult {
    std::string record_id;
    Variant variant = Variant::p_nmcr;
    double value = 0.0;
    std::size_t n_used = 0;
    std::size_t n_excluded = 0;
    std::vector<std::string> warnings;
};

enum class CorrelationMethod { pearson, spearman };

const char* to_string(CorrelationMethod m);

struct CorrelationResult {
    CorrelationMethod method = CorrelationMethod::pearson;
    double r = 0.0;
    double p_one_tailed = 0.0;
    std::size_t n = 0;
    bool degenerate = false;  // |r| = 1; p pinned to 0 by convention
};

// One rated aspect across a batch of records, e.g. peer ratings.
struct RatingVector {
    std::string aspect;
    std::map<std::string, double> values;  // record_id -> rating
};

}  // namespace partnorm
