#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "partnorm/types.hpp"
#include "partnorm/universe.hpp"

namespace partnorm {

enum class OutputFormat { text, csv, json };

OutputFormat output_format_from_string(const std::string& token);  // throws parse_error

struct RunConfig {
    std::vector<Variant> variants;  // empty = all four
    bool strict = false;
    OutputFormat format = OutputFormat::text;
    int digits = 2;  // display rounding for text tables
};

// File schemas are one-line-header, comma-delimited, UTF-8, "\n" endings.
// journals: journal_id,name,categories (categories semicolon-joined)
// stats:    journal_id,year,items,citations
// pubs:     record_id,journal_id,pub_year,citations
// ratings:  record_id,aspect,value
// scores:   record_id,variant,value,n_used,n_excluded (output of `score`)
// Parse errors carry the 1-based line number.
std::vector<JournalClassification> parse_journals(std::istream& in);
std::vector<JournalYearStats> parse_stats(std::istream& in);
std::vector<PublicationRecord> parse_pubs(std::istream& in);
std::vector<RatingVector> parse_ratings(std::istream& in);
std::vector<IndicatorResult> parse_scores(std::istream& in);

std::vector<JournalClassification> parse_journals_file(const std::string& path);
std::vector<JournalYearStats> parse_stats_file(const std::string& path);
std::vector<PublicationRecord> parse_pubs_file(const std::string& path);
std::vector<RatingVector> parse_ratings_file(const std::string& path);
std::vector<IndicatorResult> parse_scores_file(const std::string& path);

// Inverse of the parsers on canonical form; parse(serialize(x)) == x.
std::string serialize_journals(const std::vector<JournalClassification>& rows);
std::string serialize_stats(const std::vector<JournalYearStats>& rows);
std::string serialize_pubs(const std::vector<PublicationRecord>& records);
std::string serialize_ratings(const std::vector<RatingVector>& ratings);

// Half-up display rounding: format_rounded(16.7999, 2) == "16.80".
std::string format_rounded(double value, int digits);

// Shortest round-trip representation, for machine formats.
std::string format_full(double value);

// A generic tabular report; emit_report renders it deterministically in the
// configured format (text table, csv, or a json array of row objects).
struct Report {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

std::string emit_report(const Report& report, const RunConfig& config);

// JSON views of result types; machine formats carry full precision.
std::string indicator_results_json(const std::vector<IndicatorResult>& results);
std::vector<IndicatorResult> indicator_results_from_json(const std::string& text);

}  // namespace partnorm
