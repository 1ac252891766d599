#include "partnorm/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <sstream>

#include <json.hpp>

namespace partnorm {

OutputFormat output_format_from_string(const std::string& token) {
    if (token == "text") return OutputFormat::text;
    if (token == "csv") return OutputFormat::csv;
    if (token == "json") return OutputFormat::json;
    throw Error(ErrorCode::parse_error,
                "unknown output format '" + token + "' (expected text, csv or json)");
}

namespace {

std::string trimmed(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw Error(ErrorCode::parse_error, "line " + std::to_string(line) + ": " + what);
}

// Splits one record line on commas. Fields may be double-quoted; "" inside a
// quoted field is a literal quote. Unquoted fields are trimmed.
std::vector<std::string> split_fields(const std::string& line, std::size_t line_no) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false, was_quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char ch = line[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += ch;
            }
        } else if (ch == '"' && trimmed(field).empty() && !was_quoted) {
            quoted = true;
            was_quoted = true;
            field.clear();
        } else if (ch == ',') {
            fields.push_back(was_quoted ? field : trimmed(field));
            field.clear();
            was_quoted = false;
        } else {
            field += ch;
        }
    }
    if (quoted) fail(line_no, "unterminated quoted field");
    fields.push_back(was_quoted ? field : trimmed(field));
    return fields;
}

// Reads all data lines of a one-line-header file, checking the header against
// the schema. Blank lines are skipped. Calls row(fields, line_no) per row.
template <typename RowFn>
void for_each_row(std::istream& in, const std::vector<std::string>& schema, RowFn row) {
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trimmed(line).empty()) continue;
        auto fields = split_fields(line, line_no);
        if (!have_header) {
            if (fields != schema) {
                std::string want;
                for (const auto& c : schema) {
                    if (!want.empty()) want += ',';
                    want += c;
                }
                fail(line_no, "expected header '" + want + "'");
            }
            have_header = true;
            continue;
        }
        if (fields.size() != schema.size())
            fail(line_no, "expected " + std::to_string(schema.size()) + " fields, got " +
                              std::to_string(fields.size()));
        row(fields, line_no);
    }
    if (!have_header) fail(1, "empty file, header line missing");
}

std::uint64_t parse_count(const std::string& token, std::size_t line_no, const char* what) {
    std::string t = trimmed(token);
    if (!t.empty() && t.front() == '-')
        throw Error(ErrorCode::negative_count, "line " + std::to_string(line_no) + ": " +
                                                   what + " '" + t + "' is negative");
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc() || ptr != t.data() + t.size())
        fail(line_no, std::string(what) + " '" + t + "' is not a whole number");
    return value;
}

int parse_year(const std::string& token, std::size_t line_no) {
    std::string t = trimmed(token);
    int value = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc() || ptr != t.data() + t.size())
        fail(line_no, "year '" + t + "' is not an integer");
    return value;
}

double parse_real(const std::string& token, std::size_t line_no, const char* what) {
    std::string t = trimmed(token);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc() || ptr != t.data() + t.size())
        fail(line_no, std::string(what) + " '" + t + "' is not a number");
    return value;
}

std::vector<SubjectCategoryId> split_categories(const std::string& token, std::size_t line_no) {
    std::vector<SubjectCategoryId> cats;
    std::string current;
    std::istringstream ss(token);
    while (std::getline(ss, current, ';')) {
        auto t = trimmed(current);
        if (!t.empty()) cats.push_back(t);
    }
    if (cats.empty())
        throw Error(ErrorCode::empty_category_set,
                    "line " + std::to_string(line_no) + ": no subject categories");
    return cats;
}

template <typename T, typename ParseFn>
T parse_file(const std::string& path, ParseFn parse) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::io_error, "cannot open '" + path + "'");
    return parse(in);
}

// A field needs quoting in csv output if it contains a delimiter, quote or
// newline; quotes are doubled.
std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

}  // namespace

std::vector<JournalClassification> parse_journals(std::istream& in) {
    std::vector<JournalClassification> rows;
    for_each_row(in, {"journal_id", "name", "categories"},
                 [&](const std::vector<std::string>& f, std::size_t line_no) {
                     if (f[0].empty()) fail(line_no, "empty journal_id");
                     rows.push_back({f[0], f[1], split_categories(f[2], line_no)});
                 });
    return rows;
}

std::vector<JournalYearStats> parse_stats(std::istream& in) {
    std::vector<JournalYearStats> rows;
    for_each_row(in, {"journal_id", "year", "items", "citations"},
                 [&](const std::vector<std::string>& f, std::size_t line_no) {
                     if (f[0].empty()) fail(line_no, "empty journal_id");
                     rows.push_back({f[0], parse_year(f[1], line_no),
                                     parse_count(f[2], line_no, "items"),
                                     parse_count(f[3], line_no, "citations")});
                 });
    return rows;
}

std::vector<PublicationRecord> parse_pubs(std::istream& in) {
    std::vector<PublicationRecord> records;
    std::map<std::string, std::size_t> index;
    for_each_row(in, {"record_id", "journal_id", "pub_year", "citations"},
                 [&](const std::vector<std::string>& f, std::size_t line_no) {
                     if (f[0].empty()) fail(line_no, "empty record_id");
                     if (f[1].empty()) fail(line_no, "empty journal_id");
                     auto [it, inserted] = index.emplace(f[0], records.size());
                     if (inserted) records.push_back({f[0], {}});
                     records[it->second].publications.push_back(
                         {f[1], parse_year(f[2], line_no),
                          parse_count(f[3], line_no, "citations")});
                 });
    return records;
}

std::vector<RatingVector> parse_ratings(std::istream& in) {
    std::vector<RatingVector> ratings;
    std::map<std::string, std::size_t> index;
    for_each_row(in, {"record_id", "aspect", "value"},
                 [&](const std::vector<std::string>& f, std::size_t line_no) {
                     if (f[0].empty()) fail(line_no, "empty record_id");
                     if (f[1].empty()) fail(line_no, "empty aspect");
                     auto [it, inserted] = index.emplace(f[1], ratings.size());
                     if (inserted) ratings.push_back({f[1], {}});
                     auto& values = ratings[it->second].values;
                     if (!values.emplace(f[0], parse_real(f[2], line_no, "rating")).second)
                         fail(line_no, "second rating for ('" + f[0] + "', '" + f[1] + "')");
                 });
    return ratings;
}

std::vector<IndicatorResult> parse_scores(std::istream& in) {
    std::vector<IndicatorResult> rows;
    for_each_row(in, {"record_id", "variant", "value", "n_used", "n_excluded"},
                 [&](const std::vector<std::string>& f, std::size_t line_no) {
                     IndicatorResult r;
                     r.record_id = f[0];
                     try {
                         r.variant = variant_from_string(f[1]);
                     } catch (const Error& e) {
                         fail(line_no, e.what());
                     }
                     r.value = parse_real(f[2], line_no, "value");
                     r.n_used = parse_count(f[3], line_no, "n_used");
                     r.n_excluded = parse_count(f[4], line_no, "n_excluded");
                     rows.push_back(std::move(r));
                 });
    return rows;
}

std::vector<JournalClassification> parse_journals_file(const std::string& path) {
    return parse_file<std::vector<JournalClassification>>(
        path, [](std::istream& in) { return parse_journals(in); });
}

std::vector<JournalYearStats> parse_stats_file(const std::string& path) {
    return parse_file<std::vector<JournalYearStats>>(
        path, [](std::istream& in) { return parse_stats(in); });
}

std::vector<PublicationRecord> parse_pubs_file(const std::string& path) {
    return parse_file<std::vector<PublicationRecord>>(
        path, [](std::istream& in) { return parse_pubs(in); });
}

std::vector<RatingVector> parse_ratings_file(const std::string& path) {
    return parse_file<std::vector<RatingVector>>(
        path, [](std::istream& in) { return parse_ratings(in); });
}

std::vector<IndicatorResult> parse_scores_file(const std::string& path) {
    return parse_file<std::vector<IndicatorResult>>(
        path, [](std::istream& in) { return parse_scores(in); });
}

std::string serialize_journals(const std::vector<JournalClassification>& rows) {
    std::string out = "journal_id,name,categories\n";
    for (const auto& r : rows) {
        std::string cats;
        for (const auto& c : r.categories) {
            if (!cats.empty()) cats += ';';
            cats += c;
        }
        out += csv_escape(r.journal) + ',' + csv_escape(r.name) + ',' + csv_escape(cats) + '\n';
    }
    return out;
}

std::string serialize_stats(const std::vector<JournalYearStats>& rows) {
    std::string out = "journal_id,year,items,citations\n";
    for (const auto& r : rows)
        out += csv_escape(r.journal) + ',' + std::to_string(r.year) + ',' +
               std::to_string(r.items) + ',' + std::to_string(r.citations) + '\n';
    return out;
}

std::string serialize_pubs(const std::vector<PublicationRecord>& records) {
    std::string out = "record_id,journal_id,pub_year,citations\n";
    for (const auto& rec : records)
        for (const auto& p : rec.publications)
            out += csv_escape(rec.record_id) + ',' + csv_escape(p.journal) + ',' +
                   std::to_string(p.pub_year) + ',' + std::to_string(p.citations) + '\n';
    return out;
}

std::string serialize_ratings(const std::vector<RatingVector>& ratings) {
    std::string out = "record_id,aspect,value\n";
    for (const auto& vec : ratings)
        for (const auto& [record_id, value] : vec.values)
            out += csv_escape(record_id) + ',' + csv_escape(vec.aspect) + ',' +
                   format_full(value) + '\n';
    return out;
}

std::string format_rounded(double value, int digits) {
    if (digits < 0 || digits > 18)
        throw Error(ErrorCode::parse_error,
                    "display digits out of range: " + std::to_string(digits));
    if (!std::isfinite(value)) return std::to_string(value);

    // Half-up (away from zero at ties) on the scaled value, then render the
    // integer digits directly so no second float-to-text rounding happens.
    double scale = std::pow(10.0, digits);
    auto scaled = static_cast<long long>(std::llround(std::abs(value) * scale));
    long long unit = 1;
    for (int i = 0; i < digits; ++i) unit *= 10;

    std::string out = value < 0 && scaled != 0 ? "-" : "";
    out += std::to_string(scaled / unit);
    if (digits > 0) {
        std::string frac = std::to_string(scaled % unit);
        out += '.' + std::string(static_cast<std::size_t>(digits) - frac.size(), '0') + frac;
    }
    return out;
}

std::string format_full(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

std::string emit_report(const Report& report, const RunConfig& config) {
    switch (config.format) {
        case OutputFormat::csv: {
            std::string out;
            for (std::size_t c = 0; c < report.columns.size(); ++c) {
                if (c) out += ',';
                out += csv_escape(report.columns[c]);
            }
            out += '\n';
            for (const auto& row : report.rows) {
                for (std::size_t c = 0; c < row.size(); ++c) {
                    if (c) out += ',';
                    out += csv_escape(row[c]);
                }
                out += '\n';
            }
            return out;
        }
        case OutputFormat::json: {
            nlohmann::ordered_json rows = nlohmann::ordered_json::array();
            for (const auto& row : report.rows) {
                nlohmann::ordered_json obj;
                for (std::size_t c = 0; c < report.columns.size() && c < row.size(); ++c)
                    obj[report.columns[c]] = row[c];
                rows.push_back(std::move(obj));
            }
            return rows.dump(2) + "\n";
        }
        case OutputFormat::text: {
            std::vector<std::size_t> widths(report.columns.size());
            for (std::size_t c = 0; c < report.columns.size(); ++c)
                widths[c] = report.columns[c].size();
            for (const auto& row : report.rows)
                for (std::size_t c = 0; c < row.size() && c < widths.size(); ++c)
                    widths[c] = std::max(widths[c], row[c].size());

            auto emit_row = [&](const std::vector<std::string>& row, std::string& out) {
                for (std::size_t c = 0; c < widths.size(); ++c) {
                    const std::string& cell = c < row.size() ? row[c] : std::string();
                    if (c) out += "  ";
                    out += cell;
                    if (c + 1 < widths.size())
                        out += std::string(widths[c] - cell.size(), ' ');
                }
                out += '\n';
            };

            std::string out;
            emit_row(report.columns, out);
            std::string rule;
            for (std::size_t c = 0; c < widths.size(); ++c) {
                if (c) rule += "  ";
                rule += std::string(widths[c], '-');
            }
            out += rule + '\n';
            for (const auto& row : report.rows) emit_row(row, out);
            return out;
        }
    }
    throw Error(ErrorCode::io_error, "unreachable output format");
}

std::string indicator_results_json(const std::vector<IndicatorResult>& results) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& r : results) {
        rows.push_back({{"record_id", r.record_id},
                        {"variant", to_string(r.variant)},
                        {"value", r.value},
                        {"n_used", r.n_used},
                        {"n_excluded", r.n_excluded},
                        {"warnings", r.warnings}});
    }
    return rows.dump(2) + "\n";
}

std::vector<IndicatorResult> indicator_results_from_json(const std::string& text) {
    std::vector<IndicatorResult> results;
    nlohmann::json rows;
    try {
        rows = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::parse_error, std::string("bad json: ") + e.what());
    }
    if (!rows.is_array()) throw Error(ErrorCode::parse_error, "expected a json array");
    for (const auto& row : rows) {
        try {
            IndicatorResult r;
            r.record_id = row.at("record_id").get<std::string>();
            r.variant = variant_from_string(row.at("variant").get<std::string>());
            r.value = row.at("value").get<double>();
            r.n_used = row.at("n_used").get<std::size_t>();
            r.n_excluded = row.at("n_excluded").get<std::size_t>();
            r.warnings = row.at("warnings").get<std::vector<std::string>>();
            results.push_back(std::move(r));
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorCode::parse_error, std::string("bad result row: ") + e.what());
        }
    }
    return results;
}

}  // namespace partnorm
