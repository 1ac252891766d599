#include "partnorm/types.hpp"

namespace partnorm {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::duplicate_journal: return "DuplicateJournal";
        case ErrorCode::unknown_journal_in_stats: return "UnknownJournalInStats";
        case ErrorCode::empty_category_set: return "EmptyCategorySet";
        case ErrorCode::duplicate_stats_row: return "DuplicateStatsRow";
        case ErrorCode::unknown_journal: return "UnknownJournal";
        case ErrorCode::unknown_category: return "UnknownCategory";
        case ErrorCode::unknown_cell: return "UnknownCell";
        case ErrorCode::undefined_rate: return "UndefinedRate";
        case ErrorCode::harmonic_zero: return "HarmonicZero";
        case ErrorCode::all_excluded: return "AllExcluded";
        case ErrorCode::zero_expected_mass: return "ZeroExpectedMass";
        case ErrorCode::division_undefined: return "DivisionUndefined";
        case ErrorCode::division_by_zero: return "DivisionByZero";
        case ErrorCode::variant_mismatch: return "VariantMismatch";
        case ErrorCode::length_mismatch: return "LengthMismatch";
        case ErrorCode::constant_vector: return "ConstantVector";
        case ErrorCode::too_few_points: return "TooFewPoints";
        case ErrorCode::empty_target: return "EmptyTarget";
        case ErrorCode::parse_error: return "ParseError";
        case ErrorCode::negative_count: return "NegativeCount";
        case ErrorCode::missing_if_stats: return "MissingIfStats";
        case ErrorCode::io_error: return "IoError";
    }
    return "UnknownError";
}

const char* to_string(Variant v) {
    switch (v) {
        case Variant::p_nmcr: return "P-NMCR";
        case Variant::nmcr: return "NMCR";
        case Variant::p_mncr: return "P-MNCR";
        case Variant::mncr: return "MNCR";
    }
    return "?";
}

Variant variant_from_string(const std::string& token) {
    std::string t;
    t.reserve(token.size());
    for (char c : token) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
        if (c == '_') c = '-';
        t.push_back(c);
    }
    if (t == "p-nmcr") return Variant::p_nmcr;
    if (t == "nmcr") return Variant::nmcr;
    if (t == "p-mncr") return Variant::p_mncr;
    if (t == "mncr") return Variant::mncr;
    throw Error(ErrorCode::parse_error, "unknown variant '" + token + "'");
}

const char* to_string(CorrelationMethod m) {
    return m == CorrelationMethod::pearson ? "pearson" : "spearman";
}

}  // namespace partnorm
