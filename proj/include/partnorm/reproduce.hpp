#pragma once

#include <string>
#include <vector>

#include "partnorm/io.hpp"

namespace partnorm {

// One computed-vs-published comparison. Boolean checks (subset verification)
// encode holds/fails as 1/0 with tolerance 0.
struct ReproCell {
    std::string label;
    double computed = 0.0;
    double published = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct ReproReport {
    std::string example;
    std::vector<ReproCell> cells;

    bool all_pass() const;
};

// The fictive two-record example: eight R values and four Q ratios at A = 1.
ReproReport reproduce_table5();

// The ten-record example: forty indicator values, four Q ratios, sixteen
// correlation cells (r and p each).
ReproReport reproduce_table8();

// Reference-domain nesting for the ten records: per record, the journal
// domain is contained in the partition domain is contained in the field
// domain, with sizes reported.
ReproReport reproduce_table9_nesting();

ReproReport reproduce(const std::string& example);  // throws parse_error on unknown name

std::string render(const ReproReport& report, const RunConfig& config);

}  // namespace partnorm
