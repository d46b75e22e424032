#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tsd/report.hpp"

namespace tsd {

struct TruthRecord {
    Pattern pattern = Pattern::Dead;
    std::string toggle;
    std::string file;  // empty when the annotation is not file-specific

    auto operator<=>(const TruthRecord&) const = default;
};

/// Manual annotations. Text format:
///
///     # provenance: annotator, revision
///     pattern,toggle,file
///     spread,EnableFoo,
///     nested,EnableBar,pkg/a/reader.go
///
/// The header line is required. Blank lines and '#' comments are skipped;
/// comment text is kept as provenance.
struct GroundTruth {
    std::vector<TruthRecord> records;
    std::string provenance;
};

struct PatternScore {
    std::size_t manual_count = 0;
    std::size_t tool_count = 0;
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t fn = 0;
    double precision = 1.0;  // tp / tool_count, 1.0 when tool_count == 0
    double recall = 1.0;     // tp / manual_count, 1.0 when manual_count == 0
    bool precision_defined = false;
    bool recall_defined = false;
};

struct EvalResult {
    std::map<Pattern, PatternScore> per_pattern;  // all five patterns
};

GroundTruth parse_ground_truth(std::string_view text);
GroundTruth load_ground_truth(const std::filesystem::path& path);

/// Compares at (pattern, toggle) granularity, adding the file for
/// nested/mixed/enum records that carry one.
EvalResult score(const Document& report, const GroundTruth& truth);

/// The annotations a report would have if it were perfectly correct.
GroundTruth truth_from_report(const Document& report);

std::string format_table(const EvalResult& result);
Document to_json(const EvalResult& result);

}  // namespace tsd
