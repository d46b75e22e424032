#pragma once

// Line-by-line reference scanner for well-formed ("one construct per line")
// source. It shares no analysis code with the library: every rule is
// re-derived from the pattern definitions over whole lines and explicit
// block stacks.

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "tsd/language.hpp"
#include "tsd/report.hpp"

namespace tsd::oracle {

struct OracleFile {
    std::string path;  // relative, '/'-separated
    std::string content;
};

struct OracleInput {
    Language language = Language::C;  // corpus language
    std::vector<OracleFile> files;
    std::vector<std::string> toggles;
};

/// Reports for the requested patterns, in kAllPatterns order.
std::vector<PatternReport> brute_force_reports(const OracleInput& input,
                                               const std::vector<Pattern>& patterns);

Document brute_force_document(const OracleInput& input, const std::vector<Pattern>& patterns);

/// Lists files for a corpus of `lang` under `root`, skipping hidden and
/// default-ignored directories and the `excluded` relative paths.
std::vector<OracleFile> load_tree(const std::filesystem::path& root, Language lang,
                                  const std::vector<std::string>& excluded);

}  // namespace tsd::oracle
