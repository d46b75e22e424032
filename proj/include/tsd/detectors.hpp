#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tsd/corpus.hpp"
#include "tsd/profiles.hpp"
#include "tsd/report.hpp"
#include "tsd/toggles.hpp"

namespace tsd {

struct UsageOccurrence {
    std::string toggle;
    std::string matched_expression;  // e.g. a.Visibility.EnableRead
    std::string file;
    std::size_t line = 0;  // 1-based
    std::size_t offset = 0;
    ComponentId component;
    // Depth of the enclosing conditional header; empty when the occurrence
    // is not part of a conditional header.
    std::optional<unsigned> depth;
    bool in_preproc = false;
    bool in_enum = false;
    bool via_alias = false;
    bool in_directive_condition = false;
};

/// `alias = <expr naming exactly one toggle>`, file-local and single-hop.
struct AliasBinding {
    std::string alias;
    std::string toggle;
    std::string file;
    std::size_t line = 0;
    std::size_t offset = 0;         // of the alias identifier
    std::size_t statement_end = 0;  // uses of the alias count from here on
};

std::vector<UsageOccurrence> find_occurrences(std::string_view toggle, const SourceFile& file);

std::vector<AliasBinding> alias_bindings(const SourceFile& file, const ToggleRegistry& registry);

/// All direct and alias-mediated occurrences of registry toggles in one file.
struct FileScan {
    const SourceFile* file = nullptr;
    std::vector<UsageOccurrence> direct;   // offset order
    std::vector<UsageOccurrence> aliased;  // offset order
    std::vector<AliasBinding> bindings;
    std::vector<std::string> warnings;
};

struct CorpusScan {
    Language language = Language::C;
    std::vector<FileScan> files;  // path order
};

/// Scans every file once. The result is independent of `jobs` and of the
/// order of corpus.files.
CorpusScan scan_corpus(const ToggleRegistry& registry, const SourceCorpus& corpus,
                       unsigned jobs = 1);

PatternReport detect_dead(const ToggleRegistry& registry, const CorpusScan& scan);
PatternReport detect_spread(const ToggleRegistry& registry, const CorpusScan& scan);
PatternReport detect_nested(const CorpusScan& scan);
PatternReport detect_mixed(const CorpusScan& scan);
PatternReport detect_enum(const CorpusScan& scan);

PatternReport detect_dead(const ToggleRegistry& registry, const SourceCorpus& corpus);
PatternReport detect_spread(const ToggleRegistry& registry, const SourceCorpus& corpus,
                            const LanguageProfile& profile);
PatternReport detect_nested(const ToggleRegistry& registry, const SourceCorpus& corpus,
                            const LanguageProfile& profile);
/// Empty report unless the corpus language has a preprocessor.
PatternReport detect_mixed(const ToggleRegistry& registry, const SourceCorpus& corpus,
                           const LanguageProfile& profile);
PatternReport detect_enum(const ToggleRegistry& registry, const SourceCorpus& corpus,
                          const LanguageProfile& profile);

/// Runs the requested detectors over a single scan, in kAllPatterns order.
std::vector<PatternReport> run_detectors(const ToggleRegistry& registry,
                                         const SourceCorpus& corpus,
                                         const std::vector<Pattern>& patterns, unsigned jobs = 1);

}  // namespace tsd
