#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tsd/language.hpp"

namespace tsd {

/// One scanned source file. `masked` has the same length as `raw`, with
/// comments and string literals blanked to spaces (newlines kept), so every
/// offset into `masked` is also an offset into `raw`.
struct SourceFile {
    std::string path;  // relative to the corpus root, '/'-separated
    Language language = Language::C;
    std::string raw;
    std::string masked;
    std::vector<std::size_t> line_index;

    /// 1-based line number of a byte offset.
    std::size_t line_of(std::size_t offset) const;
};

struct SourceCorpus {
    std::filesystem::path root;
    Language language = Language::C;
    std::vector<SourceFile> files;  // sorted by path, unique
    std::size_t warnings = 0;
    std::vector<std::string> diagnostics;
};

const std::vector<std::string>& default_ignore_dirs();

struct WalkOptions {
    std::vector<std::string> ignore_dirs = default_ignore_dirs();
    bool raw = false;  // skip masking
    unsigned jobs = 1;
};

/// Returns `override` when given; otherwise the language with the most
/// files by extension, ties broken by enum order.
Language infer_language(const std::filesystem::path& root,
                        std::optional<Language> override = std::nullopt,
                        const std::vector<std::string>& ignore_dirs = default_ignore_dirs());

/// Extensions scanned for a corpus of `lang`. C also pulls in C++ sources.
bool extension_in_scope(Language lang, std::string_view ext);

SourceCorpus walk_corpus(const std::filesystem::path& root, Language lang,
                         const std::vector<std::filesystem::path>& config_paths,
                         const WalkOptions& options = {});

/// Blanks comments and string/char literals. C/C++ preprocessor lines are
/// copied unchanged.
std::string mask(std::string_view content, Language lang);

std::vector<std::size_t> compute_line_index(std::string_view text);

/// Builds a SourceFile from already-decoded text.
SourceFile make_source_file(std::string path, Language lang, std::string text,
                            bool raw_mode = false);

/// Replaces each byte that is not part of a well-formed UTF-8 sequence with U+FFFD.
std::string decode_utf8_lossy(std::string_view bytes);

/// Half-open [begin, end) ranges of C/C++ preprocessor directive lines,
/// continuation lines included. Expects text where comments have been blanked.
std::vector<std::pair<std::size_t, std::size_t>> directive_line_ranges(std::string_view text);

}  // namespace tsd
