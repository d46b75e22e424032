#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace tsd {

enum class Pattern { Dead, Spread, Nested, Mixed, Enum };

inline constexpr std::array<Pattern, 5> kAllPatterns = {
    Pattern::Dead, Pattern::Spread, Pattern::Nested, Pattern::Mixed, Pattern::Enum};

inline constexpr std::string_view kSchemaVersion = "tsd-1";

/// Lowercase CLI name: dead, spread, nested, mixed, enum.
std::string_view to_string(Pattern p);
std::optional<Pattern> parse_pattern(std::string_view name);

/// Top-level document key, e.g. "Nested_Toggles".
std::string_view document_key(Pattern p);

struct PatternReport {
    Pattern pattern = Pattern::Dead;

    // Dead: sorted toggle names.
    std::vector<std::string> toggles;

    // Spread: toggle -> sorted component names.
    // Nested: file -> matched expressions in offset order.
    // Mixed/Enum: file -> sorted toggle names.
    std::map<std::string, std::vector<std::string>> entries;

    std::size_t total_count_path = 0;
    std::size_t total_count_toggles = 0;

    bool operator==(const PatternReport&) const = default;
};

/// Recomputes both totals from the entries. Spread needs the number of
/// distinct files, which is not recoverable from its entries, so it is
/// passed in.
void update_totals(PatternReport& report, std::size_t spread_files = 0);

/// Empty when the report satisfies its count and ordering invariants.
std::vector<std::string> check_invariants(const PatternReport& report);

using Document = nlohmann::json;

/// Throws DuplicatePattern when two reports share a pattern.
Document assemble(const std::vector<PatternReport>& reports);

/// Inverse of assemble. Throws FormatError on malformed documents.
std::vector<PatternReport> parse_document(const Document& doc);

std::string serialize(const Document& doc);

/// Writes to `out_path`, or standard output when absent. Throws IoError.
void write(const Document& doc, const std::optional<std::filesystem::path>& out_path);

}  // namespace tsd
