#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace tsd {

// Declaration order is the tie-break order used by language inference.
enum class Language { C, Cpp, Python, Java, Go, CSharp };

inline constexpr std::array<Language, 6> kAllLanguages = {
    Language::C,    Language::Cpp, Language::Python,
    Language::Java, Language::Go,  Language::CSharp};

/// CLI spelling: c, c++, python, java, go, csharp.
std::string_view to_string(Language lang);

/// Accepts the CLI spellings plus a few common aliases (cpp, cs, c#, py).
std::optional<Language> parse_language(std::string_view name);

/// Maps a file extension (with leading dot) to its language.
std::optional<Language> language_for_extension(std::string_view ext);

bool has_preprocessor(Language lang);

}  // namespace tsd
