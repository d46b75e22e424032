#include "tsd/language.hpp"

#include <algorithm>
#include <cctype>

namespace tsd {

std::string_view to_string(Language lang) {
    switch (lang) {
        case Language::C:
            return "c";
        case Language::Cpp:
            return "c++";
        case Language::Python:
            return "python";
        case Language::Java:
            return "java";
        case Language::Go:
            return "go";
        case Language::CSharp:
            return "csharp";
    }
    return "unknown";
}

std::optional<Language> parse_language(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "c") return Language::C;
    if (lower == "c++" || lower == "cpp" || lower == "cxx") return Language::Cpp;
    if (lower == "python" || lower == "py") return Language::Python;
    if (lower == "java") return Language::Java;
    if (lower == "go" || lower == "golang") return Language::Go;
    if (lower == "csharp" || lower == "cs" || lower == "c#") return Language::CSharp;
    return std::nullopt;
}

std::optional<Language> language_for_extension(std::string_view ext) {
    if (ext == ".c" || ext == ".h") return Language::C;
    if (ext == ".cc" || ext == ".cpp" || ext == ".cxx" || ext == ".hpp" || ext == ".hh")
        return Language::Cpp;
    if (ext == ".py") return Language::Python;
    if (ext == ".java") return Language::Java;
    if (ext == ".go") return Language::Go;
    if (ext == ".cs") return Language::CSharp;
    return std::nullopt;
}

bool has_preprocessor(Language lang) { return lang == Language::C || lang == Language::Cpp; }

}  // namespace tsd
