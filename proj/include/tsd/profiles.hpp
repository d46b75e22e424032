#pragma once

#include <compare>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tsd/corpus.hpp"
#include "tsd/language.hpp"

namespace tsd {

enum class BlockStyle { Braces, Indentation };

enum class ComponentRule { EnclosingClass, Namespace, GoPackage, FileModule };

std::string_view to_string(ComponentRule rule);

struct ComponentId {
    ComponentRule kind = ComponentRule::FileModule;
    std::string name;

    auto operator<=>(const ComponentId&) const = default;
};

/// Half-open byte range [start, end).
struct Span {
    std::size_t start = 0;
    std::size_t end = 0;

    bool contains(std::size_t offset) const { return start <= offset && offset < end; }
    bool encloses(const Span& other) const { return start <= other.start && other.end <= end; }
    auto operator<=>(const Span&) const = default;
};

struct PreprocSpan {
    Span span;             // from the opening directive line through its #endif line
    std::string directive;  // if, ifdef or ifndef
    std::string condition;
    bool include_guard = false;
};

/// A runtime conditional: `if`, `else if`, `elif`, `else`, `switch`.
struct Conditional {
    std::string keyword;
    Span header;  // keyword through the end of the condition
    Span body;    // empty when no body was found
};

struct LanguageProfile {
    Language language = Language::C;
    std::set<std::string> keywords;
    std::vector<std::string> conditional_markers;
    BlockStyle block_style = BlockStyle::Braces;
    ComponentRule component_rule = ComponentRule::FileModule;
    std::vector<std::string> extraction_patterns;  // ECMAScript regex, capture group 1
    bool has_preproc = false;
};

const LanguageProfile& default_profile(Language lang);

/// Per-language profile overrides loaded from a key-value text file:
///
///     # comment
///     go.extract = ^\s*([A-Za-z_]\w*)\s*=
///     go.extract = "([A-Za-z_]\w*)"\s*:
///     python.keywords = if, elif, else, True, False
///
/// The first `<lang>.extract` line for a language replaces its default
/// pattern list; later lines append. `<lang>.keywords` replaces the keyword
/// set with the comma-separated list.
class ProfileSet {
   public:
    ProfileSet();

    static ProfileSet load(const std::filesystem::path& path);
    static ProfileSet parse(std::string_view text);

    const LanguageProfile& get(Language lang) const;

   private:
    std::map<Language, LanguageProfile> profiles_;
};

/// Lexical structure of one file, computed once and queried per offset.
class FileStructure {
   public:
    static FileStructure analyze(const SourceFile& file);

    ComponentId component_at(std::size_t offset) const;

    /// Number of conditional bodies that contain `offset`.
    unsigned depth_at(std::size_t offset) const;

    /// Innermost conditional whose header contains `offset`, if any.
    const Conditional* header_at(std::size_t offset) const;

    /// Inside a preprocessor span other than an include guard.
    bool in_preproc(std::size_t offset) const;

    bool in_enum(std::size_t offset) const;

    /// Inside the condition text of an #if/#ifdef/#ifndef/#elif line.
    bool in_directive_condition(std::size_t offset) const;

    const std::vector<Conditional>& conditionals() const { return conditionals_; }
    const std::vector<PreprocSpan>& preproc_spans() const { return preproc_; }
    const std::vector<Span>& enum_spans() const { return enums_; }
    const std::vector<std::string>& warnings() const { return warnings_; }

   private:
    struct NamedSpan {
        Span span;
        std::string name;
    };

    std::string path_;
    Language language_ = Language::C;
    std::vector<Conditional> conditionals_;
    std::vector<NamedSpan> scopes_;  // classes or namespaces, per component rule
    std::vector<Span> enums_;
    std::vector<PreprocSpan> preproc_;
    std::vector<Span> directive_conditions_;
    std::vector<std::string> warnings_;
};

ComponentId component_of(const SourceFile& file, std::size_t offset);
unsigned nesting_depth_at(const SourceFile& file, std::size_t offset);

/// Appends a warning to `warnings` for every #if without a matching #endif.
std::vector<PreprocSpan> preprocessor_spans(const SourceFile& file,
                                            std::vector<std::string>* warnings = nullptr);

std::vector<Span> enum_spans(const SourceFile& file);

}  // namespace tsd
