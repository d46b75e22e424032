#include "tsd/profiles.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>
#include <unordered_map>

#include "tsd/error.hpp"

namespace tsd {

namespace {

// ---------------------------------------------------------------------------
// Keyword tables
// ---------------------------------------------------------------------------

const std::set<std::string> kCKeywords = {
    "auto",     "break",    "case",     "char",     "const",    "continue", "default",
    "do",       "double",   "else",     "enum",     "extern",   "float",    "for",
    "goto",     "if",       "inline",   "int",      "long",     "register", "restrict",
    "return",   "short",    "signed",   "sizeof",   "static",   "struct",   "switch",
    "typedef",  "union",    "unsigned", "void",     "volatile", "while",    "_Bool",
    "_Complex", "_Imaginary", "_Alignas", "_Alignof", "_Atomic", "_Generic", "_Noreturn",
    "_Static_assert", "_Thread_local", "bool", "true", "false", "NULL",
    // directive names, which show up as identifiers in configuration headers
    "define", "ifdef", "ifndef", "endif", "elif", "undef", "include", "pragma", "error"};

const std::set<std::string> kCppExtra = {
    "alignas",   "alignof",     "and",        "and_eq",     "asm",          "bitand",
    "bitor",     "catch",       "char8_t",    "char16_t",   "char32_t",     "class",
    "compl",     "concept",     "consteval",  "constexpr",  "constinit",    "const_cast",
    "co_await",  "co_return",   "co_yield",   "decltype",   "delete",       "dynamic_cast",
    "explicit",  "export",      "friend",     "mutable",    "namespace",    "new",
    "noexcept",  "not",         "not_eq",     "nullptr",    "operator",     "or",
    "or_eq",     "private",     "protected",  "public",     "reinterpret_cast", "requires",
    "static_assert", "static_cast", "template", "this",     "thread_local", "throw",
    "try",       "typeid",      "typename",   "using",      "virtual",      "wchar_t",
    "xor",       "xor_eq",      "override",   "final"};

const std::set<std::string> kPythonKeywords = {
    "False", "None",   "True",    "and",    "as",       "assert", "async",  "await",
    "break", "class",  "continue", "def",   "del",      "elif",   "else",   "except",
    "finally", "for",  "from",    "global", "if",       "import", "in",     "is",
    "lambda", "nonlocal", "not",  "or",     "pass",     "raise",  "return", "try",
    "while", "with",   "yield",   "match",  "case",     "self",   "print"};

const std::set<std::string> kJavaKeywords = {
    "abstract", "assert",     "boolean",   "break",     "byte",       "case",
    "catch",    "char",       "class",     "const",     "continue",   "default",
    "do",       "double",     "else",      "enum",      "extends",    "final",
    "finally",  "float",      "for",       "goto",      "if",         "implements",
    "import",   "instanceof", "int",       "interface", "long",       "native",
    "new",      "package",    "private",   "protected", "public",     "return",
    "short",    "static",     "strictfp",  "super",     "switch",     "synchronized",
    "this",     "throw",      "throws",    "transient", "try",        "void",
    "volatile", "while",      "true",      "false",     "null",       "var",
    "record",   "sealed",     "permits",   "yield",     "String",     "Boolean"};

const std::set<std::string> kGoKeywords = {
    "break",    "case",    "chan",   "const",  "continue", "default", "defer",
    "else",     "fallthrough", "for", "func",  "go",       "goto",    "if",
    "import",   "interface", "map",  "package", "range",   "return",  "select",
    "struct",   "switch",  "type",   "var",    "true",     "false",   "nil",
    "iota",     "bool",    "byte",   "int",    "int8",     "int16",   "int32",
    "int64",    "uint",    "uint8",  "uint16", "uint32",   "uint64",  "uintptr",
    "float32",  "float64", "string", "rune",   "error",    "complex64", "complex128",
    "append",   "make",    "len",    "cap",    "new",      "panic",   "recover"};

const std::set<std::string> kCSharpKeywords = {
    "abstract", "as",        "base",      "bool",      "break",     "byte",     "case",
    "catch",    "char",      "checked",   "class",     "const",     "continue", "decimal",
    "default",  "delegate",  "do",        "double",    "else",      "enum",     "event",
    "explicit", "extern",    "false",     "finally",   "fixed",     "float",    "for",
    "foreach",  "goto",      "if",        "implicit",  "in",        "int",      "interface",
    "internal", "is",        "lock",      "long",      "namespace", "new",      "null",
    "object",   "operator",  "out",       "override",  "params",    "private",  "protected",
    "public",   "readonly",  "ref",       "return",    "sbyte",     "sealed",   "short",
    "sizeof",   "stackalloc", "static",   "string",    "struct",    "switch",   "this",
    "throw",    "true",      "try",       "typeof",    "uint",      "ulong",    "unchecked",
    "unsafe",   "ushort",    "using",     "virtual",   "void",      "volatile", "while",
    "var",      "get",       "set",       "init",      "value",     "async",    "await",
    "record",   "where",     "yield"};

// Reconstructed declaration patterns. Each captures the declared identifier
// in group 1 and is applied line by line.
const std::vector<std::string> kCommonPatterns = {
    // assignment or := with optional modifiers/type before the name and an
    // optional Python annotation after it
    R"(^\s*(?:[A-Za-z_][\w.<>\[\]*&:, ]*?\s+)?\**([A-Za-z_]\w*)\s*(?::\s*[\w.\[\], |]+)?\s*:?=(?!=))",
    // quoted keys of map/dict/JSON literals
    R"(["']([A-Za-z_]\w*)["']\s*:)",
    // unquoted keys (YAML, struct literals)
    R"(^\s*-?\s*([A-Za-z_]\w*)\s*:(?![:=]))",
    // boolean declarations without initializer, C-family order
    R"(\b(?:bool|boolean|Boolean|BOOL)\s+\*?([A-Za-z_]\w*)\s*[;,=){])",
    // boolean struct fields, Go order
    R"(^\s*([A-Za-z_]\w*)\s+\*?bool\b)",
    // bare enum-style constant names
    R"(^\s*([A-Za-z_]\w*)\s*[,;]?\s*$)",
    // Chromium-style kFeatureName
    R"(\b(k[A-Z]\w*))",
};

const std::string kDefinePattern = R"(^\s*#\s*define\s+([A-Za-z_]\w*))";

LanguageProfile build_profile(Language lang) {
    LanguageProfile p;
    p.language = lang;
    p.extraction_patterns = kCommonPatterns;
    p.has_preproc = has_preprocessor(lang);
    if (p.has_preproc) p.extraction_patterns.insert(p.extraction_patterns.begin() + 1, kDefinePattern);
    switch (lang) {
        case Language::C:
            p.keywords = kCKeywords;
            p.component_rule = ComponentRule::FileModule;
            break;
        case Language::Cpp:
            p.keywords = kCKeywords;
            p.keywords.insert(kCppExtra.begin(), kCppExtra.end());
            p.component_rule = ComponentRule::EnclosingClass;
            break;
        case Language::Python:
            p.keywords = kPythonKeywords;
            p.component_rule = ComponentRule::EnclosingClass;
            p.block_style = BlockStyle::Indentation;
            break;
        case Language::Java:
            p.keywords = kJavaKeywords;
            p.component_rule = ComponentRule::EnclosingClass;
            break;
        case Language::Go:
            p.keywords = kGoKeywords;
            p.component_rule = ComponentRule::GoPackage;
            break;
        case Language::CSharp:
            p.keywords = kCSharpKeywords;
            p.component_rule = ComponentRule::Namespace;
            break;
    }
    if (lang == Language::Python) {
        p.conditional_markers = {"if", "elif", "else"};
    } else {
        p.conditional_markers = {"if", "else if", "else", "switch"};
    }
    return p;
}

// ---------------------------------------------------------------------------
// Lexical helpers over masked text
// ---------------------------------------------------------------------------

bool is_ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

struct Token {
    std::size_t begin;
    std::size_t end;
};

std::size_t skip_space(std::string_view s, std::size_t i) {
    while (i < s.size() && is_space(s[i])) ++i;
    return i;
}

std::size_t line_end_of(std::string_view s, std::size_t i) {
    auto nl = s.find('\n', i);
    return nl == std::string_view::npos ? s.size() : nl;
}

std::string_view ident_at(std::string_view s, std::size_t i) {
    if (i >= s.size() || !is_ident_start(s[i])) return {};
    std::size_t e = i;
    while (e < s.size() && is_ident_char(s[e])) ++e;
    return s.substr(i, e - i);
}

// Identifier tokens outside the given excluded ranges (sorted, disjoint).
std::vector<Token> identifiers(std::string_view s,
                               const std::vector<std::pair<std::size_t, std::size_t>>& excluded) {
    std::vector<Token> out;
    std::size_t ex = 0;
    std::size_t i = 0;
    while (i < s.size()) {
        while (ex < excluded.size() && excluded[ex].second <= i) ++ex;
        if (ex < excluded.size() && excluded[ex].first <= i) {
            i = excluded[ex].second;
            continue;
        }
        if (is_ident_start(s[i]) && (i == 0 || !is_ident_char(s[i - 1]))) {
            std::size_t e = i;
            while (e < s.size() && is_ident_char(s[e])) ++e;
            out.push_back({i, e});
            i = e;
        } else {
            ++i;
        }
    }
    return out;
}

// Offset of the matching closer, or s.size() when unmatched.
std::size_t match_close(std::string_view s, std::size_t open, char lhs, char rhs) {
    int depth = 0;
    for (std::size_t i = open; i < s.size(); ++i) {
        if (s[i] == lhs) {
            ++depth;
        } else if (s[i] == rhs) {
            if (--depth == 0) return i;
        }
    }
    return s.size();
}

char prev_nonspace(std::string_view s, std::size_t i) {
    while (i > 0) {
        --i;
        if (s[i] != ' ' && s[i] != '\t') return s[i];
    }
    return '\0';
}

class BraceIndex {
   public:
    BraceIndex(std::string_view s, const std::vector<std::pair<std::size_t, std::size_t>>& excluded)
        : size_(s.size()) {
        std::vector<std::size_t> stack;
        std::size_t ex = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            while (ex < excluded.size() && excluded[ex].second <= i) ++ex;
            if (ex < excluded.size() && excluded[ex].first <= i) {
                i = excluded[ex].second - 1;
                continue;
            }
            if (s[i] == '{') {
                stack.push_back(i);
            } else if (s[i] == '}' && !stack.empty()) {
                close_[stack.back()] = i;
                stack.pop_back();
            }
        }
    }

    /// Matching '}' offset, or the text size for an unmatched '{'.
    std::size_t close_of(std::size_t open) const {
        auto it = close_.find(open);
        return it == close_.end() ? size_ : it->second;
    }

   private:
    std::size_t size_;
    std::unordered_map<std::size_t, std::size_t> close_;
};

// ---------------------------------------------------------------------------
// Python line model
// ---------------------------------------------------------------------------

struct PyLine {
    std::size_t begin;
    std::size_t end;  // excluding '\n'
    std::size_t indent;
    bool blank;
};

std::vector<PyLine> python_lines(std::string_view s) {
    std::vector<PyLine> lines;
    std::size_t i = 0;
    while (i <= s.size()) {
        std::size_t e = line_end_of(s, i);
        std::size_t col = 0;
        std::size_t j = i;
        while (j < e && (s[j] == ' ' || s[j] == '\t')) {
            col = s[j] == '\t' ? (col / 8 + 1) * 8 : col + 1;
            ++j;
        }
        bool blank = true;
        for (std::size_t k = j; k < e; ++k) {
            if (!is_space(s[k])) {
                blank = false;
                break;
            }
        }
        lines.push_back({i, e, col, blank});
        if (e >= s.size()) break;
        i = e + 1;
    }
    return lines;
}

std::size_t first_code(std::string_view s, const PyLine& line) {
    std::size_t j = line.begin;
    while (j < line.end && (s[j] == ' ' || s[j] == '\t')) ++j;
    return j;
}

// The header-terminating ':' at bracket depth 0, or npos.
std::size_t python_header_colon(std::string_view s, std::size_t from) {
    int depth = 0;
    for (std::size_t i = from; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(' || c == '[' || c == '{') {
            ++depth;
        } else if (c == ')' || c == ']' || c == '}') {
            depth = std::max(0, depth - 1);
        } else if (c == '\n' && depth == 0 && (i == 0 || s[i - 1] != '\\')) {
            return std::string_view::npos;
        } else if (c == ':' && depth == 0) {
            if (i + 1 < s.size() && s[i + 1] == '=') continue;
            return i;
        }
    }
    return std::string_view::npos;
}

// Body span of a Python compound statement whose header starts on line
// `header_line` and ends with the ':' at `colon`.
Span python_body(std::string_view s, const std::vector<PyLine>& lines, std::size_t header_line,
                 std::size_t colon) {
    std::size_t colon_line_end = line_end_of(s, colon);
    for (std::size_t k = colon + 1; k < colon_line_end; ++k) {
        if (!is_space(s[k])) return {colon + 1, colon_line_end};
    }
    std::size_t indent = lines[header_line].indent;
    std::size_t li = header_line;
    while (li < lines.size() && lines[li].end < colon_line_end) ++li;
    ++li;  // first line after the colon's line
    std::size_t first = li;
    std::size_t last_code = lines.size();
    for (; li < lines.size(); ++li) {
        if (lines[li].blank) continue;
        if (lines[li].indent <= indent) break;
        last_code = li;
    }
    if (last_code == lines.size()) return {colon + 1, colon + 1};
    return {lines[first].begin, lines[last_code].end};
}

}  // namespace

std::string_view to_string(ComponentRule rule) {
    switch (rule) {
        case ComponentRule::EnclosingClass:
            return "class";
        case ComponentRule::Namespace:
            return "namespace";
        case ComponentRule::GoPackage:
            return "package";
        case ComponentRule::FileModule:
            return "file";
    }
    return "unknown";
}

const LanguageProfile& default_profile(Language lang) {
    static const std::map<Language, LanguageProfile> profiles = [] {
        std::map<Language, LanguageProfile> m;
        for (auto l : kAllLanguages) m.emplace(l, build_profile(l));
        return m;
    }();
    return profiles.at(lang);
}

ProfileSet::ProfileSet() {
    for (auto l : kAllLanguages) profiles_.emplace(l, default_profile(l));
}

const LanguageProfile& ProfileSet::get(Language lang) const { return profiles_.at(lang); }

ProfileSet ProfileSet::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open profile file " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

ProfileSet ProfileSet::parse(std::string_view text) {
    ProfileSet set;
    std::set<Language> replaced;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    auto trim = [](std::string s) {
        auto b = s.find_first_not_of(" \t\r");
        auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto eq = t.find('=');
        auto dot = t.find('.');
        if (eq == std::string::npos || dot == std::string::npos || dot > eq) {
            throw FormatError(lineno, "expected <language>.<key> = <value>");
        }
        auto lang = parse_language(trim(t.substr(0, dot)));
        if (!lang) throw FormatError(lineno, "unknown language '" + t.substr(0, dot) + "'");
        auto key = trim(t.substr(dot + 1, eq - dot - 1));
        auto value = trim(t.substr(eq + 1));
        auto& profile = set.profiles_.at(*lang);
        if (key == "extract") {
            if (replaced.insert(*lang).second) profile.extraction_patterns.clear();
            try {
                std::regex check(value);
            } catch (const std::regex_error& e) {
                throw FormatError(lineno, "bad regex: " + std::string(e.what()));
            }
            profile.extraction_patterns.push_back(value);
        } else if (key == "keywords") {
            profile.keywords.clear();
            std::stringstream words(value);
            std::string w;
            while (std::getline(words, w, ',')) {
                w = trim(w);
                if (!w.empty()) profile.keywords.insert(w);
            }
        } else {
            throw FormatError(lineno, "unknown key '" + key + "'");
        }
    }
    return set;
}

// ---------------------------------------------------------------------------
// FileStructure
// ---------------------------------------------------------------------------

FileStructure FileStructure::analyze(const SourceFile& file) {
    FileStructure fs;
    fs.path_ = file.path;
    fs.language_ = file.language;
    std::string_view s = file.masked;

    if (file.language == Language::Python) {
        auto lines = python_lines(s);
        for (std::size_t li = 0; li < lines.size(); ++li) {
            if (lines[li].blank) continue;
            std::size_t start = first_code(s, lines[li]);
            auto word = ident_at(s, start);
            if (word.empty()) continue;
            std::size_t after = start + word.size();
            bool conditional = word == "if" || word == "elif";
            if (word == "else") {
                // Only an if-chain else opens a conditional body.
                for (std::size_t k = li; k-- > 0;) {
                    if (lines[k].blank || lines[k].indent > lines[li].indent) continue;
                    if (lines[k].indent == lines[li].indent) {
                        auto w = ident_at(s, first_code(s, lines[k]));
                        conditional = w == "if" || w == "elif";
                    }
                    break;
                }
            }
            if (conditional) {
                std::size_t colon = python_header_colon(s, after);
                if (colon == std::string_view::npos) continue;
                fs.conditionals_.push_back(
                    {std::string(word), {start, colon + 1}, python_body(s, lines, li, colon)});
            } else if (word == "class") {
                std::size_t name_pos = skip_space(s, after);
                auto name = ident_at(s, name_pos);
                if (name.empty()) continue;
                std::size_t colon = python_header_colon(s, name_pos + name.size());
                if (colon == std::string_view::npos) continue;
                Span body = python_body(s, lines, li, colon);
                fs.scopes_.push_back({body, std::string(name)});
                auto bases = s.substr(name_pos + name.size(), colon - name_pos - name.size());
                for (const auto& t : identifiers(bases, {})) {
                    auto id = bases.substr(t.begin, t.end - t.begin);
                    if (id.size() >= 4 && id.substr(id.size() - 4) == "Enum") {
                        fs.enums_.push_back(body);
                        break;
                    }
                }
            }
        }
    } else {
        std::vector<std::pair<std::size_t, std::size_t>> directives;
        if (has_preprocessor(file.language)) directives = directive_line_ranges(s);
        BraceIndex braces(s, directives);
        const bool go = file.language == Language::Go;
        auto tokens = identifiers(s, directives);
        for (std::size_t ti = 0; ti < tokens.size(); ++ti) {
            const auto& tok = tokens[ti];
            auto word = s.substr(tok.begin, tok.end - tok.begin);
            char before = prev_nonspace(s, tok.begin);
            if (before == '.' || before == '#') continue;

            if (word == "if" || word == "switch") {
                std::size_t j = skip_space(s, tok.end);
                if (go) {
                    int depth = 0;
                    std::size_t open = s.size();
                    for (std::size_t k = tok.end; k < s.size(); ++k) {
                        char c = s[k];
                        if (c == '(' || c == '[') {
                            ++depth;
                        } else if (c == ')' || c == ']') {
                            depth = std::max(0, depth - 1);
                        } else if (c == '{' && depth == 0) {
                            open = k;
                            break;
                        } else if (c == '}' && depth == 0) {
                            break;
                        }
                    }
                    if (open == s.size()) continue;
                    fs.conditionals_.push_back(
                        {std::string(word), {tok.begin, open}, {open + 1, braces.close_of(open)}});
                    continue;
                }
                if (word == "if" && ident_at(s, j) == "constexpr") j = skip_space(s, j + 9);
                if (j >= s.size() || s[j] != '(') continue;
                std::size_t close = match_close(s, j, '(', ')');
                std::size_t cond_end = std::min(close + 1, s.size());
                std::size_t k = skip_space(s, cond_end);
                Span body{cond_end, cond_end};
                if (k < s.size() && s[k] == '{') {
                    body = {k + 1, braces.close_of(k)};
                } else if (k < s.size()) {
                    body = {cond_end, line_end_of(s, k)};
                }
                fs.conditionals_.push_back({std::string(word), {tok.begin, cond_end}, body});
            } else if (word == "else") {
                std::size_t j = skip_space(s, tok.end);
                if (ident_at(s, j) == "if") continue;
                Span body{tok.end, tok.end};
                if (j < s.size() && s[j] == '{') {
                    body = {j + 1, braces.close_of(j)};
                } else if (!go && j < s.size()) {
                    body = {tok.end, line_end_of(s, j)};
                }
                fs.conditionals_.push_back({"else", {tok.begin, tok.end}, body});
            } else if (word == "enum" && file.language != Language::Go) {
                for (std::size_t k = tok.end; k < s.size(); ++k) {
                    char c = s[k];
                    if (c == '{') {
                        fs.enums_.push_back({k, std::min(braces.close_of(k) + 1, s.size())});
                        break;
                    }
                    if (c == ';' || c == '(' || c == ')' || c == '=' || c == '}' || c == ',') break;
                }
            } else if (word == "const" && go) {
                std::size_t j = skip_space(s, tok.end);
                if (j >= s.size() || s[j] != '(') continue;
                std::size_t close = match_close(s, j, '(', ')');
                auto block = s.substr(j, close - j);
                for (const auto& t : identifiers(block, {})) {
                    if (block.substr(t.begin, t.end - t.begin) == "iota") {
                        fs.enums_.push_back({j, std::min(close + 1, s.size())});
                        break;
                    }
                }
            } else if (word == "class" &&
                       (file.language == Language::Cpp || file.language == Language::Java)) {
                if (ti > 0 && s.substr(tokens[ti - 1].begin,
                                       tokens[ti - 1].end - tokens[ti - 1].begin) == "enum") {
                    continue;
                }
                // Name is the last identifier before the base list or body.
                std::string name;
                bool seen_base = false;
                int angle = 0;
                std::size_t k = tok.end;
                std::size_t open = s.size();
                while (k < s.size()) {
                    char c = s[k];
                    if (is_ident_start(c)) {
                        auto id = ident_at(s, k);
                        if (id == "extends" || id == "implements" || id == "permits") {
                            seen_base = true;
                        } else if (!seen_base && angle == 0 && id != "final") {
                            name = std::string(id);
                        }
                        k += id.size();
                        continue;
                    }
                    if (c == '{') {
                        open = k;
                        break;
                    }
                    if (c == ';' || c == '(' || c == ')' || c == '=' || c == '}') break;
                    if (c == ':' && !(k + 1 < s.size() && s[k + 1] == ':') &&
                        !(k > 0 && s[k - 1] == ':')) {
                        seen_base = true;
                    } else if (c == '<') {
                        ++angle;
                    } else if (c == '>') {
                        if (angle == 0 && !seen_base) break;
                        angle = std::max(0, angle - 1);
                    } else if (c == ',' && angle == 0 && !seen_base) {
                        break;
                    }
                    ++k;
                }
                if (open == s.size() || name.empty()) continue;
                fs.scopes_.push_back({{open + 1, braces.close_of(open)}, name});
            } else if (word == "namespace" && file.language == Language::CSharp) {
                std::size_t k = skip_space(s, tok.end);
                std::size_t name_begin = k;
                while (k < s.size() && (is_ident_char(s[k]) || s[k] == '.')) ++k;
                std::string name(s.substr(name_begin, k - name_begin));
                if (name.empty()) continue;
                k = skip_space(s, k);
                if (k < s.size() && s[k] == '{') {
                    fs.scopes_.push_back({{k + 1, braces.close_of(k)}, name});
                } else if (k < s.size() && s[k] == ';') {
                    fs.scopes_.push_back({{k + 1, s.size()}, name});
                }
            }
        }

        if (has_preprocessor(file.language)) {
            fs.preproc_ = preprocessor_spans(file, &fs.warnings_);
            for (const auto& [b, e] : directives) {
                std::size_t j = skip_space(s, b) + 1;
                j = skip_space(s, j);
                auto name = ident_at(s, j);
                if (name == "if" || name == "ifdef" || name == "ifndef" || name == "elif" ||
                    name == "elifdef" || name == "elifndef") {
                    fs.directive_conditions_.push_back({j + name.size(), e});
                }
            }
        }
    }

    std::sort(fs.enums_.begin(), fs.enums_.end());
    return fs;
}

ComponentId FileStructure::component_at(std::size_t offset) const {
    switch (language_) {
        case Language::Go: {
            auto slash = path_.rfind('/');
            return {ComponentRule::GoPackage, slash == std::string::npos ? "." : path_.substr(0, slash)};
        }
        case Language::C:
            return {ComponentRule::FileModule, path_};
        default:
            break;
    }
    const NamedSpan* inner = nullptr;
    for (const auto& scope : scopes_) {
        if (scope.span.contains(offset) && (!inner || scope.span.start >= inner->span.start)) {
            inner = &scope;
        }
    }
    if (!inner) return {ComponentRule::FileModule, path_};
    return {language_ == Language::CSharp ? ComponentRule::Namespace : ComponentRule::EnclosingClass,
            inner->name};
}

unsigned FileStructure::depth_at(std::size_t offset) const {
    unsigned depth = 0;
    for (const auto& c : conditionals_) {
        if (c.body.contains(offset)) ++depth;
    }
    return depth;
}

const Conditional* FileStructure::header_at(std::size_t offset) const {
    const Conditional* inner = nullptr;
    for (const auto& c : conditionals_) {
        if (c.header.contains(offset) && (!inner || c.header.start >= inner->header.start)) {
            inner = &c;
        }
    }
    return inner;
}

bool FileStructure::in_preproc(std::size_t offset) const {
    return std::any_of(preproc_.begin(), preproc_.end(), [&](const PreprocSpan& p) {
        return !p.include_guard && p.span.contains(offset);
    });
}

bool FileStructure::in_enum(std::size_t offset) const {
    return std::any_of(enums_.begin(), enums_.end(),
                       [&](const Span& sp) { return sp.contains(offset); });
}

bool FileStructure::in_directive_condition(std::size_t offset) const {
    return std::any_of(directive_conditions_.begin(), directive_conditions_.end(),
                       [&](const Span& sp) { return sp.contains(offset); });
}

ComponentId component_of(const SourceFile& file, std::size_t offset) {
    return FileStructure::analyze(file).component_at(offset);
}

unsigned nesting_depth_at(const SourceFile& file, std::size_t offset) {
    return FileStructure::analyze(file).depth_at(offset);
}

std::vector<PreprocSpan> preprocessor_spans(const SourceFile& file,
                                            std::vector<std::string>* warnings) {
    std::vector<PreprocSpan> spans;
    if (!has_preprocessor(file.language)) return spans;
    std::string_view s = file.masked;
    auto directives = directive_line_ranges(s);

    struct Open {
        std::size_t start;
        std::string directive;
        std::string condition;
        bool guard;
    };
    std::vector<Open> stack;
    for (std::size_t di = 0; di < directives.size(); ++di) {
        auto [b, e] = directives[di];
        std::size_t j = skip_space(s, s.find('#', b) + 1);
        auto name = ident_at(s, j);
        std::string condition(s.substr(j + name.size(), e - j - name.size()));
        for (auto pos = condition.find("\\\n"); pos != std::string::npos;
             pos = condition.find("\\\n")) {
            condition.replace(pos, 2, " ");
        }
        auto cb = condition.find_first_not_of(" \t\r");
        auto ce = condition.find_last_not_of(" \t\r");
        condition = cb == std::string::npos ? "" : condition.substr(cb, ce - cb + 1);

        if (name == "if" || name == "ifdef" || name == "ifndef") {
            bool guard = false;
            if (name == "ifndef" && di + 1 < directives.size()) {
                auto [nb, ne] = directives[di + 1];
                std::size_t k = skip_space(s, s.find('#', nb) + 1);
                if (ident_at(s, k) == "define") {
                    k = skip_space(s, k + 6);
                    guard = ident_at(s, k) == condition;
                }
            }
            stack.push_back({b, std::string(name), condition, guard});
        } else if (name == "endif") {
            if (stack.empty()) {
                if (warnings) {
                    warnings->push_back(file.path + ":" + std::to_string(file.line_of(b)) +
                                        ": #endif without matching #if");
                }
                continue;
            }
            auto open = std::move(stack.back());
            stack.pop_back();
            spans.push_back({{open.start, e}, open.directive, open.condition, open.guard});
        }
    }
    while (!stack.empty()) {
        auto open = std::move(stack.back());
        stack.pop_back();
        if (warnings) {
            warnings->push_back(file.path + ":" + std::to_string(file.line_of(open.start)) + ": #" +
                                open.directive + " without matching #endif");
        }
        spans.push_back({{open.start, s.size()}, open.directive, open.condition, open.guard});
    }
    std::sort(spans.begin(), spans.end(),
              [](const PreprocSpan& a, const PreprocSpan& b) { return a.span < b.span; });
    return spans;
}

std::vector<Span> enum_spans(const SourceFile& file) {
    return FileStructure::analyze(file).enum_spans();
}

}  // namespace tsd
