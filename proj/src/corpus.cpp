#include "tsd/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <map>
#include <sstream>
#include <thread>

#include "tsd/error.hpp"

namespace fs = std::filesystem;

namespace tsd {

namespace {

bool is_ident_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_';
}

bool is_hidden(const std::string& name) {
    return !name.empty() && name[0] == '.' && name != "." && name != "..";
}

std::size_t line_end(std::string_view s, std::size_t i) {
    auto nl = s.find('\n', i);
    return nl == std::string_view::npos ? s.size() : nl;
}

// End (exclusive) of a quoted literal starting at `open`, honoring backslash escapes.
std::size_t quoted_end(std::string_view s, std::size_t open, char quote) {
    std::size_t i = open + 1;
    while (i < s.size()) {
        if (s[i] == '\\') {
            i += 2;
            continue;
        }
        if (s[i] == quote) return i + 1;
        ++i;
    }
    return s.size();
}

// C# verbatim literal: "" is an escaped quote, no backslash escapes.
std::size_t verbatim_end(std::string_view s, std::size_t open) {
    std::size_t i = open + 1;
    while (i < s.size()) {
        if (s[i] == '"') {
            if (i + 1 < s.size() && s[i + 1] == '"') {
                i += 2;
                continue;
            }
            return i + 1;
        }
        ++i;
    }
    return s.size();
}

std::size_t triple_end(std::string_view s, std::size_t open, std::string_view delim,
                       bool escapes) {
    std::size_t i = open + delim.size();
    while (i < s.size()) {
        if (escapes && s[i] == '\\') {
            i += 2;
            continue;
        }
        if (s.substr(i, delim.size()) == delim) return i + delim.size();
        ++i;
    }
    return s.size();
}

// C++ raw string R"delim( ... )delim". `quote` points at the '"'.
std::optional<std::size_t> cpp_raw_end(std::string_view s, std::size_t quote) {
    auto paren = s.find('(', quote + 1);
    if (paren == std::string_view::npos || paren - quote - 1 > 16) return std::nullopt;
    auto delim = s.substr(quote + 1, paren - quote - 1);
    for (char c : delim) {
        if (c == ' ' || c == ')' || c == '\\' || c == '\n' || c == '\t') return std::nullopt;
    }
    std::string close = ")" + std::string(delim) + "\"";
    auto end = s.find(close, paren + 1);
    return end == std::string_view::npos ? s.size() : end + close.size();
}

// Whether the identifier run ending right before `pos` is exactly one of the
// literal prefixes. Returns the prefix start, or npos.
std::size_t literal_prefix_start(std::string_view s, std::size_t pos,
                                 std::initializer_list<std::string_view> prefixes) {
    std::size_t b = pos;
    while (b > 0 && is_ident_char(s[b - 1])) --b;
    auto word = s.substr(b, pos - b);
    for (auto p : prefixes) {
        if (word == p) return b;
    }
    return std::string_view::npos;
}

void blank(std::string& out, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end && i < out.size(); ++i) {
        if (out[i] != '\n' && out[i] != '\r') out[i] = ' ';
    }
}

std::string mask_python(std::string_view in) {
    std::string out(in);
    std::size_t i = 0;
    while (i < in.size()) {
        char c = in[i];
        if (c == '#') {
            auto e = line_end(in, i);
            blank(out, i, e);
            i = e;
        } else if (c == '"' || c == '\'') {
            std::string_view triple = c == '"' ? "\"\"\"" : "'''";
            std::size_t e = in.substr(i, 3) == triple ? triple_end(in, i, triple, true)
                                                      : quoted_end(in, i, c);
            blank(out, i, e);
            i = e;
        } else {
            ++i;
        }
    }
    return out;
}

std::string mask_c_family(std::string_view in, Language lang) {
    std::string out(in);
    const bool preproc = has_preprocessor(lang);
    std::size_t i = 0;
    while (i < in.size()) {
        if (preproc && (i == 0 || in[i - 1] == '\n')) {
            std::size_t j = i;
            while (j < in.size() && (in[j] == ' ' || in[j] == '\t')) ++j;
            if (j < in.size() && in[j] == '#') {
                // Directive lines stay verbatim, including continuations.
                std::size_t e = line_end(in, j);
                while (e < in.size() && e > 0 &&
                       (in[e - 1] == '\\' || (in[e - 1] == '\r' && e > 1 && in[e - 2] == '\\'))) {
                    e = line_end(in, e + 1);
                }
                i = e;
                continue;
            }
        }
        char c = in[i];
        char next = i + 1 < in.size() ? in[i + 1] : '\0';
        if (c == '/' && next == '/') {
            auto e = line_end(in, i);
            blank(out, i, e);
            i = e;
        } else if (c == '/' && next == '*') {
            auto close = in.find("*/", i + 2);
            std::size_t e = close == std::string_view::npos ? in.size() : close + 2;
            blank(out, i, e);
            i = e;
        } else if (c == '`' && lang == Language::Go) {
            auto close = in.find('`', i + 1);
            std::size_t e = close == std::string_view::npos ? in.size() : close + 1;
            blank(out, i, e);
            i = e;
        } else if (c == '"') {
            std::size_t begin = i;
            std::size_t e = 0;
            if (lang == Language::CSharp && i > 0 && (in[i - 1] == '@' || in[i - 1] == '$')) {
                bool verbatim = false;
                while (begin > 0 && begin + 2 > i && (in[begin - 1] == '@' || in[begin - 1] == '$')) {
                    verbatim = verbatim || in[begin - 1] == '@';
                    --begin;
                }
                e = verbatim ? verbatim_end(in, i) : quoted_end(in, i, '"');
            } else if ((lang == Language::Java || lang == Language::CSharp) &&
                       in.substr(i, 3) == "\"\"\"") {
                e = triple_end(in, i, "\"\"\"", lang == Language::Java);
            } else if (lang == Language::Cpp &&
                       literal_prefix_start(in, i, {"R", "u8R", "uR", "UR", "LR"}) !=
                           std::string_view::npos) {
                e = cpp_raw_end(in, i).value_or(quoted_end(in, i, '"'));
            } else {
                e = quoted_end(in, i, '"');
            }
            blank(out, begin, e);
            i = e;
        } else if (c == '\'') {
            bool literal = i == 0 || !is_ident_char(in[i - 1]) ||
                           (lang != Language::Go &&
                            literal_prefix_start(in, i, {"L", "u", "U", "u8"}) !=
                                std::string_view::npos);
            if (literal) {
                auto e = quoted_end(in, i, '\'');
                blank(out, i, e);
                i = e;
            } else {
                ++i;
            }
        } else {
            ++i;
        }
    }
    return out;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw IoError("cannot open " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("cannot read " + p.string());
    return ss.str();
}

template <typename Visit>
void walk_tree(const fs::path& root, const std::vector<std::string>& ignore_dirs,
               std::size_t& warnings, std::vector<std::string>& diagnostics, Visit visit) {
    std::error_code ec;
    if (!fs::is_directory(root, ec)) {
        throw IoError("not a readable directory: " + root.string());
    }
    fs::recursive_directory_iterator it(root, fs::directory_options::skip_permission_denied, ec);
    if (ec) throw IoError("cannot read " + root.string() + ": " + ec.message());
    for (; it != fs::recursive_directory_iterator(); it.increment(ec)) {
        if (ec) {
            ++warnings;
            diagnostics.push_back("cannot read entry under " + root.string() + ": " +
                                  ec.message());
            ec.clear();
            continue;
        }
        const auto& entry = *it;
        std::error_code sec;
        if (entry.is_symlink(sec)) {
            if (entry.is_directory(sec)) it.disable_recursion_pending();
            continue;
        }
        auto name = entry.path().filename().string();
        if (entry.is_directory(sec)) {
            if (is_hidden(name) ||
                std::find(ignore_dirs.begin(), ignore_dirs.end(), name) != ignore_dirs.end()) {
                it.disable_recursion_pending();
            }
            continue;
        }
        if (!entry.is_regular_file(sec)) continue;
        visit(entry.path());
    }
}

fs::path normalized(const fs::path& p) {
    std::error_code ec;
    auto abs = fs::absolute(p, ec);
    auto canon = fs::weakly_canonical(ec ? p : abs, ec);
    return ec ? abs.lexically_normal() : canon;
}

}  // namespace

std::size_t SourceFile::line_of(std::size_t offset) const {
    auto it = std::upper_bound(line_index.begin(), line_index.end(), offset);
    return static_cast<std::size_t>(std::distance(line_index.begin(), it));
}

const std::vector<std::string>& default_ignore_dirs() {
    static const std::vector<std::string> dirs = {"node_modules", "vendor", "third_party",
                                                  "build", "out"};
    return dirs;
}

bool extension_in_scope(Language lang, std::string_view ext) {
    auto mapped = language_for_extension(ext);
    if (!mapped) return false;
    if (lang == Language::C) return *mapped == Language::C || *mapped == Language::Cpp;
    return *mapped == lang;
}

Language infer_language(const fs::path& root, std::optional<Language> override,
                        const std::vector<std::string>& ignore_dirs) {
    std::error_code ec;
    if (!fs::is_directory(root, ec)) {
        throw IoError("project path is not a directory: " + root.string());
    }
    if (override) return *override;

    std::map<Language, std::size_t> counts;
    std::size_t warnings = 0;
    std::vector<std::string> diagnostics;
    walk_tree(root, ignore_dirs, warnings, diagnostics, [&](const fs::path& p) {
        if (auto lang = language_for_extension(p.extension().string())) ++counts[*lang];
    });
    if (counts.empty()) {
        throw NoRecognizedFiles("no source files with a recognized extension under " +
                                root.string());
    }
    // std::map iterates in enum order, so strict > keeps the earliest on ties.
    auto best = counts.begin();
    for (auto it = counts.begin(); it != counts.end(); ++it) {
        if (it->second > best->second) best = it;
    }
    return best->first;
}

SourceCorpus walk_corpus(const fs::path& root, Language lang,
                         const std::vector<fs::path>& config_paths, const WalkOptions& options) {
    SourceCorpus corpus;
    corpus.root = root;
    corpus.language = lang;

    std::set<fs::path> excluded;
    for (const auto& c : config_paths) excluded.insert(normalized(c));

    std::vector<fs::path> paths;
    walk_tree(root, options.ignore_dirs, corpus.warnings, corpus.diagnostics,
              [&](const fs::path& p) {
                  if (!extension_in_scope(lang, p.extension().string())) return;
                  if (!excluded.empty() && excluded.count(normalized(p))) return;
                  paths.push_back(p);
              });

    std::vector<std::pair<std::string, fs::path>> named;
    named.reserve(paths.size());
    for (const auto& p : paths) {
        named.emplace_back(p.lexically_relative(root).generic_string(), p);
    }
    std::sort(named.begin(), named.end());
    named.erase(std::unique(named.begin(), named.end(),
                            [](const auto& a, const auto& b) { return a.first == b.first; }),
                named.end());

    std::vector<std::optional<SourceFile>> loaded(named.size());
    std::vector<std::string> errors(named.size());
    auto load = [&](std::size_t i) {
        try {
            auto file_lang =
                language_for_extension(named[i].second.extension().string()).value_or(lang);
            loaded[i] = make_source_file(named[i].first, file_lang,
                                         decode_utf8_lossy(read_file(named[i].second)),
                                         options.raw);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    };

    unsigned jobs = std::max(1u, options.jobs);
    if (jobs == 1 || named.size() < 2) {
        for (std::size_t i = 0; i < named.size(); ++i) load(i);
    } else {
        std::vector<std::jthread> workers;
        for (unsigned w = 0; w < jobs; ++w) {
            workers.emplace_back([&, w] {
                for (std::size_t i = w; i < named.size(); i += jobs) load(i);
            });
        }
    }

    for (std::size_t i = 0; i < named.size(); ++i) {
        if (loaded[i]) {
            corpus.files.push_back(std::move(*loaded[i]));
        } else {
            ++corpus.warnings;
            corpus.diagnostics.push_back("skipped unreadable file " + named[i].first + ": " +
                                         errors[i]);
        }
    }
    return corpus;
}

std::string mask(std::string_view content, Language lang) {
    return lang == Language::Python ? mask_python(content) : mask_c_family(content, lang);
}

std::vector<std::size_t> compute_line_index(std::string_view text) {
    std::vector<std::size_t> index{0};
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '\n') index.push_back(i + 1);
    }
    // A trailing newline does not open a new (empty) line.
    if (index.size() > 1 && index.back() == text.size()) index.pop_back();
    return index;
}

SourceFile make_source_file(std::string path, Language lang, std::string text, bool raw_mode) {
    SourceFile f;
    f.path = std::move(path);
    f.language = lang;
    f.masked = raw_mode ? text : mask(text, lang);
    f.line_index = compute_line_index(text);
    f.raw = std::move(text);
    return f;
}

std::string decode_utf8_lossy(std::string_view bytes) {
    static constexpr std::string_view kReplacement = "\xEF\xBF\xBD";
    std::string out;
    out.reserve(bytes.size());
    std::size_t i = 0;
    while (i < bytes.size()) {
        auto b = static_cast<unsigned char>(bytes[i]);
        std::size_t len = 0;
        if (b < 0x80) {
            out.push_back(static_cast<char>(b));
            ++i;
            continue;
        }
        unsigned char lo = 0x80, hi = 0xBF;
        if (b >= 0xC2 && b <= 0xDF) {
            len = 2;
        } else if (b >= 0xE0 && b <= 0xEF) {
            len = 3;
            if (b == 0xE0) lo = 0xA0;
            if (b == 0xED) hi = 0x9F;
        } else if (b >= 0xF0 && b <= 0xF4) {
            len = 4;
            if (b == 0xF0) lo = 0x90;
            if (b == 0xF4) hi = 0x8F;
        }
        bool ok = len > 0 && i + len <= bytes.size();
        for (std::size_t k = 1; ok && k < len; ++k) {
            auto cb = static_cast<unsigned char>(bytes[i + k]);
            unsigned char klo = k == 1 ? lo : 0x80, khi = k == 1 ? hi : 0xBF;
            ok = cb >= klo && cb <= khi;
        }
        if (ok) {
            out.append(bytes.substr(i, len));
            i += len;
        } else {
            out.append(kReplacement);
            ++i;
        }
    }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> directive_line_ranges(std::string_view text) {
    std::vector<std::pair<std::size_t, std::size_t>> ranges;
    std::size_t i = 0;
    while (i < text.size()) {
        std::size_t e = line_end(text, i);
        std::size_t j = i;
        while (j < e && (text[j] == ' ' || text[j] == '\t')) ++j;
        if (j < e && text[j] == '#') {
            while (e < text.size() && e > i &&
                   (text[e - 1] == '\\' || (text[e - 1] == '\r' && e > i + 1 && text[e - 2] == '\\'))) {
                e = line_end(text, e + 1);
            }
            ranges.emplace_back(i, e);
        }
        i = e + 1;
    }
    return ranges;
}

}  // namespace tsd
