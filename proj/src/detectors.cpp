#include "tsd/detectors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace tsd {

namespace {

bool is_ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }

struct IdentToken {
    std::size_t begin;
    std::size_t end;
};

std::vector<IdentToken> tokenize(std::string_view s) {
    std::vector<IdentToken> out;
    std::size_t i = 0;
    while (i < s.size()) {
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

// Grows [begin, end) through '.'-qualified segments on both sides and a
// unary '*' prefix.
std::string qualified_expression(std::string_view s, std::size_t begin, std::size_t end) {
    while (begin >= 2 && s[begin - 1] == '.' && is_ident_char(s[begin - 2])) {
        std::size_t b = begin - 1;
        while (b > 0 && is_ident_char(s[b - 1])) --b;
        if (!is_ident_start(s[b])) break;
        begin = b;
    }
    if (begin >= 1 && s[begin - 1] == '*') {
        bool unary = begin < 2 || !(is_ident_char(s[begin - 2]) || s[begin - 2] == ')' ||
                                    s[begin - 2] == ']');
        if (unary) --begin;
    }
    while (end + 1 < s.size() && s[end] == '.' && is_ident_start(s[end + 1])) {
        ++end;
        while (end < s.size() && is_ident_char(s[end])) ++end;
    }
    return std::string(s.substr(begin, end - begin));
}

UsageOccurrence annotate(const SourceFile& file, const FileStructure& structure,
                         std::string toggle, std::size_t begin, std::size_t end, bool via_alias) {
    UsageOccurrence occ;
    occ.toggle = std::move(toggle);
    occ.matched_expression = qualified_expression(file.masked, begin, end);
    occ.file = file.path;
    occ.offset = begin;
    occ.line = file.line_of(begin);
    occ.component = structure.component_at(begin);
    if (const auto* header = structure.header_at(begin)) {
        occ.depth = structure.depth_at(header->header.start);
    }
    if (has_preprocessor(file.language)) {
        occ.in_preproc = structure.in_preproc(begin);
        occ.in_directive_condition = structure.in_directive_condition(begin);
    }
    occ.in_enum = structure.in_enum(begin);
    occ.via_alias = via_alias;
    return occ;
}

// Offset of the first plain or := assignment at bracket depth 0, and the
// length of the operator; npos when there is none.
std::pair<std::size_t, std::size_t> assignment_operator(std::string_view seg) {
    int depth = 0;
    for (std::size_t i = 0; i < seg.size(); ++i) {
        char c = seg[i];
        if (c == '(' || c == '[' || c == '{') {
            ++depth;
        } else if (c == ')' || c == ']' || c == '}') {
            depth = std::max(0, depth - 1);
        } else if (c == '=' && depth == 0) {
            char next = i + 1 < seg.size() ? seg[i + 1] : '\0';
            if (next == '=' || next == '>') {
                ++i;
                continue;
            }
            char prev = i > 0 ? seg[i - 1] : '\0';
            if (prev == ':') return {i - 1, 2};
            if (std::string_view("=!<>+-*/%&|^~?").find(prev) != std::string_view::npos && prev != '\0') {
                continue;
            }
            return {i, 1};
        }
    }
    return {std::string_view::npos, 0};
}

FileScan scan_file(const SourceFile& file, const ToggleRegistry& registry,
                   const std::unordered_set<std::string_view>& names) {
    FileScan fs;
    fs.file = &file;
    auto structure = FileStructure::analyze(file);
    fs.warnings = structure.warnings();
    std::string_view s = file.masked;
    auto tokens = tokenize(s);
    for (const auto& t : tokens) {
        auto word = s.substr(t.begin, t.end - t.begin);
        if (names.count(word)) {
            fs.direct.push_back(annotate(file, structure, std::string(word), t.begin, t.end, false));
        }
    }

    fs.bindings = alias_bindings(file, registry);
    if (fs.bindings.empty()) return fs;
    std::unordered_map<std::string_view, std::vector<const AliasBinding*>> by_alias;
    for (const auto& b : fs.bindings) by_alias[b.alias].push_back(&b);
    for (const auto& t : tokens) {
        auto word = s.substr(t.begin, t.end - t.begin);
        auto it = by_alias.find(word);
        if (it == by_alias.end()) continue;
        const AliasBinding* active = nullptr;
        for (const auto* b : it->second) {
            if (b->statement_end <= t.begin) active = b;
        }
        if (active) {
            fs.aliased.push_back(annotate(file, structure, active->toggle, t.begin, t.end, true));
        }
    }
    return fs;
}

}  // namespace

std::vector<UsageOccurrence> find_occurrences(std::string_view toggle, const SourceFile& file) {
    std::vector<UsageOccurrence> out;
    if (toggle.empty()) return out;
    std::string_view s = file.masked;
    std::optional<FileStructure> structure;
    for (auto pos = s.find(toggle); pos != std::string_view::npos; pos = s.find(toggle, pos + 1)) {
        std::size_t end = pos + toggle.size();
        if (pos > 0 && is_ident_char(s[pos - 1])) continue;
        if (end < s.size() && is_ident_char(s[end])) continue;
        if (!structure) structure = FileStructure::analyze(file);
        out.push_back(annotate(file, *structure, std::string(toggle), pos, end, false));
    }
    return out;
}

std::vector<AliasBinding> alias_bindings(const SourceFile& file, const ToggleRegistry& registry) {
    std::vector<AliasBinding> out;
    std::unordered_set<std::string_view> names(registry.toggles.begin(), registry.toggles.end());
    std::string_view s = file.masked;
    std::size_t line_start = 0;
    while (line_start < s.size()) {
        auto nl = s.find('\n', line_start);
        std::size_t line_end = nl == std::string_view::npos ? s.size() : nl;
        std::size_t seg_start = line_start;
        while (seg_start <= line_end) {
            auto semi = s.find(';', seg_start);
            std::size_t seg_end = semi == std::string_view::npos || semi > line_end ? line_end : semi;
            auto seg = s.substr(seg_start, seg_end - seg_start);
            auto [op, op_len] = assignment_operator(seg);
            if (op != std::string_view::npos) {
                // LHS must end in a plain identifier, not a field or a tuple.
                std::size_t e = op;
                while (e > 0 && (seg[e - 1] == ' ' || seg[e - 1] == '\t')) --e;
                std::size_t b = e;
                while (b > 0 && is_ident_char(seg[b - 1])) --b;
                bool plain = b < e && is_ident_start(seg[b]) &&
                             (b == 0 || (seg[b - 1] != '.' && seg[b - 1] != '>' && seg[b - 1] != ':'));
                bool tuple = seg.substr(0, b).find(',') != std::string_view::npos;
                if (plain && !tuple) {
                    auto alias = seg.substr(b, e - b);
                    std::set<std::string_view> found;
                    auto rhs = seg.substr(op + op_len);
                    for (const auto& t : tokenize(rhs)) {
                        auto w = rhs.substr(t.begin, t.end - t.begin);
                        if (names.count(w)) found.insert(w);
                    }
                    if (found.size() == 1 && !names.count(alias) && *found.begin() != alias) {
                        AliasBinding binding;
                        binding.alias = std::string(alias);
                        binding.toggle = std::string(*found.begin());
                        binding.file = file.path;
                        binding.offset = seg_start + b;
                        binding.line = file.line_of(binding.offset);
                        binding.statement_end = seg_end;
                        out.push_back(std::move(binding));
                    }
                }
            }
            if (seg_end == line_end) break;
            seg_start = seg_end + 1;
        }
        if (nl == std::string_view::npos) break;
        line_start = nl + 1;
    }
    return out;
}

CorpusScan scan_corpus(const ToggleRegistry& registry, const SourceCorpus& corpus, unsigned jobs) {
    CorpusScan scan;
    scan.language = corpus.language;
    std::vector<const SourceFile*> files;
    files.reserve(corpus.files.size());
    for (const auto& f : corpus.files) files.push_back(&f);
    std::sort(files.begin(), files.end(),
              [](const SourceFile* a, const SourceFile* b) { return a->path < b->path; });

    std::unordered_set<std::string_view> names(registry.toggles.begin(), registry.toggles.end());
    scan.files.resize(files.size());
    auto work = [&](std::size_t i) { scan.files[i] = scan_file(*files[i], registry, names); };
    jobs = std::max(1u, jobs);
    if (jobs == 1 || files.size() < 2) {
        for (std::size_t i = 0; i < files.size(); ++i) work(i);
    } else {
        std::vector<std::jthread> workers;
        for (unsigned w = 0; w < jobs; ++w) {
            workers.emplace_back([&, w] {
                for (std::size_t i = w; i < files.size(); i += jobs) work(i);
            });
        }
    }
    return scan;
}

PatternReport detect_dead(const ToggleRegistry& registry, const CorpusScan& scan) {
    std::set<std::string_view> used;
    for (const auto& f : scan.files) {
        for (const auto& occ : f.direct) used.insert(occ.toggle);
    }
    PatternReport r;
    r.pattern = Pattern::Dead;
    for (const auto& t : registry.toggles) {
        if (!used.count(t)) r.toggles.push_back(t);
    }
    std::sort(r.toggles.begin(), r.toggles.end());
    update_totals(r);
    return r;
}

PatternReport detect_spread(const ToggleRegistry& registry, const CorpusScan& scan) {
    std::map<std::string, std::set<ComponentId>> components;
    std::map<std::string, std::set<std::string>> files;
    for (const auto& f : scan.files) {
        for (const auto& occ : f.direct) {
            components[occ.toggle].insert(occ.component);
            files[occ.toggle].insert(occ.file);
        }
    }
    PatternReport r;
    r.pattern = Pattern::Spread;
    std::set<std::string> involved;
    for (const auto& t : registry.toggles) {
        auto it = components.find(t);
        if (it == components.end() || it->second.size() < 2) continue;
        std::vector<std::string> names;
        for (const auto& c : it->second) names.push_back(c.name);
        std::sort(names.begin(), names.end());
        r.entries[t] = std::move(names);
        involved.insert(files[t].begin(), files[t].end());
    }
    update_totals(r, involved.size());
    return r;
}

PatternReport detect_nested(const CorpusScan& scan) {
    PatternReport r;
    r.pattern = Pattern::Nested;
    for (const auto& f : scan.files) {
        std::vector<const UsageOccurrence*> all;
        for (const auto& o : f.direct) all.push_back(&o);
        for (const auto& o : f.aliased) all.push_back(&o);
        std::sort(all.begin(), all.end(),
                  [](const auto* a, const auto* b) { return a->offset < b->offset; });
        std::vector<std::string> exprs;
        for (const auto* o : all) {
            if (o->depth && *o->depth >= 1) exprs.push_back(o->matched_expression);
        }
        if (!exprs.empty()) r.entries[f.file->path] = std::move(exprs);
    }
    update_totals(r);
    return r;
}

PatternReport detect_mixed(const CorpusScan& scan) {
    PatternReport r;
    r.pattern = Pattern::Mixed;
    if (!has_preprocessor(scan.language)) {
        update_totals(r);
        return r;
    }
    for (const auto& f : scan.files) {
        if (!has_preprocessor(f.file->language)) continue;
        struct Flags {
            bool directive = false;
            bool runtime = false;
            bool runtime_in_span = false;
        };
        std::map<std::string, Flags> flags;
        for (const auto& o : f.direct) {
            auto& fl = flags[o.toggle];
            if (o.in_directive_condition) fl.directive = true;
            if (o.depth) {
                fl.runtime = true;
                if (o.in_preproc) fl.runtime_in_span = true;
            }
        }
        std::vector<std::string> mixed;
        for (const auto& [toggle, fl] : flags) {
            if ((fl.directive && fl.runtime) || fl.runtime_in_span) mixed.push_back(toggle);
        }
        if (!mixed.empty()) r.entries[f.file->path] = std::move(mixed);
    }
    update_totals(r);
    return r;
}

PatternReport detect_enum(const CorpusScan& scan) {
    PatternReport r;
    r.pattern = Pattern::Enum;
    for (const auto& f : scan.files) {
        std::set<std::string> toggles;
        for (const auto& o : f.direct) {
            if (o.in_enum) toggles.insert(o.toggle);
        }
        if (!toggles.empty()) r.entries[f.file->path] = {toggles.begin(), toggles.end()};
    }
    update_totals(r);
    return r;
}

PatternReport detect_dead(const ToggleRegistry& registry, const SourceCorpus& corpus) {
    return detect_dead(registry, scan_corpus(registry, corpus));
}

PatternReport detect_spread(const ToggleRegistry& registry, const SourceCorpus& corpus,
                            const LanguageProfile&) {
    return detect_spread(registry, scan_corpus(registry, corpus));
}

PatternReport detect_nested(const ToggleRegistry& registry, const SourceCorpus& corpus,
                            const LanguageProfile&) {
    return detect_nested(scan_corpus(registry, corpus));
}

PatternReport detect_mixed(const ToggleRegistry& registry, const SourceCorpus& corpus,
                           const LanguageProfile& profile) {
    if (!profile.has_preproc || !has_preprocessor(corpus.language)) {
        PatternReport r;
        r.pattern = Pattern::Mixed;
        return r;
    }
    return detect_mixed(scan_corpus(registry, corpus));
}

PatternReport detect_enum(const ToggleRegistry& registry, const SourceCorpus& corpus,
                          const LanguageProfile&) {
    return detect_enum(scan_corpus(registry, corpus));
}

std::vector<PatternReport> run_detectors(const ToggleRegistry& registry,
                                         const SourceCorpus& corpus,
                                         const std::vector<Pattern>& patterns, unsigned jobs) {
    auto scan = scan_corpus(registry, corpus, jobs);
    std::vector<PatternReport> out;
    for (auto p : kAllPatterns) {
        if (std::find(patterns.begin(), patterns.end(), p) == patterns.end()) continue;
        switch (p) {
            case Pattern::Dead:
                out.push_back(detect_dead(registry, scan));
                break;
            case Pattern::Spread:
                out.push_back(detect_spread(registry, scan));
                break;
            case Pattern::Nested:
                out.push_back(detect_nested(scan));
                break;
            case Pattern::Mixed:
                out.push_back(detect_mixed(scan));
                break;
            case Pattern::Enum:
                out.push_back(detect_enum(scan));
                break;
        }
    }
    return out;
}

}  // namespace tsd
