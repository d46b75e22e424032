#include "tsd/toggles.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "tsd/corpus.hpp"

namespace tsd {

namespace {

const std::regex& identifier_grammar() {
    static const std::regex re(R"([A-Za-z_][A-Za-z0-9_]*)");
    return re;
}

std::string lowercase(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

}  // namespace

bool ToggleRegistry::contains(std::string_view name) const {
    return std::find(toggles.begin(), toggles.end(), name) != toggles.end();
}

std::vector<std::string> extract_toggles(std::string_view config_content,
                                         const LanguageProfile& profile) {
    std::vector<std::regex> patterns;
    patterns.reserve(profile.extraction_patterns.size());
    for (const auto& p : profile.extraction_patterns) patterns.emplace_back(p);

    // (offset, identifier); one capture per offset even when several patterns agree
    std::map<std::size_t, std::string> captures;
    std::size_t line_start = 0;
    while (line_start <= config_content.size()) {
        auto nl = config_content.find('\n', line_start);
        std::size_t line_end = nl == std::string_view::npos ? config_content.size() : nl;
        std::string line(config_content.substr(line_start, line_end - line_start));
        if (!line.empty() && line.back() == '\r') line.pop_back();
        for (const auto& re : patterns) {
            for (auto it = std::sregex_iterator(line.begin(), line.end(), re);
                 it != std::sregex_iterator(); ++it) {
                const auto& m = *it;
                if (m.size() < 2 || !m[1].matched) continue;
                captures.emplace(line_start + static_cast<std::size_t>(m.position(1)), m[1].str());
            }
        }
        if (nl == std::string_view::npos) break;
        line_start = nl + 1;
    }

    std::vector<std::string> out;
    out.reserve(captures.size());
    for (auto& [offset, name] : captures) out.push_back(std::move(name));
    return out;
}

bool looks_like_toggle_name(std::string_view name) {
    if (name.size() >= 2 && name[0] == 'k' && name[1] >= 'A' && name[1] <= 'Z') return true;
    auto lower = lowercase(name);
    for (const char* word : {"enable", "disable", "flag", "toggle", "feature", "experiment"}) {
        if (lower.find(word) != std::string::npos) return true;
    }
    return false;
}

ToggleRegistry filter_toggles(const std::vector<std::string>& candidates,
                              const LanguageProfile& profile, const FilterOptions& options) {
    ToggleRegistry reg;
    std::set<std::string> seen;
    for (const auto& name : candidates) {
        if (!seen.insert(name).second) {
            reg.rejected.push_back({name, "duplicate"});
        } else if (!std::regex_match(name, identifier_grammar())) {
            reg.rejected.push_back({name, "invalid"});
        } else if (profile.keywords.count(name)) {
            reg.rejected.push_back({name, "keyword"});
        } else if (name.size() < options.min_name_length) {
            reg.rejected.push_back({name, "too-short"});
        } else if (options.strict_names && !looks_like_toggle_name(name)) {
            reg.rejected.push_back({name, "not-toggle-like"});
        } else {
            reg.toggles.push_back(name);
        }
    }
    if (reg.toggles.empty()) throw EmptyRegistry(std::move(reg));
    return reg;
}

ToggleRegistry load_registry(const std::vector<std::filesystem::path>& config_paths,
                             const LanguageProfile& profile, const FilterOptions& options) {
    std::vector<std::string> candidates;
    std::vector<std::string> sources;
    for (const auto& path : config_paths) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw IoError("cannot open configuration file " + path.string());
        std::stringstream ss;
        ss << in.rdbuf();
        auto found = extract_toggles(decode_utf8_lossy(ss.str()), profile);
        candidates.insert(candidates.end(), found.begin(), found.end());
        sources.push_back(path.string());
    }
    try {
        auto reg = filter_toggles(candidates, profile, options);
        reg.source_config = sources;
        return reg;
    } catch (EmptyRegistry& e) {
        auto reg = e.registry();
        reg.source_config = sources;
        throw EmptyRegistry(std::move(reg));
    }
}

}  // namespace tsd
