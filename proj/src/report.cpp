#include "tsd/report.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>

#include "tsd/error.hpp"

namespace tsd {

namespace {

constexpr std::string_view kPathKey = "total_count_path";
constexpr std::string_view kTogglesKey = "total_count_toggles";
constexpr std::string_view kDeadListKey = "toggles";

}  // namespace

std::string_view to_string(Pattern p) {
    switch (p) {
        case Pattern::Dead:
            return "dead";
        case Pattern::Spread:
            return "spread";
        case Pattern::Nested:
            return "nested";
        case Pattern::Mixed:
            return "mixed";
        case Pattern::Enum:
            return "enum";
    }
    return "unknown";
}

std::optional<Pattern> parse_pattern(std::string_view name) {
    for (auto p : kAllPatterns) {
        if (to_string(p) == name) return p;
    }
    return std::nullopt;
}

std::string_view document_key(Pattern p) {
    switch (p) {
        case Pattern::Dead:
            return "Dead_Toggles";
        case Pattern::Spread:
            return "Spread_Toggles";
        case Pattern::Nested:
            return "Nested_Toggles";
        case Pattern::Mixed:
            return "Mixed_Toggles";
        case Pattern::Enum:
            return "Enum_Toggles";
    }
    return "";
}

void update_totals(PatternReport& report, std::size_t spread_files) {
    switch (report.pattern) {
        case Pattern::Dead:
            report.total_count_path = 0;
            report.total_count_toggles = report.toggles.size();
            break;
        case Pattern::Spread:
            report.total_count_path = spread_files;
            report.total_count_toggles = report.entries.size();
            break;
        default: {
            report.total_count_path = report.entries.size();
            std::size_t n = 0;
            for (const auto& [file, list] : report.entries) n += list.size();
            report.total_count_toggles = n;
        }
    }
}

std::vector<std::string> check_invariants(const PatternReport& r) {
    std::vector<std::string> problems;
    auto name = std::string(document_key(r.pattern));
    switch (r.pattern) {
        case Pattern::Dead:
            if (!r.entries.empty()) problems.push_back(name + ": dead report has entries");
            if (r.total_count_path != 0) problems.push_back(name + ": total_count_path != 0");
            if (r.total_count_toggles != r.toggles.size())
                problems.push_back(name + ": total_count_toggles != number of toggles");
            if (!std::is_sorted(r.toggles.begin(), r.toggles.end()) ||
                std::adjacent_find(r.toggles.begin(), r.toggles.end()) != r.toggles.end())
                problems.push_back(name + ": toggles not sorted and unique");
            break;
        case Pattern::Spread:
            if (r.total_count_toggles != r.entries.size())
                problems.push_back(name + ": total_count_toggles != number of toggles");
            for (const auto& [toggle, comps] : r.entries) {
                if (comps.size() < 2) problems.push_back(name + ": " + toggle + " has < 2 components");
                if (!std::is_sorted(comps.begin(), comps.end()))
                    problems.push_back(name + ": components of " + toggle + " not sorted");
            }
            if (r.entries.empty() != (r.total_count_path == 0))
                problems.push_back(name + ": total_count_path inconsistent with entries");
            break;
        default: {
            if (r.total_count_path != r.entries.size())
                problems.push_back(name + ": total_count_path != number of files");
            std::size_t n = 0;
            for (const auto& [file, list] : r.entries) {
                n += list.size();
                if (list.empty()) problems.push_back(name + ": empty list for " + file);
                if (r.pattern != Pattern::Nested && !std::is_sorted(list.begin(), list.end()))
                    problems.push_back(name + ": list for " + file + " not sorted");
            }
            if (r.total_count_toggles != n)
                problems.push_back(name + ": total_count_toggles != sum of list lengths");
        }
    }
    return problems;
}

Document assemble(const std::vector<PatternReport>& reports) {
    Document doc = Document::object();
    doc["schema"] = kSchemaVersion;
    for (const auto& r : reports) {
        std::string key(document_key(r.pattern));
        if (doc.contains(key)) throw DuplicatePattern("duplicate report for pattern " + key);
        Document body = Document::object();
        if (r.pattern == Pattern::Dead) {
            body[kDeadListKey] = r.toggles;
        } else {
            for (const auto& [k, list] : r.entries) body[k] = list;
        }
        body[kPathKey] = r.total_count_path;
        body[kTogglesKey] = r.total_count_toggles;
        doc[key] = std::move(body);
    }
    return doc;
}

std::vector<PatternReport> parse_document(const Document& doc) {
    if (!doc.is_object()) throw FormatError(1, "report document is not a JSON object");
    std::vector<PatternReport> out;
    for (auto p : kAllPatterns) {
        std::string key(document_key(p));
        if (!doc.contains(key)) continue;
        const auto& body = doc.at(key);
        if (!body.is_object()) throw FormatError(1, key + " is not an object");
        PatternReport r;
        r.pattern = p;
        try {
            for (const auto& [k, v] : body.items()) {
                if (k == kPathKey) {
                    r.total_count_path = v.get<std::size_t>();
                } else if (k == kTogglesKey) {
                    r.total_count_toggles = v.get<std::size_t>();
                } else if (p == Pattern::Dead && k == kDeadListKey) {
                    r.toggles = v.get<std::vector<std::string>>();
                } else {
                    r.entries[k] = v.get<std::vector<std::string>>();
                }
            }
        } catch (const nlohmann::json::exception& e) {
            throw FormatError(1, key + ": " + e.what());
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::string serialize(const Document& doc) {
    return doc.dump(2, ' ', false, nlohmann::json::error_handler_t::replace) + "\n";
}

void write(const Document& doc, const std::optional<std::filesystem::path>& out_path) {
    auto text = serialize(doc);
    if (!out_path) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(*out_path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write output file " + out_path->string());
    out << text;
    out.close();
    if (!out) throw IoError("failed writing output file " + out_path->string());
}

}  // namespace tsd
