#include "tsd/evalharness.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "tsd/error.hpp"

namespace tsd {

namespace {

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        auto comma = line.find(',', start);
        fields.push_back(trim(std::string_view(line).substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return fields;
}

bool file_scoped(Pattern p) {
    return p == Pattern::Nested || p == Pattern::Mixed || p == Pattern::Enum;
}

// Identifier segments of a matched expression such as *a.b.Toggle.
std::vector<std::string> segments(std::string_view expr) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : expr) {
        if (c == '.' || c == '*') {
            if (!cur.empty()) out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

using Key = std::pair<std::string, std::string>;  // toggle, file

struct ToolItem {
    std::vector<std::string> candidates;  // possible toggle names, preferred last
    std::string file;
};

std::map<Pattern, std::vector<ToolItem>> tool_items(const Document& report) {
    std::map<Pattern, std::vector<ToolItem>> items;
    for (const auto& r : parse_document(report)) {
        auto& list = items[r.pattern];
        switch (r.pattern) {
            case Pattern::Dead:
                for (const auto& t : r.toggles) list.push_back({{t}, ""});
                break;
            case Pattern::Spread:
                for (const auto& [t, comps] : r.entries) list.push_back({{t}, ""});
                break;
            case Pattern::Nested:
                for (const auto& [file, exprs] : r.entries) {
                    for (const auto& e : exprs) {
                        auto segs = segments(e);
                        if (!segs.empty()) list.push_back({segs, file});
                    }
                }
                break;
            default:
                for (const auto& [file, toggles] : r.entries) {
                    for (const auto& t : toggles) list.push_back({{t}, file});
                }
        }
    }
    return items;
}

double ratio(std::size_t num, std::size_t den) {
    return den == 0 ? 1.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

GroundTruth parse_ground_truth(std::string_view text) {
    GroundTruth truth;
    std::set<TruthRecord> seen;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        auto t = trim(line);
        if (t.empty()) continue;
        if (t[0] == '#') {
            auto note = trim(std::string_view(t).substr(1));
            if (!note.empty()) {
                if (!truth.provenance.empty()) truth.provenance += '\n';
                truth.provenance += note;
            }
            continue;
        }
        auto fields = split_fields(t);
        if (!header_seen) {
            if (fields.size() != 3 || fields[0] != "pattern" || fields[1] != "toggle" ||
                fields[2] != "file") {
                throw FormatError(lineno, "expected header 'pattern,toggle,file'");
            }
            header_seen = true;
            continue;
        }
        if (fields.size() < 2 || fields.size() > 3) {
            throw FormatError(lineno, "expected 'pattern,toggle[,file]'");
        }
        auto pattern = parse_pattern(fields[0]);
        if (!pattern) throw FormatError(lineno, "unknown pattern '" + fields[0] + "'");
        if (fields[1].empty()) throw FormatError(lineno, "empty toggle name");
        TruthRecord rec{*pattern, fields[1], fields.size() == 3 ? fields[2] : ""};
        if (!seen.insert(rec).second) {
            throw FormatError(lineno, "duplicate record " + fields[0] + "," + rec.toggle +
                                          (rec.file.empty() ? "" : "," + rec.file));
        }
        truth.records.push_back(std::move(rec));
    }
    if (!header_seen) throw FormatError(lineno == 0 ? 1 : lineno, "missing header line");
    return truth;
}

GroundTruth load_ground_truth(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open ground truth file " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_ground_truth(ss.str());
}

EvalResult score(const Document& report, const GroundTruth& truth) {
    std::map<Pattern, std::set<Key>> truth_keys;
    std::map<Pattern, bool> truth_has_files;
    for (const auto& rec : truth.records) {
        bool with_file = file_scoped(rec.pattern) && !rec.file.empty();
        truth_keys[rec.pattern].insert({rec.toggle, with_file ? rec.file : ""});
        if (with_file) truth_has_files[rec.pattern] = true;
    }

    auto items = tool_items(report);
    EvalResult result;
    for (auto p : kAllPatterns) {
        const auto& expected = truth_keys[p];
        std::set<Key> found;
        for (const auto& item : items[p]) {
            if (!file_scoped(p)) {
                found.insert({item.candidates.back(), ""});
                continue;
            }
            // Prefer the last segment that the annotations name.
            std::string toggle = item.candidates.back();
            for (auto it = item.candidates.rbegin(); it != item.candidates.rend(); ++it) {
                if (expected.count({*it, item.file}) || expected.count({*it, ""})) {
                    toggle = *it;
                    break;
                }
            }
            if (expected.count({toggle, item.file})) {
                found.insert({toggle, item.file});
            } else if (expected.count({toggle, ""}) || !truth_has_files[p]) {
                found.insert({toggle, ""});
            } else {
                found.insert({toggle, item.file});
            }
        }

        PatternScore s;
        s.manual_count = expected.size();
        s.tool_count = found.size();
        for (const auto& k : found) {
            if (expected.count(k)) ++s.tp;
        }
        s.fp = s.tool_count - s.tp;
        s.fn = s.manual_count - s.tp;
        s.precision = ratio(s.tp, s.tool_count);
        s.recall = ratio(s.tp, s.manual_count);
        s.precision_defined = s.tool_count > 0;
        s.recall_defined = s.manual_count > 0;
        result.per_pattern[p] = s;
    }
    return result;
}

GroundTruth truth_from_report(const Document& report) {
    GroundTruth truth;
    truth.provenance = "derived from tool report";
    std::set<TruthRecord> seen;
    for (const auto& [pattern, list] : tool_items(report)) {
        for (const auto& item : list) {
            TruthRecord rec{pattern, item.candidates.back(), item.file};
            if (seen.insert(rec).second) truth.records.push_back(std::move(rec));
        }
    }
    return truth;
}

std::string format_table(const EvalResult& result) {
    std::ostringstream out;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-8s %8s %8s %6s %6s %6s %10s %8s\n", "pattern", "manual",
                  "tool", "TP", "FP", "FN", "precision", "recall");
    out << buf;
    for (const auto& [p, s] : result.per_pattern) {
        auto pct = [](double v, bool defined) {
            char b[32];
            std::snprintf(b, sizeof b, defined ? "%.1f%%" : "%.1f%%*", v * 100.0);
            return std::string(b);
        };
        std::snprintf(buf, sizeof buf, "%-8s %8zu %8zu %6zu %6zu %6zu %10s %8s\n",
                      std::string(to_string(p)).c_str(), s.manual_count, s.tool_count, s.tp,
                      s.fp, s.fn, pct(s.precision, s.precision_defined).c_str(),
                      pct(s.recall, s.recall_defined).c_str());
        out << buf;
    }
    out << "* empty denominator, defined as 100%\n";
    return out.str();
}

Document to_json(const EvalResult& result) {
    Document doc = Document::object();
    doc["schema"] = kSchemaVersion;
    for (const auto& [p, s] : result.per_pattern) {
        doc["patterns"][std::string(to_string(p))] = {
            {"manual_count", s.manual_count},
            {"tool_count", s.tool_count},
            {"tp", s.tp},
            {"fp", s.fp},
            {"fn", s.fn},
            {"precision", s.precision},
            {"recall", s.recall},
            {"precision_defined", s.precision_defined},
            {"recall_defined", s.recall_defined},
        };
    }
    return doc;
}

}  // namespace tsd
