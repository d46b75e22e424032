#include "tsd/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tsd/corpus.hpp"
#include "tsd/detectors.hpp"
#include "tsd/error.hpp"
#include "tsd/evalharness.hpp"
#include "tsd/profiles.hpp"
#include "tsd/toggles.hpp"

namespace fs = std::filesystem;

namespace tsd {

namespace {

constexpr const char* kValidPatterns = "dead|spread|nested|mixed|enum|all";
constexpr const char* kValidLanguages = "c|c++|python|java|go|csharp";

std::vector<std::string> split_names(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
    }
    return out;
}

}  // namespace

Invocation parse_command_line(const std::vector<std::string>& args) {
    CLI::App app{"Detects feature toggle usage patterns in source trees.", "tsd"};
    app.set_version_flag("--version", "tsd 1.0.0");

    std::string project, out_path, pattern = "all", language, ignore, profile;
    std::vector<std::string> configs;
    bool raw = false, strict_names = false, strict = false;
    unsigned jobs = 1;
    app.add_option("-p,--project", project, "Project source code. Required.");
    app.add_option("-c,--config", configs, "Toggle configuration file. Required, repeatable.")
        ->allow_extra_args(false);
    app.add_option("-o,--output", out_path, "Output file. Standard output when omitted.");
    app.add_option("-t,--pattern", pattern, std::string("Toggle usage pattern: ") + kValidPatterns);
    app.add_option("-l,--language", language, std::string("Language of the project: ") + kValidLanguages);
    app.add_flag("--raw", raw, "Do not mask comments and string literals");
    app.add_flag("--strict-names", strict_names,
                 "Keep only toggle-like names (enable, disable, flag, toggle, feature, experiment, kName)");
    app.add_flag("--strict", strict, "Fail when no toggles survive filtering");
    app.add_option("--ignore", ignore,
                   "Comma-separated directory names to skip (replaces the default list)");
    app.add_option("--profile", profile, "Profile override file");
    app.add_option("-j,--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));

    auto* eval = app.add_subcommand("eval", "Score a report against ground-truth annotations");
    std::string report_path, truth_path, json_out;
    eval->add_option("--report", report_path, "Report JSON produced by tsd")->required();
    eval->add_option("--truth", truth_path, "Ground-truth annotation file")->required();
    eval->add_option("--json", json_out, "Also write the scores as JSON to this path");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        Invocation inv;
        inv.kind = Invocation::Kind::Help;
        inv.help = app.help();
        return inv;
    } catch (const CLI::CallForVersion&) {
        Invocation inv;
        inv.kind = Invocation::Kind::Help;
        inv.help = "tsd 1.0.0\n";
        return inv;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    Invocation inv;
    if (eval->parsed()) {
        inv.kind = Invocation::Kind::Eval;
        inv.eval.report_path = report_path;
        inv.eval.truth_path = truth_path;
        if (!json_out.empty()) inv.eval.json_out = json_out;
        return inv;
    }

    if (project.empty()) throw UsageError("missing required option -p/--project");
    if (configs.empty()) throw UsageError("missing required option -c/--config");
    auto& cfg = inv.run;
    cfg.project_path = project;
    for (const auto& c : configs) cfg.config_paths.emplace_back(c);
    if (!out_path.empty()) cfg.out_path = out_path;
    if (pattern == "all") {
        cfg.patterns.assign(kAllPatterns.begin(), kAllPatterns.end());
    } else if (auto p = parse_pattern(pattern)) {
        cfg.patterns = {*p};
    } else {
        throw UsageError("unknown pattern '" + pattern + "'; expected one of " + kValidPatterns);
    }
    if (!language.empty()) {
        cfg.language = parse_language(language);
        if (!cfg.language) {
            throw UsageError("unknown language '" + language + "'; expected one of " +
                             kValidLanguages);
        }
    }
    cfg.raw = raw;
    cfg.strict_names = strict_names;
    cfg.strict = strict;
    if (!ignore.empty()) cfg.ignore_dirs = split_names(ignore);
    if (!profile.empty()) cfg.profile_path = profile;
    cfg.jobs = jobs;
    return inv;
}

RunConfig parse_args(const std::vector<std::string>& args) {
    auto inv = parse_command_line(args);
    if (inv.kind != Invocation::Kind::Run) throw UsageError("not a scan invocation");
    return inv.run;
}

Document build_document(const RunConfig& config, std::ostream& err) {
    std::error_code ec;
    if (!fs::is_directory(config.project_path, ec)) {
        throw IoError("project path does not exist or is not a directory: " +
                      config.project_path.string());
    }

    auto ignore = config.ignore_dirs.value_or(default_ignore_dirs());
    if (const char* extra = std::getenv("TSD_IGNORE")) {
        for (auto& name : split_names(extra)) ignore.push_back(std::move(name));
    }

    ProfileSet profiles;
    if (config.profile_path) profiles = ProfileSet::load(*config.profile_path);

    Language lang = infer_language(config.project_path, config.language, ignore);
    const auto& profile = profiles.get(lang);

    WalkOptions walk;
    walk.ignore_dirs = ignore;
    walk.raw = config.raw;
    walk.jobs = config.jobs;
    auto corpus = walk_corpus(config.project_path, lang, config.config_paths, walk);
    for (const auto& d : corpus.diagnostics) err << "tsd: warning: " << d << '\n';

    ToggleRegistry registry;
    FilterOptions filter;
    filter.strict_names = config.strict_names;
    try {
        registry = load_registry(config.config_paths, profile, filter);
    } catch (const EmptyRegistry& e) {
        if (config.strict) throw;
        err << "tsd: advisory: no toggles found in the configuration file(s); "
               "check the -c path. Reports will be empty.\n";
        registry = e.registry();
    }

    auto scan = scan_corpus(registry, corpus, config.jobs);
    for (const auto& f : scan.files) {
        for (const auto& w : f.warnings) err << "tsd: warning: " << w << '\n';
    }

    std::vector<PatternReport> reports;
    for (auto p : kAllPatterns) {
        if (std::find(config.patterns.begin(), config.patterns.end(), p) == config.patterns.end())
            continue;
        switch (p) {
            case Pattern::Dead:
                reports.push_back(detect_dead(registry, scan));
                break;
            case Pattern::Spread:
                reports.push_back(detect_spread(registry, scan));
                break;
            case Pattern::Nested:
                reports.push_back(detect_nested(scan));
                break;
            case Pattern::Mixed:
                if (profile.has_preproc) {
                    reports.push_back(detect_mixed(scan));
                } else {
                    PatternReport empty;
                    empty.pattern = Pattern::Mixed;
                    reports.push_back(empty);
                }
                break;
            case Pattern::Enum:
                reports.push_back(detect_enum(scan));
                break;
        }
    }

    std::vector<std::string> problems;
    for (const auto& r : reports) {
        auto v = check_invariants(r);
        problems.insert(problems.end(), v.begin(), v.end());
    }
    if (!problems.empty()) {
        std::string msg = "report invariant violated:";
        for (const auto& p : problems) msg += "\n  " + p;
        throw std::logic_error(msg);
    }
    return assemble(reports);
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        auto doc = build_document(config, err);
        if (config.out_path) {
            write(doc, config.out_path);
        } else {
            out << serialize(doc);
            out.flush();
        }
        return kExitOk;
    } catch (const EmptyRegistry& e) {
        err << "tsd: error: " << e.what() << '\n';
        return kExitIo;
    } catch (const IoError& e) {
        err << "tsd: error: " << e.what() << '\n';
        return kExitIo;
    } catch (const NoRecognizedFiles& e) {
        err << "tsd: error: " << e.what() << '\n';
        return kExitIo;
    } catch (const FormatError& e) {
        err << "tsd: error: profile file: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "tsd: internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}

int run_eval(const EvalConfig& config, std::ostream& out, std::ostream& err) {
    Document report;
    try {
        std::ifstream in(config.report_path);
        if (!in) throw IoError("cannot open report " + config.report_path.string());
        try {
            report = Document::parse(in);
        } catch (const nlohmann::json::parse_error& e) {
            throw FormatError(1, std::string("report is not valid JSON: ") + e.what());
        }
        auto truth = load_ground_truth(config.truth_path);
        auto result = score(report, truth);
        auto json = to_json(result);
        out << format_table(result) << '\n' << serialize(json);
        if (config.json_out) write(json, config.json_out);
        return kExitOk;
    } catch (const IoError& e) {
        err << "tsd eval: error: " << e.what() << '\n';
        return kExitIo;
    } catch (const FormatError& e) {
        err << "tsd eval: error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "tsd eval: internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Invocation inv;
    try {
        inv = parse_command_line(args);
    } catch (const UsageError& e) {
        err << "tsd: " << e.what() << "\nRun with --help for usage.\n";
        return kExitUsage;
    }
    switch (inv.kind) {
        case Invocation::Kind::Help:
            out << inv.help;
            return kExitOk;
        case Invocation::Kind::Eval:
            return run_eval(inv.eval, out, err);
        case Invocation::Kind::Run:
            break;
    }
    return run(inv.run, out, err);
}

}  // namespace tsd
