#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tsd/language.hpp"
#include "tsd/report.hpp"

namespace tsd {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitIo = 2,
    kExitInternal = 3,
};

struct RunConfig {
    std::filesystem::path project_path;
    std::vector<std::filesystem::path> config_paths;
    std::optional<std::filesystem::path> out_path;
    std::vector<Pattern> patterns;  // never empty after parsing
    std::optional<Language> language;
    bool raw = false;
    bool strict_names = false;
    bool strict = false;  // empty registry is an error
    std::optional<std::vector<std::string>> ignore_dirs;  // replaces the defaults
    std::optional<std::filesystem::path> profile_path;
    unsigned jobs = 1;
};

struct EvalConfig {
    std::filesystem::path report_path;
    std::filesystem::path truth_path;
    std::optional<std::filesystem::path> json_out;
};

struct Invocation {
    enum class Kind { Run, Eval, Help };
    Kind kind = Kind::Run;
    RunConfig run;
    EvalConfig eval;
    std::string help;
};

/// `args` excludes the program name. Throws UsageError.
Invocation parse_command_line(const std::vector<std::string>& args);

/// Convenience for the scan command; throws UsageError for anything else.
RunConfig parse_args(const std::vector<std::string>& args);

/// Builds the report document. Diagnostics go to `err`. Throws IoError,
/// NoRecognizedFiles and EmptyRegistry (the latter only under `strict`).
Document build_document(const RunConfig& config, std::ostream& err);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_eval(const EvalConfig& config, std::ostream& out, std::ostream& err);

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tsd
