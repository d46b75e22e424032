#include "fixture.hpp"

#include <fstream>
#include <stdexcept>

namespace tsd::oracle {

namespace {

std::vector<std::string> read_lines(const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) throw std::runtime_error("cannot read " + p.string());
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) out.push_back(line);
    }
    return out;
}

}  // namespace

Fixture load_fixture(const std::filesystem::path& dir) {
    Fixture fx;
    fx.dir = dir;
    for (const auto& line : read_lines(dir / "fixture.txt")) {
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto key = line.substr(0, eq);
        auto value = line.substr(eq + 1);
        if (key == "language") {
            auto lang = parse_language(value);
            if (!lang) throw std::runtime_error("bad language in " + dir.string());
            fx.language = *lang;
        } else if (key == "project") {
            fx.project = dir / value;
        } else if (key == "config") {
            fx.configs.push_back(dir / value);
        } else if (key == "pattern") {
            fx.patterns.push_back(value);
        }
    }
    fx.expected_registry = read_lines(dir / "expected_registry.txt");
    return fx;
}

OracleInput oracle_input(const Fixture& fx) {
    std::vector<std::string> excluded;
    for (const auto& c : fx.configs) {
        auto rel = std::filesystem::weakly_canonical(c).lexically_relative(
            std::filesystem::weakly_canonical(fx.project));
        if (!rel.empty() && *rel.begin() != "..") excluded.push_back(rel.generic_string());
    }
    OracleInput in;
    in.language = fx.language;
    in.files = load_tree(fx.project, fx.language, excluded);
    in.toggles = fx.expected_registry;
    return in;
}

}  // namespace tsd::oracle
