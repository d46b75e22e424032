#pragma once

// Fixture directories hold fixture.txt (language, project, config keys),
// expected_registry.txt (one toggle per line) and expected.json.

#include <filesystem>
#include <string>
#include <vector>

#include "brute_force.hpp"

namespace tsd::oracle {

struct Fixture {
    std::filesystem::path dir;
    Language language = Language::C;
    std::filesystem::path project;
    std::vector<std::filesystem::path> configs;
    std::vector<std::string> expected_registry;
    std::vector<std::string> patterns;  // empty means all
};

Fixture load_fixture(const std::filesystem::path& dir);

/// Oracle input built from the fixture tree and its expected registry.
OracleInput oracle_input(const Fixture& fx);

}  // namespace tsd::oracle
