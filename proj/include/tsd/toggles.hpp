#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tsd/error.hpp"
#include "tsd/profiles.hpp"

namespace tsd {

inline constexpr std::size_t kDefaultMinNameLength = 4;

struct Rejection {
    std::string identifier;
    std::string reason;  // keyword, duplicate, too-short, invalid, not-toggle-like

    bool operator==(const Rejection&) const = default;
};

struct ToggleRegistry {
    std::vector<std::string> toggles;  // first-appearance order
    std::vector<std::string> source_config;
    std::vector<Rejection> rejected;

    bool contains(std::string_view name) const;
    std::size_t size() const { return toggles.size(); }
    bool empty() const { return toggles.empty(); }
};

class EmptyRegistry : public Error {
   public:
    explicit EmptyRegistry(ToggleRegistry registry)
        : Error("no toggles survived filtering; check the configuration path"),
          registry_(std::move(registry)) {}

    const ToggleRegistry& registry() const { return registry_; }

   private:
    ToggleRegistry registry_;
};

struct FilterOptions {
    std::size_t min_name_length = kDefaultMinNameLength;
    bool strict_names = false;
};

/// Every identifier captured by the profile's declaration patterns, in order
/// of appearance. Duplicates are kept; filtering removes them.
std::vector<std::string> extract_toggles(std::string_view config_content,
                                         const LanguageProfile& profile);

/// Throws EmptyRegistry when nothing survives.
ToggleRegistry filter_toggles(const std::vector<std::string>& candidates,
                              const LanguageProfile& profile, const FilterOptions& options = {});

bool looks_like_toggle_name(std::string_view name);

/// Reads each configuration file, extracts and filters the union of their
/// candidates. Throws IoError for unreadable files and EmptyRegistry as above.
ToggleRegistry load_registry(const std::vector<std::filesystem::path>& config_paths,
                             const LanguageProfile& profile, const FilterOptions& options = {});

}  // namespace tsd
