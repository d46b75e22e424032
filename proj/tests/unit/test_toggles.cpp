#include <doctest.h>

#include "helpers.hpp"
#include "tsd/error.hpp"
#include "tsd/toggles.hpp"

using namespace tsd;
using testutil::TempDir;

using Names = std::vector<std::string>;

TEST_CASE("extract_toggles from a Python config") {
    auto got = extract_toggles("ENABLE_SEARCH = True\nMAX_RETRIES = 5\n", default_profile(Language::Python));
    CHECK(got == Names{"ENABLE_SEARCH", "MAX_RETRIES"});
}

TEST_CASE("extract_toggles on empty content") {
    for (auto lang : kAllLanguages) CHECK(extract_toggles("", default_profile(lang)).empty());
}

TEST_CASE("extract_toggles from a JSON-style key") {
    auto got = extract_toggles("\"workflowExecutionAlreadyCompletedErrorEnabled\": false",
                               default_profile(Language::Go));
    CHECK(got == Names{"workflowExecutionAlreadyCompletedErrorEnabled"});
}

TEST_CASE("extract_toggles declaration forms") {
    SUBCASE("Go struct fields and var declarations") {
        auto got = extract_toggles(
            "type Flags struct {\n\tEnableRead bool\n\tEnableWrite *bool\n}\nvar enableX = true\n",
            default_profile(Language::Go));
        CHECK(got == Names{"EnableRead", "EnableWrite", "enableX"});
    }
    SUBCASE("C defines and kName constants") {
        const auto& c = default_profile(Language::C);
        auto got = extract_toggles("#define ENABLE_GPU 1\nconst bool kEnableFoo = true;\n", c);
        CHECK(got == Names{"ENABLE_GPU", "const", "kEnableFoo"});
        CHECK(filter_toggles(got, c).toggles == Names{"ENABLE_GPU", "kEnableFoo"});
    }
    SUBCASE("Java static finals") {
        auto got = extract_toggles("public static final boolean ENABLE_CACHE = false;\n",
                                   default_profile(Language::Java));
        CHECK(got == Names{"ENABLE_CACHE"});
    }
    SUBCASE("YAML keys") {
        auto got = extract_toggles("features:\n  enable_search: true\n", default_profile(Language::Python));
        CHECK(got == Names{"features", "enable_search"});
    }
    SUBCASE("enum-style bare names") {
        auto got = extract_toggles("  FEATURE_A,\n  FEATURE_B\n", default_profile(Language::CSharp));
        CHECK(got == Names{"FEATURE_A", "FEATURE_B"});
    }
}

TEST_CASE("filter_toggles applies each rule") {
    auto reg = filter_toggles({"if", "ENABLE_X", "ENABLE_X", "ab"}, default_profile(Language::Go));
    CHECK(reg.toggles == Names{"ENABLE_X"});
    REQUIRE(reg.rejected.size() == 3);
    CHECK(reg.rejected[0] == Rejection{"if", "keyword"});
    CHECK(reg.rejected[1] == Rejection{"ENABLE_X", "duplicate"});
    CHECK(reg.rejected[2] == Rejection{"ab", "too-short"});
}

TEST_CASE("filter_toggles strict names") {
    const auto& py = default_profile(Language::Python);
    FilterOptions strict;
    strict.strict_names = true;
    CHECK(filter_toggles({"MAX_RETRIES", "ENABLE_SEARCH"}, py, strict).toggles == Names{"ENABLE_SEARCH"});
    CHECK(filter_toggles({"MAX_RETRIES", "ENABLE_SEARCH"}, py).toggles ==
          Names{"MAX_RETRIES", "ENABLE_SEARCH"});
    CHECK(filter_toggles({"kUseGpu", "UseGpu"}, py, strict).toggles == Names{"kUseGpu"});
}

TEST_CASE("filter_toggles rejects invalid identifiers") {
    auto reg = filter_toggles({"a.b.c", "9lives", "GOOD_NAME"}, default_profile(Language::C));
    CHECK(reg.toggles == Names{"GOOD_NAME"});
    CHECK(reg.rejected.size() == 2);
    CHECK(reg.rejected[0].reason == "invalid");
}

TEST_CASE("filter_toggles raises EmptyRegistry") {
    try {
        filter_toggles({"if", "ab"}, default_profile(Language::Go));
        FAIL("expected EmptyRegistry");
    } catch (const EmptyRegistry& e) {
        CHECK(e.registry().empty());
        CHECK(e.registry().rejected.size() == 2);
    }
    CHECK_THROWS_AS(filter_toggles({}, default_profile(Language::Go)), EmptyRegistry);
}

TEST_CASE("filter_toggles is idempotent and accounts for every candidate") {
    Names in{"ENABLE_A", "x", "ENABLE_A", "while", "featureB", "ENABLE_A", "featureB"};
    const auto& java = default_profile(Language::Java);
    auto reg = filter_toggles(in, java);
    CHECK(reg.toggles.size() + reg.rejected.size() == in.size());
    CHECK(filter_toggles(reg.toggles, java).toggles == reg.toggles);
}

TEST_CASE("load_registry unions several configs") {
    TempDir d;
    auto a = d.write("a.py", "ENABLE_A = True\nENABLE_B = False\n");
    auto b = d.write("b.py", "ENABLE_B = True\nENABLE_C = 1\n");
    auto reg = load_registry({a, b}, default_profile(Language::Python));
    CHECK(reg.toggles == Names{"ENABLE_A", "ENABLE_B", "ENABLE_C"});
    CHECK(reg.source_config.size() == 2);
}

TEST_CASE("load_registry errors") {
    CHECK_THROWS_AS(load_registry({"/nonexistent/cfg.py"}, default_profile(Language::Python)), IoError);
    TempDir d;
    auto empty = d.write("empty.py", "");
    try {
        load_registry({empty}, default_profile(Language::Python));
        FAIL("expected EmptyRegistry");
    } catch (const EmptyRegistry& e) {
        CHECK(e.registry().source_config.size() == 1);
    }
}
