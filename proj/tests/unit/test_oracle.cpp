#include <doctest.h>

#include "oracle/brute_force.hpp"
#include "oracle/corpus_gen.hpp"
#include "tsd/corpus.hpp"
#include "tsd/detectors.hpp"
#include "tsd/report.hpp"

using namespace tsd;

namespace {

Document library_document(const oracle::OracleInput& in) {
    SourceCorpus corpus;
    corpus.language = in.language;
    for (const auto& f : in.files) {
        auto dot = f.path.rfind('.');
        auto lang = language_for_extension(f.path.substr(dot)).value();
        corpus.files.push_back(make_source_file(f.path, lang, f.content));
    }
    ToggleRegistry registry;
    registry.toggles = in.toggles;
    std::vector<Pattern> all(kAllPatterns.begin(), kAllPatterns.end());
    return assemble(run_detectors(registry, corpus, all));
}

}  // namespace

TEST_CASE("oracle agrees with the detectors on generated corpora") {
    for (auto lang : kAllLanguages) {
        for (std::uint64_t seed = 1; seed <= 60; ++seed) {
            auto in = oracle::generate_corpus(lang, seed);
            auto expected = oracle::brute_force_document(in, {kAllPatterns.begin(), kAllPatterns.end()});
            auto actual = library_document(in);
            if (expected != actual) {
                MESSAGE("language " << to_string(lang) << " seed " << seed);
                for (const auto& f : in.files) MESSAGE("== " << f.path << "\n" << f.content);
                MESSAGE("expected\n" << expected.dump(2) << "\nactual\n" << actual.dump(2));
            }
            REQUIRE(expected == actual);
        }
    }
}

TEST_CASE("generator is deterministic per seed") {
    auto a = oracle::generate_corpus(Language::Go, 42);
    auto b = oracle::generate_corpus(Language::Go, 42);
    REQUIRE(a.files.size() == b.files.size());
    for (std::size_t i = 0; i < a.files.size(); ++i) CHECK(a.files[i].content == b.files[i].content);
    CHECK(a.toggles == b.toggles);
}
