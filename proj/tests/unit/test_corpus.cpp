#include <doctest.h>

#include "helpers.hpp"
#include "tsd/corpus.hpp"
#include "tsd/detectors.hpp"
#include "tsd/error.hpp"

using namespace tsd;
using testutil::TempDir;

TEST_CASE("infer_language picks the most common extension") {
    TempDir d;
    d.write("a.go", "package a\n");
    d.write("b.go", "package a\n");
    d.write("sub/c.go", "package sub\n");
    d.write("README.md", "# readme\n");
    CHECK(infer_language(d.path()) == Language::Go);
}

TEST_CASE("infer_language breaks ties by enum order") {
    TempDir d;
    d.write("a.c", "");
    d.write("b.c", "");
    d.write("x.cc", "");
    d.write("y.cc", "");
    CHECK(infer_language(d.path()) == Language::C);
}

TEST_CASE("infer_language honours the override") {
    TempDir d;
    d.write("a.py", "");
    for (int i = 0; i < 3; ++i) d.write("J" + std::to_string(i) + ".java", "");
    CHECK(infer_language(d.path()) == Language::Java);
    CHECK(infer_language(d.path(), Language::Python) == Language::Python);
}

TEST_CASE("infer_language without recognizable files") {
    TempDir d;
    d.write("notes.txt", "x");
    CHECK_THROWS_AS(infer_language(d.path()), NoRecognizedFiles);
    TempDir empty;
    CHECK(infer_language(empty.path(), Language::Go) == Language::Go);
}

TEST_CASE("walk_corpus on an empty directory") {
    TempDir d;
    auto corpus = walk_corpus(d.path(), Language::Go, {});
    CHECK(corpus.files.empty());
}

TEST_CASE("walk_corpus skips hidden and vendored directories") {
    TempDir d;
    d.write("a/b.go", "package a\n");
    d.write("a/.git/c.go", "package git\n");
    d.write("vendor/d.go", "package vendor\n");
    d.write("a/e.py", "x = 1\n");
    auto corpus = walk_corpus(d.path(), Language::Go, {});
    REQUIRE(corpus.files.size() == 1);
    CHECK(corpus.files[0].path == "a/b.go");
    CHECK(corpus.files[0].language == Language::Go);
}

TEST_CASE("walk_corpus excludes configuration files inside the tree") {
    TempDir d;
    d.write("main.go", "package main\n");
    auto cfg = d.write("toggles.go", "package main\n");
    auto corpus = walk_corpus(d.path(), Language::Go, {cfg});
    REQUIRE(corpus.files.size() == 1);
    CHECK(corpus.files[0].path == "main.go");
}

TEST_CASE("walk_corpus for C pulls in C++ sources and sorts by path") {
    TempDir d;
    d.write("z.c", "");
    d.write("m/a.hpp", "");
    d.write("b.h", "");
    d.write("skip.py", "");
    auto corpus = walk_corpus(d.path(), Language::C, {});
    REQUIRE(corpus.files.size() == 3);
    CHECK(corpus.files[0].path == "b.h");
    CHECK(corpus.files[1].path == "m/a.hpp");
    CHECK(corpus.files[1].language == Language::Cpp);
    CHECK(corpus.files[2].path == "z.c");
}

TEST_CASE("walk_corpus ignore list is configurable") {
    TempDir d;
    d.write("gen/a.go", "");
    d.write("vendor/b.go", "");
    WalkOptions opts;
    opts.ignore_dirs = {"gen"};
    auto corpus = walk_corpus(d.path(), Language::Go, {}, opts);
    REQUIRE(corpus.files.size() == 1);
    CHECK(corpus.files[0].path == "vendor/b.go");
}

TEST_CASE("walk_corpus on a missing root") {
    CHECK_THROWS_AS(walk_corpus("/nonexistent/tsd/root", Language::Go, {}), IoError);
}

TEST_CASE("walk_corpus is deterministic across job counts") {
    TempDir d;
    for (int i = 0; i < 20; ++i) d.write("p" + std::to_string(i % 3) + "/f" + std::to_string(i) + ".go", "package p\n");
    WalkOptions one, many;
    many.jobs = 4;
    auto a = walk_corpus(d.path(), Language::Go, {}, one);
    auto b = walk_corpus(d.path(), Language::Go, {}, many);
    REQUIRE(a.files.size() == b.files.size());
    for (std::size_t i = 0; i < a.files.size(); ++i) CHECK(a.files[i].path == b.files[i].path);
}

TEST_CASE("walk_corpus decodes invalid UTF-8 lossily") {
    TempDir d;
    d.write("a.go", std::string("package a\n// \xff\n"));
    auto corpus = walk_corpus(d.path(), Language::Go, {});
    REQUIRE(corpus.files.size() == 1);
    CHECK(corpus.files[0].raw.find("\xEF\xBF\xBD") != std::string::npos);
}

TEST_CASE("mask blanks a Go line comment") {
    std::string in = "x = 1 // enableFoo\ny = 2\n";
    auto out = mask(in, Language::Go);
    CHECK(out == "x = 1 " + std::string(12, ' ') + "\ny = 2\n");
}

TEST_CASE("mask hides toggle names inside strings") {
    auto file = make_source_file("a.go", Language::Go, "s := \"enableFoo\"\n");
    CHECK(file.masked == "s :=            \n");
    CHECK(find_occurrences("enableFoo", file).empty());
}

TEST_CASE("mask keeps preprocessor lines") {
    std::string in = "#ifdef ENABLE_FOO\nint x; /* ENABLE_FOO */\n#endif\n";
    auto out = mask(in, Language::C);
    CHECK(out == "#ifdef ENABLE_FOO\nint x;                 \n#endif\n");
}

TEST_CASE("mask handles language-specific literals") {
    CHECK(mask("s = `a\nb`\n", Language::Go) == "s =   \n  \n");
    CHECK(mask("x = '''a\nb'''\n# c\n", Language::Python) == "x =     \n    \n   \n");
    CHECK(mask("var s = @\"a\"\"b\";\n", Language::CSharp) == "var s =        ;\n");
    CHECK(mask("auto s = R\"x(a\")x\";\n", Language::Cpp) == "auto s = R        ;\n");
    CHECK(mask("int n = 1'000'000;\n", Language::Cpp) == "int n = 1'000'000;\n");
    CHECK(mask("char c = '\\'';\n", Language::C) == "char c =     ;\n");
}

TEST_CASE("mask of an unterminated region runs to end of file") {
    CHECK(mask("a /* b\nc\n", Language::Java) == "a     \n \n");
    CHECK(mask("s = \"abc", Language::Go) == "s =     ");
}

TEST_CASE("mask preserves length and newlines and is idempotent") {
    std::string in = "a // x\n/* y\n z */ \"q\\\"r\" 'c'\n";
    for (auto lang : kAllLanguages) {
        auto once = mask(in, lang);
        CHECK(once.size() == in.size());
        CHECK(compute_line_index(once) == compute_line_index(in));
        CHECK(mask(once, lang) == once);
    }
}

TEST_CASE("line index and line_of") {
    auto f = make_source_file("a.c", Language::C, "ab\ncd\n\nef");
    CHECK(f.line_index == std::vector<std::size_t>{0, 3, 6, 7});
    CHECK(f.line_of(0) == 1);
    CHECK(f.line_of(4) == 2);
    CHECK(f.line_of(7) == 4);
}

TEST_CASE("raw mode leaves content unmasked") {
    auto f = make_source_file("a.go", Language::Go, "s := \"enableFoo\"\n", true);
    CHECK(f.masked == f.raw);
    CHECK(find_occurrences("enableFoo", f).size() == 1);
}
