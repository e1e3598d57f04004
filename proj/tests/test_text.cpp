#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "parmatch/errors.hpp"
#include "parmatch/text.hpp"

using namespace parmatch;
namespace fs = std::filesystem;

namespace {

struct TempFile {
    explicit TempFile(const std::string& content) {
        path = (fs::temp_directory_path() /
                ("parmatch_text_" + std::to_string(::getpid()) + "_" +
                 std::to_string(counter++)))
                   .string();
        std::ofstream out(path, std::ios::binary);
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
    }
    ~TempFile() { std::remove(path.c_str()); }
    std::string path;
    static inline int counter = 0;
};

}  // namespace

TEST_SUITE("text") {

TEST_CASE("in-memory text exposes bytes and views") {
    const Text t = Text::fromString("abc");
    CHECK(t.size() == 3);
    CHECK(t.at(0) == 'a');
    CHECK(t.at(2) == 'c');
    CHECK(t.view(0, 3) == "abc");
    CHECK(t.view(1, 2) == "b");
    CHECK(t.view(3, 3) == "");
    CHECK_THROWS_AS(t.at(3), RangeError);
    CHECK_THROWS_AS(t.view(2, 1), RangeError);
    CHECK_THROWS_AS(t.view(0, 4), RangeError);
}

TEST_CASE("empty text") {
    const Text t;
    CHECK(t.size() == 0);
    CHECK(t.view(0, 0).empty());
    CHECK_THROWS_AS(t.at(0), RangeError);
}

TEST_CASE("file reads and file mappings see identical bytes") {
    std::string content = "binary\0payload\xff with NULs";
    content += std::string(3000, 'z');
    const TempFile file(content);

    const Text read = Text::fromFile(file.path);
    const Text mapped = Text::mapFile(file.path);
    REQUIRE(read.size() == content.size());
    REQUIRE(mapped.size() == content.size());
    CHECK(read.view(0, read.size()) == content);
    CHECK(mapped.view(0, mapped.size()) == content);

    // load picks a backend by threshold; both must behave the same
    const Text small = Text::load(file.path, /*mmapThreshold=*/1 << 20);
    const Text big = Text::load(file.path, /*mmapThreshold=*/1);
    CHECK(small.view(0, small.size()) == content);
    CHECK(big.view(0, big.size()) == content);
}

TEST_CASE("empty file yields an empty text") {
    const TempFile file("");
    CHECK(Text::fromFile(file.path).size() == 0);
    CHECK(Text::mapFile(file.path).size() == 0);
}

TEST_CASE("missing files raise IoError naming the path") {
    const std::string missing = "/nonexistent/parmatch-missing.bin";
    try {
        Text::fromFile(missing);
        FAIL("expected IoError");
    } catch (const IoError& e) {
        CHECK(std::string(e.what()).find(missing) != std::string::npos);
    }
    CHECK_THROWS_AS(Text::mapFile(missing), IoError);
    CHECK_THROWS_AS(Text::load(missing), IoError);
}

TEST_CASE("copies share storage") {
    const Text a = Text::fromString("shared");
    const Text b = a;  // NOLINT: the aliasing is the point
    CHECK(a.data() == b.data());
}

}  // TEST_SUITE
