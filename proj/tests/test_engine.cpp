#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "parmatch/engine.hpp"
#include "parmatch/errors.hpp"

using namespace parmatch;

namespace {
const std::string kBorderText = "EXACT STRINGS MATCHING";
}

TEST_SUITE("engine") {

TEST_CASE("a border-spanning occurrence is found once, by the left chunk") {
    const Text t = Text::fromString(kBorderText);
    const Pattern p("INGS");

    const RunResult result = run(t, p, 2, Algo::Quick);
    CHECK(result.totalCount == 1);
    REQUIRE(result.perChunk.size() == 2);
    CHECK(result.perChunk[0].count == 1);
    CHECK(result.perChunk[1].count == 0);

    RunOptions withOffsets;
    withOffsets.workers = 2;
    withOffsets.wantOffsets = true;
    const RunResult offsets = run(t, p, withOffsets);
    CHECK(offsets.collectOffsets() == std::vector<Offset>{9});
}

TEST_CASE("disabling the extension reproduces the boundary miss") {
    const Text t = Text::fromString(kBorderText);
    const Pattern p("INGS");
    RunOptions options;
    options.workers = 2;
    options.borderExtension = BorderExtension::Disabled;
    CHECK(run(t, p, options).totalCount == 0);
}

TEST_CASE("one worker degenerates to the sequential scan") {
    std::mt19937_64 rng(5);
    const Text t = Text::fromString(testutil::randomBytes(rng, 5000, 4));
    const Pattern p("abda");
    const auto naiveCount = searchNaive(p, t, 0, t.size()).size();
    CHECK(run(t, p, 1, Algo::Quick).totalCount == naiveCount);
    CHECK(runSequential(t, p, Algo::Quick).totalCount == naiveCount);
}

TEST_CASE("counts are invariant across worker counts and algorithms") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        const unsigned alphabet = trial % 2 == 0 ? 2u : 26u;
        const std::string text = testutil::randomBytes(rng, rng() % 4000, alphabet);
        const std::string patternBytes = testutil::randomPattern(
            rng, text, 1 + rng() % 10, alphabet);
        const Text t = Text::fromString(text);
        const Pattern p(patternBytes);
        const auto expected = searchNaive(p, t, 0, t.size());

        for (const Algo algo : {Algo::Quick, Algo::Horspool, Algo::BoyerMoore}) {
            for (const std::size_t workers : {1u, 2u, 3u, 7u, 16u}) {
                const RunResult result = run(t, p, workers, algo, /*wantOffsets=*/true);
                CHECK(result.totalCount == expected.size());
                CHECK(result.collectOffsets() == expected);
                for (const MatchReport& report : result.perChunk) {
                    REQUIRE(report.offsets.has_value());
                    CHECK(report.count == report.offsets->size());
                    CHECK(report.elapsed.count() >= 0);
                }
            }
        }
    }
}

TEST_CASE("sequential runs match the parallel totals on a bigger corpus") {
    std::mt19937_64 rng(29);
    const Text t = Text::fromString(testutil::randomBytes(rng, 1 << 20, 256));
    const Pattern p("a");
    const auto baseline = runSequential(t, p, Algo::Quick).totalCount;
    for (const std::size_t workers : {2u, 4u, 8u}) {
        CHECK(run(t, p, workers, Algo::Quick).totalCount == baseline);
    }
}

TEST_CASE("sequential worked examples") {
    CHECK(runSequential(Text::fromString("banana"), Pattern("a"), Algo::Naive).totalCount == 3);
    CHECK(runSequential(Text::fromString(kBorderText), Pattern("INGS"), Algo::Quick).totalCount ==
          1);
}

TEST_CASE("aggregation is order independent") {
    std::mt19937_64 rng(31);
    const Text t = Text::fromString(testutil::randomBytes(rng, 3000, 2));
    const Pattern p("aba");
    const RunResult result = run(t, p, 8, Algo::Horspool);

    auto shuffled = result.perChunk;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const auto resummed =
        std::accumulate(shuffled.begin(), shuffled.end(), std::uint64_t{0},
                        [](std::uint64_t acc, const MatchReport& r) { return acc + r.count; });
    CHECK(resummed == result.totalCount);
}

TEST_CASE("degenerate inputs are safe") {
    const Pattern p("abc");
    CHECK(run(Text::fromString(""), p, 4, Algo::Quick).totalCount == 0);
    CHECK(run(Text::fromString("ab"), p, 5, Algo::BoyerMoore).totalCount == 0);  // m > n
    CHECK(run(Text::fromString("xy"), p, 8, Algo::Quick).perChunk.size() == 8);  // p > n
}

TEST_CASE("invalid options are rejected") {
    const Text t = Text::fromString("abc");
    const Pattern p("a");
    RunOptions options;
    options.workers = 0;
    CHECK_THROWS_AS(run(t, p, options), InvalidArgsError);
    CHECK_THROWS_AS(run(t, p, 1, Algo::Quick).collectOffsets(), InvalidArgsError);
}

}  // TEST_SUITE
