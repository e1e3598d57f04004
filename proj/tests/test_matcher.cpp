#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "parmatch/errors.hpp"
#include "parmatch/matcher.hpp"

using namespace parmatch;

namespace {

const std::string kBorderText = "EXACT STRINGS MATCHING";

std::vector<Offset> offsets(std::initializer_list<Offset> init) { return {init}; }

}  // namespace

TEST_SUITE("matcher") {

TEST_CASE("compile INGS fills the quick shift table") {
    const Pattern p("INGS");
    CHECK(p.length() == 4);
    CHECK(p.quickShift('I') == 4);
    CHECK(p.quickShift('N') == 3);
    CHECK(p.quickShift('G') == 2);
    CHECK(p.quickShift('S') == 1);
    CHECK(p.quickShift('X') == 5);
    CHECK(p.quickShift('\0') == 5);

    CHECK(p.horspoolShift('I') == 3);
    CHECK(p.horspoolShift('N') == 2);
    CHECK(p.horspoolShift('G') == 1);
    CHECK(p.horspoolShift('S') == 4);  // only the final byte, so the default stands
    CHECK(p.horspoolShift('X') == 4);
}

TEST_CASE("compile single byte pattern") {
    const Pattern p("a");
    CHECK(p.length() == 1);
    CHECK(p.quickShift('a') == 1);
    CHECK(p.quickShift('b') == 2);
    for (int c = 0; c < 256; ++c) {
        CHECK(p.horspoolShift(static_cast<unsigned char>(c)) == 1);
    }
    CHECK(p.goodSuffixShift(0) == 1);
    CHECK(p.goodSuffixShift(1) == 1);
}

TEST_CASE("compile rejects empty and oversized patterns") {
    CHECK_THROWS_AS(Pattern(""), EmptyPatternError);
    CHECK_THROWS_AS(Pattern(std::string(65537, 'x')), PatternTooLongError);
    CHECK_THROWS_AS(Pattern("abcd", 3), PatternTooLongError);
    CHECK_NOTHROW(Pattern(std::string(65536, 'x')));
}

TEST_CASE("shift table entries stay inside their documented ranges") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const unsigned alphabet = trial % 2 == 0 ? 4u : 256u;
        const std::size_t m = 1 + rng() % 48;
        const Pattern p(testutil::randomBytes(rng, m, alphabet));
        for (int c = 0; c < 256; ++c) {
            const auto b = static_cast<unsigned char>(c);
            CHECK(p.quickShift(b) >= 1);
            CHECK(p.quickShift(b) <= m + 1);
            CHECK(p.horspoolShift(b) >= 1);
            CHECK(p.horspoolShift(b) <= m);
        }
        for (std::size_t k = 0; k <= m; ++k) {
            CHECK(p.goodSuffixShift(k) >= 1);
            CHECK(p.goodSuffixShift(k) <= m);
        }
        CHECK_THROWS_AS(p.goodSuffixShift(m + 1), RangeError);
    }
}

TEST_CASE("naive search finds overlapping occurrences exhaustively") {
    const Text t = Text::fromString("aaaa");
    CHECK(searchNaive(Pattern("aa"), t, 0, 4) == offsets({0, 1, 2}));

    const Text border = Text::fromString(kBorderText);
    CHECK(searchNaive(Pattern("INGS"), border, 0, border.size()) == offsets({9}));
    CHECK(searchNaive(Pattern("xyz"), border, 0, border.size()).empty());
}

TEST_CASE("quick search matches the worked examples") {
    const Text part = Text::fromString("EXACT STRINGS");
    CHECK(searchQuick(Pattern("INGS"), part, 0, 13) == offsets({9}));

    const Text t = Text::fromString("aaaaab");
    CHECK(searchQuick(Pattern("ab"), t, 0, 6) == offsets({4}));
}

TEST_CASE("horspool and boyer-moore match the worked examples") {
    const Text border = Text::fromString(kBorderText);
    CHECK(searchHorspool(Pattern("INGS"), border, 0, border.size()) == offsets({9}));
    CHECK(searchBoyerMoore(Pattern("INGS"), border, 0, border.size()) == offsets({9}));

    const Text abc = Text::fromString("abc");
    CHECK(searchHorspool(Pattern("abc"), abc, 0, 3) == offsets({0}));
    CHECK(searchBoyerMoore(Pattern("abc"), abc, 0, 3) == offsets({0}));
}

TEST_CASE("all matchers agree with the naive oracle on random inputs") {
    std::mt19937_64 rng(42);
    const unsigned alphabets[] = {2, 4, 26, 256};
    for (int trial = 0; trial < 600; ++trial) {
        const unsigned alphabet = alphabets[trial % 4];
        const std::size_t n = rng() % 2000;
        const std::size_t m = 1 + rng() % 64;
        const std::string text = testutil::randomBytes(rng, n, alphabet);
        const std::string patternBytes = testutil::randomPattern(rng, text, m, alphabet);

        Offset lo = 0;
        Offset hi = n;
        if (n > 0 && trial % 3 == 0) {  // sometimes search a sub-range
            lo = rng() % (n + 1);
            hi = lo + rng() % (n - lo + 1);
        }

        const Text t = Text::fromString(text);
        const Pattern p(patternBytes);
        const auto expected = searchNaive(p, t, lo, hi);
        CHECK(searchQuick(p, t, lo, hi) == expected);
        CHECK(searchHorspool(p, t, lo, hi) == expected);
        CHECK(searchBoyerMoore(p, t, lo, hi) == expected);

        for (const Offset o : expected) {
            CHECK(o >= lo);
            CHECK(o + m <= hi);
        }
        CHECK(std::is_sorted(expected.begin(), expected.end()));
    }
}

TEST_CASE("count entry points agree with search") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const std::string text = testutil::randomBytes(rng, rng() % 1500, 2);
        const std::string patternBytes = testutil::randomBytes(rng, 1 + rng() % 8, 2);
        const Text t = Text::fromString(text);
        const Pattern p(patternBytes);
        for (const Algo algo :
             {Algo::Naive, Algo::Quick, Algo::Horspool, Algo::BoyerMoore}) {
            const auto found = search(algo, p, t, 0, t.size());
            CHECK(countMatches(algo, p, t, 0, t.size()) == found.size());

            const Offset ownEnd = t.size() / 2;
            const auto ownedCount = static_cast<std::uint64_t>(
                std::count_if(found.begin(), found.end(), [&](Offset o) { return o < ownEnd; }));
            CHECK(countOwned(algo, p, t, 0, t.size(), ownEnd) == ownedCount);
        }
    }
}

TEST_CASE("ranges are validated and short ranges are legal") {
    const Text t = Text::fromString("abcdef");
    const Pattern p("abc");
    CHECK_THROWS_AS(searchQuick(p, t, 4, 2), RangeError);
    CHECK_THROWS_AS(searchQuick(p, t, 0, 7), RangeError);
    CHECK_THROWS_AS(countMatches(Algo::Quick, p, t, 3, 99), RangeError);

    // pattern longer than the range: empty result, not an error
    CHECK(searchQuick(p, t, 0, 2).empty());
    CHECK(searchNaive(p, t, 5, 5).empty());
    const Text empty;
    CHECK(searchBoyerMoore(p, empty, 0, 0).empty());
}

TEST_CASE("every matcher makes progress within the comparison budget") {
    const std::size_t n = 5000;
    const Text t = Text::fromString(std::string(n, 'a'));
    const Pattern p("aaab");
    const std::size_t m = p.length();
    for (const Algo algo : {Algo::Naive, Algo::Quick, Algo::Horspool, Algo::BoyerMoore}) {
        ScanStats stats;
        const auto found = search(algo, p, t, 0, n, &stats);
        CHECK(found.empty());
        CHECK(stats.attempts <= n);
        CHECK(stats.comparisons <= n * m + m);
    }
}

TEST_CASE("deterministic across repeated runs") {
    std::mt19937_64 rng(3);
    const Text t = Text::fromString(testutil::randomBytes(rng, 4000, 4));
    const Pattern p("abca");
    for (const Algo algo : {Algo::Quick, Algo::Horspool, Algo::BoyerMoore}) {
        const auto first = search(algo, p, t, 0, t.size());
        CHECK(search(algo, p, t, 0, t.size()) == first);
    }
}

TEST_CASE("algorithm names round-trip") {
    for (const Algo algo : {Algo::Naive, Algo::Quick, Algo::Horspool, Algo::BoyerMoore}) {
        CHECK(parseAlgo(algoName(algo)) == algo);
        CHECK(algoFromName(algoName(algo)) == algo);
    }
    CHECK(!parseAlgo("bogus").has_value());
    CHECK_THROWS_AS(algoFromName("bogus"), UnknownAlgorithmError);
}

}  // TEST_SUITE
