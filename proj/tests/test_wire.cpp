#include <random>
#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "parmatch/errors.hpp"
#include "parmatch/wire.hpp"

using namespace parmatch;
using namespace parmatch::wire;

namespace {

std::string hex(std::string_view bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (const char c : bytes) {
        const auto b = static_cast<unsigned char>(c);
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

Frame randomFrame(std::mt19937_64& rng) {
    switch (rng() % 6) {
        case 0: return Hello{rng(), rng()};
        case 1: return HelloAck{rng(), rng()};
        case 2: {
            Assign a;
            a.jobId = rng();
            a.algo = testutil::randomBytes(rng, rng() % 12, 26);
            a.pattern = testutil::randomBytes(rng, rng() % 40, 256);
            a.start = rng();
            a.end = rng();
            a.extEnd = rng();
            if (rng() % 2 == 0) {
                a.transport = InlineText{testutil::randomBytes(rng, rng() % 2000, 256)};
            } else {
                a.transport = FileRef{"/" + testutil::randomBytes(rng, rng() % 60, 26), rng()};
            }
            return a;
        }
        case 3: return Result{rng(), rng(), rng()};
        case 4: return wire::Error{rng(), rng(), testutil::randomBytes(rng, rng() % 100, 256)};
        default: return Shutdown{};
    }
}

}  // namespace

TEST_SUITE("wire") {

TEST_CASE("golden hello bytes") {
    const std::string bytes = encodeFrame(Hello{1, 0});
    CHECK(hex(bytes) == "0000001101" // length 17, tag 0x01
                        "0000000000000001"
                        "0000000000000000");
}

TEST_CASE("golden result bytes") {
    const std::string bytes = encodeFrame(Result{1, 2, 3});
    CHECK(hex(bytes) == "0000001911" // length 25, tag 0x11
                        "0000000000000001"
                        "0000000000000002"
                        "0000000000000003");
}

TEST_CASE("golden assign bytes pin the layout") {
    Assign a;
    a.jobId = 7;
    a.algo = "quick";
    a.pattern = "INGS";
    a.start = 0;
    a.end = 11;
    a.extEnd = 13;
    a.transport = InlineText{"EXACT STRINGS"};
    const std::string bytes = encodeFrame(a);
    CHECK(hex(bytes) ==
          "00000044"            // length 68
          "10"                  // ASSIGN
          "0000000000000007"    // jobId
          "00000005" "717569636b"          // "quick"
          "00000004" "494e4753"            // "INGS"
          "0000000000000000"    // start
          "000000000000000b"    // end
          "000000000000000d"    // extEnd
          "00"                  // INLINE
          "0000000d" "455841435420535452494e4753");  // "EXACT STRINGS"
    CHECK(decodeFrame(bytes) == Frame{a});
}

TEST_CASE("encode and decode are inverses over random frames") {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 3000; ++trial) {
        const Frame frame = randomFrame(rng);
        const std::string bytes = encodeFrame(frame);
        CHECK(decodeFrame(bytes) == frame);
    }
}

TEST_CASE("every strict prefix of a frame fails to decode") {
    Assign a;
    a.jobId = 99;
    a.algo = "horspool";
    a.pattern = "ab";
    a.transport = FileRef{"/tmp/corpus.bin", 12345};
    const std::string bytes = encodeFrame(a);
    for (std::size_t cut = 0; cut < bytes.size(); ++cut) {
        CHECK_THROWS_AS(decodeFrame(std::string_view(bytes).substr(0, cut)), ProtocolError);
    }
    CHECK_THROWS_AS(decodeFrame(bytes + "x"), ProtocolError);  // trailing garbage
}

TEST_CASE("corrupt headers and bodies are rejected") {
    CHECK_THROWS_AS(decodeFrame(std::string("\x00\x00\x00\x00", 4)), ProtocolError);
    CHECK_THROWS_AS(decodeFrame(std::string("\xff\xff\xff\xff", 4)), ProtocolError);
    CHECK_THROWS_AS(decodeFrameBody(""), ProtocolError);
    CHECK_THROWS_AS(decodeFrameBody("\x6e"), ProtocolError);  // unknown tag

    // Assign with an unknown transport tag
    std::string body = encodeFrame(Result{0, 0, 0}).substr(4);
    body[0] = '\x10';
    CHECK_THROWS_AS(decodeFrameBody(body), ProtocolError);

    // trailing byte inside the payload
    const std::string shutdownBody = encodeFrame(Shutdown{}).substr(4) + std::string(1, '\0');
    CHECK_THROWS_AS(decodeFrameBody(shutdownBody), ProtocolError);

    // byte-string length pointing past the payload
    std::string err = encodeFrame(wire::Error{1, 2, "boom"}).substr(4);
    err[err.size() - 5] = '\x7f';  // inflate the message length prefix
    CHECK_THROWS_AS(decodeFrameBody(err), ProtocolError);
}

TEST_CASE("frames above 64 MiB are refused on encode") {
    Assign a;
    a.algo = "quick";
    a.pattern = "x";
    a.transport = InlineText{std::string(kMaxFrameBytes, 'y')};
    CHECK_THROWS_AS(encodeFrame(a), FrameTooLargeError);
}

}  // TEST_SUITE
