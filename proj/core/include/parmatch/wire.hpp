#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace parmatch::wire {

// Framing: u32 big-endian length prefix, then a 1-byte type tag, then the
// payload. The length counts tag + payload. Within payloads every integer is
// u64 big-endian and every byte string is u32-big-endian length prefixed.

constexpr std::uint64_t kProtocolVersion = 1;
constexpr std::size_t kMaxFrameBytes = std::size_t{64} << 20;

constexpr std::uint64_t kFlagSharedFilesystem = 1;  // HELLO/HELLO-ACK flags bit 0

enum class FrameType : unsigned char {
    Hello = 0x01,
    HelloAck = 0x02,
    Assign = 0x10,
    Result = 0x11,
    Error = 0x12,
    Shutdown = 0x7F,
};

// ERROR frame codes.
enum : std::uint64_t {
    kErrUnknownAlgorithm = 1,
    kErrBadAssignment = 2,
    kErrIo = 3,
    kErrTransportNotNegotiated = 4,
    kErrInternal = 5,
};

struct Hello {
    std::uint64_t version = kProtocolVersion;
    std::uint64_t flags = 0;
    bool operator==(const Hello&) const = default;
};

struct HelloAck {
    std::uint64_t version = kProtocolVersion;
    std::uint64_t flags = 0;
    bool operator==(const HelloAck&) const = default;
};

/// Text travels either inline (the bytes of [start, extEnd)) or as a
/// reference into a filesystem both sides declared at handshake.
struct InlineText {
    std::string bytes;
    bool operator==(const InlineText&) const = default;
};

struct FileRef {
    std::string path;  // absolute
    std::uint64_t length = 0;
    bool operator==(const FileRef&) const = default;
};

using TextTransport = std::variant<InlineText, FileRef>;

struct Assign {
    std::uint64_t jobId = 0;
    std::string algo;
    std::string pattern;
    std::uint64_t start = 0;
    std::uint64_t end = 0;
    std::uint64_t extEnd = 0;
    TextTransport transport;
    bool operator==(const Assign&) const = default;
};

struct Result {
    std::uint64_t jobId = 0;
    std::uint64_t count = 0;
    std::uint64_t elapsedNanos = 0;
    bool operator==(const Result&) const = default;
};

struct Error {
    std::uint64_t jobId = 0;
    std::uint64_t code = 0;
    std::string message;
    bool operator==(const Error&) const = default;
};

struct Shutdown {
    bool operator==(const Shutdown&) const = default;
};

using Frame = std::variant<Hello, HelloAck, Assign, Result, Error, Shutdown>;

/// Full wire bytes including the length prefix.
/// Throws FrameTooLargeError past kMaxFrameBytes.
std::string encodeFrame(const Frame& frame);

/// Inverse of encodeFrame over a complete buffer; throws ProtocolError on
/// anything malformed (bad length, unknown tag, truncation, trailing bytes).
Frame decodeFrame(std::string_view bytes);

/// Decode tag + payload only (the reader has already consumed the length).
Frame decodeFrameBody(std::string_view body);

}  // namespace parmatch::wire
