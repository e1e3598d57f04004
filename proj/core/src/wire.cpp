#include "parmatch/wire.hpp"

#include <limits>

#include "parmatch/errors.hpp"

namespace parmatch::wire {

namespace {

constexpr unsigned char kInlineTag = 0x00;
constexpr unsigned char kFileRefTag = 0x01;

void putU32(std::string& out, std::uint32_t v) {
    out.push_back(static_cast<char>(v >> 24));
    out.push_back(static_cast<char>(v >> 16));
    out.push_back(static_cast<char>(v >> 8));
    out.push_back(static_cast<char>(v));
}

void putU64(std::string& out, std::uint64_t v) {
    for (int shift = 56; shift >= 0; shift -= 8) {
        out.push_back(static_cast<char>(v >> shift));
    }
}

void putString(std::string& out, std::string_view s) {
    if (s.size() > std::numeric_limits<std::uint32_t>::max()) {
        throw FrameTooLargeError(s.size());
    }
    putU32(out, static_cast<std::uint32_t>(s.size()));
    out.append(s);
}

struct Reader {
    std::string_view buf;
    std::size_t pos = 0;

    void need(std::size_t n) const {
        if (buf.size() - pos < n) throw ProtocolError("truncated frame payload");
    }
    unsigned char u8() {
        need(1);
        return static_cast<unsigned char>(buf[pos++]);
    }
    std::uint32_t u32() {
        need(4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v = (v << 8) | static_cast<unsigned char>(buf[pos++]);
        return v;
    }
    std::uint64_t u64() {
        need(8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v = (v << 8) | static_cast<unsigned char>(buf[pos++]);
        return v;
    }
    std::string str() {
        const std::uint32_t len = u32();
        need(len);
        std::string s(buf.substr(pos, len));
        pos += len;
        return s;
    }
    void expectDone() const {
        if (pos != buf.size()) throw ProtocolError("trailing bytes after frame payload");
    }
};

template <class... Fs>
struct Overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

}  // namespace

std::string encodeFrame(const Frame& frame) {
    std::string payload;
    unsigned char tag = 0;
    std::visit(
        Overloaded{
            [&](const Hello& f) {
                tag = static_cast<unsigned char>(FrameType::Hello);
                putU64(payload, f.version);
                putU64(payload, f.flags);
            },
            [&](const HelloAck& f) {
                tag = static_cast<unsigned char>(FrameType::HelloAck);
                putU64(payload, f.version);
                putU64(payload, f.flags);
            },
            [&](const Assign& f) {
                tag = static_cast<unsigned char>(FrameType::Assign);
                putU64(payload, f.jobId);
                putString(payload, f.algo);
                putString(payload, f.pattern);
                putU64(payload, f.start);
                putU64(payload, f.end);
                putU64(payload, f.extEnd);
                std::visit(Overloaded{
                               [&](const InlineText& t) {
                                   payload.push_back(static_cast<char>(kInlineTag));
                                   putString(payload, t.bytes);
                               },
                               [&](const FileRef& t) {
                                   payload.push_back(static_cast<char>(kFileRefTag));
                                   putString(payload, t.path);
                                   putU64(payload, t.length);
                               },
                           },
                           f.transport);
            },
            [&](const Result& f) {
                tag = static_cast<unsigned char>(FrameType::Result);
                putU64(payload, f.jobId);
                putU64(payload, f.count);
                putU64(payload, f.elapsedNanos);
            },
            [&](const Error& f) {
                tag = static_cast<unsigned char>(FrameType::Error);
                putU64(payload, f.jobId);
                putU64(payload, f.code);
                putString(payload, f.message);
            },
            [&](const Shutdown&) { tag = static_cast<unsigned char>(FrameType::Shutdown); },
        },
        frame);

    const std::size_t bodySize = 1 + payload.size();
    if (bodySize > kMaxFrameBytes) throw FrameTooLargeError(bodySize);

    std::string out;
    out.reserve(4 + bodySize);
    putU32(out, static_cast<std::uint32_t>(bodySize));
    out.push_back(static_cast<char>(tag));
    out.append(payload);
    return out;
}

Frame decodeFrameBody(std::string_view body) {
    if (body.empty()) throw ProtocolError("empty frame body");
    const auto tag = static_cast<unsigned char>(body[0]);
    Reader r{body.substr(1)};
    switch (static_cast<FrameType>(tag)) {
        case FrameType::Hello: {
            Hello f;
            f.version = r.u64();
            f.flags = r.u64();
            r.expectDone();
            return f;
        }
        case FrameType::HelloAck: {
            HelloAck f;
            f.version = r.u64();
            f.flags = r.u64();
            r.expectDone();
            return f;
        }
        case FrameType::Assign: {
            Assign f;
            f.jobId = r.u64();
            f.algo = r.str();
            f.pattern = r.str();
            f.start = r.u64();
            f.end = r.u64();
            f.extEnd = r.u64();
            const unsigned char transportTag = r.u8();
            if (transportTag == kInlineTag) {
                InlineText t;
                t.bytes = r.str();
                f.transport = std::move(t);
            } else if (transportTag == kFileRefTag) {
                FileRef t;
                t.path = r.str();
                t.length = r.u64();
                f.transport = std::move(t);
            } else {
                throw ProtocolError("unknown text transport tag");
            }
            r.expectDone();
            return f;
        }
        case FrameType::Result: {
            Result f;
            f.jobId = r.u64();
            f.count = r.u64();
            f.elapsedNanos = r.u64();
            r.expectDone();
            return f;
        }
        case FrameType::Error: {
            Error f;
            f.jobId = r.u64();
            f.code = r.u64();
            f.message = r.str();
            r.expectDone();
            return f;
        }
        case FrameType::Shutdown: {
            r.expectDone();
            return Shutdown{};
        }
    }
    throw ProtocolError("unknown frame type");
}

Frame decodeFrame(std::string_view bytes) {
    if (bytes.size() < 4) throw ProtocolError("frame shorter than its length prefix");
    std::uint32_t len = 0;
    for (int i = 0; i < 4; ++i) len = (len << 8) | static_cast<unsigned char>(bytes[i]);
    if (len == 0) throw ProtocolError("zero-length frame");
    if (len > kMaxFrameBytes) throw ProtocolError("frame length exceeds the 64 MiB limit");
    if (bytes.size() != 4 + static_cast<std::size_t>(len)) {
        throw ProtocolError("frame length prefix disagrees with buffer size");
    }
    return decodeFrameBody(bytes.substr(4));
}

}  // namespace parmatch::wire
