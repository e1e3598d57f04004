#include "parmatch/parse.hpp"

#include <cctype>
#include <charconv>

#include "parmatch/errors.hpp"

namespace parmatch {

namespace {

int hexDigit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

std::string unescapePattern(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] != '\\') {
            out.push_back(raw[i]);
            continue;
        }
        if (i + 1 >= raw.size()) {
            throw PatternEscapeError("pattern ends with a lone backslash");
        }
        const char kind = raw[++i];
        if (kind == '\\') {
            out.push_back('\\');
        } else if (kind == 'x') {
            if (i + 2 >= raw.size()) {
                throw PatternEscapeError("\\x escape needs two hex digits");
            }
            const int hi = hexDigit(raw[i + 1]);
            const int lo = hexDigit(raw[i + 2]);
            if (hi < 0 || lo < 0) {
                throw PatternEscapeError("\\x escape needs two hex digits, got \"" +
                                         std::string(raw.substr(i + 1, 2)) + "\"");
            }
            out.push_back(static_cast<char>(hi * 16 + lo));
            i += 2;
        } else {
            throw PatternEscapeError(std::string("unsupported escape \\") + kind);
        }
    }
    return out;
}

std::uint64_t parseByteSize(std::string_view raw) {
    if (raw.empty()) throw InvalidArgsError("empty size");
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), value);
    if (ec != std::errc{} || ptr == raw.data()) {
        throw InvalidArgsError("cannot parse size \"" + std::string(raw) + "\"");
    }

    std::string_view suffix(ptr, static_cast<std::size_t>(raw.data() + raw.size() - ptr));
    std::uint64_t multiplier = 1;
    if (!suffix.empty()) {
        switch (std::tolower(static_cast<unsigned char>(suffix[0]))) {
            case 'k': multiplier = std::uint64_t{1} << 10; break;
            case 'm': multiplier = std::uint64_t{1} << 20; break;
            case 'g': multiplier = std::uint64_t{1} << 30; break;
            default:
                throw InvalidArgsError("unknown size suffix \"" + std::string(suffix) + "\"");
        }
        std::string_view rest = suffix.substr(1);
        if (!rest.empty() && rest != "b" && rest != "B" && rest != "iB" && rest != "ib") {
            throw InvalidArgsError("unknown size suffix \"" + std::string(suffix) + "\"");
        }
    }
    if (value != 0 && multiplier > UINT64_MAX / value) {
        throw InvalidArgsError("size \"" + std::string(raw) + "\" overflows");
    }
    return value * multiplier;
}

std::vector<std::string> splitCommaList(std::string_view raw) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= raw.size()) {
        const std::size_t comma = raw.find(',', start);
        const std::size_t end = comma == std::string_view::npos ? raw.size() : comma;
        if (end > start) out.emplace_back(raw.substr(start, end - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::vector<std::size_t> parseWorkerList(std::string_view raw) {
    const auto pieces = splitCommaList(raw);
    if (pieces.empty()) throw InvalidArgsError("empty worker count list");
    std::vector<std::size_t> out;
    out.reserve(pieces.size());
    for (const auto& piece : pieces) {
        std::size_t value = 0;
        const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (ec != std::errc{} || ptr != piece.data() + piece.size() || value == 0) {
            throw InvalidArgsError("bad worker count \"" + piece + "\"");
        }
        out.push_back(value);
    }
    return out;
}

}  // namespace parmatch
