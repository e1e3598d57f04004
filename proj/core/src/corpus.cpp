#include "parmatch/corpus.hpp"

#include <cerrno>
#include <cstring>
#include <fstream>
#include <random>

#include "parmatch/errors.hpp"

namespace parmatch {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

std::string randomBytes(std::uint64_t seed, std::uint64_t size) {
    std::string out(size, '\0');
    std::mt19937_64 rng(seed);
    std::uint64_t i = 0;
    while (i + 8 <= size) {
        std::uint64_t v = rng();
        for (int k = 0; k < 8; ++k) {
            out[i++] = static_cast<char>(v & 0xff);
            v >>= 8;
        }
    }
    if (i < size) {
        std::uint64_t v = rng();
        while (i < size) {
            out[i++] = static_cast<char>(v & 0xff);
            v >>= 8;
        }
    }
    return out;
}

std::string repeatedBytes(const std::string& block, std::uint64_t size) {
    if (block.empty() && size > 0) {
        throw InvalidArgsError("repeated-block corpus needs a non-empty block");
    }
    std::string out;
    out.reserve(size);
    while (out.size() + block.size() <= size) out.append(block);
    out.append(block, 0, size - out.size());
    return out;
}

std::string filePrefix(const std::string& path, std::uint64_t size) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path + ": " + std::strerror(errno));
    std::string out;
    if (size == 0) {
        out.assign((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    } else {
        out.resize(size);
        in.read(out.data(), static_cast<std::streamsize>(size));
        if (static_cast<std::uint64_t>(in.gcount()) < size) {
            throw IoError(path + " is shorter than the requested " + std::to_string(size) +
                          " bytes");
        }
    }
    if (in.bad()) throw IoError("read failed for " + path);
    return out;
}

}  // namespace

std::string generateCorpusBytes(const CorpusSpec& spec) {
    return std::visit(
        Overloaded{
            [&](const CorpusSpec::UniformRandom& s) { return randomBytes(s.seed, spec.sizeBytes); },
            [&](const CorpusSpec::RepeatedBlock& s) {
                return repeatedBytes(s.block, spec.sizeBytes);
            },
            [&](const CorpusSpec::FromFile& s) { return filePrefix(s.path, spec.sizeBytes); },
        },
        spec.source);
}

Text materializeCorpus(const CorpusSpec& spec) {
    if (const auto* file = std::get_if<CorpusSpec::FromFile>(&spec.source)) {
        if (spec.sizeBytes == 0) return Text::load(file->path);
    }
    return Text::fromString(generateCorpusBytes(spec));
}

void writeCorpusFile(const CorpusSpec& spec, const std::string& outPath) {
    if (std::holds_alternative<CorpusSpec::FromFile>(spec.source)) {
        throw InvalidArgsError("a file-sourced corpus has nothing to generate");
    }
    const std::string bytes = generateCorpusBytes(spec);
    std::ofstream out(outPath, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + outPath + " for writing: " + std::strerror(errno));
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) throw IoError("write failed for " + outPath);
}

}  // namespace parmatch
