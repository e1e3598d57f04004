#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "parmatch/text.hpp"

namespace parmatch {

/// A reproducible corpus: identical (source, seed, size) always yields
/// identical bytes.
struct CorpusSpec {
    struct UniformRandom {
        std::uint64_t seed = 1;
        bool operator==(const UniformRandom&) const = default;
    };
    struct RepeatedBlock {
        std::string block;
        bool operator==(const RepeatedBlock&) const = default;
    };
    struct FromFile {
        std::string path;
        bool operator==(const FromFile&) const = default;
    };

    /// For FromFile, 0 means "the whole file"; otherwise the first sizeBytes
    /// (IoError when the file is shorter).
    std::uint64_t sizeBytes = 0;
    std::variant<UniformRandom, RepeatedBlock, FromFile> source = UniformRandom{};
};

/// Generated bytes for UniformRandom / RepeatedBlock / FromFile-with-size.
/// Random bytes come from mt19937_64 seeded with `seed`, eight bytes per
/// draw, least significant byte first — stable across platforms.
std::string generateCorpusBytes(const CorpusSpec& spec);

/// Corpus as a Text. Whole-file specs go through Text::load so large files
/// stay file-backed.
Text materializeCorpus(const CorpusSpec& spec);

/// Write a generated corpus to a file. FromFile specs are rejected.
void writeCorpusFile(const CorpusSpec& spec, const std::string& outPath);

}  // namespace parmatch
