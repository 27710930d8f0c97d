#pragma once

#include <cstdint>
#include <string_view>

namespace mclab {

// SplitMix64 (Steele, Lea & Flood 2014). Pure 64-bit integer arithmetic,
// so sequences are bit-identical across platforms. Streams are split by
// offsetting the state with multiples of the golden gamma.
class SplitMix64 {
public:
    static constexpr std::uint64_t golden_gamma = 0x9e3779b97f4a7c15ULL;

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += golden_gamma);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n), n >= 1. Multiply-shift map (Lemire 2019);
    // the tiny bias is irrelevant here and the result is fully portable.
    std::uint64_t next_below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    bool next_bool() { return (next() >> 63) != 0; }

private:
    std::uint64_t state_;
};

// Independent stream for the index-th worker of a seeded task family.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t index) {
    return seed + (index + 1) * SplitMix64::golden_gamma;
}

// One SplitMix64 scramble, used where a single derived seed is needed.
inline std::uint64_t mix64(std::uint64_t x) {
    SplitMix64 g(x);
    return g.next();
}

// FNV-1a 64-bit, the fixed hash behind reproducible child-seed derivation.
class Fnv1a64 {
public:
    Fnv1a64& add_u64(std::uint64_t v) {
        for (int i = 0; i < 8; ++i) step(static_cast<unsigned char>(v >> (8 * i)));
        return *this;
    }
    Fnv1a64& add_string(std::string_view s) {
        for (unsigned char c : s) step(c);
        // length tag keeps ("ab","c") and ("a","bc") distinct
        return add_u64(s.size());
    }
    std::uint64_t digest() const { return hash_; }

private:
    void step(unsigned char byte) {
        hash_ ^= byte;
        hash_ *= 0x100000001b3ULL;
    }
    std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

// Child seed for (group, replicate, replacement) slots of an experiment.
inline std::uint64_t child_seed(std::uint64_t master_seed, std::string_view group_label,
                                std::uint64_t replicate_index,
                                std::uint64_t replacement_counter) {
    return Fnv1a64()
        .add_u64(master_seed)
        .add_string(group_label)
        .add_u64(replicate_index)
        .add_u64(replacement_counter)
        .digest();
}

}  // namespace mclab
