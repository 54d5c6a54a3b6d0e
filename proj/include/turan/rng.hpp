#pragma once

#include <cstdint>

namespace turan {

// SplitMix64 (Steele, Lea, Vigna). Pure 64-bit integer arithmetic, so the
// stream for a given seed is identical on every platform. Every seeded
// operation in the library draws from this generator and documents the draw
// order, which is what makes fixed-seed runs byte-reproducible.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // One coin flip: lowest bit of the next draw.
    bool next_bit() { return next() & 1u; }

    // Uniform in [0,1) with 53 significant bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

}  // namespace turan
