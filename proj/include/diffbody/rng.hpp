#pragma once

#include <cstdint>

#include "diffbody/rat.hpp"

namespace diffbody {

// SplitMix64 (Steele-Lea-Flood constants). Every randomized computation in
// the project draws from this generator so runs are reproducible bit for bit
// from the seed alone. Substreams are derived with derive(seed, index).
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound), bound > 0; modulo reduction (documented bias is
    // below 2^-49 for the bounds used here)
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    // uniform integer in [-range, range]
    long symmetric(long range) {
        return static_cast<long>(below(2 * static_cast<std::uint64_t>(range) + 1)) - range;
    }

    // uniform dyadic in [0,1) with the given number of bits
    Rat unit(unsigned bits = 30) {
        Int scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
        return rat(Int(static_cast<unsigned long>(next() >> (64 - bits))), scale);
    }

    static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
        SplitMix64 g(seed ^ (0x6a09e667f3bcc909ULL + index * 0x9e3779b97f4a7c15ULL));
        return g.next();
    }

  private:
    std::uint64_t state_;
};

}  // namespace diffbody
