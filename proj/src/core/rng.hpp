#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fgcxr {

// Project-wide PRNG. std::shuffle / std::normal_distribution are
// implementation-defined, so every deterministic contract (splits,
// parameter init, property-test data) goes through this generator.
class Xoshiro256ss {
public:
    explicit Xoshiro256ss(uint64_t seed);

    uint64_t next();

    // Uniform in [0, n) via modulo; bias is irrelevant here, stability is.
    uint64_t next_below(uint64_t n);

    double uniform();                      // [0, 1)
    double uniform(double lo, double hi);  // [lo, hi)
    int uniform_int(int lo, int hi);       // inclusive
    double gaussian();                     // Box-Muller, N(0, 1)

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (size_t i = items.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(next_below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    uint64_t s_[4];
    bool have_spare_ = false;
    double spare_ = 0.0;
};

uint64_t splitmix64(uint64_t& state);

// Stable 64-bit string hash, used to derive per-name seeds.
uint64_t fnv1a64(const std::string& s);

} // namespace fgcxr
