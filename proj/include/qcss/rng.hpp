#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace qcss {

/// splitmix64 mixing step. Used to derive independent, platform-stable
/// sub-stream seeds from (seed, index) pairs.
inline uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Seed for sub-stream `index` of a run seeded with `seed`. Streams are
/// independent of worker scheduling, so parallel trials merge determinically.
inline uint64_t stream_seed(uint64_t seed, uint64_t index) {
    return splitmix64(splitmix64(seed) ^ splitmix64(index * 0xD1B54A32D192ED03ull + 1));
}

/// mt19937_64 has a standard-mandated sequence, so draws are identical on
/// every platform. Bounded draws use plain modulo (documented; the small bias
/// is irrelevant for reproducible test-case generation).
inline std::mt19937_64 make_engine(uint64_t seed) {
    return std::mt19937_64(seed);
}

inline uint64_t bounded(std::mt19937_64& gen, uint64_t bound) {
    return gen() % bound;
}

/// In-place Fisher-Yates shuffle with the modulo draw above. std::shuffle is
/// implementation-defined, so it is avoided everywhere.
template <typename T>
void deterministic_shuffle(std::vector<T>& values, std::mt19937_64& gen) {
    for (std::size_t i = values.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(bounded(gen, i));
        std::swap(values[i - 1], values[j]);
    }
}

/// First `count` entries of a shuffled [0, n) range (sampling without
/// replacement).
inline std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t count,
                                                           std::mt19937_64& gen) {
    std::vector<std::size_t> indices(n);
    for (std::size_t i = 0; i < n; ++i) {
        indices[i] = i;
    }
    for (std::size_t i = 0; i < count && i + 1 < n; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(bounded(gen, n - i));
        std::swap(indices[i], indices[j]);
    }
    indices.resize(count);
    return indices;
}

}  // namespace qcss
