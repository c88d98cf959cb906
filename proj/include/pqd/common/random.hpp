#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace pqd {

using Rng = std::mt19937_64;

// Independent stream for (seed, a, b); used for per-individual and
// per-request generators so results do not depend on scheduling.
inline Rng derive_rng(std::uint64_t seed, std::uint64_t a = 0, std::uint64_t b = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(a),    static_cast<std::uint32_t>(a >> 32),
                    static_cast<std::uint32_t>(b),    static_cast<std::uint32_t>(b >> 32)};
  return Rng(seq);
}

std::string serialize_rng(const Rng& rng);
Rng deserialize_rng(const std::string& text);

// Uniform double in [0, 1) built from 53 random bits (portable, unlike
// std::uniform_real_distribution).
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Box-Muller standard normal; stateless so every call consumes exactly two draws.
double standard_normal(Rng& rng);

}  // namespace pqd
