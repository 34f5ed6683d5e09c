#pragma once

#include <cstdint>

namespace permsim {

/// Configuration of the fast numeric-primes mode: ordinary primes as
/// symbols, exact fixed-width integer squaring, and a halt ceiling playing
/// the role the 52-bit mantissa bound plays in floating point. Symbols are
/// stored in 64 bits, so the ceiling is capped at 2^62 regardless of the
/// accumulation width; 128-bit accumulation only makes intermediate sums
/// exact.
struct PrimesHeuristicConfig {
  int accumulate_bits = 128;  // 64 or 128
  int ceiling_bits = 62;      // halt when an inner product exceeds 2^ceiling_bits
  bool resubstitute_every_iteration = true;
};

}  // namespace permsim
