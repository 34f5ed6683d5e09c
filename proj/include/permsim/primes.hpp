#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <vector>

namespace permsim {

using BigInt = mpz_class;

/// Deterministic Miller-Rabin for 64-bit values.
bool is_prime_u64(std::uint64_t n);

/// Smallest prime strictly greater than n. Deterministic below 2^64,
/// Miller-Rabin with 40 rounds above.
BigInt next_prime_above(const BigInt& n);

/// First k ordinary primes (2, 3, 5, ...), extended on demand.
const std::vector<std::uint64_t>& first_primes(std::size_t k);

}  // namespace permsim
