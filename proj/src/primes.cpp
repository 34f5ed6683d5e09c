#include "permsim/primes.hpp"

#include <memory>
#include <mutex>

namespace permsim {
namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool miller_rabin(std::uint64_t n, std::uint64_t a) {
  if (a % n == 0) return true;
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  std::uint64_t x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  // This base set decides primality for every 64-bit integer.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
    if (!miller_rabin(n, a)) return false;
  return true;
}

BigInt next_prime_above(const BigInt& n) {
  if (n < 2) return BigInt(2);
  if (n.fits_ulong_p() && n.get_ui() < (1ull << 48)) {
    std::uint64_t c = n.get_ui() + 1;
    if (c == 2) return BigInt(2);
    if (c % 2 == 0) ++c;
    while (!is_prime_u64(c)) c += 2;
    return BigInt(static_cast<unsigned long>(c));
  }
  // Sieve-assisted search, then 40 Miller-Rabin rounds on the survivor.
  BigInt c = n;
  for (;;) {
    mpz_nextprime(c.get_mpz_t(), c.get_mpz_t());
    if (mpz_probab_prime_p(c.get_mpz_t(), 40) > 0) return c;
  }
}

std::vector<std::uint64_t> const& first_primes(std::size_t k) {
  static std::vector<std::uint64_t>* primes = new std::vector<std::uint64_t>();
  static std::mutex mu;
  std::scoped_lock lock(mu);
  if (primes->size() < k) {
    auto grown = std::make_unique<std::vector<std::uint64_t>>(*primes);
    std::uint64_t c = grown->empty() ? 2 : grown->back() + 1;
    grown->reserve(k);
    while (grown->size() < k) {
      if (is_prime_u64(c)) grown->push_back(c);
      ++c;
    }
    primes = grown.release();  // old table intentionally leaked: callers may hold references
  }
  return *primes;
}

}  // namespace permsim
