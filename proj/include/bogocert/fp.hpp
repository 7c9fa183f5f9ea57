#pragma once

#include <cstdint>
#include <vector>

namespace bogocert {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }
inline u64 addmod(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}
inline u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
inline u64 negmod(u64 a, u64 p) { return a == 0 ? 0 : p - a; }

u64 powmod(u64 a, u64 e, u64 p);
u64 invmod(u64 a, u64 p);  // a must be a unit mod p

// Deterministic Miller-Rabin, valid for the full u64 range.
bool is_prime_u64(u64 n);

// Reduce a signed integer into [0, p).
u64 to_residue(long long a, u64 p);

// (a|p) in {-1,0,+1}; throws std::invalid_argument unless p is an odd prime.
int legendre_symbol(long long a, u64 p);

// Square root of a quadratic residue a mod an odd prime p (Tonelli-Shanks).
// Throws std::invalid_argument when a is a non-residue.
u64 sqrt_mod(u64 a, u64 p);

// Residue carrying its modulus. Inner loops work on raw u64 with an explicit
// modulus instead; this type is the value-level currency between modules.
struct Fp {
  u64 value = 0;
  u64 modulus = 2;

  Fp() = default;
  Fp(long long v, u64 p);  // validates that p is prime

  friend bool operator==(const Fp&, const Fp&) = default;
};

Fp operator+(Fp a, Fp b);
Fp operator-(Fp a, Fp b);
Fp operator*(Fp a, Fp b);
Fp inverse(Fp a);

// Primes in [lo, hi], ascending.
std::vector<u64> primes_in_range(u64 lo, u64 hi);

}  // namespace bogocert
