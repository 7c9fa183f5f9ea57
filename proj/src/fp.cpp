#include "bogocert/fp.hpp"

#include <stdexcept>

namespace bogocert {

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) {
  a %= p;
  if (a == 0) throw std::invalid_argument("invmod: zero is not invertible");
  // extended Euclid on signed accumulators
  long long t = 0, nt = 1;
  long long r = static_cast<long long>(p), nr = static_cast<long long>(a);
  while (nr != 0) {
    long long q = r / nr;
    long long tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw std::invalid_argument("invmod: argument shares a factor with the modulus");
  if (t < 0) t += static_cast<long long>(p);
  return static_cast<u64>(t);
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 to_residue(long long a, u64 p) {
  long long m = static_cast<long long>(p);
  long long r = a % m;
  if (r < 0) r += m;
  return static_cast<u64>(r);
}

int legendre_symbol(long long a, u64 p) {
  if (p == 2 || !is_prime_u64(p)) throw std::invalid_argument("legendre_symbol: p must be an odd prime");
  u64 r = to_residue(a, p);
  if (r == 0) return 0;
  u64 e = powmod(r, (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

u64 sqrt_mod(u64 a, u64 p) {
  a %= p;
  if (a == 0) return 0;
  if (legendre_symbol(static_cast<long long>(a), p) != 1)
    throw std::invalid_argument("sqrt_mod: not a quadratic residue");
  if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
  // Tonelli-Shanks
  u64 q = p - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  u64 z = 2;
  while (legendre_symbol(static_cast<long long>(z), p) != -1) ++z;
  u64 m = s;
  u64 c = powmod(z, q, p);
  u64 t = powmod(a, q, p);
  u64 r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    u64 i = 0, tt = t;
    while (tt != 1) {
      tt = mulmod(tt, tt, p);
      ++i;
    }
    u64 b = c;
    for (u64 k = 0; k + i + 1 < m; ++k) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return r;
}

Fp::Fp(long long v, u64 p) : value(to_residue(v, p)), modulus(p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("Fp: modulus must be prime");
}

namespace {
void check_same_field(const Fp& a, const Fp& b) {
  if (a.modulus != b.modulus) throw std::invalid_argument("Fp: mixed moduli");
}
}  // namespace

Fp operator+(Fp a, Fp b) {
  check_same_field(a, b);
  a.value = addmod(a.value, b.value, a.modulus);
  return a;
}

Fp operator-(Fp a, Fp b) {
  check_same_field(a, b);
  a.value = submod(a.value, b.value, a.modulus);
  return a;
}

Fp operator*(Fp a, Fp b) {
  check_same_field(a, b);
  a.value = mulmod(a.value, b.value, a.modulus);
  return a;
}

Fp inverse(Fp a) {
  a.value = invmod(a.value, a.modulus);
  return a;
}

std::vector<u64> primes_in_range(u64 lo, u64 hi) {
  std::vector<u64> out;
  if (hi < 2) return out;
  if (lo < 2) lo = 2;
  std::vector<bool> sieve(hi + 1, true);
  for (u64 i = 2; i * i <= hi; ++i) {
    if (!sieve[i]) continue;
    for (u64 j = i * i; j <= hi; j += i) sieve[j] = false;
  }
  for (u64 i = lo; i <= hi; ++i)
    if (sieve[i]) out.push_back(i);
  return out;
}

}  // namespace bogocert
