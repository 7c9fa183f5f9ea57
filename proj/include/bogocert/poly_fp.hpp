#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <utility>
#include <vector>

#include "bogocert/fp.hpp"

namespace bogocert {

using BigInt = boost::multiprecision::cpp_int;

// Dense univariate polynomial over F_p, c[i] multiplying x^i, trimmed so the
// leading coefficient is nonzero (the zero polynomial has an empty c).
struct PolyFp {
  u64 p = 2;
  std::vector<u64> c;

  PolyFp() = default;
  explicit PolyFp(u64 modulus) : p(modulus) {}
  PolyFp(u64 modulus, std::vector<u64> coeffs);  // reduces and trims

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  u64 leading() const { return c.back(); }
  u64 coeff(int i) const { return i >= 0 && i < static_cast<int>(c.size()) ? c[i] : 0; }

  friend bool operator==(const PolyFp&, const PolyFp&) = default;
};

PolyFp poly_x(u64 p);                   // the monomial x
PolyFp poly_const(u64 p, u64 v);        // constant polynomial
PolyFp poly_monomial(u64 p, int d, u64 v = 1);

PolyFp operator+(const PolyFp& a, const PolyFp& b);
PolyFp operator-(const PolyFp& a, const PolyFp& b);
PolyFp operator*(const PolyFp& a, const PolyFp& b);
PolyFp operator*(u64 s, const PolyFp& a);

PolyFp derivative(const PolyFp& f);
u64 eval(const PolyFp& f, u64 x);
PolyFp make_monic(const PolyFp& f);

// Division with remainder; g must be nonzero.
std::pair<PolyFp, PolyFp> divmod(const PolyFp& f, const PolyFp& g);
PolyFp rem(const PolyFp& f, const PolyFp& g);
PolyFp divexact(const PolyFp& f, const PolyFp& g);  // asserts zero remainder

// Monic gcd (zero polynomial for gcd(0,0)).
PolyFp gcd(PolyFp a, PolyFp b);

// base^e mod m, e an arbitrary-precision nonnegative exponent.
PolyFp powmod(const PolyFp& base, const BigInt& e, const PolyFp& m);

// Sylvester resultant of two nonzero polynomials; throws std::invalid_argument
// on a zero input.
Fp resultant(const PolyFp& f, const PolyFp& g);

// Complete factorization into monic irreducibles with multiplicities, sorted
// by degree and then lexicographically by coefficient tuple (highest-degree
// coefficient first). Squarefree decomposition + distinct-degree +
// equal-degree splitting; the splitting randomness is seeded from a hash of
// the input so the output is reproducible. Throws std::invalid_argument on
// the zero polynomial.
std::vector<std::pair<PolyFp, int>> poly_factor(const PolyFp& f);

bool is_irreducible(const PolyFp& f);

// Product of the distinct monic irreducible factors of f.
PolyFp radical(const PolyFp& f);

// Number of distinct roots of f lying in F_{p^k} (k = 1 or 2 in practice).
int count_roots_in_extension(const PolyFp& f, int k);

}  // namespace bogocert
