#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "bogocert/errors.hpp"
#include "bogocert/logreal.hpp"
#include "bogocert/poly_fp.hpp"

namespace bogocert {

// A number field K presented by a monic irreducible integer polynomial, with
// the order Z[theta] it generates. Irreducibility is certified at
// construction (mod-p witness, degree-pattern intersection, or rational-root
// check for cubics and below); construction throws schema_error otherwise.
struct NumberFieldOrder {
  std::vector<BigInt> min_poly;  // index i = coefficient of x^i, monic
  BigInt poly_discriminant;

  int degree() const { return static_cast<int>(min_poly.size()) - 1; }
  bool is_rational() const { return degree() == 1; }

  static std::shared_ptr<const NumberFieldOrder> make(std::vector<BigInt> coeffs);
  static std::shared_ptr<const NumberFieldOrder> rationals();  // min_poly x

 private:
  NumberFieldOrder() = default;
};

using FieldPtr = std::shared_ptr<const NumberFieldOrder>;

// disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f) for a nonconstant integer
// polynomial, via fraction-free elimination of the Sylvester matrix.
BigInt poly_disc(const std::vector<BigInt>& poly);

// Element of K in the power basis of the generator.
struct FieldElement {
  FieldPtr owner;
  std::vector<Rational> coords;  // coords.size() == degree

  bool is_zero() const;
  bool is_rational_value() const;  // lies in Q
  Rational rational_value() const;

  friend bool operator==(const FieldElement&, const FieldElement&);
};

FieldElement element_zero(const FieldPtr& k);
FieldElement element_one(const FieldPtr& k);
FieldElement element_from_rational(const FieldPtr& k, const Rational& r);
FieldElement element_generator(const FieldPtr& k);
FieldElement make_element(const FieldPtr& k, std::vector<Rational> coords);

FieldElement operator+(const FieldElement& a, const FieldElement& b);
FieldElement operator-(const FieldElement& a, const FieldElement& b);
FieldElement operator*(const FieldElement& a, const FieldElement& b);
FieldElement operator*(const Rational& s, const FieldElement& a);
FieldElement inverse(const FieldElement& a);
FieldElement operator/(const FieldElement& a, const FieldElement& b);

// Reduction of an element at the place given by an irreducible factor g of
// min_poly mod p; the result lives in F_p[x]/(g). Throws nonintegral_error
// when a coordinate denominator vanishes mod p.
PolyFp reduce_element(const FieldElement& a, u64 p, const PolyFp& residue_poly);

enum class Maximality { maximal, not_maximal };

// Dedekind's criterion at p for Z[theta].
Maximality dedekind_p_maximal(const NumberFieldOrder& order, u64 p);

struct SplitFactor {
  int e;  // ramification index
  int f;  // residue degree
  PolyFp residue_poly;
};

struct PrimeSplittingData {
  u64 p;
  bool certified_maximal;
  std::vector<SplitFactor> factors;
};

// Splitting of p read from the factorization of min_poly mod p; valid only
// when Z[theta] is p-maximal. Throws unsupported_prime_error otherwise
// (callers fold such p into the conservative bad set).
PrimeSplittingData splitting_data(const NumberFieldOrder& order, u64 p);

// d_p(L) = max over places w | p of the local degree [L_w : Q_p]. Exact when
// splitting can be certified; otherwise the degree of L as a valid upper
// bound.
struct LocalDegree {
  int dv;
  bool exact;
};
LocalDegree max_local_degree(const NumberFieldOrder& L, u64 p);

// Conservative bad set of a generator j: primes dividing
// N * |disc(min_poly)| * [Z[theta] : Z[N j]], N the least positive integer
// with N j in Z[theta]. Supersingular places outside this set have residue
// degree at most 2; the set may be strictly larger than the minimal one, the
// conclusion survives enlargement.
struct BadSet {
  BigInt generating_integer;
  std::vector<u64> primes;

  bool contains(u64 p) const { return generating_integer % p == 0; }
};

BadSet bad_set(const FieldElement& j);

// Elementary divisors of a square integer matrix (Smith normal form
// diagonal), used for the lattice index above.
std::vector<BigInt> smith_diagonal(std::vector<std::vector<BigInt>> m);

// Exact prime factorization helper used for the bad-set generating integer:
// trial division then a deterministic primality check on the cofactor; throws
// budget_error when a composite cofactor is out of reach.
std::vector<std::pair<BigInt, int>> factor_integer(BigInt n);

}  // namespace bogocert
