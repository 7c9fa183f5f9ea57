#pragma once

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "bogocert/poly_fp.hpp"

namespace bogocert {

using Rational = boost::multiprecision::cpp_rational;

// Working precision for bound values. Exponents in the bounds reach ~10^4, so
// the value itself is only ever held in log space; 64 digits leaves a wide
// margin over the 50 significant digits the certificates promise.
template <unsigned Digits>
using RealD = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<Digits>>;
using Real = RealD<64>;

// A positive real stored by its natural logarithm, or exact zero.
struct BigLogReal {
  Real natural_log{};
  bool is_zero = false;

  static BigLogReal zero() { return BigLogReal{Real{}, true}; }
  static BigLogReal from_log(Real ln) { return BigLogReal{std::move(ln), false}; }

  Real log10() const;
  std::string ln_string(int digits = 50) const;
  std::string log10_string(int digits = 50) const;
};

// log(exp(la) + exp(lb)) without leaving log space. The correction term is
// computed as log(1 + e^-d); its absolute error is far below the bound
// contracts, which are stated relative to log values of size >> 1.
template <class R>
R log_add_exp(const R& la, const R& lb) {
  const R& hi = la < lb ? lb : la;
  const R& lo = la < lb ? la : lb;
  return hi + boost::multiprecision::log(R(1) + boost::multiprecision::exp(lo - hi));
}

// log(exp(la) - exp(lb)); requires la > lb.
template <class R>
R log_sub_exp(const R& la, const R& lb) {
  if (!(lb < la)) throw std::domain_error("log_sub_exp: nonpositive difference");
  return la + boost::multiprecision::log(R(1) - boost::multiprecision::exp(lb - la));
}

template <class R>
R ln_bigint(const BigInt& n) {
  if (n <= 0) throw std::domain_error("ln_bigint: nonpositive argument");
  return boost::multiprecision::log(R(n));
}

// One multiplicative term of a log-space expression: sign * prod base^exp.
struct LogTerm {
  std::vector<std::pair<BigInt, long>> powers;  // bases must be positive
  int sign = 1;
};

// A signed one- or two-term sum, e.g. 4^361 + 1 or p^k - 2.
struct LogExpr {
  std::vector<LogTerm> terms;
};

// Evaluates the expression in log space; sums of two terms go through
// log-sum-exp so values like 4^361 + 1 never materialize. Throws
// std::domain_error when the expression value is not positive.
BigLogReal logspace_eval(const LogExpr& expr);

std::string real_to_string(const Real& v, int digits);

}  // namespace bogocert
