// Test-only fixed-point real arithmetic over boost cpp_int, used as the
// independent high-precision oracle for log-space values. Deliberately not
// built on the library's cpp_dec_float path: ln is an atanh series after
// binary range reduction, exp is a Taylor series after halving, sqrt is an
// integer square root. Default precision 230 decimal digits.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace bigfixed {

using boost::multiprecision::cpp_int;

inline cpp_int pow10(int n) {
  cpp_int r = 1;
  for (int i = 0; i < n; ++i) r *= 10;
  return r;
}

class BigFixed {
 public:
  // value = mant / 10^prec
  cpp_int mant;
  int prec;

  explicit BigFixed(int precision = 230) : mant(0), prec(precision) {}
  BigFixed(const cpp_int& integer_value, int precision)
      : mant(integer_value * pow10(precision)), prec(precision) {}
  static BigFixed from_mant(cpp_int m, int precision) {
    BigFixed x(precision);
    x.mant = std::move(m);
    return x;
  }
  static BigFixed from_ratio(const cpp_int& num, const cpp_int& den, int precision) {
    BigFixed x(precision);
    x.mant = num * pow10(precision) / den;
    return x;
  }

  BigFixed operator+(const BigFixed& o) const { return from_mant(mant + o.mant, prec); }
  BigFixed operator-(const BigFixed& o) const { return from_mant(mant - o.mant, prec); }
  BigFixed operator-() const { return from_mant(-mant, prec); }
  BigFixed operator*(const BigFixed& o) const {
    return from_mant(mant * o.mant / pow10(prec), prec);
  }
  BigFixed operator/(const BigFixed& o) const {
    if (o.mant == 0) throw std::domain_error("BigFixed: division by zero");
    return from_mant(mant * pow10(prec) / o.mant, prec);
  }
  BigFixed mul_int(long k) const { return from_mant(mant * k, prec); }
  BigFixed div_int(long k) const { return from_mant(mant / k, prec); }

  bool operator<(const BigFixed& o) const { return mant < o.mant; }
  bool is_zero() const { return mant == 0; }

  double to_double() const {
    // adequate for range estimates only
    cpp_int m = mant < 0 ? cpp_int(-mant) : mant;
    if (m == 0) return 0.0;
    auto bits = boost::multiprecision::msb(m);
    double approx;
    if (bits <= 1000) {
      approx = m.convert_to<double>();
    } else {
      approx = std::ldexp((m >> (bits - 52)).convert_to<double>(), static_cast<int>(bits - 52));
    }
    double v = approx * std::pow(10.0, -prec);
    return mant < 0 ? -v : v;
  }

  std::string to_string(int digits) const {
    cpp_int m = mant < 0 ? cpp_int(-mant) : mant;
    cpp_int ip = m / pow10(prec);
    cpp_int fp = m % pow10(prec);
    std::ostringstream os;
    if (mant < 0) os << '-';
    os << ip << '.';
    std::string frac = fp.convert_to<std::string>();
    frac.insert(frac.begin(), prec - frac.size(), '0');
    os << frac.substr(0, static_cast<size_t>(digits));
    return os.str();
  }
};

inline BigFixed bf_sqrt(const BigFixed& x) {
  if (x.mant < 0) throw std::domain_error("bf_sqrt: negative");
  return BigFixed::from_mant(boost::multiprecision::sqrt(x.mant * pow10(x.prec)), x.prec);
}

// 2 atanh(1/3), the binary reduction constant
inline BigFixed bf_ln2(int prec) {
  cpp_int scale = pow10(prec + 10);
  cpp_int z = scale / 3;  // (1/3) at guard precision
  cpp_int term = z;
  cpp_int acc = 0;
  long n = 1;
  while (term != 0) {
    acc += term / n;
    term /= 9;
    n += 2;
  }
  acc *= 2;
  return BigFixed::from_mant(acc / pow10(10), prec);
}

inline BigFixed bf_ln(const BigFixed& x) {
  if (x.mant <= 0) throw std::domain_error("bf_ln: nonpositive");
  int prec = x.prec;
  const cpp_int one = pow10(prec);
  // binary range reduction to y in [1, 2)
  cpp_int m = x.mant;
  long k = 0;
  while (m >= 2 * one) {
    long shift = static_cast<long>(boost::multiprecision::msb(m) - boost::multiprecision::msb(2 * one));
    if (shift < 1) shift = 1;
    m >>= shift;
    k += shift;
  }
  while (m < one) {
    m <<= 1;
    --k;
  }
  if (m >= 2 * one) {
    m >>= 1;
    ++k;
  }
  // atanh series: ln y = 2 sum z^(2i+1)/(2i+1), z = (y-1)/(y+1) in [0, 1/3)
  cpp_int guard = pow10(prec + 10);
  cpp_int z = (m - one) * guard / (m + one);
  cpp_int z2 = z * z / guard;
  cpp_int term = z;
  cpp_int acc = 0;
  long n = 1;
  while (term != 0) {
    acc += term / n;
    term = term * z2 / guard;
    n += 2;
  }
  acc *= 2;
  BigFixed lny = BigFixed::from_mant(acc / pow10(10), prec);
  BigFixed ln2 = bf_ln2(prec);
  return lny + ln2.mul_int(k);
}

inline BigFixed bf_exp(const BigFixed& x) {
  int prec = x.prec;
  double estimate = x.to_double();
  if (std::fabs(estimate) > 1.0e6) throw std::domain_error("bf_exp: argument out of supported range");
  // halve until |r| <= 1/2, Taylor, then square back
  int k = 0;
  cpp_int m = x.mant;
  cpp_int one = pow10(prec);
  cpp_int half = one / 2;
  while (m > half || m < -half) {
    m /= 2;
    ++k;
  }
  cpp_int guard = pow10(prec + 10);
  cpp_int r = m * pow10(10);  // r at guard precision
  cpp_int term = guard;
  cpp_int acc = guard;
  long n = 1;
  while (term != 0) {
    term = term * r / guard / n;
    acc += term;
    ++n;
  }
  BigFixed result = BigFixed::from_mant(acc / pow10(10), prec);
  for (int i = 0; i < k; ++i) result = result * result;
  return result;
}

// ln of an exact positive integer
inline BigFixed bf_ln_int(const cpp_int& n, int prec) {
  if (n <= 0) throw std::domain_error("bf_ln_int: nonpositive");
  return bf_ln(BigFixed(n, prec));
}

// The supersingular-prime height bound of the certificates, evaluated in this
// oracle arithmetic:
//   ln bound = -ln(4^A + 1)
//              + (2 + 4/(p^(A/4) - 2)) * (ln ln p - ln(dv (40 sqrt2 + 2) degk) - (2A + 2) ln p)
// with A = p^2 dv. 4^A + 1 is formed as an exact integer.
inline BigFixed oracle_bound_ln(unsigned long p, int dv, int deg_k, int prec) {
  cpp_int A = cpp_int(p) * p * dv;
  cpp_int four_pow = boost::multiprecision::pow(cpp_int(4), A.convert_to<unsigned>());
  BigFixed ln_first = bf_ln_int(four_pow + 1, prec);

  BigFixed ln_p = bf_ln_int(cpp_int(p), prec);
  BigFixed quarterA = BigFixed(A, prec).div_int(4);
  BigFixed t = bf_exp(quarterA * ln_p);  // p^(A/4)
  BigFixed two(cpp_int(2), prec);
  BigFixed exponent = two + BigFixed(cpp_int(4), prec) / (t - two);

  BigFixed sqrt2 = bf_sqrt(BigFixed(cpp_int(2), prec));
  BigFixed constant = sqrt2.mul_int(40) + two;
  BigFixed ln_den = bf_ln(BigFixed(cpp_int(dv), prec) * constant * BigFixed(cpp_int(deg_k), prec));
  BigFixed ln_base = bf_ln(ln_p) - ln_den - ln_p * BigFixed(2 * A + 2, prec);

  return -ln_first + exponent * ln_base;
}

}  // namespace bigfixed
