#include "bogocert/logreal.hpp"

#include <sstream>
#include <stdexcept>

namespace bogocert {

namespace {

Real ln10() {
  static const Real v = boost::multiprecision::log(Real(10));
  return v;
}

struct TermLog {
  Real ln{};
  int sign = 1;
  bool is_zero = false;
};

TermLog term_log(const LogTerm& t) {
  TermLog out;
  out.sign = t.sign;
  Real acc = 0;
  for (const auto& [base, exp] : t.powers) {
    if (base <= 0) throw std::domain_error("logspace_eval: nonpositive base");
    if (base == 1 || exp == 0) continue;
    acc += Real(exp) * ln_bigint<Real>(base);
  }
  out.ln = acc;
  return out;
}

}  // namespace

Real BigLogReal::log10() const {
  if (is_zero) throw std::domain_error("BigLogReal: zero has no logarithm");
  return natural_log / ln10();
}

std::string real_to_string(const Real& v, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

std::string BigLogReal::ln_string(int digits) const { return real_to_string(natural_log, digits); }
std::string BigLogReal::log10_string(int digits) const { return real_to_string(log10(), digits); }

BigLogReal logspace_eval(const LogExpr& expr) {
  if (expr.terms.empty() || expr.terms.size() > 2)
    throw std::domain_error("logspace_eval: expression must have one or two terms");
  TermLog first = term_log(expr.terms[0]);
  if (expr.terms.size() == 1) {
    if (first.sign <= 0) throw std::domain_error("logspace_eval: nonpositive value");
    return BigLogReal::from_log(first.ln);
  }
  TermLog second = term_log(expr.terms[1]);
  if (first.sign > 0 && second.sign > 0)
    return BigLogReal::from_log(log_add_exp(first.ln, second.ln));
  if (first.sign < 0 && second.sign < 0) throw std::domain_error("logspace_eval: nonpositive value");
  const TermLog& pos = first.sign > 0 ? first : second;
  const TermLog& neg = first.sign > 0 ? second : first;
  if (!(neg.ln < pos.ln)) throw std::domain_error("logspace_eval: nonpositive value");
  return BigLogReal::from_log(log_sub_exp(pos.ln, neg.ln));
}

}  // namespace bogocert
