#include "dgca/rational.hpp"

#include <cctype>
#include <ostream>

#include "dgca/errors.hpp"

namespace dgca {

namespace {

mpq_class canonical(mpz_class num, mpz_class den) {
  if (den == 0) fail(Err::BadInput, "zero denominator");
  mpq_class q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

}  // namespace

Rational::Rational(long num, long den) : q_(canonical(mpz_class(num), mpz_class(den))) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(canonical(num, den)) {}

Rational Rational::parse(std::string_view s) {
  const auto bad = [&] { fail(Err::BadInput, "not a rational literal: '" + std::string(s) + "'"); };
  std::string_view rest = s;
  bool neg = false;
  if (!rest.empty() && rest.front() == '-') {
    neg = true;
    rest.remove_prefix(1);
  }
  const auto slash = rest.find('/');
  std::string_view num_part = rest.substr(0, slash);
  std::string_view den_part = slash == std::string_view::npos ? std::string_view("1") : rest.substr(slash + 1);
  const auto digits = [](std::string_view t) {
    if (t.empty()) return false;
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  if (!digits(num_part) || !digits(den_part)) bad();
  mpz_class num(std::string(num_part), 10);
  mpz_class den(std::string(den_part), 10);
  if (den == 0) bad();
  if (neg) num = -num;
  return Rational(num, den);
}

Rational Rational::reciprocal() const {
  if (is_zero()) fail(Err::BadInput, "reciprocal of zero");
  return Rational(den(), num());
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  if (is_zero()) {
    if (e < 0) fail(Err::BadInput, "negative power of zero");
    return Rational();
  }
  const Rational base = e < 0 ? reciprocal() : *this;
  const unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  mpz_class pn, pd;
  mpz_pow_ui(pn.get_mpz_t(), base.num().get_mpz_t(), k);
  mpz_pow_ui(pd.get_mpz_t(), base.den().get_mpz_t(), k);
  return Rational(pn, pd);  // already coprime
}

std::string Rational::str() const {
  if (den() == 1) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

Rational& Rational::operator+=(const Rational& b) { q_ += b.q_; return *this; }
Rational& Rational::operator-=(const Rational& b) { q_ -= b.q_; return *this; }
Rational& Rational::operator*=(const Rational& b) { q_ *= b.q_; return *this; }

Rational& Rational::operator/=(const Rational& b) {
  if (b.is_zero()) fail(Err::BadInput, "division by zero");
  q_ /= b.q_;
  return *this;
}

Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) fail(Err::BadInput, "division by zero");
  return Rational(mpq_class(a.q_ / b.q_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace dgca
