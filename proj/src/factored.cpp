#include "dgca/factored.hpp"

#include <optional>

#include "dgca/errors.hpp"

namespace dgca {

namespace {

mpz_class pollard_rho(const mpz_class& n) {
  // n odd, composite, no factors below the trial-division bound.
  for (unsigned long c = 1;; ++c) {
    mpz_class x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      mpz_class diff = x > y ? x - y : y - x;
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(mpz_class n, std::map<mpz_class, unsigned long>& out) {
  if (n <= 1) return;
  for (const mpz_class& p : {mpz_class(2), mpz_class(3), mpz_class(5)}) {
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      ++out[p];
      n /= p;
    }
  }
  mpz_class d = 7;
  const long kTrialBound = 1000000;
  while (d <= kTrialBound && d * d <= n) {
    while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      ++out[d];
      n /= d;
    }
    d += 2;
  }
  if (n == 1) return;
  if (d * d > n || mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
    ++out[n];
    return;
  }
  mpz_class f = pollard_rho(n);
  factor_into(f, out);
  factor_into(n / f, out);
}

}  // namespace

std::vector<std::pair<mpz_class, unsigned long>> factorize(const mpz_class& n) {
  if (n < 1) fail(Err::BadInput, "factorize expects n >= 1");
  std::map<mpz_class, unsigned long> acc;
  factor_into(n, acc);
  return {acc.begin(), acc.end()};
}

RadicalValue RadicalValue::of(const Rational& r) {
  RadicalValue v;
  v.mul_pow(r, Rational(1));
  return v;
}

void RadicalValue::mul_pow(const Rational& base, const Rational& e) {
  if (base.is_zero()) fail(Err::BadInput, "radical base must be nonzero");
  if (e.is_zero()) return;
  if (base.sign() < 0) neg_exp_ += e;
  mpz_class num = abs(base.num());
  for (const auto& [p, k] : factorize(num)) {
    Rational& slot = exp_[p];
    slot += e * Rational(static_cast<long>(k));
    if (slot.is_zero()) exp_.erase(p);
  }
  for (const auto& [p, k] : factorize(base.den())) {
    Rational& slot = exp_[p];
    slot -= e * Rational(static_cast<long>(k));
    if (slot.is_zero()) exp_.erase(p);
  }
}

void RadicalValue::mul(const RadicalValue& other) {
  neg_exp_ += other.neg_exp_;
  for (const auto& [p, e] : other.exp_) {
    Rational& slot = exp_[p];
    slot += e;
    if (slot.is_zero()) exp_.erase(p);
  }
}

bool RadicalValue::equals(const RadicalValue& other) const {
  if (exp_ != other.exp_) return false;
  const Rational d = neg_exp_ - other.neg_exp_;
  return d.den() == 1 && mpz_even_p(d.num().get_mpz_t());
}

bool RadicalValue::is_one() const { return equals(RadicalValue()); }

std::optional<Rational> RadicalValue::as_rational() const {
  if (neg_exp_.den() != 1) return std::nullopt;
  Rational v = mpz_even_p(neg_exp_.num().get_mpz_t()) ? Rational(1) : Rational(-1);
  for (const auto& [p, e] : exp_) {
    if (e.den() != 1 || !e.num().fits_slong_p()) return std::nullopt;
    v *= Rational(p).pow(e.num().get_si());
  }
  return v;
}

}  // namespace dgca
