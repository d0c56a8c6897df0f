#include "dgca/binomial.hpp"

#include "dgca/errors.hpp"

namespace dgca {

namespace {

Rational monomial(const std::vector<Rational>& rhs, const std::vector<mpz_class>& expo) {
  Rational v(1);
  for (std::size_t e = 0; e < expo.size(); ++e) {
    if (expo[e] == 0) continue;
    if (!expo[e].fits_slong_p()) fail(Err::BadInput, "kernel exponent out of range");
    v *= rhs[e].pow(expo[e].get_si());
  }
  return v;
}

}  // namespace

BinomialSolution solve_binomial(const IntMatrix& a, const std::vector<Rational>& rhs) {
  if (rhs.size() != a.rows) fail(Err::DimMismatch, "rhs length vs system rows");
  for (std::size_t e = 0; e < rhs.size(); ++e)
    if (rhs[e].is_zero()) fail(Err::ZeroRhsEntry, "rhs entry " + std::to_string(e) + " is zero");

  BinomialSolution sol;
  const IntMatrix kernel = left_kernel_basis(a);
  sol.solvable = true;
  for (std::size_t r = 0; r < kernel.rows; ++r) {
    BinomialObstruction ob;
    ob.kernel_vector = kernel.row(r);
    ob.monomial_value = monomial(rhs, ob.kernel_vector);
    if (!ob.monomial_value.is_one()) sol.solvable = false;
    sol.obstructions.push_back(std::move(ob));
  }
  if (!sol.solvable) return sol;

  // With u*A*v = d diagonal, b = v * d^+ * u applied to the right-hand sides
  // in exponent form solves the system; the dropped diagonal rows are the
  // kernel characters already checked, with even sign balance, so the
  // identity holds for the formal radicals including signs.
  const DiagonalizeResult dia = diagonalize(a);
  RatMatrix w(a.cols, a.rows);
  for (std::size_t v = 0; v < a.cols; ++v)
    for (std::size_t e = 0; e < a.rows; ++e) {
      Rational sum;
      for (std::size_t i = 0; i < dia.rank; ++i) {
        if (dia.v.at(v, i) == 0 || dia.u.at(i, e) == 0) continue;
        sum += Rational(dia.v.at(v, i) * dia.u.at(i, e), dia.d.at(i, i));
      }
      w.at(v, e) = sum;
    }
  sol.witness_exponents = std::move(w);
  return sol;
}

}  // namespace dgca
