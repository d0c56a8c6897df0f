#include "dgca/integer_matrix.hpp"

#include "dgca/errors.hpp"

namespace dgca {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::vector<mpz_class> IntMatrix::row(std::size_t r) const {
  return {a.begin() + static_cast<long>(r * cols), a.begin() + static_cast<long>((r + 1) * cols)};
}

void IntMatrix::append_row(const std::vector<mpz_class>& v) {
  if (v.size() != cols) fail(Err::BadInput, "row length mismatch");
  a.insert(a.end(), v.begin(), v.end());
  ++rows;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols, rows);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
  return t;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) fail(Err::BadInput, "matmul shape mismatch");
  IntMatrix p(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) p.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return p;
}

mpz_class det(const IntMatrix& m) {
  if (m.rows != m.cols) fail(Err::BadInput, "det expects a square matrix");
  const std::size_t n = m.rows;
  if (n == 0) return 1;
  IntMatrix w = m;
  int sign = 1;
  mpz_class prev = 1;
  // Bareiss fraction-free elimination; divisions are exact.
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      std::size_t swap_row = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (w.at(i, k) != 0) {
          swap_row = i;
          break;
        }
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
        mpz_divexact(w.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = w.at(k, k);
  }
  return sign < 0 ? mpz_class(-w.at(n - 1, n - 1)) : w.at(n - 1, n - 1);
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols; ++j) m.at(r, j) = -m.at(r, j);
}

// row_dst -= f * row_src
void submul_row(IntMatrix& m, std::size_t dst, std::size_t src, const mpz_class& f) {
  if (f == 0) return;
  for (std::size_t j = 0; j < m.cols; ++j) m.at(dst, j) -= f * m.at(src, j);
}

}  // namespace

HnfResult hnf(const IntMatrix& m) {
  HnfResult res;
  res.h = m;
  res.u = IntMatrix::identity(m.rows);
  IntMatrix& h = res.h;
  IntMatrix& u = res.u;
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols && r < h.rows; ++c) {
    bool any = false;
    for (std::size_t q = r; q < h.rows && !any; ++q) any = h.at(q, c) != 0;
    if (!any) continue;
    for (;;) {
      std::size_t best = h.rows;
      for (std::size_t q = r; q < h.rows; ++q) {
        if (h.at(q, c) == 0) continue;
        if (best == h.rows || mpz_cmpabs(h.at(q, c).get_mpz_t(), h.at(best, c).get_mpz_t()) < 0)
          best = q;
      }
      swap_rows(h, r, best);
      swap_rows(u, r, best);
      if (h.at(r, c) < 0) {
        negate_row(h, r);
        negate_row(u, r);
      }
      bool clean = true;
      for (std::size_t q = r + 1; q < h.rows; ++q) {
        if (h.at(q, c) == 0) continue;
        mpz_class f;
        mpz_fdiv_q(f.get_mpz_t(), h.at(q, c).get_mpz_t(), h.at(r, c).get_mpz_t());
        submul_row(h, q, r, f);
        submul_row(u, q, r, f);
        if (h.at(q, c) != 0) clean = false;
      }
      if (clean) break;
    }
    // Entries above the pivot go into [0, pivot). The pivot row has zeros in
    // all earlier pivot columns, so prior reductions are preserved.
    for (std::size_t q = 0; q < r; ++q) {
      mpz_class f;
      mpz_fdiv_q(f.get_mpz_t(), h.at(q, c).get_mpz_t(), h.at(r, c).get_mpz_t());
      submul_row(h, q, r, f);
      submul_row(u, q, r, f);
    }
    ++r;
  }
  res.rank = r;
  return res;
}

std::size_t rank_of(const IntMatrix& m) { return hnf(m).rank; }

DiagonalizeResult diagonalize(const IntMatrix& m) {
  DiagonalizeResult res;
  res.d = m;
  res.u = IntMatrix::identity(m.rows);
  res.v = IntMatrix::identity(m.cols);
  const auto off_diagonal = [](const IntMatrix& w) {
    for (std::size_t r = 0; r < w.rows; ++r)
      for (std::size_t c = 0; c < w.cols; ++c)
        if (r != c && w.at(r, c) != 0) return true;
    return false;
  };
  // Alternate row and column Hermite passes; pivot magnitudes shrink by
  // gcd steps, so this settles on a diagonal quickly.
  for (int round = 0; round < 512; ++round) {
    HnfResult rows = hnf(res.d);
    res.d = std::move(rows.h);
    res.u = matmul(rows.u, res.u);
    if (!off_diagonal(res.d)) break;
    HnfResult cols = hnf(res.d.transposed());
    res.d = cols.h.transposed();
    res.v = matmul(res.v, cols.u.transposed());
    if (!off_diagonal(res.d)) break;
  }
  if (off_diagonal(res.d)) fail(Err::BadInput, "internal: diagonalization did not converge");
  std::size_t rank = 0;
  for (std::size_t i = 0; i < std::min(res.d.rows, res.d.cols); ++i)
    if (res.d.at(i, i) != 0) ++rank;
  res.rank = rank;
  return res;
}

IntMatrix left_kernel_basis(const IntMatrix& m) {
  const HnfResult res = hnf(m);
  IntMatrix k(0, m.rows);
  for (std::size_t q = res.rank; q < m.rows; ++q) k.append_row(res.u.row(q));
  if (k.rows == 0) return k;
  return hnf(k).h;
}

bool in_rational_span(const std::vector<mpz_class>& v, const IntegerLattice& lat) {
  if (v.size() != lat.ambient_dim) fail(Err::DimMismatch, "vector length vs lattice ambient dim");
  const std::size_t base = rank_of(lat.basis);
  IntMatrix ext = lat.basis;
  if (ext.cols == 0 && ext.rows == 0) ext = IntMatrix(0, lat.ambient_dim);
  ext.append_row(v);
  return rank_of(ext) == base;
}

}  // namespace dgca
