#include "ahdb/int_matrix.hpp"

#include <utility>

#include "ahdb/error.hpp"

namespace ahdb {

IntMatrix::IntMatrix(std::size_t dim) : dim_(dim) {
  if (dim > kDenseMatrixLimit) {
    throw Error(ErrorKind::SizeLimit, "dense matrix dimension " + std::to_string(dim) +
                                          " exceeds the limit of " +
                                          std::to_string(kDenseMatrixLimit));
  }
  data_.resize(dim * dim);
}

IntMatrix IntMatrix::identity(std::size_t dim) {
  IntMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::all_ones(std::size_t dim) {
  IntMatrix m(dim);
  for (auto& x : m.data_) x = 1;
  return m;
}

mpz_class IntMatrix::trace() const {
  mpz_class t = 0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

mpz_class IntMatrix::row_sum(std::size_t i) const {
  mpz_class s = 0;
  for (std::size_t j = 0; j < dim_; ++j) s += (*this)(i, j);
  return s;
}

mpz_class IntMatrix::column_sum(std::size_t j) const {
  mpz_class s = 0;
  for (std::size_t i = 0; i < dim_; ++i) s += (*this)(i, j);
  return s;
}

IntMatrix IntMatrix::minor_matrix(std::size_t r, std::size_t c) const {
  IntMatrix m(dim_ - 1);
  for (std::size_t i = 0, mi = 0; i < dim_; ++i) {
    if (i == r) continue;
    for (std::size_t j = 0, mj = 0; j < dim_; ++j) {
      if (j == c) continue;
      m(mi, mj++) = (*this)(i, j);
    }
    ++mi;
  }
  return m;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.dim_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] + b.data_[i];
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.dim_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] - b.data_[i];
  return out;
}

IntMatrix operator*(const mpz_class& s, const IntMatrix& a) {
  IntMatrix out(a.dim_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = s * a.data_[i];
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.dim_;
  IntMatrix out(n);
  mpz_class term;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < n; ++t) {
      const mpz_class& lhs = a(i, t);
      if (sgn(lhs) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        mpz_addmul(out(i, j).get_mpz_t(), lhs.get_mpz_t(), b(t, j).get_mpz_t());
      }
    }
  }
  return out;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.dim_ == b.dim_ && a.data_ == b.data_;
}

mpz_class bareiss_determinant(IntMatrix m) {
  const std::size_t n = m.dim();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t p = 0; p + 1 < n; ++p) {
    if (sgn(m(p, p)) == 0) {
      std::size_t swap_row = p + 1;
      while (swap_row < n && sgn(m(swap_row, p)) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = p; j < n; ++j) std::swap(m(p, j), m(swap_row, j));
      sign = -sign;
    }
    const mpz_class& pivot = m(p, p);
    for (std::size_t i = p + 1; i < n; ++i) {
      const mpz_class lead = m(i, p);
      for (std::size_t j = p + 1; j < n; ++j) {
        // m(i,j) = (pivot * m(i,j) - lead * m(p,j)) / prev, exact.
        mpz_class& x = m(i, j);
        x *= pivot;
        if (sgn(lead) != 0) mpz_submul(x.get_mpz_t(), lead.get_mpz_t(), m(p, j).get_mpz_t());
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, p) = 0;
    }
    prev = pivot;
  }
  mpz_class det = m(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

}  // namespace ahdb
