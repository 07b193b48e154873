#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace ahdb {

/// Largest dimension accepted by the dense exact-arithmetic routines.
inline constexpr std::size_t kDenseMatrixLimit = 2000;

/// Dense square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  /// Zero matrix. Throws SizeLimit above kDenseMatrixLimit.
  explicit IntMatrix(std::size_t dim);

  static IntMatrix identity(std::size_t dim);
  static IntMatrix all_ones(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }

  mpz_class& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const mpz_class& operator()(std::size_t i, std::size_t j) const {
    return data_[i * dim_ + j];
  }

  mpz_class trace() const;
  mpz_class row_sum(std::size_t i) const;
  mpz_class column_sum(std::size_t j) const;

  /// Matrix with row `r` and column `c` removed.
  IntMatrix minor_matrix(std::size_t r, std::size_t c) const;

  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const mpz_class& s, const IntMatrix& a);
  /// Product; zero entries of the left operand are skipped, so sparse
  /// left factors (adjacency matrices) cost O(nnz * dim).
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t dim_ = 0;
  std::vector<mpz_class> data_;
};

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
mpz_class bareiss_determinant(IntMatrix m);

}  // namespace ahdb
