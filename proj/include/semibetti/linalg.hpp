#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "semibetti/error.hpp"

namespace semibetti {

/// Coefficient field for homology: characteristic 0 is the rationals,
/// anything else a prime field GF(p).
struct CoefficientField {
  std::uint32_t characteristic = 0;

  static constexpr CoefficientField rationals() { return {0}; }
  static constexpr CoefficientField prime(std::uint32_t p) { return {p}; }
  bool is_rational() const noexcept { return characteristic == 0; }
  std::string name() const { return is_rational() ? "QQ" : "GF(" + std::to_string(characteristic) + ")"; }
  friend bool operator==(CoefficientField, CoefficientField) = default;
};

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Sparse integer matrix stored by rows; each row lists (column, value)
/// pairs with strictly increasing columns and nonzero values.
struct SparseIntMatrix {
  using Row = std::vector<std::pair<std::uint32_t, Int>>;
  std::size_t cols = 0;
  std::vector<Row> rows;

  IntMatrix to_dense() const;
};

/// Rank over QQ by fraction-free (Bareiss) elimination. Runs in 64-bit
/// integers and restarts in arbitrary precision if an intermediate overflows.
std::size_t rank_rational(const IntMatrix& m);

/// Rank over GF(p), p prime.
std::size_t rank_mod_prime(const IntMatrix& m, std::uint32_t p);

std::size_t rank(const IntMatrix& m, CoefficientField field);

/// Exact rank of a sparse matrix. Eliminates on unit pivots while any are
/// left (entries stay integral), then hands the remaining block to the
/// dense routines.
std::size_t rank(const SparseIntMatrix& m, CoefficientField field);

}  // namespace semibetti
