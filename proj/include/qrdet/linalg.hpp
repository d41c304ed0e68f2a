// Dense exact linear algebra over F_p: the production determinant (Gaussian
// elimination) and independent small-order oracles (permutation expansion,
// both mod p and over the integers).
#pragma once

#include <span>
#include <vector>

#include "qrdet/fp.hpp"

namespace qrdet {

// Dense n x n matrix of canonical residues sharing one prime modulus.
// Accessors are 1-based, matching the index convention of the determinant
// families built on top (entry (i,j) for 1 <= i,j <= n).
class SquareMatrix {
 public:
  SquareMatrix(std::size_t order, u32 modulus);  // zero-filled

  std::size_t order() const noexcept { return order_; }
  u32 modulus() const noexcept { return modulus_; }

  FieldElement at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const FieldElement& v);

  u32 raw_at(std::size_t i, std::size_t j) const;
  void set_raw(std::size_t i, std::size_t j, u32 v);  // v must already be canonical

  std::span<const u32> entries() const noexcept { return entries_; }

  SquareMatrix transposed() const;

 private:
  std::size_t index(std::size_t i, std::size_t j) const;

  std::size_t order_;
  u32 modulus_;
  std::vector<u32> entries_;  // row-major
};

/// Determinant by forward elimination with first-nonzero pivoting and swap
/// parity. The input is copied, never mutated.
FieldElement det_elimination(const SquareMatrix& m);

/// Cap on the permutation-expansion oracles (cost n * n!).
inline constexpr std::size_t kOracleOrderLimit = 9;

/// Determinant by explicit permutation expansion; order <= 9.
FieldElement det_permutation_oracle(const SquareMatrix& m);

/// Exact integer determinant of a small-entry matrix (row-major), order <= 9.
/// Intended for symbol matrices with entries in {-1, 0, +1}.
i64 det_integer_oracle(std::span<const int> entries, std::size_t order);

/// Closed form for det[P(X_i Y_j)] where P(x) = sum_k coeffs[k] x^k has
/// degree below n: coeffs[0]...coeffs[n-1] times prod_{i<j}(X_i-X_j)(Y_i-Y_j).
FieldElement krattenthaler_det(std::span<const FieldElement> coeffs,
                               std::span<const FieldElement> xs,
                               std::span<const FieldElement> ys);

}  // namespace qrdet
