#include "qrdet/linalg.hpp"

#include <array>
#include <numeric>
#include <stdexcept>

namespace qrdet {

SquareMatrix::SquareMatrix(std::size_t order, u32 modulus)
    : order_(order), modulus_(modulus), entries_(order * order, 0) {
  if (order == 0) throw std::invalid_argument("matrix order must be >= 1");
  validate_modulus(modulus);
}

std::size_t SquareMatrix::index(std::size_t i, std::size_t j) const {
  if (i < 1 || i > order_ || j < 1 || j > order_) {
    throw std::out_of_range("matrix index out of range");
  }
  return (i - 1) * order_ + (j - 1);
}

FieldElement SquareMatrix::at(std::size_t i, std::size_t j) const {
  return FieldElement(static_cast<i64>(entries_[index(i, j)]), modulus_);
}

void SquareMatrix::set(std::size_t i, std::size_t j, const FieldElement& v) {
  if (v.modulus() != modulus_) throw std::invalid_argument("entry modulus mismatch");
  entries_[index(i, j)] = v.value();
}

u32 SquareMatrix::raw_at(std::size_t i, std::size_t j) const { return entries_[index(i, j)]; }

void SquareMatrix::set_raw(std::size_t i, std::size_t j, u32 v) {
  if (v >= modulus_) throw std::invalid_argument("entry not a canonical residue");
  entries_[index(i, j)] = v;
}

SquareMatrix SquareMatrix::transposed() const {
  SquareMatrix t(order_, modulus_);
  for (std::size_t i = 1; i <= order_; ++i) {
    for (std::size_t j = 1; j <= order_; ++j) t.set_raw(j, i, raw_at(i, j));
  }
  return t;
}

FieldElement det_elimination(const SquareMatrix& m) {
  const std::size_t n = m.order();
  const u64 p = m.modulus();
  std::vector<u32> a(m.entries().begin(), m.entries().end());
  auto at = [&](std::size_t r, std::size_t c) -> u32& { return a[r * n + c]; };

  u64 det = 1;
  bool negate = false;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && at(pivot, c) == 0) ++pivot;
    if (pivot == n) return FieldElement(0, m.modulus());
    if (pivot != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(at(c, j), at(pivot, j));
      negate = !negate;
    }
    det = det * at(c, c) % p;
    const u64 inv = raw::inv(at(c, c), p);
    for (std::size_t j = c; j < n; ++j) {
      at(c, j) = static_cast<u32>(at(c, j) * inv % p);
    }
    for (std::size_t r = c + 1; r < n; ++r) {
      const u64 f = at(r, c);
      if (f == 0) continue;
      at(r, c) = 0;
      for (std::size_t j = c + 1; j < n; ++j) {
        at(r, j) = static_cast<u32>((at(r, j) + p - f * at(c, j) % p) % p);
      }
    }
  }
  if (negate) det = (p - det) % p;
  return FieldElement(static_cast<i64>(det), m.modulus());
}

namespace {

// Heap's algorithm visits each permutation via a single transposition, so
// the sign just alternates with every step.
template <typename Term>
void for_each_permutation(std::size_t n, Term&& visit) {
  std::array<std::size_t, kOracleOrderLimit> perm{};
  std::array<std::size_t, kOracleOrderLimit> c{};
  std::iota(perm.begin(), perm.begin() + n, 0);
  int sign = 1;
  visit(std::span<const std::size_t>(perm.data(), n), sign);
  std::size_t i = 0;
  while (i < n) {
    if (c[i] < i) {
      std::swap(perm[i % 2 == 0 ? 0 : c[i]], perm[i]);
      sign = -sign;
      visit(std::span<const std::size_t>(perm.data(), n), sign);
      ++c[i];
      i = 0;
    } else {
      c[i] = 0;
      ++i;
    }
  }
}

}  // namespace

FieldElement det_permutation_oracle(const SquareMatrix& m) {
  const std::size_t n = m.order();
  if (n > kOracleOrderLimit) {
    throw std::invalid_argument("permutation oracle supports order <= 9");
  }
  const u64 p = m.modulus();
  const auto e = m.entries();
  u64 acc = 0;
  for_each_permutation(n, [&](std::span<const std::size_t> perm, int sign) {
    u64 term = 1;
    for (std::size_t i = 0; i < n; ++i) term = term * e[i * n + perm[i]] % p;
    acc = (acc + (sign > 0 ? term : (p - term) % p)) % p;
  });
  return FieldElement(static_cast<i64>(acc), m.modulus());
}

i64 det_integer_oracle(std::span<const int> entries, std::size_t order) {
  if (order == 0 || order > kOracleOrderLimit) {
    throw std::invalid_argument("integer oracle supports 1 <= order <= 9");
  }
  if (entries.size() != order * order) {
    throw std::invalid_argument("entry count does not match order");
  }
  i64 acc = 0;
  for_each_permutation(order, [&](std::span<const std::size_t> perm, int sign) {
    i64 term = 1;
    for (std::size_t i = 0; i < order; ++i) term *= entries[i * order + perm[i]];
    acc += sign * term;
  });
  return acc;
}

FieldElement krattenthaler_det(std::span<const FieldElement> coeffs,
                               std::span<const FieldElement> xs,
                               std::span<const FieldElement> ys) {
  const std::size_t n = coeffs.size();
  if (n == 0 || xs.size() != n || ys.size() != n) {
    throw std::invalid_argument("coefficient and point lists must share a length n >= 1");
  }
  const u32 p = coeffs[0].modulus();
  for (const auto* list : {&coeffs, &xs, &ys}) {
    for (const FieldElement& v : *list) {
      if (v.modulus() != p) throw std::invalid_argument("modulus mismatch across inputs");
    }
  }
  FieldElement result(1, p);
  for (const FieldElement& a : coeffs) result = result * a;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      result = result * (xs[i] - xs[j]) * (ys[i] - ys[j]);
    }
  }
  return result;
}

}  // namespace qrdet
