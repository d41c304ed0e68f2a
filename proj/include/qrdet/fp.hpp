// Exact arithmetic in the prime field F_p plus the number-theoretic
// primitives (Legendre symbol, factorials, binomials, primality) that the
// determinant and congruence checks are built from.
//
// All moduli are odd primes below 2^31 so that any product of two canonical
// residues fits into an unsigned 64-bit intermediate.
#pragma once

#include <cstdint>
#include <vector>

namespace qrdet {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

// Largest supported modulus (exclusive).
inline constexpr u32 kMaxModulus = 0x80000000u;

/// Deterministic primality for the full 64-bit range (Miller-Rabin with a
/// fixed base set, exact 128-bit intermediates).
bool is_prime(u64 x);

/// All primes in [lo, hi], ascending.
std::vector<u32> primes_in_range(u32 lo, u32 hi);

/// n = (p-1)/2, the order of the determinant families for modulus p.
constexpr u32 half_index(u32 p) noexcept { return (p - 1) / 2; }

// Raw helpers on canonical residues. No modulus validation; callers
// guarantee mod is an odd prime < 2^31 and inputs are reduced.
namespace raw {
inline u64 mul(u64 a, u64 b, u64 mod) { return a * b % mod; }
u64 pow(u64 base, u64 exp, u64 mod);
u64 inv(u64 a, u64 mod);  // a != 0, mod prime
}  // namespace raw

/// Throws std::invalid_argument unless p is an odd prime < 2^31.
/// Memoizes the last accepted modulus per thread, so repeated construction
/// against the same prime costs one comparison.
void validate_modulus(u32 p);

// A canonical residue in [0, p) tied to its prime modulus. Arithmetic
// between elements of different moduli throws; there is no implicit
// coercion anywhere.
class FieldElement {
 public:
  FieldElement(i64 value, u32 modulus);

  u32 value() const noexcept { return value_; }
  u32 modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return value_ == 0; }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  u32 value_;
  u32 modulus_;
};

FieldElement operator+(const FieldElement& a, const FieldElement& b);
FieldElement operator-(const FieldElement& a, const FieldElement& b);
FieldElement operator*(const FieldElement& a, const FieldElement& b);
FieldElement operator-(const FieldElement& a);

/// a^e with 0^0 = 1 (empty product).
FieldElement pow(const FieldElement& a, u64 e);

/// Multiplicative inverse; throws std::domain_error on zero.
FieldElement inverse(const FieldElement& a);

// The Legendre symbol as a value in {-1, 0, +1}. Zero iff the argument was
// divisible by the modulus.
class SymbolValue {
 public:
  explicit SymbolValue(int v);

  int value() const noexcept { return v_; }
  /// Embedding into F_p: -1 maps to p-1.
  FieldElement as_field(u32 p) const;

  friend bool operator==(const SymbolValue&, const SymbolValue&) = default;

 private:
  int v_;
};

/// (a/p) by Euler's criterion. p must be an odd prime.
SymbolValue legendre(i64 a, u32 p);

/// k! mod p for 0 <= k < p. Backed by a per-prime table for p <= 10^6,
/// direct product otherwise. The table is built once and read-only after.
FieldElement factorial_mod(u32 k, u32 p);

/// k!! = k(k-2)(k-4)... down to 1 or 2; 0!! = (-1)!! = 1. Requires -1 <= k < p.
FieldElement double_factorial_mod(i64 k, u32 p);

/// binom(m, k) mod p for 0 <= k <= m < p (no factor p can appear).
FieldElement binomial_mod(u32 m, u32 k, u32 p);

}  // namespace qrdet
