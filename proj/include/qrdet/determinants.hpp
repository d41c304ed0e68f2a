// Builders and evaluators for the quadratic-residue determinant families
// S_m(d,p) = det[(i^2 + d j^2)^m] and S(d,p) = det[((i^2 + d j^2)/p)], the
// extended (0-indexed) variant, and the auxiliary product identities.
#pragma once

#include <span>
#include <utility>
#include <vector>

#include "qrdet/fp.hpp"
#include "qrdet/linalg.hpp"

namespace qrdet {

// Parameters (p, d, m) of one member of the S_m family. d is stored as a
// canonical nonzero residue; any exponent m >= 0 is accepted here, the
// verification layer enforces the ranges the individual results need.
struct DeterminantFamilyParams {
  DeterminantFamilyParams(u32 p, i64 d, u64 m);

  u32 p;
  u32 d;
  u64 m;
};

/// Table of x^m mod p for all x in [0, p); shared across d values when
/// building several matrices with the same (p, m).
std::vector<u32> power_table(u32 p, u64 m);

/// Entry (i,j) = (i^2 + d j^2)^m, 1 <= i,j <= (p-1)/2. Requires p >= 5.
SquareMatrix build_sm_matrix(const DeterminantFamilyParams& params);
SquareMatrix build_sm_matrix(const DeterminantFamilyParams& params, std::span<const u32> powers);

FieldElement compute_sm(const DeterminantFamilyParams& params);
FieldElement compute_sm(u32 p, i64 d, u64 m);

/// Entry (i,j) = ((i^2 + d j^2)/p) embedded into F_p (-1 maps to p-1).
SquareMatrix build_legendre_matrix(u32 p, i64 d);
FieldElement compute_s(u32 p, i64 d);

/// The same determinant as an exact signed integer over the {-1,0,+1}
/// entries; requires (p-1)/2 <= 9.
i64 compute_s_integer(u32 p, i64 d);

/// (n+1) x (n+1) variant over indices 0 <= i,j <= (p-1)/2. Only defined for
/// exponents strictly inside ((p-1)/2, p-1).
SquareMatrix build_extended_matrix(u32 p, i64 d, u64 m);
SquareMatrix build_extended_matrix(u32 p, i64 d, u64 m, std::span<const u32> powers);
FieldElement compute_extended_det(u32 p, i64 d, u64 m);

/// prod_{1 <= i < j <= (p-1)/2} (j^2 - i^2) mod p.
FieldElement square_difference_product(u32 p);
/// Its known value: -((p-1)/2)! when p = 1 (mod 4), 1 when p = 3 (mod 4).
FieldElement square_difference_product_expected(u32 p);

/// prod_{1 <= i < j <= (p-1)/2} (i^2 - j^2)(i^{-2} - j^{-2}) mod p.
FieldElement square_reciprocal_product(u32 p);
/// Its known value: (-1)^{floor(p/4)}.
FieldElement square_reciprocal_product_expected(u32 p);

// Both sides of the subset-product identity
//   prod_{1 <= i_1 < ... < i_m <= n} i_1...i_m = (n!)^C(n-1, m-1)
// reduced mod a prime q > n, returned as (lhs, rhs).
//
// The left side is enumerated subset by subset while C(n,m) stays below an
// internal cap; past the cap each element's multiplicity comes from the
// additive Pascal recurrence instead. With reduce_exponent the right-side
// exponent is reduced mod q-1 (the base is coprime to q); without it the
// exponent must fit in 64 bits exactly or std::overflow_error is thrown.
std::pair<FieldElement, FieldElement> subset_product_sides(u32 n, u32 m, u32 q,
                                                           bool reduce_exponent = true);
bool subset_product_identity_holds(u32 n, u32 m, u32 q, bool reduce_exponent = true);

}  // namespace qrdet
