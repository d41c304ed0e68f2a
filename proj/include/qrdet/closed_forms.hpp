// Closed-form evaluators and symbol predictors for the tail determinants:
// the a_m^2 b_m decomposition, the S_{p-2} and S_{p-3} formulas for both
// symbol classes of -d, the S_{p-3}/S_{p-4} Legendre-symbol laws, and the
// two-squares / character-sum machinery for p = 1 (mod 4).
#pragma once

#include "qrdet/fp.hpp"
#include "qrdet/report.hpp"

namespace qrdet {

// The pair (a_m, b_m) with product = a_m^2 * b_m, which is congruent to
// S_m(d,p) for every p > 5, p not dividing d, (p-1)/2 < m < p-1.
struct DecompositionResult {
  FieldElement a;
  FieldElement b;
  FieldElement product;
};

FieldElement decomposition_factor_a(u32 p, i64 d, u64 m);
FieldElement decomposition_factor_b(u32 p, i64 d, u64 m);
DecompositionResult decompose_sm(u32 p, i64 d, u64 m);

/// S_{p-2}(d,p) mod p for (-d/p) = +1: the double-factorial form when
/// p = 1 (mod 4), zero when p = 3 (mod 4). Throws if (-d/p) != +1.
FieldElement sp2_closed_form(u32 p, i64 d);

/// S_{p-2}(d,p) mod p for (-d/p) = -1. Throws if (-d/p) != -1.
FieldElement sp2_nonresidue_form(u32 p, i64 d);

/// S_{p-3}(d,p) mod p for (-d/p) = -1: (1/4) prod (r + 1/4)^2 over
/// 1 <= r <= floor(p/4). Throws if (-d/p) != -1.
FieldElement sp3_nonresidue_form(u32 p, i64 d);

// p = x^2 + y^2 with x = 1 (mod 4) and y = ((p-1)/2)! * x (mod p); those two
// conditions pin both signs.
struct TwoSquares {
  i64 x;
  i64 y;
  u32 p;
};

/// Requires p = 1 (mod 4). Square root of -1 from the least nonresidue,
/// then Euclidean descent, then sign normalization.
TwoSquares two_squares(u32 p);

u32 least_quadratic_nonresidue(u32 p);

/// +1 if s^{(p-1)/4} = ((p-1)/2)! (mod p), else -1. Requires p = 1 (mod 4)
/// and (s/p) = -1; both sides are square roots of -1, so this is a sign.
int qnr_quartic_sign(i64 s, u32 p);

/// sum_{k=1}^{(p-1)/2} ((k(k^2+s))/p) as a plain integer.
i64 half_range_character_sum(i64 s, u32 p);

// Report-producing predicate checks. Hypothesis violations are errors
// (std::invalid_argument), mathematical mismatches are fail reports.

/// (6 S_{p-3}(d,p) / p) != -1 for p = 1 (mod 4), p not dividing d.
TheoremReport check_sp3_six_symbol(u32 p, i64 d);

/// (S_{p-3}(d,p) / p) = (-1)^{(p+3)/4} for p = 5 (mod 12), (d/p) = 1.
TheoremReport check_sp3_symbol_value(u32 p, i64 d);

/// (S_{p-4}(d,p) / p) = -1 iff p = 3,7 (mod 20), for p >= 7, (d/p) = 1.
TheoremReport check_sp4_symbol(u32 p, i64 d);

/// x^2 + y^2 = p plus both sign conditions.
TheoremReport check_two_squares(u32 p);

/// 2x = binom((p-1)/2, (p-1)/4) (mod p).
TheoremReport check_gauss_congruence(u32 p);

/// 2y = (2/p) ((p-3)/2 !!)^2 (mod p).
TheoremReport check_double_factorial_congruence(u32 p);

/// S_{p-2}(d,p) = -2y d^{(p-1)/4} (mod p) for (d/p) = 1.
TheoremReport check_sp2_remark(u32 p, i64 d);

/// delta(s,p) * sum = -y exactly, as integers.
TheoremReport check_character_sum_exact(u32 p, i64 s);

/// S_{p-2}(1,p) = -2y (mod p), computed by determinant.
TheoremReport check_character_sum(u32 p, i64 s);

}  // namespace qrdet
