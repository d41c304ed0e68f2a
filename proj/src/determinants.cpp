#include "qrdet/determinants.hpp"

#include <stdexcept>
#include <string>

namespace qrdet {

DeterminantFamilyParams::DeterminantFamilyParams(u32 p_, i64 d_, u64 m_) : p(p_), m(m_) {
  validate_modulus(p_);
  if (p_ < 5) throw std::invalid_argument("determinant families require p >= 5");
  i64 r = d_ % static_cast<i64>(p_);
  if (r < 0) r += p_;
  if (r == 0) throw std::invalid_argument("d must not be divisible by p");
  d = static_cast<u32>(r);
}

std::vector<u32> power_table(u32 p, u64 m) {
  std::vector<u32> t(p);
  for (u32 x = 0; x < p; ++x) t[x] = static_cast<u32>(raw::pow(x, m, p));
  return t;
}

SquareMatrix build_sm_matrix(const DeterminantFamilyParams& params) {
  return build_sm_matrix(params, power_table(params.p, params.m));
}

SquareMatrix build_sm_matrix(const DeterminantFamilyParams& params, std::span<const u32> powers) {
  const u32 p = params.p;
  if (powers.size() != p) throw std::invalid_argument("power table size must equal p");
  const u32 n = half_index(p);
  SquareMatrix mat(n, p);
  for (u64 i = 1; i <= n; ++i) {
    for (u64 j = 1; j <= n; ++j) {
      const u64 base = (i * i + static_cast<u64>(params.d) * (j * j % p)) % p;
      mat.set_raw(i, j, powers[base]);
    }
  }
  return mat;
}

FieldElement compute_sm(const DeterminantFamilyParams& params) {
  return det_elimination(build_sm_matrix(params));
}

FieldElement compute_sm(u32 p, i64 d, u64 m) {
  return compute_sm(DeterminantFamilyParams(p, d, m));
}

SquareMatrix build_legendre_matrix(u32 p, i64 d) {
  const DeterminantFamilyParams params(p, d, 0);
  const u32 n = half_index(p);
  SquareMatrix mat(n, p);
  for (u64 i = 1; i <= n; ++i) {
    for (u64 j = 1; j <= n; ++j) {
      const i64 base = static_cast<i64>((i * i + static_cast<u64>(params.d) * (j * j % p)) % p);
      mat.set(i, j, legendre(base, p).as_field(p));
    }
  }
  return mat;
}

FieldElement compute_s(u32 p, i64 d) { return det_elimination(build_legendre_matrix(p, d)); }

i64 compute_s_integer(u32 p, i64 d) {
  const DeterminantFamilyParams params(p, d, 0);
  const u32 n = half_index(p);
  if (n > kOracleOrderLimit) {
    throw std::invalid_argument("integer determinant requires (p-1)/2 <= 9");
  }
  std::vector<int> entries(static_cast<std::size_t>(n) * n);
  for (u64 i = 1; i <= n; ++i) {
    for (u64 j = 1; j <= n; ++j) {
      const i64 base = static_cast<i64>((i * i + static_cast<u64>(params.d) * (j * j % p)) % p);
      entries[(i - 1) * n + (j - 1)] = legendre(base, p).value();
    }
  }
  return det_integer_oracle(entries, n);
}

SquareMatrix build_extended_matrix(u32 p, i64 d, u64 m) {
  return build_extended_matrix(p, d, m, power_table(p, m));
}

SquareMatrix build_extended_matrix(u32 p, i64 d, u64 m, std::span<const u32> powers) {
  const DeterminantFamilyParams params(p, d, m);
  const u32 n = half_index(p);
  if (m <= n || m >= static_cast<u64>(p) - 1) {
    throw std::invalid_argument("extended matrix requires (p-1)/2 < m < p-1");
  }
  if (powers.size() != p) throw std::invalid_argument("power table size must equal p");
  SquareMatrix mat(n + 1, p);
  for (u64 i = 0; i <= n; ++i) {
    for (u64 j = 0; j <= n; ++j) {
      const u64 base = (i * i + static_cast<u64>(params.d) * (j * j % p)) % p;
      mat.set_raw(i + 1, j + 1, powers[base]);
    }
  }
  return mat;
}

FieldElement compute_extended_det(u32 p, i64 d, u64 m) {
  return det_elimination(build_extended_matrix(p, d, m));
}

FieldElement square_difference_product(u32 p) {
  validate_modulus(p);
  if (p < 5) throw std::invalid_argument("requires p >= 5");
  const u32 n = half_index(p);
  u64 acc = 1;
  for (u64 i = 1; i <= n; ++i) {
    for (u64 j = i + 1; j <= n; ++j) {
      acc = acc * ((j * j - i * i) % p) % p;
    }
  }
  return FieldElement(static_cast<i64>(acc), p);
}

FieldElement square_difference_product_expected(u32 p) {
  if (p % 4 == 1) return -factorial_mod(half_index(p), p);
  return FieldElement(1, p);
}

FieldElement square_reciprocal_product(u32 p) {
  validate_modulus(p);
  if (p < 5) throw std::invalid_argument("requires p >= 5");
  const u32 n = half_index(p);
  std::vector<u64> sq(n + 1), inv_sq(n + 1);
  for (u64 i = 1; i <= n; ++i) {
    sq[i] = i * i % p;
    inv_sq[i] = raw::inv(sq[i], p);
  }
  u64 acc = 1;
  for (u64 i = 1; i <= n; ++i) {
    for (u64 j = i + 1; j <= n; ++j) {
      acc = acc * ((sq[i] + p - sq[j]) % p) % p;
      acc = acc * ((inv_sq[i] + p - inv_sq[j]) % p) % p;
    }
  }
  return FieldElement(static_cast<i64>(acc), p);
}

FieldElement square_reciprocal_product_expected(u32 p) {
  return FieldElement((p / 4) % 2 == 0 ? 1 : -1, p);
}

namespace {

// Subset counts small enough to enumerate outright.
constexpr u64 kEnumerationCap = 4'000'000;

// C(a, b) as an exact u64; throws std::overflow_error if it does not fit.
u64 binomial_exact_u64(u32 a, u32 b) {
  if (b > a) return 0;
  if (b > a - b) b = a - b;
  u64 r = 1;
  for (u32 i = 1; i <= b; ++i) {
    const __uint128_t next = static_cast<__uint128_t>(r) * (a - b + i) / i;
    if (next > static_cast<__uint128_t>(~0ull)) {
      throw std::overflow_error("binomial coefficient exceeds 64 bits");
    }
    r = static_cast<u64>(next);
  }
  return r;
}

// C(a, b) mod an arbitrary modulus via the additive Pascal recurrence.
u64 binomial_mod_any(u32 a, u32 b, u64 mod) {
  if (b > a) return 0;
  std::vector<u64> row(b + 1, 0);
  row[0] = 1 % mod;
  for (u32 i = 1; i <= a; ++i) {
    for (u32 j = std::min(i, b); j >= 1; --j) row[j] = (row[j] + row[j - 1]) % mod;
  }
  return row[b];
}

}  // namespace

std::pair<FieldElement, FieldElement> subset_product_sides(u32 n, u32 m, u32 q,
                                                           bool reduce_exponent) {
  validate_modulus(q);
  if (m < 1 || m > n) throw std::invalid_argument("requires 1 <= m <= n");
  if (q <= n) throw std::invalid_argument("requires prime q > n");
  if (n > 63) throw std::invalid_argument("requires n <= 63");

  u64 exponent;
  if (reduce_exponent) {
    // n! is coprime to q, so Fermat allows reducing the exponent mod q-1.
    exponent = binomial_mod_any(n - 1, m - 1, q - 1);
  } else {
    exponent = binomial_exact_u64(n - 1, m - 1);
  }
  u64 base = 1;
  for (u64 k = 2; k <= n; ++k) base = base * k % q;
  const u64 rhs = raw::pow(base, exponent, q);

  u64 lhs = 1;
  bool enumerated = false;
  try {
    if (binomial_exact_u64(n, m) <= kEnumerationCap) {
      // Gosper's hack walks the m-subsets of {1..n} in bitmask order.
      const u64 end = 1ull << n;
      for (u64 mask = (1ull << m) - 1; mask < end;) {
        u64 bits = mask;
        while (bits) {
          lhs = lhs * (static_cast<u64>(__builtin_ctzll(bits)) + 1) % q;
          bits &= bits - 1;
        }
        const u64 c = mask & (~mask + 1);
        const u64 r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
      }
      enumerated = true;
    }
  } catch (const std::overflow_error&) {
    // fall through to the multiplicity route
  }
  if (!enumerated) {
    // Each k lies in as many m-subsets as there are (m-1)-subsets of the
    // remaining n-1 elements; the count comes from the Pascal recurrence,
    // independent of the factorial-table binomials.
    const u64 mult = binomial_mod_any(n - 1, m - 1, q - 1);
    for (u64 k = 1; k <= n; ++k) lhs = lhs * raw::pow(k, mult, q) % q;
  }
  return {FieldElement(static_cast<i64>(lhs), q), FieldElement(static_cast<i64>(rhs), q)};
}

bool subset_product_identity_holds(u32 n, u32 m, u32 q, bool reduce_exponent) {
  const auto [lhs, rhs] = subset_product_sides(n, m, q, reduce_exponent);
  return lhs == rhs;
}

}  // namespace qrdet
