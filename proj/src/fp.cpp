#include "qrdet/fp.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace qrdet {

namespace raw {

u64 pow(u64 base, u64 exp, u64 mod) {
  u64 result = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

u64 inv(u64 a, u64 mod) { return pow(a, mod - 2, mod); }

}  // namespace raw

namespace {

// mulmod over the full 64-bit range, used only by the primality test.
u64 mulmod_wide(u64 a, u64 b, u64 mod) {
  return static_cast<u64>(static_cast<__uint128_t>(a) * b % mod);
}

u64 powmod_wide(u64 base, u64 exp, u64 mod) {
  u64 result = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) result = mulmod_wide(result, base, mod);
    base = mulmod_wide(base, base, mod);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(u64 x) {
  if (x < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (x % q == 0) return x == q;
  }
  u64 d = x - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set is deterministic for all 64-bit inputs.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 v = powmod_wide(a, d, x);
    if (v == 1 || v == x - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      v = mulmod_wide(v, v, x);
      if (v == x - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<u32> primes_in_range(u32 lo, u32 hi) {
  std::vector<u32> out;
  for (u64 x = lo; x <= hi; ++x) {
    if (is_prime(x)) out.push_back(static_cast<u32>(x));
  }
  return out;
}

void validate_modulus(u32 p) {
  thread_local u32 last_accepted = 0;
  if (p == last_accepted) return;
  if (p < 3 || p % 2 == 0 || p >= kMaxModulus || !is_prime(p)) {
    throw std::invalid_argument("modulus must be an odd prime below 2^31, got " +
                                std::to_string(p));
  }
  last_accepted = p;
}

FieldElement::FieldElement(i64 value, u32 modulus) : modulus_(modulus) {
  validate_modulus(modulus);
  i64 r = value % static_cast<i64>(modulus);
  if (r < 0) r += modulus;
  value_ = static_cast<u32>(r);
}

namespace {

void require_same_modulus(const FieldElement& a, const FieldElement& b) {
  if (a.modulus() != b.modulus()) {
    throw std::invalid_argument("modulus mismatch: " + std::to_string(a.modulus()) + " vs " +
                                std::to_string(b.modulus()));
  }
}

}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_modulus(a, b);
  u64 s = static_cast<u64>(a.value()) + b.value();
  if (s >= a.modulus()) s -= a.modulus();
  return FieldElement(static_cast<i64>(s), a.modulus());
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_modulus(a, b);
  u64 s = static_cast<u64>(a.value()) + a.modulus() - b.value();
  if (s >= a.modulus()) s -= a.modulus();
  return FieldElement(static_cast<i64>(s), a.modulus());
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_modulus(a, b);
  return FieldElement(static_cast<i64>(raw::mul(a.value(), b.value(), a.modulus())), a.modulus());
}

FieldElement operator-(const FieldElement& a) {
  return FieldElement(a.value() == 0 ? 0 : static_cast<i64>(a.modulus() - a.value()),
                      a.modulus());
}

FieldElement pow(const FieldElement& a, u64 e) {
  return FieldElement(static_cast<i64>(raw::pow(a.value(), e, a.modulus())), a.modulus());
}

FieldElement inverse(const FieldElement& a) {
  if (a.is_zero()) throw std::domain_error("zero has no multiplicative inverse");
  return FieldElement(static_cast<i64>(raw::inv(a.value(), a.modulus())), a.modulus());
}

SymbolValue::SymbolValue(int v) : v_(v) {
  if (v < -1 || v > 1) throw std::invalid_argument("symbol value must be -1, 0 or +1");
}

FieldElement SymbolValue::as_field(u32 p) const { return FieldElement(v_, p); }

SymbolValue legendre(i64 a, u32 p) {
  validate_modulus(p);
  i64 r = a % static_cast<i64>(p);
  if (r < 0) r += p;
  if (r == 0) return SymbolValue(0);
  u64 e = raw::pow(static_cast<u64>(r), (p - 1) / 2, p);
  return SymbolValue(e == 1 ? 1 : -1);
}

namespace {

constexpr u32 kFactorialTableLimit = 1'000'000;

// Per-prime factorial tables; immutable once published.
const std::vector<u32>* factorial_table(u32 p) {
  static std::mutex mu;
  static std::unordered_map<u32, std::unique_ptr<const std::vector<u32>>> tables;
  std::lock_guard<std::mutex> lock(mu);
  auto it = tables.find(p);
  if (it == tables.end()) {
    auto t = std::make_unique<std::vector<u32>>(p);
    (*t)[0] = 1 % p;
    for (u32 k = 1; k < p; ++k) (*t)[k] = static_cast<u32>(raw::mul((*t)[k - 1], k, p));
    it = tables.emplace(p, std::move(t)).first;
  }
  return it->second.get();
}

}  // namespace

FieldElement factorial_mod(u32 k, u32 p) {
  validate_modulus(p);
  if (k >= p) throw std::invalid_argument("factorial_mod requires k < p");
  if (p <= kFactorialTableLimit) {
    return FieldElement(static_cast<i64>((*factorial_table(p))[k]), p);
  }
  u64 acc = 1;
  for (u64 i = 2; i <= k; ++i) acc = acc * i % p;
  return FieldElement(static_cast<i64>(acc), p);
}

FieldElement double_factorial_mod(i64 k, u32 p) {
  validate_modulus(p);
  if (k < -1 || k >= static_cast<i64>(p)) {
    throw std::invalid_argument("double_factorial_mod requires -1 <= k < p");
  }
  u64 acc = 1;
  for (i64 v = k; v > 1; v -= 2) acc = acc * static_cast<u64>(v) % p;
  return FieldElement(static_cast<i64>(acc), p);
}

FieldElement binomial_mod(u32 m, u32 k, u32 p) {
  validate_modulus(p);
  if (k > m || m >= p) throw std::invalid_argument("binomial_mod requires 0 <= k <= m < p");
  u64 num = factorial_mod(m, p).value();
  u64 den = raw::mul(factorial_mod(k, p).value(), factorial_mod(m - k, p).value(), p);
  return FieldElement(static_cast<i64>(raw::mul(num, raw::inv(den, p), p)), p);
}

}  // namespace qrdet
