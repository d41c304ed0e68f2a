// Verification records: one TheoremReport per checked (check, p, d, m)
// tuple, carrying the predicted and observed values so that a failure is
// always a usable counterexample witness.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "qrdet/fp.hpp"

namespace qrdet {

enum class CheckId {
  TA,        // S_m(d,p) = 0 for (d/p) = -1, m = (p-1)/2 (mod 2)
  TB,        // (S_m/p) != -1 for p = 1 (mod 4), (d/p) = 1, odd m
  TC,        // S_{p-2} closed form when (-d/p) = +1
  TD,        // S_{p-3} symbol claims for p = 1 (mod 4)
  TE,        // S_{p-4} symbol biconditional for (d/p) = 1
  Thm22,     // S_m = a_m^2 b_m decomposition
  SunPrior,  // S_{p-2}, S_{p-3} forms when (-d/p) = -1
  SMatrix,   // Legendre-symbol matrix determinant results
  Extended,  // 0-indexed (n+1) x (n+1) determinant vanishes
  Remark,    // two-squares / Gauss / character-sum suite
  Aux,       // Wilson variant, product identities, subset products, poly dets
};

inline constexpr std::array<CheckId, 11> kAllChecks = {
    CheckId::TA,       CheckId::TB,      CheckId::TC,       CheckId::TD,
    CheckId::TE,       CheckId::Thm22,   CheckId::SunPrior, CheckId::SMatrix,
    CheckId::Extended, CheckId::Remark,  CheckId::Aux,
};

std::string_view to_string(CheckId id);
std::optional<CheckId> parse_check_id(std::string_view name);

// A predicted or observed quantity: a residue (with its modulus), a symbol,
// a plain integer, or an integer pair such as (x, y).
struct ReportValue {
  enum class Kind { none, residue, symbol, integer, pair };

  Kind kind = Kind::none;
  i64 a = 0;
  i64 b = 0;  // modulus for residue, second component for pair

  static ReportValue residue(const FieldElement& v) {
    return {Kind::residue, static_cast<i64>(v.value()), static_cast<i64>(v.modulus())};
  }
  static ReportValue symbol(const SymbolValue& s) { return {Kind::symbol, s.value(), 0}; }
  static ReportValue symbol(int s) { return {Kind::symbol, s, 0}; }
  static ReportValue integer(i64 v) { return {Kind::integer, v, 0}; }
  static ReportValue int_pair(i64 x, i64 y) { return {Kind::pair, x, y}; }

  friend bool operator==(const ReportValue&, const ReportValue&) = default;
};

enum class Status { pass, fail, skipped };
enum class Relation { eq, ne };

struct TheoremReport {
  CheckId check = CheckId::Aux;
  std::string claim;  // sub-claim label; empty for single-claim checks

  std::optional<u32> p;
  std::optional<i64> d;
  std::optional<u64> m;
  std::optional<i64> s;      // auxiliary nonresidue parameter
  std::optional<u32> trial;  // randomized-instance index

  Relation relation = Relation::eq;
  ReportValue predicted;
  ReportValue observed;
  Status status = Status::pass;
  std::string reason;  // skip reason or extra failure detail
};

/// Sets status from relation, predicted and observed; returns the report.
TheoremReport& settle(TheoremReport& r);

}  // namespace qrdet
