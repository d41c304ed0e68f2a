#include "qrdet/report.hpp"

namespace qrdet {

std::string_view to_string(CheckId id) {
  switch (id) {
    case CheckId::TA: return "T-A";
    case CheckId::TB: return "T-B";
    case CheckId::TC: return "T-C";
    case CheckId::TD: return "T-D";
    case CheckId::TE: return "T-E";
    case CheckId::Thm22: return "THM2.2";
    case CheckId::SunPrior: return "SUN-PRIOR";
    case CheckId::SMatrix: return "S-MATRIX";
    case CheckId::Extended: return "EXTENDED";
    case CheckId::Remark: return "REMARK";
    case CheckId::Aux: return "AUX";
  }
  return "?";
}

std::optional<CheckId> parse_check_id(std::string_view name) {
  for (CheckId id : kAllChecks) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

TheoremReport& settle(TheoremReport& r) {
  const bool equal = r.predicted == r.observed;
  r.status = (r.relation == Relation::eq ? equal : !equal) ? Status::pass : Status::fail;
  return r;
}

}  // namespace qrdet
