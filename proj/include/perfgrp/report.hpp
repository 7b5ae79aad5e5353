#pragma once

#include "perfgrp/composition.hpp"
#include "perfgrp/group.hpp"
#include "perfgrp/numbers.hpp"
#include "perfgrp/spec.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace perfgrp {

inline constexpr int kReportSchema = 1;

// Everything `analyze` knows about one group. Fields the symbolic path
// cannot derive without a table are left empty.
struct AnalysisReport {
  std::string spec;
  bool symbolic = false;
  BigInt order;
  BigInt d_value;
  Rational ratio;
  bool is_perfect = false;
  std::optional<bool> is_tight;
  std::vector<BigInt> normal_subgroup_orders;  // ascending, with repeats
  std::optional<FactorMultiset> composition_factors;
  std::optional<std::vector<std::uint64_t>> abelianization_factors;
  std::optional<std::size_t> normal_generator_count;
};

// Realizes the group when it fits under limits.max_order. Larger products
// of at most one alternating A_n (n >= 5) with cyclic atoms go through the
// multiplicative shortcut instead, after checking the cyclic atoms are
// pairwise coprime (DomainError otherwise). Anything else that is too big
// is a ResourceError.
AnalysisReport analyze(const GroupSpec& spec, const Limits& limits = {});

nlohmann::ordered_json to_json(const AnalysisReport& report);
std::string to_text(const AnalysisReport& report);

// JSON number when it fits in 64 bits, decimal string otherwise.
nlohmann::ordered_json big_to_json(const BigInt& n);

}  // namespace perfgrp
