#pragma once

// Verification suites, one per target, and the cross-policy comparison.

#include "dlcalc/maps.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace dlcalc {

enum class Target { Lemma36, Lemma37, Prop38, Prop39, Prop310, Cor27, Thm2, Thm3, Thm4, Cor18 };

const std::vector<Target>& all_targets();
std::string_view target_name(Target t);  // lemma3.6, ..., cor1.8
std::optional<Target> parse_target(std::string_view name);

Report verify_base_lambda(int max_degree);
// The commutation rules of lambda, lambda', lambda'' with Q^s on every generator
// Q^I e_r, in the full algebra and in the 0-component with its own operations.
Report verify_lambda_commutation(int max_degree);
Report verify_loop_level(Workspace& ws, int level, int max_degree);
// Every dimension emitted by the assembly agrees under both tail policies.
Report verify_tail_independence(Workspace& ws, int max_degree);

// Throws DegreeOutOfRange for max_degree outside 1..kHardMaxDegree.
Report run_target(Workspace& ws, Target target, int max_degree, TailPolicy policy);

constexpr int kDefaultMaxDegree = 12;
constexpr int kHardMaxDegree = 14;

}  // namespace dlcalc
