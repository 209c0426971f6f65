#pragma once

#include "sixj/spins.hpp"

#include <string>
#include <vector>

namespace sixj {

enum class CheckStatus { Pass, Fail, Skipped };

std::string_view to_string(CheckStatus status);

struct IdentityResult {
  std::string name;
  CheckStatus status = CheckStatus::Skipped;
  std::string detail;
};

/// Tolerances used by the floating-point identities.
inline constexpr double kIdentityAbsTol = 1e-10;
inline constexpr double kIdentityRelTol = 1e-10;

/// Runs every identity that applies to s. Exact and geometric identities
/// always run on admissible, non-zero sextets. The saddle identities run for
/// Euclidean sextets and are reported as Skipped otherwise; Minkowskian
/// sextets get the decay checks instead. Throws DomainError if s is
/// inadmissible.
std::vector<IdentityResult> run_identity_suite(const SpinSextet& s);

bool all_passed(const std::vector<IdentityResult>& results);

} // namespace sixj
