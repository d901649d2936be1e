#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "casimir/lifshitz.hpp"

namespace casimir::validation {

/// One validation check outcome. `measured` and `bound` carry the compared
/// quantity and its tolerance; failures caused by exceptions record the
/// message in `note`.
struct CheckResult {
    std::string id;
    bool pass = false;
    double measured = 0.0;
    double bound = 0.0;
    std::string note;
};

/// Every registered check, evaluated with the given quadrature settings.
/// Checks never throw: an exception is reported as a failing result.
std::vector<CheckResult> run_all_checks(const lifshitz::QuadratureSettings& settings);

/// Registered check ids, in execution order.
std::vector<std::string> check_ids();

std::size_t check_count();

/// Run a single check by id; throws std::invalid_argument for unknown ids.
CheckResult run_check(std::string_view id, const lifshitz::QuadratureSettings& settings);

} // namespace casimir::validation
