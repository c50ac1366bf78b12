#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kmat {

/// Command-line entry point; returns the process exit code.
/// 0 = success / all checks pass, 1 = a check failed, 2 = usage error or
/// unsupported input.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

/// Fixed rapidity samples used by the numeric checks (deterministic).
std::vector<struct ComplexTheta> default_theta_samples();

}  // namespace kmat
