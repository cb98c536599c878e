#pragma once

#include "tsg/modular_fusion.hpp"

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace tsg::cli {

enum ExitCode : int { kOk = 0, kComputationFailure = 1, kUsage = 2 };

/// Replaceable collaborators; tests swap the oracle to exercise the
/// disagreement path.
struct Hooks {
    std::function<FusionVector(int, int, int)> fusion_oracle = jordan_oracle;
};

/// Runs one command line (args exclude the program name) and returns the
/// process exit code. Output is a pure function of the arguments.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Hooks& hooks = {});

} // namespace tsg::cli
