#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lpa::cli {

/// Dispatches one subcommand. Returns 0 when all checks pass or the
/// operation succeeds, 1 when a verification fails (the report says
/// which), 2 on input errors. Output is plain deterministic text.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace lpa::cli
