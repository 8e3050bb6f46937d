#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cluster_roots {

/// Entry point of the cluster-roots binary.  Returns the process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cluster_roots
