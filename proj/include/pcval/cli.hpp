#pragma once

#include <string>
#include <vector>

#include "pcval/coeff.hpp"

namespace pcval::cli {

/// Session-wide defaults; per-invocation flags override individual fields.
struct SessionConfig {
  Backend backend = Backend::q();
  long max_index = 64;  // >= 8
  long depth = 40;
  bool json = false;
};

/// Config file: JSON object with optional keys backend, max_index, depth,
/// format. The PCVAL_CONFIG environment variable names the default path.
SessionConfig load_config(const std::string& path);

struct RunResult {
  int status = 0;  // 0 computed, 2 precondition violated, 3 parse error, 4 undecided at depth
  std::string out;
  std::string err;
};

const std::vector<std::string>& command_names();

/// Dispatch one command with flag-style arguments. Never throws: violations
/// and parse failures are folded into the status and err fields.
RunResult run(const std::string& command, const std::vector<std::string>& args,
              SessionConfig cfg = {});

/// argv-style entry used by the binary; honors PCVAL_CONFIG.
int main_entry(int argc, const char* const* argv);

}  // namespace pcval::cli
