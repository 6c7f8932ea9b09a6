#pragma once

#include <string>

#include "config.hpp"

namespace isingctl {

enum ExitCode { exit_ok = 0, exit_violation = 1, exit_config = 2 };

struct Context {
  Config config;
  std::string out_path;  // empty writes to stdout
  int verbosity = 0;
};

int cmd_verify(Context& ctx, const std::string& suite);
int cmd_coupling_scan(Context& ctx);
int cmd_decay_scan(Context& ctx);
int cmd_sample(Context& ctx);
int cmd_graph_gen(Context& ctx);
int cmd_gw_stats(Context& ctx);

}  // namespace isingctl
