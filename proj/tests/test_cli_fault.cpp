// Linked against the fault-injected library: one seller credit is dropped in
// iteration 10, which the audit must report as a money conservation failure.
#include "fiatsim/cli.hpp"

#include <doctest.h>

#include <sstream>

using namespace fiatsim;

TEST_CASE("verify catches a corrupted transfer") {
  cli::CliConfig config;
  config.iterations = 100;
  std::ostringstream out, err;
  CHECK(cli::cmd_verify(config, out, err) == cli::kInvariantViolated);
  CHECK(err.str().find("money conservation") != std::string::npos);
  CHECK(err.str().find("iteration 10") != std::string::npos);
}
