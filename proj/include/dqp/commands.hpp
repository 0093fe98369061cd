#pragma once

// Subcommands of the `dqp` tool. Each builder returns a Report; run() parses
// arguments, renders the report and maps failures onto exit codes.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dqp/chow.hpp"
#include "dqp/core.hpp"
#include "dqp/ffcount.hpp"
#include "dqp/report.hpp"
#include "dqp/verify.hpp"

namespace dqp::cli {

enum ExitCode : int {
  kSuccess = 0,
  kCheckFailed = 1,
  kInvalidInput = 2,
  kBudgetRefused = 3,
};

report::Report cmd_invariants(const DqpParams& params);

report::Report cmd_lecycles(int p, std::optional<int> i);

/// algorithm is ring, fulton or both.
report::Report cmd_chow(const chow::BidegreeSystem& system, const std::string& algorithm);

struct ClosureRequest {
  std::string ideal;
  std::optional<std::string> monomial;
  std::optional<std::string> reduction_of;
  std::string mode = "both";  // newton, valuative or both
  std::optional<std::string> witnesses;
  std::optional<int> variables;
  std::uint64_t seed = 42;
};

report::Report cmd_closure(const ClosureRequest& request);

report::Report cmd_count(const ffcount::NormalFormSpec& spec, std::uint64_t prime, std::uint64_t target,
                         std::uint64_t budget, int jobs);

report::Report cmd_verify(const std::string& scope, const verify::Options& options);

/// Budget from DQP_BUDGET when set, else the default.
std::uint64_t budget_from_environment();

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dqp::cli
