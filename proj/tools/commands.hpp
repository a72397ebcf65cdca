#pragma once

#include <iosfwd>
#include <string>

#include "run_config.hpp"
#include "maxcyl/spectral/bands.hpp"

namespace maxcyl::app {

enum ExitCode : int { kPass = 0, kCheckFailure = 1, kConfigError = 2, kNumericalFailure = 3 };

struct CommandOptions {
  bool svg = false;
};

int cmd_validate(const RunConfig& cfg, std::ostream& log);
int cmd_verify(const RunConfig& cfg, std::ostream& log);
int cmd_reduce(const RunConfig& cfg, std::ostream& log);
int cmd_bands(const RunConfig& cfg, const CommandOptions& opt, std::ostream& log);
int cmd_flatscan(const RunConfig& cfg, std::ostream& log);
int cmd_empty_compare(const RunConfig& cfg, std::ostream& log);

/// Band CSV: header k_index,k,band,lambda_sq,lambda_pos,lambda_neg,div_residual,
/// numbers printed with %.17g.
std::string bands_csv(const BandStructure& bs);

/// Static band diagram: k against +-sqrt(lambda^2).
std::string bands_svg(const BandStructure& bs);

/// Maps an exception thrown by a command to its exit code, printing the message.
int exit_code_for_current_exception(std::ostream& err);

}  // namespace maxcyl::app
