#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "credal/discounting.hpp"
#include "credal/report.hpp"
#include "credal/temporal.hpp"

namespace credal::cli {

enum ExitCode : int {
  kOk = 0,
  kGoldenMismatch = 1,
  kInvalidInput = 2,
  kSchemeError = 3,
};

struct RunConfig {
  std::vector<std::string> mass_paths;
  std::optional<std::string> context_path;
  std::optional<std::string> decay_path;
  std::optional<double> time;
  std::vector<Scheme> schemes;
  AlphaMode alpha_mode = AlphaMode::Postulate;
  OutputFormat format = OutputFormat::Text;
  std::optional<std::string> out_path;
  std::vector<std::string> perturb;
};

int cmd_discount(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_temporal(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_combine(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_inspect(const RunConfig& config, std::ostream& out, std::ostream& err);
/// Regenerates every reference number; each id in config.perturb has its
/// expected value shifted by 1e-2 (harness self-test).
int cmd_paper(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command line, args[0] being the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace credal::cli
