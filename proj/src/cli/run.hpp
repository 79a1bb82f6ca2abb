#ifndef EXTQ_CLI_RUN_HPP
#define EXTQ_CLI_RUN_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "extq/calculus.hpp"

namespace extq::cli {

enum class Command { conv_pow, derivative, primitive, interval, pair, convolve, info };

enum ExitStatus : int { exit_ok = 0, exit_domain_error = 1, exit_usage_error = 2 };

struct RunConfig {
  Command command = Command::info;
  Step step{Scalar(1)};
  std::vector<std::filesystem::path> inputs;  // "-" reads stdin
  // Output file (stdout when empty); for conv-pow, the output directory.
  std::optional<std::filesystem::path> output;
  unsigned n = 1;
  std::optional<Scalar> a;
  std::optional<Scalar> b;
  std::optional<int> decimal;
};

// Summary statistics of one convolution power. Central moments are
// normalized by the total; the skewness column holds m3^2 / m2^3 so that
// it stays rational.
struct MomentRow {
  unsigned k = 0;
  Scalar total;
  std::optional<Scalar> mean;
  std::optional<Scalar> variance;
  std::optional<Scalar> skewness_ratio;
};

MomentRow moments(const LineDist &p, unsigned k);

std::string format_power_csv(const LineDist &p, const Step &step, std::optional<int> decimal);
std::string format_summary_csv(const std::vector<MomentRow> &rows, const Step &step,
                               std::optional<int> decimal);

// Runs one command. Diagnostics go to `err`; results go to the configured
// output or to `out`.
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

} // namespace extq::cli

#endif
