// extq: exact calculus of finitely supported distributions on the line.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "cli/run.hpp"

namespace {

using extq::cli::Command;

struct RawOptions {
  std::string h = "1";
  std::vector<std::string> inputs;
  std::string output;
  unsigned n = 1;
  std::string a;
  std::string b;
  int decimal = -1;
};

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact calculus of finitely supported distributions on the line"};
  app.set_help_flag("--help", "print this help message and exit");
  app.require_subcommand(1);

  RawOptions raw;
  std::map<CLI::App *, Command> commands;

  auto add_common = [&](CLI::App *sub, Command cmd) {
    commands[sub] = cmd;
    sub->add_option("--h", raw.h, "grid step h (p/q, nonzero)")->capture_default_str();
    sub->add_option("-o,--out", raw.output, "output file (stdout when omitted)");
    return sub;
  };

  auto *conv_pow = add_common(app.add_subcommand("conv-pow", "convolution powers with moment summary"),
                              Command::conv_pow);
  conv_pow->add_option("input", raw.inputs, "input distribution (or use --a/--b)");
  conv_pow->add_option("-n", raw.n, "number of powers")->required()->check(CLI::PositiveNumber);
  conv_pow->add_option("--a", raw.a, "left endpoint of an interval input");
  conv_pow->add_option("--b", raw.b, "right endpoint of an interval input");
  conv_pow->add_option("--decimal", raw.decimal, "append decimal columns with N digits")
      ->check(CLI::NonNegativeNumber);

  add_common(app.add_subcommand("derivative", "derivative of a distribution"), Command::derivative)
      ->add_option("input", raw.inputs, "input distribution")->required()->expected(1);
  add_common(app.add_subcommand("primitive", "unique finitely supported primitive"), Command::primitive)
      ->add_option("input", raw.inputs, "input distribution")->required()->expected(1);

  auto *interval = add_common(app.add_subcommand("interval", "the interval distribution [a,b]"),
                              Command::interval);
  interval->add_option("--a", raw.a, "left endpoint")->required();
  interval->add_option("--b", raw.b, "right endpoint")->required();

  auto *pair = add_common(app.add_subcommand("pair", "pair a distribution with a test function"),
                          Command::pair);
  pair->add_option("inputs", raw.inputs, "distribution file and test function file")
      ->required()
      ->expected(2);
  pair->add_option("--decimal", raw.decimal, "append a decimal approximation")
      ->check(CLI::NonNegativeNumber);

  add_common(app.add_subcommand("convolve", "convolution of two distributions"), Command::convolve)
      ->add_option("inputs", raw.inputs, "two distribution files")
      ->required()
      ->expected(2);
  add_common(app.add_subcommand("info", "support, total, expectation"), Command::info)
      ->add_option("input", raw.inputs, "input distribution")->required()->expected(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return extq::cli::exit_usage_error;
  }

  extq::cli::RunConfig config;
  for (const auto &[sub, cmd] : commands)
    if (sub->parsed())
      config.command = cmd;

  try {
    config.step = extq::Step(extq::Scalar::parse(raw.h));
    if (!raw.a.empty())
      config.a = extq::Scalar::parse(raw.a);
    if (!raw.b.empty())
      config.b = extq::Scalar::parse(raw.b);
  } catch (const extq::ParseError &e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return extq::cli::exit_usage_error;
  } catch (const extq::DivisionByZero &) {
    std::cerr << "error: step h must be nonzero\n";
    return extq::cli::exit_domain_error;
  }
  for (const auto &in : raw.inputs)
    config.inputs.emplace_back(in);
  if (!raw.output.empty())
    config.output = raw.output;
  config.n = raw.n;
  if (raw.decimal >= 0)
    config.decimal = raw.decimal;

  return extq::cli::run(config, std::cout, std::cerr);
}
