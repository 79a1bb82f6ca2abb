#include "cli/run.hpp"

#include <cstdio>
#include <fstream>
#include <iterator>
#include <iostream>
#include <sstream>
#include <system_error>

#include "extq/text_format.hpp"

namespace extq::cli {

namespace {

class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

std::string slurp(const std::filesystem::path &path) {
  if (path == "-")
    return std::string{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw UsageError("cannot open input file " + path.string());
  return std::string{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::filesystem::path &path, const std::string &content) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os)
    throw UsageError("cannot open output file " + path.string());
  os << content;
  if (!os)
    throw UsageError("write failed for " + path.string());
}

void emit(const RunConfig &config, std::ostream &out, const std::string &content) {
  if (config.output)
    write_file(*config.output, content);
  else
    out << content;
}

void require_inputs(const RunConfig &config, std::size_t count, const char *name) {
  if (config.inputs.size() != count)
    throw UsageError(std::string(name) + " expects " + std::to_string(count) + " input file(s), got " +
                     std::to_string(config.inputs.size()));
}

std::string na_or(const std::optional<Scalar> &v) { return v ? v->str() : "NA"; }
std::string na_or_decimal(const std::optional<Scalar> &v, int digits) {
  return v ? v->to_decimal(digits) : "NA";
}

std::string format_scalar_result(const Scalar &s, const Step &step, std::optional<int> decimal) {
  std::ostringstream os;
  os << "# h = " << step.h() << '\n' << s;
  if (decimal)
    os << ' ' << s.to_decimal(*decimal);
  os << '\n';
  return os.str();
}

LineDist conv_pow_input(const RunConfig &config) {
  if (config.a || config.b) {
    if (!config.a || !config.b)
      throw UsageError("conv-pow needs both --a and --b");
    if (!config.inputs.empty())
      throw UsageError("conv-pow takes either an input file or --a/--b, not both");
    return interval(*config.a, *config.b, config.step);
  }
  require_inputs(config, 1, "conv-pow");
  return parse_line_dist(slurp(config.inputs[0]));
}

std::string power_file_name(unsigned k, unsigned n) {
  std::string digits = std::to_string(n).size() > std::to_string(k).size()
                           ? std::string(std::to_string(n).size() - std::to_string(k).size(), '0')
                           : std::string();
  return "power_" + digits + std::to_string(k) + ".csv";
}

int run_conv_pow(const RunConfig &config) {
  if (config.n < 1)
    throw UsageError("-n must be at least 1");
  if (!config.output)
    throw UsageError("conv-pow requires --out <directory>");
  LineDist base = conv_pow_input(config);
  std::error_code ec;
  std::filesystem::create_directories(*config.output, ec);
  if (ec)
    throw UsageError("cannot create output directory " + config.output->string());

  std::vector<MomentRow> rows;
  LineDist power = base;
  for (unsigned k = 1; k <= config.n; ++k) {
    if (k > 1)
      power = convolve(power, base);
    write_file(*config.output / power_file_name(k, config.n),
               format_power_csv(power, config.step, config.decimal));
    rows.push_back(moments(power, k));
  }
  write_file(*config.output / "summary.csv", format_summary_csv(rows, config.step, config.decimal));
  return exit_ok;
}

int dispatch(const RunConfig &config, std::ostream &out) {
  switch (config.command) {
  case Command::conv_pow:
    return run_conv_pow(config);
  case Command::derivative: {
    require_inputs(config, 1, "derivative");
    LineDist p = parse_line_dist(slurp(config.inputs[0]));
    emit(config, out, format_line_dist(derivative(p, config.step), config.step));
    return exit_ok;
  }
  case Command::primitive: {
    require_inputs(config, 1, "primitive");
    LineDist q = parse_line_dist(slurp(config.inputs[0]));
    emit(config, out, format_line_dist(primitive(q, config.step), config.step));
    return exit_ok;
  }
  case Command::interval: {
    if (!config.a || !config.b)
      throw UsageError("interval needs --a and --b");
    emit(config, out, format_line_dist(interval(*config.a, *config.b, config.step), config.step));
    return exit_ok;
  }
  case Command::convolve: {
    require_inputs(config, 2, "convolve");
    LineDist p = parse_line_dist(slurp(config.inputs[0]));
    LineDist q = parse_line_dist(slurp(config.inputs[1]));
    emit(config, out, format_line_dist(convolve(p, q), config.step));
    return exit_ok;
  }
  case Command::pair: {
    require_inputs(config, 2, "pair");
    LineDist p = parse_line_dist(slurp(config.inputs[0]));
    LineFn phi = parse_line_fn(slurp(config.inputs[1]));
    emit(config, out, format_scalar_result(extq::pair(p, phi), config.step, config.decimal));
    return exit_ok;
  }
  case Command::info: {
    require_inputs(config, 1, "info");
    LineDist p = parse_line_dist(slurp(config.inputs[0]));
    std::ostringstream os;
    os << "# h = " << config.step.h() << '\n';
    os << "support_size " << p.size() << '\n';
    os << "total " << total(p) << '\n';
    os << "expectation " << expectation(p) << '\n';
    if (!p.empty()) {
      os << "min_point " << p.begin()->first << '\n';
      os << "max_point " << p.entries().rbegin()->first << '\n';
    }
    bool has_primitive = true;
    try {
      (void)primitive(p, config.step);
    } catch (const NoPrimitive &) {
      has_primitive = false;
    }
    os << "has_primitive " << (has_primitive ? "yes" : "no") << '\n';
    emit(config, out, os.str());
    return exit_ok;
  }
  }
  throw UsageError("unknown command");
}

} // namespace

MomentRow moments(const LineDist &p, unsigned k) {
  MomentRow row;
  row.k = k;
  row.total = total(p);
  if (row.total.is_zero())
    return row;
  Scalar mean = expectation(p) / row.total;
  Scalar m2, m3;
  for (const auto &[x, c] : p) {
    Scalar d = x - mean;
    Scalar d2 = d * d;
    m2 += c * d2;
    m3 += c * d2 * d;
  }
  m2 /= row.total;
  m3 /= row.total;
  row.mean = mean;
  row.variance = m2;
  if (!m2.is_zero())
    row.skewness_ratio = (m3 * m3) / (m2 * m2 * m2);
  return row;
}

std::string format_power_csv(const LineDist &p, const Step &step, std::optional<int> decimal) {
  std::ostringstream os;
  os << "# h = " << step.h() << '\n';
  os << (decimal ? "point,weight,weight_decimal\n" : "point,weight\n");
  for (const auto &[x, c] : p) {
    os << x << ',' << c;
    if (decimal)
      os << ',' << c.to_decimal(*decimal);
    os << '\n';
  }
  return os.str();
}

std::string format_summary_csv(const std::vector<MomentRow> &rows, const Step &step,
                               std::optional<int> decimal) {
  std::ostringstream os;
  os << "# h = " << step.h() << '\n';
  os << "k,total,mean,variance,skewness_numerator";
  if (decimal)
    os << ",mean_decimal,variance_decimal,skewness_numerator_decimal";
  os << '\n';
  for (const MomentRow &r : rows) {
    os << r.k << ',' << r.total << ',' << na_or(r.mean) << ',' << na_or(r.variance) << ','
       << na_or(r.skewness_ratio);
    if (decimal)
      os << ',' << na_or_decimal(r.mean, *decimal) << ',' << na_or_decimal(r.variance, *decimal) << ','
         << na_or_decimal(r.skewness_ratio, *decimal);
    os << '\n';
  }
  return os.str();
}

int run(const RunConfig &config, std::ostream &out, std::ostream &err) {
  try {
    return dispatch(config, out);
  } catch (const UsageError &e) {
    err << "error: " << e.what() << '\n';
    return exit_usage_error;
  } catch (const ParseError &e) {
    err << "parse error: " << e.what() << '\n';
    return exit_usage_error;
  } catch (const NoPrimitive &e) {
    err << "error: " << e.what() << '\n';
    return exit_domain_error;
  } catch (const DivisionByZero &e) {
    err << "error: " << e.what() << '\n';
    return exit_domain_error;
  }
}

} // namespace extq::cli
