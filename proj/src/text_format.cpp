#include "extq/text_format.hpp"

#include <istream>
#include <iterator>
#include <set>
#include <sstream>
#include <vector>

namespace extq {

namespace {

std::string_view trim(std::string_view s) {
  const char *ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos)
    return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

// Splits a data line into a point field and a value field. Whitespace
// separated lines have exactly two fields; comma separated lines may carry
// a third (decimal approximation) column, which is ignored.
bool split_fields(std::string_view line, std::string_view &first, std::string_view &second) {
  if (std::size_t comma = line.find(','); comma != std::string_view::npos) {
    first = trim(line.substr(0, comma));
    std::string_view rest = line.substr(comma + 1);
    std::size_t extra = rest.find(',');
    second = trim(rest.substr(0, extra));
    if (extra != std::string_view::npos) {
      std::string_view third = trim(rest.substr(extra + 1));
      if (third.empty() || third.find_first_of(", \t") != std::string_view::npos)
        return false;
    }
  } else {
    std::size_t sep = line.find_first_of(" \t");
    if (sep == std::string_view::npos)
      return false;
    first = trim(line.substr(0, sep));
    second = trim(line.substr(sep + 1));
  }
  if (first.empty() || second.empty())
    return false;
  return second.find_first_of(" \t,") == std::string_view::npos;
}

template <class Fn>
void for_each_data_line(std::string_view text, Fn &&fn) {
  std::size_t lineno = 0;
  while (!text.empty()) {
    ++lineno;
    std::size_t nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.empty() || line.front() == '#' || line.starts_with("point,"))
      continue;
    std::string_view a, b;
    if (!split_fields(line, a, b))
      throw ParseError("line " + std::to_string(lineno) + ": expected two fields, got '" +
                       std::string(line) + "'");
    try {
      fn(a, b);
    } catch (const ParseError &e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
}

} // namespace

LineDist parse_line_dist(std::string_view text) {
  LineDist p;
  std::set<Scalar> seen;
  for_each_data_line(text, [&](std::string_view a, std::string_view b) {
    Scalar x = Scalar::parse(a);
    if (!seen.insert(x).second)
      throw ParseError("duplicate point " + x.str());
    p.accumulate(x, Scalar::parse(b));
  });
  return p;
}

LineDist read_line_dist(std::istream &in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_line_dist(text);
}

std::string format_line_dist(const LineDist &p, const std::optional<Step> &step) {
  std::ostringstream os;
  if (step)
    os << "# h = " << step->h() << '\n';
  for (const auto &[x, c] : p)
    os << x << ' ' << c << '\n';
  return os.str();
}

LineFn parse_line_fn(std::string_view text) {
  std::vector<std::pair<Scalar, Scalar>> entries;
  std::set<Scalar> seen;
  std::optional<Scalar> dflt;
  for_each_data_line(text, [&](std::string_view a, std::string_view b) {
    if (a == "default") {
      if (dflt)
        throw ParseError("more than one default line");
      dflt = Scalar::parse(b);
      return;
    }
    Scalar x = Scalar::parse(a);
    if (!seen.insert(x).second)
      throw ParseError("duplicate point " + x.str());
    entries.emplace_back(x, Scalar::parse(b));
  });
  LineFn phi(dflt.value_or(Scalar(0)));
  for (const auto &[x, v] : entries)
    phi.set(x, v);
  return phi;
}

std::string format_line_fn(const LineFn &phi) {
  std::ostringstream os;
  for (const auto &[x, v] : phi.exceptions())
    os << x << ' ' << v << '\n';
  os << "default " << phi.default_value() << '\n';
  return os.str();
}

} // namespace extq
