#ifndef EXTQ_TEXT_FORMAT_HPP
#define EXTQ_TEXT_FORMAT_HPP

// Text formats for distributions and intensive quantities on the line.
//
// Distribution: one entry per line, "<point> <scalar>", ascending points.
// A comma may be used instead of whitespace, lines starting with '#' are
// comments, a "point,weight[,...]" CSV header is skipped along with a third
// CSV column, and a file with no entries is the zero distribution.
//
// Intensive function: "<point> <value>" lines plus at most one
// "default <value>" line (zero when absent).

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "extq/calculus.hpp"
#include "extq/intensive.hpp"

namespace extq {

LineDist parse_line_dist(std::string_view text);
LineDist read_line_dist(std::istream &in);

// Emits the step as a "# h = p/q" comment line when one is given.
std::string format_line_dist(const LineDist &p, const std::optional<Step> &step = std::nullopt);

LineFn parse_line_fn(std::string_view text);
std::string format_line_fn(const LineFn &phi);

} // namespace extq

#endif
