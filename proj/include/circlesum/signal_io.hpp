#pragma once

#include <istream>
#include <string>

#include "circlesum/harmonics.hpp"

namespace circlesum {

/// Reads a signal description:
///
///     # comment
///     n=3
///     1  0.5  0
///     2  3    4
///     3  0   -1
///
/// Harmonics left out are zero. Instead of coefficient lines, a `samples`
/// line may introduce `t y` pairs; the coefficients are then fitted by least
/// squares (at least 2n+1 samples). Malformed input raises InvalidArgument.
TrigPolynomial parse_signal(std::istream& in);
TrigPolynomial read_signal_file(const std::string& path);

/// Writes the coefficient form accepted by parse_signal.
std::string format_signal(const TrigPolynomial& signal);

}  // namespace circlesum
