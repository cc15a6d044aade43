#pragma once

#include <string>
#include <string_view>

#include "ptsym/cxmat.hpp"

namespace ptsym::fmt {

/// Shortest round-trip decimal form; "nan"/"inf" for non-finite values.
std::string exact(double x);
/// Six significant digits for human-readable text.
std::string text(double x);
/// "x+yi" / "x-yi" with six significant digits.
std::string text(Complex z);
/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(std::string_view s);

}  // namespace ptsym::fmt
