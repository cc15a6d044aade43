#include "ptsym/format.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace ptsym::fmt {

namespace {

// -0 prints as 0 so that outputs do not depend on the sign of zero.
double unsigned_zero(double x) { return x == 0.0 ? 0.0 : x; }

}  // namespace

std::string exact(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), unsigned_zero(x));
  return std::string(buf.data(), res.ptr);
}

std::string text(double x) {
  if (std::isnan(x)) return "nan";
  std::array<char, 64> buf{};
  const int n = std::snprintf(buf.data(), buf.size(), "%.6g", unsigned_zero(x));
  return std::string(buf.data(), static_cast<std::size_t>(n));
}

std::string text(Complex z) {
  const double im = unsigned_zero(z.imag());
  std::string out = text(z.real());
  out += std::signbit(im) ? "-" : "+";
  out += text(std::abs(im));
  out += "i";
  return out;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (const char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace ptsym::fmt
