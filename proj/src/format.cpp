#include "amoroso/format.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

namespace amoroso {

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
  if (result.ec != std::errc{}) return "nan";
  return std::string(buf, result.ptr);
}

}  // namespace amoroso
