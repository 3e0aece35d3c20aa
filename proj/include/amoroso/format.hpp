#pragma once

#include <string>

namespace amoroso {

/// Locale-independent decimal form with 17 significant digits, trailing
/// zeros dropped ("1", "0.69314718055994529", "2.0611536224385579e-09",
/// "inf", "-inf", "nan").
std::string format_real(double value);

}  // namespace amoroso
