#pragma once

#include <string>

namespace orlicz {

/// Shortest decimal with at most `digits` significant digits, '.' as the
/// decimal point regardless of locale. Infinities render as "inf"/"-inf".
std::string format_number(double value, int digits = 9);

}  // namespace orlicz
