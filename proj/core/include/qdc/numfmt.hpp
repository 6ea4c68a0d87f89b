#pragma once

#include <string>

namespace qdc {

/// Decimal text with up to 12 significant digits, '.' separator, no locale.
std::string format_significant(double v);

}  // namespace qdc
