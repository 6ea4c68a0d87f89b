#include "qdc/numfmt.hpp"

#include <charconv>

namespace qdc {

std::string format_significant(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

}  // namespace qdc
