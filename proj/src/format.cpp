#include "polyrec/format.hpp"

#include <cstdio>

namespace polyrec {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", v);
    return buf;
}

std::string format_real(const Real& v) {
    return format_double(v.convert_to<double>());
}

}  // namespace polyrec
