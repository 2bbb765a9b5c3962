#pragma once

#include "polyrec/scalar.hpp"

#include <string>

namespace polyrec {

// Scientific notation, 17 significant digits; round-trips doubles exactly
// and is byte-stable across runs.
std::string format_double(double v);
std::string format_real(const Real& v);

}  // namespace polyrec
