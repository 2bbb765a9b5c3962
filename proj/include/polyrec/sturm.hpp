#pragma once

#include "polyrec/recurrence.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace polyrec {

using BigInt = boost::multiprecision::cpp_int;

// Dense integer polynomial, ascending coefficients, no leading zeros.
using IntPoly = std::vector<BigInt>;

// W_0..W_N with exact integer coefficients. Parameters are dyadic (every
// double is), so each W_n can be rescaled by a power of two without moving
// its roots. Throws std::invalid_argument when a parameter needs more than
// 2^62 of scaling.
std::vector<IntPoly> exact_sequence(const RecurrenceParams& params, int N);

// Number of distinct real roots, by Sturm's theorem over the integers.
int distinct_real_roots(const IntPoly& p);

// Degree drop to the squarefree part, deg gcd(p, p').
int gcd_degree(const IntPoly& p);

// All deg(p) roots real, counted with multiplicity. Exact.
bool real_rooted_exact(const IntPoly& p);

}  // namespace polyrec
