#pragma once

#include <vector>

#include "skmaass/quadext.hpp"

namespace skmaass {

/// Dense polynomial over Q(sqrt q); coef[i] is the x^i coefficient.
using Poly = std::vector<QuadExt>;

/// First order+1 Taylor coefficients of numer/denom as formal power series.
/// denom must have a nonzero constant term.
std::vector<QuadExt> series_div(const Poly& numer, const Poly& denom, int order);

/// Polynomial product truncated at degree `order` (test/oracle helper).
std::vector<QuadExt> poly_mul_truncated(const Poly& a, const Poly& b, int order);

} // namespace skmaass
