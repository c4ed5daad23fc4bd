#pragma once

#include <optional>
#include <string>

#include "heptalift/ring.hpp"

namespace heptalift
{

/// First continued-fraction convergent p/q of x with q <= max_den and
/// |x - p/q| < bound, if any.
std::optional<Rational> rational_reconstruct(const Rational& x, const Rational& bound, const Integer& max_den);

/// Same, with x given as a decimal string.
std::optional<Rational> rational_reconstruct(const std::string& decimal, const Rational& bound, const Integer& max_den);

} // namespace heptalift
