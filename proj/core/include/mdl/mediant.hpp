#pragma once

#include "mdl/rational.hpp"

namespace mdl {

/// (a+b+c)/(d+e+f) against max{(a+2b)/(d+2e), (a+2c)/(d+2f)}.
///
/// The left side is a weighted average of the two maximands, so `holds` is
/// always true and `equality` exactly when the maximands coincide.
struct MediantBound {
    Rational lhs;
    Rational rhs;
    bool holds = false;
    bool equality = false;
};

/// Requires nonnegative inputs with d+2e, d+2f and d+e+f positive; throws InvalidArgument otherwise.
MediantBound mediant_bound(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                           const Rational& e, const Rational& f);

}  // namespace mdl
