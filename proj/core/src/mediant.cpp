#include "mdl/mediant.hpp"

#include <algorithm>

#include "mdl/error.hpp"

namespace mdl {

MediantBound mediant_bound(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                           const Rational& e, const Rational& f) {
    const Rational zero;
    for (const Rational* x : {&a, &b, &c, &d, &e, &f})
        if (*x < zero) throw InvalidArgument("mediant bound inputs must be nonnegative");
    const Rational two(2);
    const Rational den_left = d + two * e;
    const Rational den_right = d + two * f;
    const Rational den_total = d + e + f;
    if (den_left == zero || den_right == zero || den_total == zero)
        throw InvalidArgument("mediant bound needs d+2e, d+2f and d+e+f positive");

    MediantBound out;
    out.lhs = (a + b + c) / den_total;
    const Rational left = (a + two * b) / den_left;
    const Rational right = (a + two * c) / den_right;
    out.rhs = std::max(left, right);
    out.holds = out.lhs <= out.rhs;
    out.equality = out.lhs == out.rhs;
    return out;
}

}  // namespace mdl
