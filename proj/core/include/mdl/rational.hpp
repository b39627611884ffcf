#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace mdl {

/// Exact fraction kept in lowest terms with a positive denominator.
///
/// Comparisons cross-multiply in 128-bit arithmetic, so any pair of values
/// with 64-bit components compares exactly.
class Rational {
public:
    constexpr Rational() noexcept = default;
    constexpr Rational(std::int64_t value) noexcept : num_(value) {}  // NOLINT(implicit)
    Rational(std::int64_t numerator, std::int64_t denominator);

    [[nodiscard]] constexpr std::int64_t num() const noexcept { return num_; }
    [[nodiscard]] constexpr std::int64_t den() const noexcept { return den_; }
    [[nodiscard]] constexpr bool is_integer() const noexcept { return den_ == 1; }

    /// "p/q", or "p" when the denominator is one.
    [[nodiscard]] std::string str() const;
    /// Approximate value, for display only.
    [[nodiscard]] double to_double() const noexcept;

    /// Accepts "p", "p/q" and "-p/q"; the result is reduced.
    static Rational parse(std::string_view text);

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return Rational(-num_, den_); }

    friend constexpr bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Returns true iff r equals i/(i+1) for some integer i >= 0.
bool is_superparticular(const Rational& r);

}  // namespace mdl

template <>
struct std::hash<mdl::Rational> {
    std::size_t operator()(const mdl::Rational& r) const noexcept {
        return std::hash<std::int64_t>{}(r.num()) * 1000003u ^ std::hash<std::int64_t>{}(r.den());
    }
};
