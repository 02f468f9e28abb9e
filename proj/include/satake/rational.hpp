#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace satake {

// Thrown when an intermediate result no longer fits in 64-bit numerator or
// denominator.  Nothing in the supported computations gets close, so this is
// a bug detector rather than a recoverable condition.
struct RationalOverflow : std::overflow_error {
    using std::overflow_error::overflow_error;
};

// Exact rational number with a positive denominator in lowest terms.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    int sign() const { return (num_ > 0) - (num_ < 0); }

    // floor / ceil as integers
    std::int64_t floor() const;
    std::int64_t ceil() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    // "p/q", or just "p" when the denominator is 1
    std::string str() const;
    // Accepts "p", "p/q", "-p/q" (whitespace around tokens tolerated).  No
    // decimals: the whole point is exactness.
    static Rational parse(std::string_view s);

private:
    static Rational from_wide(__int128 n, __int128 d);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

using RationalVector = std::vector<Rational>;

Rational dot(const RationalVector& a, const RationalVector& b);
RationalVector operator+(const RationalVector& a, const RationalVector& b);
RationalVector operator-(const RationalVector& a, const RationalVector& b);
RationalVector operator-(const RationalVector& a);
RationalVector operator*(const Rational& c, const RationalVector& a);
RationalVector& operator+=(RationalVector& a, const RationalVector& b);
bool is_zero(const RationalVector& v);
RationalVector zero_vector(std::size_t n);

// "(a, b, c)"
std::string to_string(const RationalVector& v);

// Integer literals are the common case when writing coordinates down.
RationalVector vec(std::initializer_list<Rational> xs);

}  // namespace satake

template <>
struct std::hash<satake::Rational> {
    std::size_t operator()(const satake::Rational& r) const noexcept {
        return std::hash<std::int64_t>{}(r.num()) * 1000003u ^ std::hash<std::int64_t>{}(r.den());
    }
};
