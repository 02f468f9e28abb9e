#include "satake/rational.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

namespace satake {

namespace {

using i128 = __int128;

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits(i128 x) {
    return x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max();
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    return v;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    *this = from_wide(n, d);
}

Rational Rational::from_wide(i128 n, i128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (!fits(n) || !fits(d)) throw RationalOverflow("rational overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
}

std::int64_t Rational::floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

std::int64_t Rational::ceil() const { return -(-*this).floor(); }

Rational Rational::operator-() const {
    if (num_ == std::numeric_limits<std::int64_t>::min()) throw RationalOverflow("rational overflow");
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    if (den_ == o.den_) return *this = from_wide(i128(num_) + o.num_, den_);
    return *this = from_wide(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
}

Rational& Rational::operator-=(const Rational& o) {
    if (den_ == o.den_) return *this = from_wide(i128(num_) - o.num_, den_);
    return *this = from_wide(i128(num_) * o.den_ - i128(o.num_) * den_, i128(den_) * o.den_);
}

Rational& Rational::operator*=(const Rational& o) {
    return *this = from_wide(i128(num_) * o.num_, i128(den_) * o.den_);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("division by zero rational");
    return *this = from_wide(i128(num_) * o.den_, i128(den_) * o.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ <=> i128(b.num_) * a.den_;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(s, s));
    std::int64_t n = parse_int(s.substr(0, slash), s);
    std::int64_t d = parse_int(s.substr(slash + 1), s);
    if (d == 0) throw std::invalid_argument("malformed rational '" + std::string(s) + "': zero denominator");
    return Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational dot(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("pairing of vectors of different dimension (" + std::to_string(a.size()) +
                                    " vs " + std::to_string(b.size()) + ")");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

RationalVector operator+(const RationalVector& a, const RationalVector& b) {
    RationalVector r = a;
    r += b;
    return r;
}

RationalVector& operator+=(RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

RationalVector operator-(const RationalVector& a, const RationalVector& b) { return a + (-b); }

RationalVector operator-(const RationalVector& a) {
    RationalVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

RationalVector operator*(const Rational& c, const RationalVector& a) {
    RationalVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

bool is_zero(const RationalVector& v) {
    for (auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

RationalVector zero_vector(std::size_t n) { return RationalVector(n); }

std::string to_string(const RationalVector& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ')';
    return os.str();
}

RationalVector vec(std::initializer_list<Rational> xs) { return RationalVector(xs); }

}  // namespace satake
