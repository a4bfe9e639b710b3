#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>

namespace magic {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Angular momentum quantum number stored as twice its value, so that
// half-integers are exact. Projections may be negative.
class HalfInt {
public:
    constexpr HalfInt() = default;
    static constexpr HalfInt from_twice(int twice) { HalfInt h; h.twice_ = twice; return h; }
    constexpr HalfInt(int whole) : twice_(2 * whole) {}

    constexpr int twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    constexpr double value() const { return 0.5 * twice_; }
    Rational rational() const { return Rational(twice_, 2); }

    constexpr HalfInt operator-() const { return from_twice(-twice_); }
    constexpr HalfInt operator+(HalfInt o) const { return from_twice(twice_ + o.twice_); }
    constexpr HalfInt operator-(HalfInt o) const { return from_twice(twice_ - o.twice_); }
    constexpr auto operator<=>(const HalfInt&) const = default;

    // "3/2", "-1/2", "2"
    std::string str() const;
    static HalfInt parse(const std::string& text);

private:
    int twice_ = 0;
};

constexpr HalfInt half(int twice) { return HalfInt::from_twice(twice); }

// Signed square of an exact value: value = sign * sqrt(square).
struct CouplingValue {
    int sign = 0;
    Rational square = 0;

    double to_double() const;
    bool is_zero() const { return sign == 0; }

    CouplingValue operator*(const CouplingValue& o) const;
    bool operator==(const CouplingValue&) const = default;
};

// Largest accepted 2j for any argument.
inline constexpr int max_twice_j = 200;

// Racah sums; zero when selection rules fail, std::invalid_argument on
// malformed arguments.
CouplingValue wigner_3j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3);
CouplingValue wigner_6j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j4, HalfInt j5, HalfInt j6);

bool triangle(HalfInt a, HalfInt b, HalfInt c);

// (-1)^k for integer k given as twice-value (must be even).
int parity_sign(int twice_k);

BigInt factorial(int n);

}  // namespace magic
