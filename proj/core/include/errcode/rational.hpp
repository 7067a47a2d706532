#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace errcode {

class RationalOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

// Exact fraction in lowest terms with a positive denominator. Every operation
// checks for 64-bit overflow and throws RationalOverflow instead of wrapping.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1);  // NOLINT(google-explicit-constructor)

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational operator-() const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    std::string str() const;
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace errcode
