#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace scg {

// Exact rational number. All comparisons are exact; there is no tolerance
// anywhere in the library. Values enter as decimal strings ("2", "-0.25")
// or integers, so every weight that reaches a graph has a finite decimal
// expansion again on output.
class Rational {
public:
    Rational() : value_(0) {}

    // Parses "[+-]digits[.digits]". Rejects exponents, bare dots and any
    // other token, quoting the token in the error message.
    static Rational from_decimal(std::string_view text);

    static Rational from_integer(long long value);

    // num/den with den != 0; normalizes sign and reduces.
    static Rational from_fraction(long long num, long long den);

    // Minimal exact decimal form: "3", "-0.25", "0.5". Only defined for
    // denominators of the form 2^a * 5^b, which is every value produced
    // by from_decimal / from_integer and closed under +, -, *.
    std::string to_decimal_string() const;

    int sign() const noexcept { return sgn(value_); }

    bool is_negative() const noexcept { return sign() < 0; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.value_ == b.value_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    Rational operator+(const Rational& o) const { return Rational(value_ + o.value_); }
    Rational operator-(const Rational& o) const { return Rational(value_ - o.value_); }
    Rational operator*(const Rational& o) const { return Rational(value_ * o.value_); }
    Rational operator-() const { return Rational(-value_); }

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

    mpq_class value_;
};

} // namespace scg
