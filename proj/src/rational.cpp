#include "scg/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "scg/errors.hpp"

namespace scg {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

[[noreturn]] void reject(std::string_view token) {
    throw ParseError("malformed decimal '" + std::string(token) + "'");
}

} // namespace

Rational Rational::from_decimal(std::string_view text) {
    std::string_view rest = text;
    bool negative = false;
    if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
        negative = rest.front() == '-';
        rest.remove_prefix(1);
    }

    std::string_view int_part = rest;
    std::string_view frac_part;
    if (const auto dot = rest.find('.'); dot != std::string_view::npos) {
        int_part = rest.substr(0, dot);
        frac_part = rest.substr(dot + 1);
        if (frac_part.empty()) reject(text);
        if (frac_part.find('.') != std::string_view::npos) reject(text);
    }
    if (!all_digits(int_part)) reject(text);
    if (!frac_part.empty() && !all_digits(frac_part)) reject(text);

    mpz_class numerator(std::string(int_part) + std::string(frac_part), 10);
    mpz_class denominator(1);
    for (std::size_t i = 0; i < frac_part.size(); ++i) denominator *= 10;
    if (negative) numerator = -numerator;

    return Rational(mpq_class(numerator, denominator));
}

Rational Rational::from_integer(long long value) {
    mpz_class n;
    // mpz_class has no long long constructor on LP64-free platforms; go via string.
    n = mpz_class(std::to_string(value), 10);
    return Rational(mpq_class(n));
}

Rational Rational::from_fraction(long long num, long long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    mpz_class n(std::to_string(num), 10);
    mpz_class d(std::to_string(den), 10);
    return Rational(mpq_class(n, d));
}

std::string Rational::to_decimal_string() const {
    mpz_class num = value_.get_num();
    mpz_class den = value_.get_den();

    // Count factors of 2 and 5 in the denominator; anything left over has
    // no finite decimal expansion.
    unsigned long twos = 0;
    unsigned long fives = 0;
    mpz_class d = den;
    while (d % 2 == 0) {
        d /= 2;
        ++twos;
    }
    while (d % 5 == 0) {
        d /= 5;
        ++fives;
    }
    if (d != 1) {
        throw DomainError("value " + value_.get_str() + " has no finite decimal form");
    }

    const unsigned long digits = twos > fives ? twos : fives;
    mpz_class scale(1);
    for (unsigned long i = twos; i < digits; ++i) scale *= 2;
    for (unsigned long i = fives; i < digits; ++i) scale *= 5;
    mpz_class scaled = num * scale; // now value == scaled / 10^digits

    const bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    std::string s = scaled.get_str();
    if (digits == 0) {
        return negative ? "-" + s : s;
    }

    if (s.size() <= digits) s.insert(0, digits - s.size() + 1, '0');
    s.insert(s.size() - digits, ".");
    // Strip trailing zeros of the fraction, then a bare trailing dot.
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    return negative ? "-" + s : s;
}

} // namespace scg
