#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "tcone/errors.hpp"

namespace tcone {

namespace detail {

inline long long checked_narrow(__int128 v) {
    require(v <= INT64_MAX && v >= INT64_MIN, errc::internal, "integer overflow");
    return static_cast<long long>(v);
}

inline long long mul_ll(long long a, long long b) {
    return checked_narrow(static_cast<__int128>(a) * b);
}

} // namespace detail

// Exact rational on checked 64-bit words. Every value produced in this
// project stays tiny (block matrices have unit entries), so a fixed-width
// exact type suffices; overflow raises errc::internal rather than wrapping.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d) : num(n), den(d) {
        require(d != 0, errc::invalid_input, "zero denominator");
        reduce();
    }

    void reduce() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }

    bool is_zero() const { return num == 0; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(detail::checked_narrow(static_cast<__int128>(a.num) * b.den +
                                               static_cast<__int128>(b.num) * a.den),
                        detail::mul_ll(a.den, b.den));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return a + Rational(-b.num, b.den);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(detail::mul_ll(a.num, b.num), detail::mul_ll(a.den, b.den));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        require(b.num != 0, errc::invalid_input, "division by zero");
        return Rational(detail::mul_ll(a.num, b.den), detail::mul_ll(a.den, b.num));
    }
    Rational operator-() const { return Rational(-num, den); }

    bool operator==(const Rational&) const = default;
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
};

inline std::string to_string(const Rational& r) {
    if (r.den == 1) return std::to_string(r.num);
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

} // namespace tcone
