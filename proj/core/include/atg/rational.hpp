/*
 * Copyright 2026 The atg authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ATG_RATIONAL_HPP
#define ATG_RATIONAL_HPP

#include <cstdint>
#include <functional>
#include <numeric>
#include <string>

#include "atg/error.hpp"

namespace atg {

/// Exact rational arithmetic on 64-bit numerator/denominator.
///
/// Every value is kept normalized: den > 0 and gcd(|num|, den) = 1.
/// Intermediate products are computed in 128 bits; a result that does not
/// fit back into 64 bits raises errc::overflow instead of wrapping.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n) : num(n), den(1) {}
    Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

    static Rational from_int128(__int128 n, __int128 d) {
        if (d == 0) throw Error(errc::overflow, "rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        Rational r;
        r.num = narrow(n);
        r.den = narrow(d);
        return r;
    }

    bool is_integer() const { return den == 1; }

    std::int64_t floor() const {
        if (num >= 0) return num / den;
        return -(((-num) + den - 1) / den);
    }

    /// Fractional part in [0, 1).
    Rational frac() const { return *this - Rational(floor()); }

    Rational operator-() const { return from_int128(-(__int128)num, den); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from_int128((__int128)a.num * b.den + (__int128)b.num * a.den,
                           (__int128)a.den * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from_int128((__int128)a.num * b.den - (__int128)b.num * a.den,
                           (__int128)a.den * b.den);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from_int128((__int128)a.num * b.num, (__int128)a.den * b.den);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0) throw Error(errc::overflow, "rational division by zero");
        return from_int128((__int128)a.num * b.den, (__int128)a.den * b.num);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return (__int128)a.num * b.den < (__int128)b.num * a.den;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    /// Canonical rendering: "p" for integers, "p/q" otherwise.
    std::string to_string() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

  private:
    void assign(std::int64_t n, std::int64_t d) {
        *this = from_int128(n, d);
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a < 0 ? -a : a;
    }

    static std::int64_t narrow(__int128 v) {
        if (v > INT64_MAX || v < INT64_MIN)
            throw Error(errc::overflow, "rational arithmetic overflow");
        return (std::int64_t)v;
    }
};

inline Rational abs(const Rational& r) { return r.num < 0 ? -r : r; }

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

inline std::int64_t lcm64(std::int64_t a, std::int64_t b) {
    __int128 l = (__int128)(a / std::gcd(a, b)) * b;
    if (l > INT64_MAX) throw Error(errc::overflow, "lcm overflow");
    return (std::int64_t)l;
}

} // namespace atg

template <> struct std::hash<atg::Rational> {
    size_t operator()(const atg::Rational& r) const {
        return std::hash<std::int64_t>()(r.num) * 1000003u ^ std::hash<std::int64_t>()(r.den);
    }
};

#endif
