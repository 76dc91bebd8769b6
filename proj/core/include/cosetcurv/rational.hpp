#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cosetcurv {

// Exact rational with canonical form: den > 0, gcd(|num|, den) = 1.
// All kernel quantities (masses, transport costs, curvatures, bounds) use this
// type; floating point appears only in display-layer formulas.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    static Rat from_i128(__int128 n, __int128 d) {
        if (d == 0) throw std::invalid_argument("rational: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n;
        __int128 b = d;
        while (b) { __int128 t = a % b; a = b; b = t; }
        if (a > 1) { n /= a; d /= a; }
        constexpr __int128 lo = INT64_MIN, hi = INT64_MAX;
        if (n < lo || n > hi || d > hi)
            throw std::overflow_error("rational: value exceeds 64-bit range");
        Rat r;
        r.num = static_cast<long long>(n);
        r.den = static_cast<long long>(n == 0 ? 1 : d);
        return r;
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return from_i128((__int128)a.num * b.den + (__int128)b.num * a.den,
                         (__int128)a.den * b.den);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return from_i128((__int128)a.num * b.den - (__int128)b.num * a.den,
                         (__int128)a.den * b.den);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return from_i128((__int128)a.num * b.num, (__int128)a.den * b.den);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw std::invalid_argument("rational: division by zero");
        return from_i128((__int128)a.num * b.den, (__int128)a.den * b.num);
    }
    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }
    Rat operator-() const { Rat r = *this; r.num = -r.num; return r; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return (__int128)a.num * b.den < (__int128)b.num * a.den;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    // Serialized form is always "p/q" with q >= 1, e.g. "1/1", "-3/5".
    std::string to_string() const {
        return std::to_string(num) + "/" + std::to_string(den);
    }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    // Accepts "p/q" or a bare integer "p".
    static Rat parse(const std::string& s);
};

inline Rat Rat::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(std::stoll(s));
        long long p = std::stoll(s.substr(0, slash));
        long long q = std::stoll(s.substr(slash + 1));
        return Rat(p, q);
    } catch (const std::logic_error&) {
        throw std::invalid_argument("rational: cannot parse '" + s + "'");
    }
}

} // namespace cosetcurv
