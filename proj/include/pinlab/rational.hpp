// Exact rationals over int64 with overflow-checked arithmetic.
//
// Every endpoint handled by the profile calculus is a small rational: greedy
// partition steps and green-interval endpoints are solutions of linear
// equations with integer slopes, so 64-bit numerators/denominators are ample.
// Intermediate products go through __int128 and any result that does not fit
// back into int64 throws std::overflow_error instead of wrapping.

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pinlab {

__extension__ typedef __int128 wide_int;

class Rational {
public:
    constexpr Rational() noexcept = default;
    constexpr Rational(std::int64_t n) noexcept : num_(n), den_(1) {}  // NOLINT: implicit by design of the calculus
    Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

    [[nodiscard]] constexpr std::int64_t num() const noexcept { return num_; }
    [[nodiscard]] constexpr std::int64_t den() const noexcept { return den_; }
    [[nodiscard]] constexpr bool is_integer() const noexcept { return den_ == 1; }

    /// Largest integer <= *this.
    [[nodiscard]] std::int64_t floor() const noexcept {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }
    /// Smallest integer >= *this.
    [[nodiscard]] std::int64_t ceil() const noexcept {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ > 0) ++q;
        return q;
    }

    [[nodiscard]] double to_double() const noexcept {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    /// "p/q" with q >= 1, always carrying the denominator.
    [[nodiscard]] std::string str() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Accepts "p/q" or a bare integer "p"; whitespace is not allowed.
    static Rational parse(std::string_view text);

    Rational operator-() const { return from_wide(-static_cast<wide_int>(num_), den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (a.den_ == b.den_) return from_wide(static_cast<wide_int>(a.num_) + b.num_, a.den_);
        const wide_int n = static_cast<wide_int>(a.num_) * b.den_ + static_cast<wide_int>(b.num_) * a.den_;
        const wide_int d = static_cast<wide_int>(a.den_) * b.den_;
        return from_wide(n, d);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        if (a.den_ == b.den_) return from_wide(static_cast<wide_int>(a.num_) - b.num_, a.den_);
        const wide_int n = static_cast<wide_int>(a.num_) * b.den_ - static_cast<wide_int>(b.num_) * a.den_;
        const wide_int d = static_cast<wide_int>(a.den_) * b.den_;
        return from_wide(n, d);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from_wide(static_cast<wide_int>(a.num_) * b.num_, static_cast<wide_int>(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return from_wide(static_cast<wide_int>(a.num_) * b.den_, static_cast<wide_int>(a.den_) * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend constexpr bool operator==(const Rational& a, const Rational& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend constexpr std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
        if (a.den_ == b.den_) return a.num_ <=> b.num_;
        const wide_int l = static_cast<wide_int>(a.num_) * b.den_;
        const wide_int r = static_cast<wide_int>(b.num_) * a.den_;
        return l < r ? std::strong_ordering::less
                     : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    void assign(std::int64_t n, std::int64_t d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        *this = from_wide(n, d);
    }

    static Rational from_wide(wide_int n, wide_int d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (d != 1) {
            const wide_int g = gcd128(n < 0 ? -n : n, d);
            if (g > 1) {
                n /= g;
                d /= g;
            }
        }
        constexpr wide_int lo = INT64_MIN + 1;  // keep negation closed
        constexpr wide_int hi = INT64_MAX;
        if (n < lo || n > hi || d > hi) throw std::overflow_error("rational overflow");
        Rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }

    static wide_int gcd128(wide_int a, wide_int b) noexcept {
        while (b != 0) {
            const wide_int t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline Rational abs(const Rational& r) { return r.num() < 0 ? -r : r; }
inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace pinlab

template <>
struct std::hash<pinlab::Rational> {
    std::size_t operator()(const pinlab::Rational& r) const noexcept {
        return std::hash<std::int64_t>{}(r.num()) * 1000003u ^ std::hash<std::int64_t>{}(r.den());
    }
};
