#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace compseq {

/// Exact Gaussian integer a+bi. Sequence elements and correlation values
/// stay in this domain, so every equality assertion in the library is
/// bit-exact; no floating point enters until a value is reported.
struct GaussInt {
    std::int64_t re = 0;
    std::int64_t im = 0;

    friend constexpr GaussInt operator+(GaussInt a, GaussInt b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend constexpr GaussInt operator-(GaussInt a, GaussInt b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend constexpr GaussInt operator*(GaussInt a, GaussInt b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    constexpr GaussInt operator-() const { return {-re, -im}; }

    friend constexpr bool operator==(GaussInt, GaussInt) = default;
    friend constexpr auto operator<=>(GaussInt, GaussInt) = default;

    constexpr GaussInt conj() const { return {re, -im}; }

    /// Squared magnitude |a+bi|^2, always a nonnegative integer.
    constexpr std::uint64_t norm() const {
        return static_cast<std::uint64_t>(re * re + im * im);
    }

    constexpr bool is_zero() const { return re == 0 && im == 0; }
    constexpr bool is_real() const { return im == 0; }
};

inline constexpr GaussInt kOne{1, 0};
inline constexpr GaussInt kMinusOne{-1, 0};
inline constexpr GaussInt kZero{0, 0};
inline constexpr GaussInt kImag{0, 1};
inline constexpr GaussInt kMinusImag{0, -1};

/// Canonical sequence-file token: "+", "-", "0", "+j", "-j", or "a+bi".
std::string to_token(const GaussInt& z);

/// Exact integer square root (floor).
std::uint64_t isqrt(std::uint64_t n);

/// True when n is a perfect square.
bool is_perfect_square(std::uint64_t n);

}  // namespace compseq
