#include "compseq/gauss.hpp"

#include <cmath>

namespace compseq {

std::string to_token(const GaussInt& z) {
    if (z == kOne) return "+";
    if (z == kMinusOne) return "-";
    if (z == kZero) return "0";
    if (z == kImag) return "+j";
    if (z == kMinusImag) return "-j";
    if (z.im == 0) return std::to_string(z.re);
    std::string s = std::to_string(z.re);
    s += (z.im < 0) ? "-" : "+";
    s += std::to_string(z.im < 0 ? -z.im : z.im);
    s += "i";
    return s;
}

std::uint64_t isqrt(std::uint64_t n) {
    if (n == 0) return 0;
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool is_perfect_square(std::uint64_t n) {
    std::uint64_t r = isqrt(n);
    return r * r == n;
}

}  // namespace compseq
