#ifndef MAXSWP_RATIONAL_HPP
#define MAXSWP_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace maxswp {

namespace detail {

using i128 = __int128;
using u128 = unsigned __int128;

inline constexpr i128 kI128Max = static_cast<i128>(~static_cast<u128>(0) >> 1);

inline u128 abs_u128(i128 x) noexcept {
    return x < 0 ? static_cast<u128>(0) - static_cast<u128>(x) : static_cast<u128>(x);
}

inline int ctz_u128(u128 x) noexcept {
    const auto lo = static_cast<std::uint64_t>(x);
    return lo != 0 ? __builtin_ctzll(lo) : 64 + __builtin_ctzll(static_cast<std::uint64_t>(x >> 64));
}

// Binary gcd with a 64-bit fast path; almost every welfare denominator fits in one word.
inline u128 gcd_u128(u128 a, u128 b) noexcept {
    if (a == 0) return b;
    if (b == 0) return a;
    if ((a >> 64) == 0 && (b >> 64) == 0) {
        return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    }
    const int shift = ctz_u128(a | b);
    a >>= ctz_u128(a);
    do {
        b >>= ctz_u128(b);
        if (a > b) std::swap(a, b);
        b -= a;
    } while (b != 0);
    return a << shift;
}

}  // namespace detail

/// Exact fraction, always reduced with a positive denominator.
///
/// Values live in a checked 128-bit representation. Any operation whose
/// intermediate would overflow 128 bits is detected and recomputed in GMP
/// arbitrary precision; results that fit again are demoted back to 128 bits.
/// The number of such promotions is observable through promotion_count().
class Rational {
public:
    using Int = detail::i128;

    Rational() noexcept = default;
    Rational(long long value) noexcept : num_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(Int num, Int den);

    static Rational from_mpq(const mpq_class& value);

    /// Parses "a", "a/b" or "-a/b" in base 10 (arbitrary length).
    static Rational parse(const std::string& text);

    [[nodiscard]] bool is_small() const noexcept { return big_ == nullptr; }
    [[nodiscard]] int sign() const noexcept;
    [[nodiscard]] bool is_zero() const noexcept { return sign() == 0; }

    [[nodiscard]] std::string numerator_string() const;
    [[nodiscard]] std::string denominator_string() const;
    /// "num/den", or just "num" for integers.
    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] mpq_class to_mpq() const;
    /// Approximate value, for human-readable reports only.
    [[nodiscard]] double to_double() const;

    Rational& operator+=(const Rational& other);
    Rational& operator-=(const Rational& other);
    Rational& operator*=(const Rational& other);
    Rational& operator/=(const Rational& other);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& lhs, const Rational& rhs);
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

    friend std::ostream& operator<<(std::ostream& os, const Rational& value);

    /// Total number of 128-bit overflows detected (and resolved in GMP) so far.
    static std::uint64_t promotion_count() noexcept;

private:
    struct Unreduced {};
    Rational(Int num, Int den, Unreduced) noexcept : num_(num), den_(den) {}

    static Rational from_big(mpq_class value);
    void assign_big(mpq_class value);

    Int num_ = 0;
    Int den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

mpz_class to_mpz(detail::i128 value);

}  // namespace maxswp

#endif  // MAXSWP_RATIONAL_HPP
