#include "maxswp/rational.hpp"

#include <atomic>
#include <cctype>
#include <numeric>
#include <ostream>

namespace maxswp {

namespace {

using detail::i128;
using detail::u128;

std::atomic<std::uint64_t> g_promotions{0};

void note_promotion() noexcept { g_promotions.fetch_add(1, std::memory_order_relaxed); }

bool fits_small(const mpz_class& z) {
    // |z| <= 2^127 - 1, so negation is always safe in the small path.
    return mpz_sizeinbase(z.get_mpz_t(), 2) <= 127;
}

i128 to_i128(const mpz_class& z) {
    u128 magnitude = 0;
    std::size_t count = 0;
    std::uint64_t words[2] = {0, 0};
    mpz_export(words, &count, -1, sizeof(std::uint64_t), 0, 0, z.get_mpz_t());
    magnitude = (static_cast<u128>(words[1]) << 64) | words[0];
    const auto value = static_cast<i128>(magnitude);
    return sgn(z) < 0 ? -value : value;
}

bool checked_mul(i128 a, i128 b, i128& out) noexcept {
    return !__builtin_mul_overflow(a, b, &out) && out != -detail::kI128Max - 1;
}

bool checked_add(i128 a, i128 b, i128& out) noexcept {
    return !__builtin_add_overflow(a, b, &out) && out != -detail::kI128Max - 1;
}

bool fits64(i128 x) noexcept { return x == static_cast<std::int64_t>(x); }

std::uint64_t abs64(std::int64_t x) noexcept {
    return x < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(x) : static_cast<std::uint64_t>(x);
}

// Single-word sum for the common case; false when an operand or an
// intermediate leaves 64 bits, so the caller falls back to 128 bits.
bool add64(i128& num, i128& den, i128 other_num, i128 other_den) noexcept {
    if (!fits64(num) || !fits64(den) || !fits64(other_num) || !fits64(other_den)) return false;
    const auto a = static_cast<std::int64_t>(num);
    const auto b = static_cast<std::int64_t>(den);
    const auto c = static_cast<std::int64_t>(other_num);
    const auto d = static_cast<std::int64_t>(other_den);
    std::int64_t n = 0;
    if (b == d) {
        if (__builtin_add_overflow(a, c, &n)) return false;
        const auto g = static_cast<std::int64_t>(std::gcd(abs64(n), static_cast<std::uint64_t>(b)));
        num = n / g;
        den = b / g;
        return true;
    }
    const auto g = static_cast<std::int64_t>(std::gcd(static_cast<std::uint64_t>(b), static_cast<std::uint64_t>(d)));
    const std::int64_t lhs_scale = d / g;
    const std::int64_t rhs_scale = b / g;
    std::int64_t x = 0;
    std::int64_t y = 0;
    if (__builtin_mul_overflow(a, lhs_scale, &x) || __builtin_mul_overflow(c, rhs_scale, &y) ||
        __builtin_add_overflow(x, y, &n)) {
        return false;
    }
    const auto g2 = static_cast<std::int64_t>(std::gcd(abs64(n), static_cast<std::uint64_t>(g)));
    std::int64_t dd = 0;
    if (__builtin_mul_overflow(rhs_scale, d / g2, &dd)) return false;
    num = n / g2;
    den = dd;
    return true;
}

std::string i128_to_string(i128 value) {
    if (value == 0) return "0";
    u128 mag = detail::abs_u128(value);
    std::string digits;
    while (mag != 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
        mag /= 10;
    }
    if (value < 0) digits.push_back('-');
    return {digits.rbegin(), digits.rend()};
}

}  // namespace

mpz_class to_mpz(i128 value) {
    const u128 mag = detail::abs_u128(value);
    const std::uint64_t words[2] = {static_cast<std::uint64_t>(mag), static_cast<std::uint64_t>(mag >> 64)};
    mpz_class z;
    mpz_import(z.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, words);
    if (value < 0) z = -z;
    return z;
}

Rational::Rational(Int num, Int den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (num == -detail::kI128Max - 1 || den == -detail::kI128Max - 1) {
        mpq_class q(to_mpz(num), to_mpz(den));
        q.canonicalize();
        assign_big(std::move(q));
        return;
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const u128 g = detail::gcd_u128(detail::abs_u128(num), static_cast<u128>(den));
    num_ = num / static_cast<i128>(g);
    den_ = den / static_cast<i128>(g);
}

Rational Rational::from_mpq(const mpq_class& value) {
    mpq_class copy(value);
    copy.canonicalize();
    return from_big(std::move(copy));
}

Rational Rational::from_big(mpq_class value) {
    Rational r;
    r.assign_big(std::move(value));
    return r;
}

void Rational::assign_big(mpq_class value) {
    if (fits_small(value.get_num()) && fits_small(value.get_den())) {
        num_ = to_i128(value.get_num());
        den_ = to_i128(value.get_den());
        big_.reset();
    } else {
        big_ = std::make_shared<const mpq_class>(std::move(value));
    }
}

Rational Rational::parse(const std::string& text) {
    std::string trimmed;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) trimmed.push_back(c);
    }
    if (trimmed.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class q;
    if (q.set_str(trimmed, 10) != 0) throw std::invalid_argument("malformed rational literal: " + text);
    if (q.get_den() == 0) throw std::domain_error("rational with zero denominator");
    q.canonicalize();
    return from_big(std::move(q));
}

int Rational::sign() const noexcept {
    if (big_) return sgn(*big_);
    return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

std::string Rational::numerator_string() const {
    return big_ ? big_->get_num().get_str() : i128_to_string(num_);
}

std::string Rational::denominator_string() const {
    return big_ ? big_->get_den().get_str() : i128_to_string(den_);
}

std::string Rational::to_string() const {
    const std::string den = denominator_string();
    return den == "1" ? numerator_string() : numerator_string() + "/" + den;
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(to_mpz(num_), to_mpz(den_));
}

double Rational::to_double() const { return to_mpq().get_d(); }

Rational& Rational::operator+=(const Rational& other) {
    if (!big_ && !other.big_) {
        if (add64(num_, den_, other.num_, other.den_)) return *this;
        i128 n = 0;
        if (den_ == other.den_) {
            if (checked_add(num_, other.num_, n)) {
                const auto g = static_cast<i128>(detail::gcd_u128(detail::abs_u128(n), static_cast<u128>(den_)));
                num_ = n / g;
                den_ /= g;
                return *this;
            }
        } else {
            const auto g = static_cast<i128>(detail::gcd_u128(static_cast<u128>(den_), static_cast<u128>(other.den_)));
            const i128 lhs_scale = other.den_ / g;
            const i128 rhs_scale = den_ / g;
            i128 a = 0;
            i128 b = 0;
            if (checked_mul(num_, lhs_scale, a) && checked_mul(other.num_, rhs_scale, b) && checked_add(a, b, n)) {
                const auto g2 = static_cast<i128>(detail::gcd_u128(detail::abs_u128(n), static_cast<u128>(g)));
                i128 d = 0;
                if (checked_mul(rhs_scale, other.den_ / g2, d)) {
                    num_ = n / g2;
                    den_ = d;
                    return *this;
                }
            }
        }
        note_promotion();
    }
    assign_big(to_mpq() + other.to_mpq());
    return *this;
}

Rational Rational::operator-() const {
    if (big_) return from_big(-*big_);
    return {-num_, den_, Unreduced{}};
}

Rational& Rational::operator-=(const Rational& other) { return *this += -other; }

Rational& Rational::operator*=(const Rational& other) {
    if (!big_ && !other.big_) {
        const auto g1 = static_cast<i128>(detail::gcd_u128(detail::abs_u128(num_), static_cast<u128>(other.den_)));
        const auto g2 = static_cast<i128>(detail::gcd_u128(detail::abs_u128(other.num_), static_cast<u128>(den_)));
        i128 n = 0;
        i128 d = 0;
        if (num_ == 0 || other.num_ == 0) {
            num_ = 0;
            den_ = 1;
            return *this;
        }
        if (checked_mul(num_ / g1, other.num_ / g2, n) && checked_mul(den_ / g2, other.den_ / g1, d)) {
            num_ = n;
            den_ = d;
            return *this;
        }
        note_promotion();
    }
    assign_big(to_mpq() * other.to_mpq());
    return *this;
}

Rational& Rational::operator/=(const Rational& other) {
    if (other.is_zero()) throw std::domain_error("rational division by zero");
    if (!other.big_) {
        const Rational inverse = other.num_ < 0 ? Rational(-other.den_, -other.num_, Unreduced{})
                                                : Rational(other.den_, other.num_, Unreduced{});
        return *this *= inverse;
    }
    assign_big(to_mpq() / other.to_mpq());
    return *this;
}

bool operator==(const Rational& lhs, const Rational& rhs) {
    if (!lhs.big_ && !rhs.big_) return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
    // Canonical forms: a big value never equals a small one.
    if (lhs.big_ && rhs.big_) return *lhs.big_ == *rhs.big_;
    return false;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    if (!lhs.big_ && !rhs.big_) {
        if (lhs.den_ == rhs.den_) return lhs.num_ <=> rhs.num_;
        if (fits64(lhs.num_) && fits64(lhs.den_) && fits64(rhs.num_) && fits64(rhs.den_)) {
            return lhs.num_ * rhs.den_ <=> rhs.num_ * lhs.den_;
        }
        i128 a = 0;
        i128 b = 0;
        if (checked_mul(lhs.num_, rhs.den_, a) && checked_mul(rhs.num_, lhs.den_, b)) return a <=> b;
        note_promotion();
    }
    const int c = cmp(lhs.to_mpq(), rhs.to_mpq());
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

std::uint64_t Rational::promotion_count() noexcept { return g_promotions.load(std::memory_order_relaxed); }

}  // namespace maxswp
