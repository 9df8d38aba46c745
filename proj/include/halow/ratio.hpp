#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace halow {

/// Exact rational arithmetic on int64 with 128-bit intermediates.
///
/// Beacon lengths, frame airtimes and DTIM budgets are all exact ratios of
/// integers (bits over bits-per-second, microsecond counts over 10^6), and
/// the capacity model takes floors of their combinations. Doing this in
/// floating point risks off-by-one packet counts whenever a quotient lands
/// on an integer, so every duration in the analytical path is a Ratio and
/// is only converted to double at output boundaries.
class Ratio {
public:
    constexpr Ratio() : num_(0), den_(1) {}
    constexpr Ratio(std::int64_t value) : num_(value), den_(1) {}
    Ratio(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0) throw std::domain_error("Ratio: zero denominator");
        normalize();
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    friend Ratio operator+(const Ratio& a, const Ratio& b) {
        return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                    i128(a.den_) * b.den_);
    }
    friend Ratio operator-(const Ratio& a, const Ratio& b) {
        return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                    i128(a.den_) * b.den_);
    }
    friend Ratio operator*(const Ratio& a, const Ratio& b) {
        return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Ratio operator/(const Ratio& a, const Ratio& b) {
        if (b.num_ == 0) throw std::domain_error("Ratio: division by zero");
        return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Ratio operator-() const { return make(-i128(num_), den_); }

    Ratio& operator+=(const Ratio& o) { return *this = *this + o; }
    Ratio& operator-=(const Ratio& o) { return *this = *this - o; }
    Ratio& operator*=(const Ratio& o) { return *this = *this * o; }
    Ratio& operator/=(const Ratio& o) { return *this = *this / o; }

    friend bool operator==(const Ratio& a, const Ratio& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Ratio& a, const Ratio& b) { return !(a == b); }
    friend bool operator<(const Ratio& a, const Ratio& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator>(const Ratio& a, const Ratio& b) { return b < a; }
    friend bool operator<=(const Ratio& a, const Ratio& b) { return !(b < a); }
    friend bool operator>=(const Ratio& a, const Ratio& b) { return !(a < b); }

    /// Largest integer <= value (true mathematical floor, also for negatives).
    std::int64_t floor() const {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }
    /// Smallest integer >= value.
    std::int64_t ceil() const {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ > 0) ++q;
        return q;
    }
    /// Nearest integer, ties away from zero.
    std::int64_t round() const {
        i128 twice = i128(num_) * 2;
        i128 q = num_ >= 0 ? (twice + den_) / (i128(den_) * 2)
                           : (twice - den_) / (i128(den_) * 2);
        return static_cast<std::int64_t>(q);
    }

    bool is_integer() const { return den_ == 1; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// Parses a plain decimal literal ("1.6", "0.15", "-2", "75") exactly.
    static Ratio from_decimal(const std::string& text) {
        std::size_t pos = 0;
        bool neg = false;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            neg = text[pos] == '-';
            ++pos;
        }
        i128 num = 0;
        i128 den = 1;
        bool any_digit = false, seen_dot = false;
        for (; pos < text.size(); ++pos) {
            char c = text[pos];
            if (c == '.') {
                if (seen_dot) throw std::invalid_argument("Ratio: bad decimal '" + text + "'");
                seen_dot = true;
            } else if (c >= '0' && c <= '9') {
                num = num * 10 + (c - '0');
                if (seen_dot) den *= 10;
                any_digit = true;
                if (num > i128(1) << 100) throw std::invalid_argument("Ratio: decimal too long '" + text + "'");
            } else if ((c == 'e' || c == 'E') && any_digit) {
                int exp = std::stoi(text.substr(pos + 1));
                pos = text.size() - 1;
                while (exp > 0) { num *= 10; --exp; }
                while (exp < 0) { den *= 10; ++exp; }
            } else {
                throw std::invalid_argument("Ratio: bad decimal '" + text + "'");
            }
        }
        if (!any_digit) throw std::invalid_argument("Ratio: bad decimal '" + text + "'");
        return make(neg ? -num : num, den);
    }

private:
    using i128 = __int128;

    static Ratio make(i128 num, i128 den) {
        if (den < 0) { num = -num; den = -den; }
        i128 g = gcd128(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        Ratio r;
        r.num_ = narrow(num, "numerator");
        r.den_ = narrow(den, "denominator");
        return r;
    }

    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) { i128 t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }

    static std::int64_t narrow(i128 v, const char* what) {
        if (v > INT64_MAX || v < INT64_MIN)
            throw std::overflow_error(std::string("Ratio: ") + what + " overflow");
        return static_cast<std::int64_t>(v);
    }

    void normalize() {
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    std::int64_t num_;
    std::int64_t den_;
};

/// Convenience literal-ish helpers for common unit conversions.
inline Ratio microseconds(std::int64_t us) { return Ratio(us, 1000000); }
inline Ratio milliseconds(std::int64_t ms) { return Ratio(ms, 1000); }

}  // namespace halow
