#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>

#include "cycloclock/errors.hpp"

namespace cyclo::exactcyc {

using BigInt = boost::multiprecision::cpp_int;

/**
 * Arbitrary-precision rational, always stored reduced with a positive
 * denominator. The coefficient field for every exact value in the project.
 */
class BigRational {
public:
    BigRational() = default;
    BigRational(long long n) : value_(n) {}
    BigRational(const BigInt& n) : value_(n) {}
    BigRational(const BigInt& num, const BigInt& den) {
        if (den == 0)
            throw DivisionByZeroError("BigRational: zero denominator");
        // cpp_rational requires a positive denominator at construction
        if (den < 0)
            value_ = Rep(-num, -den);
        else
            value_ = Rep(num, den); // reduced to lowest terms on construction
    }

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_ == 0; }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return value_ < 0 ? -1 : (value_ > 0 ? 1 : 0); }

    BigRational operator-() const { return BigRational(Rep(-value_)); }
    BigRational operator+(const BigRational& o) const { return BigRational(Rep(value_ + o.value_)); }
    BigRational operator-(const BigRational& o) const { return BigRational(Rep(value_ - o.value_)); }
    BigRational operator*(const BigRational& o) const { return BigRational(Rep(value_ * o.value_)); }
    BigRational operator/(const BigRational& o) const {
        if (o.is_zero())
            throw DivisionByZeroError("BigRational: division by zero");
        return BigRational(Rep(value_ / o.value_));
    }

    BigRational& operator+=(const BigRational& o) { value_ += o.value_; return *this; }
    BigRational& operator-=(const BigRational& o) { value_ -= o.value_; return *this; }
    BigRational& operator*=(const BigRational& o) { value_ *= o.value_; return *this; }

    bool operator==(const BigRational& o) const { return value_ == o.value_; }
    std::strong_ordering operator<=>(const BigRational& o) const {
        if (value_ < o.value_) return std::strong_ordering::less;
        if (value_ > o.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    BigRational reciprocal() const {
        if (is_zero())
            throw DivisionByZeroError("BigRational: reciprocal of zero");
        return BigRational(denominator(), numerator());
    }

    double to_double() const { return value_.convert_to<double>(); }

    std::string to_string() const {
        std::string s = numerator().str();
        if (!is_integer())
            s += "/" + denominator().str();
        return s;
    }

private:
    using Rep = boost::multiprecision::cpp_rational;
    explicit BigRational(Rep v) : value_(std::move(v)) {}
    Rep value_;
};

/**
 * Positive scalar of the form q*sqrt(r) with q rational and r a squarefree
 * positive integer. Carries the N^{-1/2} normalization of pointer states
 * symbolically so that inner products of like-scaled states stay rational.
 */
class SqrtRational {
public:
    SqrtRational() : q_(1), radicand_(1) {}

    static SqrtRational one() { return SqrtRational(); }

    // 1/sqrt(n) = (1/(s*r)) * sqrt(r) where n = s^2 * r, r squarefree
    static SqrtRational inv_sqrt(std::uint64_t n) {
        if (n == 0)
            throw DivisionByZeroError("SqrtRational: 1/sqrt(0)");
        auto [s, r] = split_square(n);
        return SqrtRational(BigRational(1) / BigRational(BigInt(s) * BigInt(r)), r);
    }

    static SqrtRational sqrt_of(std::uint64_t n) {
        auto [s, r] = split_square(n);
        return SqrtRational(BigRational(BigInt(s)), r);
    }

    const BigRational& rational_part() const { return q_; }
    std::uint64_t radicand() const { return radicand_; }
    bool is_rational() const { return radicand_ == 1; }

    SqrtRational operator*(const SqrtRational& o) const {
        auto [s, r] = split_square(radicand_ * o.radicand_);
        return SqrtRational(q_ * o.q_ * BigRational(BigInt(s)), r);
    }

    bool operator==(const SqrtRational& o) const {
        return radicand_ == o.radicand_ && q_ == o.q_;
    }

    double to_double() const {
        return q_.to_double() * std::sqrt(static_cast<double>(radicand_));
    }

    std::string to_string() const {
        if (radicand_ == 1)
            return q_.to_string();
        std::string s = "sqrt(" + std::to_string(radicand_) + ")";
        if (q_ == BigRational(1))
            return s;
        return q_.to_string() + "*" + s;
    }

private:
    SqrtRational(BigRational q, std::uint64_t r) : q_(std::move(q)), radicand_(r) {
        if (q_.sign() <= 0)
            throw std::invalid_argument("SqrtRational: scale must be positive");
    }

    // n = s^2 * r with r squarefree
    static std::pair<std::uint64_t, std::uint64_t> split_square(std::uint64_t n) {
        std::uint64_t s = 1, r = 1;
        for (std::uint64_t p = 2; p * p <= n; ++p) {
            unsigned e = 0;
            while (n % p == 0) { n /= p; ++e; }
            for (unsigned i = 0; i + 1 < e; i += 2) s *= p;
            if (e % 2) r *= p;
        }
        if (n > 1) r *= n;
        return {s, r};
    }

    BigRational q_;
    std::uint64_t radicand_;
};

} // namespace cyclo::exactcyc
