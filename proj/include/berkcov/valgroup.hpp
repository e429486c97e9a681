#pragma once

// Exact arithmetic in the value group p^Q u {0}, plus p-adic valuations of
// integers, factorials and binomial coefficients.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace berkcov {

using Rational = mpq_class;

/// Violated operation precondition (bad input, outside the proved statement).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Two computations that must agree did not.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A prime number, checked on construction.
class Prime {
public:
    explicit Prime(std::uint64_t value);

    std::uint64_t value() const noexcept { return value_; }
    Rational as_rational() const { return Rational(static_cast<unsigned long>(value_)); }

    /// p^e as an integer; throws on overflow.
    std::uint64_t pow(unsigned e) const;

    friend bool operator==(const Prime&, const Prime&) = default;

private:
    std::uint64_t value_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Parses "num/den" or "num" (optional sign) into a canonical rational.
Rational parse_rational(std::string_view text);

/// "num/den" in lowest terms, sign on the numerator, "/1" omitted.
std::string format_rational(const Rational& q);

std::strong_ordering compare(const Rational& a, const Rational& b);

/// An element p^g of the value group, or zero.
class LogMag {
public:
    static LogMag zero() { return LogMag(); }
    static LogMag of(Rational exponent);
    /// |p^k| = p^{-k}
    static LogMag of_int(long exponent) { return of(Rational(exponent)); }

    bool is_zero() const noexcept { return zero_; }
    /// Throws PreconditionError on zero.
    const Rational& exponent() const;

    friend bool operator==(const LogMag& a, const LogMag& b);
    friend std::strong_ordering operator<=>(const LogMag& a, const LogMag& b);

private:
    LogMag() = default;

    bool zero_ = true;
    Rational exponent_;
};

LogMag mag_mul(const LogMag& a, const LogMag& b);
LogMag mag_pow(const LogMag& a, const Rational& e);
std::strong_ordering mag_cmp(const LogMag& a, const LogMag& b);

/// "p^{num/den}" or "0".
std::string format_logmag(const LogMag& m);
LogMag parse_logmag(std::string_view text);

/// Legendre: sum_{i>=1} floor(n / p^i).
std::uint64_t vp_factorial(std::uint64_t n, const Prime& p);
std::uint64_t vp_binom(std::uint64_t n, std::uint64_t k, const Prime& p);
/// v_p(n) for n > 0.
std::uint64_t vp_integer(std::uint64_t n, const Prime& p);

/// |xi - xi'| for distinct p-th roots of unity: p^{-1/(p-1)}.
LogMag root_of_unity_gap(const Prime& p);

}  // namespace berkcov
