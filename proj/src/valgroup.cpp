#include "berkcov/valgroup.hpp"

#include <limits>
#include <regex>

namespace berkcov {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

Prime::Prime(std::uint64_t value) : value_(value) {
    if (!is_prime(value)) {
        throw PreconditionError("not a prime: " + std::to_string(value));
    }
}

std::uint64_t Prime::pow(unsigned e) const {
    std::uint64_t out = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (out > std::numeric_limits<std::uint64_t>::max() / value_) {
            throw PreconditionError("p^e overflows 64 bits");
        }
        out *= value_;
    }
    return out;
}

Rational parse_rational(std::string_view text) {
    static const std::regex pattern(R"(^[+-]?[0-9]+(/[0-9]+)?$)");
    std::string s(text);
    if (!std::regex_match(s, pattern)) {
        throw PreconditionError("malformed rational: '" + s + "'");
    }
    if (s.front() == '+') s.erase(0, 1);
    auto slash = s.find('/');
    if (slash != std::string::npos && mpz_class(s.substr(slash + 1)) == 0) {
        throw PreconditionError("zero denominator: '" + std::string(text) + "'");
    }
    Rational q(s, 10);
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& q) {
    // mpq_class::get_str already drops "/1" and keeps the sign on the numerator;
    // callers may hold non-canonical values, so reduce a copy first.
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

std::strong_ordering compare(const Rational& a, const Rational& b) {
    int c = cmp(a, b);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

LogMag LogMag::of(Rational exponent) {
    LogMag m;
    m.zero_ = false;
    exponent.canonicalize();
    m.exponent_ = std::move(exponent);
    return m;
}

const Rational& LogMag::exponent() const {
    if (zero_) throw PreconditionError("zero magnitude has no exponent");
    return exponent_;
}

bool operator==(const LogMag& a, const LogMag& b) {
    if (a.zero_ || b.zero_) return a.zero_ == b.zero_;
    return a.exponent_ == b.exponent_;
}

std::strong_ordering operator<=>(const LogMag& a, const LogMag& b) {
    if (a.zero_ && b.zero_) return std::strong_ordering::equal;
    if (a.zero_) return std::strong_ordering::less;
    if (b.zero_) return std::strong_ordering::greater;
    return compare(a.exponent_, b.exponent_);
}

LogMag mag_mul(const LogMag& a, const LogMag& b) {
    if (a.is_zero() || b.is_zero()) return LogMag::zero();
    return LogMag::of(a.exponent() + b.exponent());
}

LogMag mag_pow(const LogMag& a, const Rational& e) {
    if (a.is_zero()) {
        if (sgn(e) <= 0) throw PreconditionError("0^e with e <= 0");
        return LogMag::zero();
    }
    return LogMag::of(a.exponent() * e);
}

std::strong_ordering mag_cmp(const LogMag& a, const LogMag& b) { return a <=> b; }

std::string format_logmag(const LogMag& m) {
    if (m.is_zero()) return "0";
    return "p^{" + format_rational(m.exponent()) + "}";
}

LogMag parse_logmag(std::string_view text) {
    if (text == "0") return LogMag::zero();
    if (text.size() < 5 || text.substr(0, 3) != "p^{" || text.back() != '}') {
        throw PreconditionError("malformed magnitude: '" + std::string(text) + "'");
    }
    return LogMag::of(parse_rational(text.substr(3, text.size() - 4)));
}

std::uint64_t vp_factorial(std::uint64_t n, const Prime& p) {
    std::uint64_t total = 0;
    for (std::uint64_t q = n / p.value(); q > 0; q /= p.value()) total += q;
    return total;
}

std::uint64_t vp_binom(std::uint64_t n, std::uint64_t k, const Prime& p) {
    if (k > n) throw PreconditionError("binomial with k > n");
    return vp_factorial(n, p) - vp_factorial(k, p) - vp_factorial(n - k, p);
}

std::uint64_t vp_integer(std::uint64_t n, const Prime& p) {
    if (n == 0) throw PreconditionError("v_p(0) is infinite");
    std::uint64_t v = 0;
    while (n % p.value() == 0) {
        n /= p.value();
        ++v;
    }
    return v;
}

LogMag root_of_unity_gap(const Prime& p) {
    return LogMag::of(Rational(-1, static_cast<unsigned long>(p.value() - 1)));
}

}  // namespace berkcov
