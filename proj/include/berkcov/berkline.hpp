#pragma once

// Points eta_{a,r} of the Berkovich affine line and Gauss-seminorm
// evaluation of polynomials written around a center.
//
// Centers are never modeled as field elements: a center is an opaque label
// carrying its magnitude |a|. Whatever else a computation needs about centers
// (pairwise gaps |a - b|) is supplied by the caller.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "berkcov/valgroup.hpp"

namespace berkcov {

/// log_p of a radius; the empty state is r = 0 (log = -infinity).
class LogRadius {
public:
    static LogRadius neg_infinity() { return LogRadius(); }
    static LogRadius of(Rational t) { return LogRadius(std::move(t)); }

    bool is_neg_infinity() const noexcept { return !value_.has_value(); }
    /// Throws PreconditionError for r = 0.
    const Rational& value() const;

    friend bool operator==(const LogRadius&, const LogRadius&) = default;

private:
    LogRadius() = default;
    explicit LogRadius(Rational t);

    std::optional<Rational> value_;
};

std::string format_log_radius(const LogRadius& t);  // "num/den" | "-inf"
LogRadius parse_log_radius(std::string_view text);

struct CenterRef {
    std::string label;
    LogMag magnitude = LogMag::zero();

    friend bool operator==(const CenterRef&, const CenterRef&) = default;
};

/// eta_{a,r}: type 1 when the radius is zero, type 2 otherwise (radii live in p^Q).
struct PointEta {
    CenterRef center;
    LogRadius radius_log = LogRadius::neg_infinity();

    bool is_rigid() const noexcept { return radius_log.is_neg_infinity(); }

    friend bool operator==(const PointEta&, const PointEta&) = default;
};

/// sum c_i (T - a)^i, known only through the magnitudes |c_i|.
class CenteredPolynomial {
public:
    using Term = std::pair<std::uint64_t, LogMag>;

    /// Throws if indices repeat or every coefficient is zero.
    explicit CenteredPolynomial(std::vector<Term> terms);

    const std::vector<Term>& terms() const noexcept { return terms_; }

private:
    std::vector<Term> terms_;  // sorted by degree
};

/// |q|(eta_{a,r}) = max_i |c_i| r^i.
LogMag seminorm_eval(const CenteredPolynomial& q, const LogRadius& radius_log);

/// eta_{a,r1} == eta_{b,r2} iff r1 == r2 and |a - b| <= r1.
bool point_eq(const Rational& t1, const Rational& t2, const LogMag& center_gap);

}  // namespace berkcov
