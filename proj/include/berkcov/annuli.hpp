#pragma once

// Annuli {|T - c| in I} described through their skeleton interval in
// log coordinates t = log_p(radius), the canonical retraction onto the
// skeleton, and isomorphisms between annuli (translations and inversions
// of the skeleton by elements of the value group).

#include <optional>

#include "berkcov/valgroup.hpp"

namespace berkcov {

/// One end of an interval over Q; an empty value is an infinite end.
struct Bound {
    std::optional<Rational> value;
    bool closed = false;

    static Bound closed_at(Rational v) { return Bound{std::move(v), true}; }
    static Bound open_at(Rational v) { return Bound{std::move(v), false}; }
    static Bound infinite() { return Bound{}; }

    bool is_infinite() const noexcept { return !value.has_value(); }

    friend bool operator==(const Bound&, const Bound&) = default;
};

/// Interval over Q. Degenerate intervals [a, a] are allowed (circles).
struct Interval {
    Bound lo;
    Bound hi;

    static Interval closed(Rational a, Rational b);
    static Interval open(Rational a, Rational b);
    static Interval point(Rational a);

    bool is_empty() const;
    bool has_interior() const;
    bool contains(const Rational& t) const;
    bool contains(const Interval& sub) const;
    /// Strictly inside, away from both ends.
    bool interior_contains(const Rational& t) const;
    /// Finite length, or empty when either end is infinite.
    std::optional<Rational> length() const;

    friend bool operator==(const Interval&, const Interval&) = default;
};

enum class AnnulusCenter { zero, one };

struct Annulus {
    AnnulusCenter center = AnnulusCenter::zero;
    Interval skeleton;

    /// Validates the skeleton (nonempty interior; radii < 1 for center one).
    Annulus(AnnulusCenter c, Interval j);

    friend bool operator==(const Annulus&, const Annulus&) = default;
};

/// eta_{a,r} inside an annulus: t_ret = log_p |a - c|, radius_log = log_p r <= t_ret.
struct TubePoint {
    Rational t_ret;
    Rational radius_log;

    TubePoint(Rational t, Rational l);

    bool on_skeleton() const { return t_ret == radius_log; }

    friend bool operator==(const TubePoint&, const TubePoint&) = default;
};

Rational retract(const TubePoint& pt);

/// t -> c + t (shift) or t -> c - t (flip, from T -> c'/T).
struct NormalizingMap {
    enum class Kind { shift, flip };
    Kind kind = Kind::shift;
    Rational c;

    Rational apply(const Rational& t) const;
    Interval apply(const Interval& j) const;
    NormalizingMap inverse() const;
    bool orientation_reversing() const noexcept { return kind == Kind::flip; }

    friend bool operator==(const NormalizingMap&, const NormalizingMap&) = default;
};

/// (outer o inner)(t) = outer(inner(t))
NormalizingMap compose(const NormalizingMap& outer, const NormalizingMap& inner);

/// A map carrying j1 onto j2 with matching end flags, preferring a shift.
std::optional<NormalizingMap> annuli_isomorphic(const Interval& j1, const Interval& j2);

TubePoint transport_point(const NormalizingMap& map, const TubePoint& pt);

}  // namespace berkcov
