#include "berkcov/annuli.hpp"

namespace berkcov {

Interval Interval::closed(Rational a, Rational b) {
    return Interval{Bound::closed_at(std::move(a)), Bound::closed_at(std::move(b))};
}

Interval Interval::open(Rational a, Rational b) {
    return Interval{Bound::open_at(std::move(a)), Bound::open_at(std::move(b))};
}

Interval Interval::point(Rational a) { return closed(a, a); }

bool Interval::is_empty() const {
    if (lo.is_infinite() || hi.is_infinite()) return false;
    if (*lo.value < *hi.value) return false;
    if (*lo.value > *hi.value) return true;
    return !(lo.closed && hi.closed);
}

bool Interval::has_interior() const {
    if (lo.is_infinite() || hi.is_infinite()) return true;
    return *lo.value < *hi.value;
}

bool Interval::contains(const Rational& t) const {
    if (!lo.is_infinite() && (lo.closed ? t < *lo.value : t <= *lo.value)) return false;
    if (!hi.is_infinite() && (hi.closed ? t > *hi.value : t >= *hi.value)) return false;
    return true;
}

namespace {

// Is the lower end `inner` at or above the lower end `outer`?
bool lower_within(const Bound& inner, const Bound& outer) {
    if (outer.is_infinite()) return true;
    if (inner.is_infinite()) return false;
    if (*inner.value != *outer.value) return *inner.value > *outer.value;
    return outer.closed || !inner.closed;
}

bool upper_within(const Bound& inner, const Bound& outer) {
    if (outer.is_infinite()) return true;
    if (inner.is_infinite()) return false;
    if (*inner.value != *outer.value) return *inner.value < *outer.value;
    return outer.closed || !inner.closed;
}

}  // namespace

bool Interval::contains(const Interval& sub) const {
    if (sub.is_empty()) return true;
    return lower_within(sub.lo, lo) && upper_within(sub.hi, hi);
}

bool Interval::interior_contains(const Rational& t) const {
    if (!lo.is_infinite() && t <= *lo.value) return false;
    if (!hi.is_infinite() && t >= *hi.value) return false;
    return true;
}

std::optional<Rational> Interval::length() const {
    if (lo.is_infinite() || hi.is_infinite()) return std::nullopt;
    return Rational(*hi.value - *lo.value);
}

Annulus::Annulus(AnnulusCenter c, Interval j) : center(c), skeleton(std::move(j)) {
    if (!skeleton.has_interior()) throw PreconditionError("annulus skeleton has empty interior");
    if (center == AnnulusCenter::one) {
        const Bound& hi = skeleton.hi;
        bool below_one = !hi.is_infinite() && (*hi.value < 0 || (*hi.value == 0 && !hi.closed));
        if (!below_one) throw PreconditionError("annulus around 1 must have radii < 1");
    }
}

TubePoint::TubePoint(Rational t, Rational l) : t_ret(std::move(t)), radius_log(std::move(l)) {
    t_ret.canonicalize();
    radius_log.canonicalize();
    if (radius_log > t_ret) throw PreconditionError("tube point needs radius <= |a|");
}

Rational retract(const TubePoint& pt) { return pt.t_ret; }

Rational NormalizingMap::apply(const Rational& t) const {
    return kind == Kind::shift ? Rational(c + t) : Rational(c - t);
}

Interval NormalizingMap::apply(const Interval& j) const {
    auto map_bound = [this](const Bound& b) {
        return b.is_infinite() ? b : Bound{apply(*b.value), b.closed};
    };
    if (kind == Kind::shift) return Interval{map_bound(j.lo), map_bound(j.hi)};
    return Interval{map_bound(j.hi), map_bound(j.lo)};
}

NormalizingMap NormalizingMap::inverse() const {
    if (kind == Kind::flip) return *this;
    return NormalizingMap{Kind::shift, Rational(-c)};
}

NormalizingMap compose(const NormalizingMap& outer, const NormalizingMap& inner) {
    using K = NormalizingMap::Kind;
    // outer(inner(t)) with inner(t) = c1 +/- t, outer(s) = c2 +/- s
    Rational c = outer.apply(inner.c);
    K kind = (outer.kind == inner.kind) ? K::shift : K::flip;
    return NormalizingMap{kind, c};
}

namespace {

bool same_shape(const Bound& a, const Bound& b) {
    return a.is_infinite() == b.is_infinite() && (a.is_infinite() || a.closed == b.closed);
}

std::optional<NormalizingMap> try_shift(const Interval& j1, const Interval& j2) {
    if (!same_shape(j1.lo, j2.lo) || !same_shape(j1.hi, j2.hi)) return std::nullopt;
    Rational c;
    if (!j1.lo.is_infinite()) {
        c = *j2.lo.value - *j1.lo.value;
    } else if (!j1.hi.is_infinite()) {
        c = *j2.hi.value - *j1.hi.value;
    }
    NormalizingMap m{NormalizingMap::Kind::shift, c};
    if (m.apply(j1) != j2) return std::nullopt;
    return m;
}

std::optional<NormalizingMap> try_flip(const Interval& j1, const Interval& j2) {
    if (!same_shape(j1.lo, j2.hi) || !same_shape(j1.hi, j2.lo)) return std::nullopt;
    Rational c;
    if (!j1.lo.is_infinite()) {
        c = *j2.hi.value + *j1.lo.value;
    } else if (!j1.hi.is_infinite()) {
        c = *j2.lo.value + *j1.hi.value;
    }
    NormalizingMap m{NormalizingMap::Kind::flip, c};
    if (m.apply(j1) != j2) return std::nullopt;
    return m;
}

}  // namespace

std::optional<NormalizingMap> annuli_isomorphic(const Interval& j1, const Interval& j2) {
    if (!j1.has_interior() || !j2.has_interior()) throw PreconditionError("skeleton has empty interior");
    if (auto m = try_shift(j1, j2)) return m;
    return try_flip(j1, j2);
}

TubePoint transport_point(const NormalizingMap& map, const TubePoint& pt) {
    Rational t = map.apply(pt.t_ret);
    // Inversion T -> c/T sends eta_{a,r} to eta_{c/a, |c| r / |a|^2}.
    Rational l = map.kind == NormalizingMap::Kind::shift ? Rational(pt.radius_log + map.c)
                                                         : Rational(pt.radius_log + map.c - 2 * pt.t_ret);
    if (l > t) throw InvariantError("transport produced radius > |a|");
    return TubePoint(std::move(t), std::move(l));
}

}  // namespace berkcov
