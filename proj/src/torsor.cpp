#include "berkcov/torsor.hpp"

#include "berkcov/powermap.hpp"

namespace berkcov {

namespace {

Rational model_pin(const Prime& p) {
    Rational q(static_cast<unsigned long>(p.value()), static_cast<unsigned long>(p.value() - 1));
    q.canonicalize();
    return -q;
}

void require_inside(const TorsorSpec& ts, const Interval& sub) {
    if (sub.is_empty()) throw PreconditionError("empty sub-interval");
    if (!ts.annulus.skeleton.contains(sub)) throw PreconditionError("sub-interval leaves the annulus");
}

}  // namespace

TorsorSpec make_torsor(const Prime& p, const Annulus& annulus, const Rational& t_pin, SplitSide orientation) {
    if (!annulus.skeleton.interior_contains(t_pin)) {
        throw PreconditionError("pin must lie in the interior of the skeleton");
    }
    // splits below: t -> t + (m - pin); splits above: t -> (m + pin) - t
    const Rational m = model_pin(p);
    NormalizingMap to_model = orientation == SplitSide::below
                                  ? NormalizingMap{NormalizingMap::Kind::shift, Rational(m - t_pin)}
                                  : NormalizingMap{NormalizingMap::Kind::flip, Rational(m + t_pin)};
    Rational pin = t_pin;
    pin.canonicalize();
    return TorsorSpec{p, annulus, std::move(pin), orientation, std::move(to_model)};
}

std::uint64_t torsor_fiber_count(const TorsorSpec& ts, const TubePoint& pt) {
    if (!ts.annulus.skeleton.contains(pt.t_ret)) throw PreconditionError("point outside the annulus");
    bool split = ts.orientation == SplitSide::below ? pt.radius_log < ts.t_pin
                                                    : pt.radius_log < 2 * pt.t_ret - ts.t_pin;
    return split ? ts.p.value() : 1;
}

std::uint64_t torsor_fiber_count_in_model(const TorsorSpec& ts, const TubePoint& pt) {
    if (!ts.annulus.skeleton.contains(pt.t_ret)) throw PreconditionError("point outside the annulus");
    TubePoint model = transport_point(ts.to_model, pt);
    // In the chart around 1 every point has |z0| = 1; a radius beyond 1 means
    // eta_{1,r} = eta_{0,r}, a skeleton point of G_m, i.e. center magnitude r.
    Rational center = model.radius_log > 0 ? model.radius_log : Rational(0);
    return fiber(ts.p, 1, LogMag::of(center), model.radius_log).count;
}

bool splits_over_tube(const TorsorSpec& ts, const Interval& sub) {
    require_inside(ts, sub);
    const Rational& a = ts.t_pin;
    if (ts.orientation == SplitSide::below) {
        // need t < a for every t in sub (the skeleton points are the worst case)
        const Bound& hi = sub.hi;
        return !hi.is_infinite() && (*hi.value < a || (*hi.value == a && !hi.closed));
    }
    // L <= t < 2t - a exactly when t > a
    const Bound& lo = sub.lo;
    return !lo.is_infinite() && (*lo.value > a || (*lo.value == a && !lo.closed));
}

std::uint64_t components_over(const TorsorSpec& ts, const Interval& sub) {
    require_inside(ts, sub);
    // Connected iff some skeleton point of the sub-annulus has a single preimage.
    return splits_over_tube(ts, sub) ? ts.p.value() : 1;
}

}  // namespace berkcov
