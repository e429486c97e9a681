#include "berkcov/powermap.hpp"

#include <algorithm>

namespace berkcov {

namespace {

Rational p_over_pm1(const Prime& p) {
    Rational q(static_cast<unsigned long>(p.value()), static_cast<unsigned long>(p.value() - 1));
    q.canonicalize();
    return q;
}

Rational one_over_pm1(const Prime& p) {
    Rational q(1UL, static_cast<unsigned long>(p.value() - 1));
    q.canonicalize();
    return q;
}

void require_disk_inside(const LogMag& center_mag, const Rational& radius_log) {
    if (center_mag.is_zero()) throw PreconditionError("center must be nonzero");
    if (radius_log > center_mag.exponent()) {
        throw PreconditionError("radius exceeds |center| (r > |z|); recenter at 0 first");
    }
}

}  // namespace

unsigned FiberProfile::splitting_levels() const {
    return static_cast<unsigned>(
        std::count_if(levels.begin(), levels.end(), [](const FiberLevel& l) { return l.splits; }));
}

bool ProfileInterval::contains(const Rational& lambda) const {
    bool above_lo = lo_closed ? lambda >= lo : lambda > lo;
    if (!above_lo) return false;
    if (!hi) return true;
    return hi_closed ? lambda <= *hi : lambda < *hi;
}

std::uint64_t SplitProfile::count_at(const Rational& lambda) const {
    if (sgn(lambda) < 0) throw PreconditionError("negative depth");
    Prime prime(p);
    for (const auto& piece : intervals) {
        if (piece.contains(lambda)) return prime.pow(piece.exponent);
    }
    throw InvariantError("profile does not cover lambda = " + format_rational(lambda));
}

PushResult pushforward_step(const Prime& p, const LogMag& center_mag, const Rational& radius_log) {
    require_disk_inside(center_mag, radius_log);
    const Rational pr = p.as_rational();
    const Rational& g = center_mag.exponent();
    // rho_hat = max(rho^p, |p| rho |z1|^{p-1})
    Rational top = pr * radius_log;
    Rational linear = Rational(-1) + radius_log + (pr - 1) * g;
    PushResult out;
    out.center_mag_out = LogMag::of(pr * g);
    out.radius_log_out = top >= linear ? top : linear;
    return out;
}

PushResult pushforward(const Prime& p, unsigned h, const LogMag& center_mag, const Rational& radius_log) {
    if (h == 0) throw PreconditionError("h must be positive");
    PushResult cur{center_mag, radius_log};
    for (unsigned i = 0; i < h; ++i) cur = pushforward_step(p, cur.center_mag_out, cur.radius_log_out);
    return cur;
}

PushResult pushforward_oracle(const Prime& p, unsigned h, const LogMag& center_mag,
                              const Rational& radius_log) {
    if (h == 0) throw PreconditionError("h must be positive");
    require_disk_inside(center_mag, radius_log);
    const std::uint64_t degree = p.pow(h);
    const Rational& g = center_mag.exponent();

    // T^{q} - z1^{q} = sum_{i=1}^{q} C(q,i) z1^{q-i} (T - z1)^i,  q = p^h
    std::vector<CenteredPolynomial::Term> terms;
    terms.reserve(degree);
    for (std::uint64_t i = 1; i <= degree; ++i) {
        Rational v(static_cast<unsigned long>(vp_binom(degree, i, p)));
        Rational rest(static_cast<unsigned long>(degree - i));
        terms.emplace_back(i, LogMag::of(-v + rest * g));
    }
    LogMag rho_hat = seminorm_eval(CenteredPolynomial(std::move(terms)), LogRadius::of(radius_log));
    return PushResult{LogMag::of(Rational(static_cast<unsigned long>(degree)) * g), rho_hat.exponent()};
}

FiberStep fiber_step(const Prime& p, const LogMag& center_mag, const Rational& radius_log) {
    require_disk_inside(center_mag, radius_log);
    const Rational pr = p.as_rational();
    const Rational& g = center_mag.exponent();
    FiberStep out;
    if (radius_log <= g - p_over_pm1(p)) {
        // r~ = r p alpha^{-(p-1)/p}
        out.radius_log_up = radius_log + 1 - (pr - 1) / pr * g;
    } else {
        out.radius_log_up = radius_log / pr;
    }
    out.radius_log_up.canonicalize();
    // The conjugates eta_{xi z~, r~} are pairwise |xi z~ - xi' z~| = alpha^{1/p} p^{-1/(p-1)}
    // apart; they are distinct exactly when that gap exceeds r~.
    Rational gap = g / pr + root_of_unity_gap(p).exponent();
    out.splits = !point_eq(out.radius_log_up, out.radius_log_up, LogMag::of(gap));
    return out;
}

FiberProfile fiber(const Prime& p, unsigned h, const LogMag& center_mag, const Rational& radius_log) {
    if (h == 0) throw PreconditionError("h must be positive");
    require_disk_inside(center_mag, radius_log);
    FiberProfile out;
    out.h = h;
    out.base_center_exp = center_mag.exponent();
    out.base_radius_log = radius_log;
    LogMag g = center_mag;
    Rational t = radius_log;
    for (unsigned j = 1; j <= h; ++j) {
        FiberStep step = fiber_step(p, g, t);
        g = LogMag::of(g.exponent() / p.as_rational());
        t = step.radius_log_up;
        out.levels.push_back(FiberLevel{t, g, step.splits});
        // Fibers over distinct points are disjoint: every branch multiplies independently.
        if (step.splits) out.count *= p.value();
    }
    return out;
}

SplitProfile split_profile(const Prime& p, unsigned h) {
    if (h == 0) throw PreconditionError("h must be positive");
    SplitProfile out;
    out.p = p.value();
    out.h = h;
    const Rational first = p_over_pm1(p);
    out.intervals.push_back(ProfileInterval{Rational(0), first, true, true, 0});
    for (unsigned i = 1; i < h; ++i) {
        Rational shift(static_cast<unsigned long>(i));
        out.intervals.push_back(
            ProfileInterval{shift + one_over_pm1(p), shift + first, false, true, i});
    }
    Rational last = Rational(static_cast<unsigned long>(h)) + one_over_pm1(p);
    out.intervals.push_back(ProfileInterval{last, std::nullopt, false, false, h});
    return out;
}

}  // namespace berkcov
