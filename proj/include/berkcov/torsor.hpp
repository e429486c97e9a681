#pragma once

// A mu_p-torsor on an annulus pinned at a type-2 skeleton point: it is the
// pullback of z -> z^p on the annulus {|T - 1| in I} through an isomorphism
// sending the pin to eta_{1, p^{-p/(p-1)}}. It totally splits over the tube
// on one side of the pin and has a single preimage over the skeleton on the
// other side.

#include "berkcov/annuli.hpp"
#include "berkcov/valgroup.hpp"

namespace berkcov {

enum class SplitSide { below, above };

struct TorsorSpec {
    Prime p;
    Annulus annulus;
    Rational t_pin;
    SplitSide orientation;
    /// Source skeleton coordinates -> model chart around 1 (pin -> -p/(p-1)).
    NormalizingMap to_model;

    friend bool operator==(const TorsorSpec&, const TorsorSpec&) = default;
};

TorsorSpec make_torsor(const Prime& p, const Annulus& annulus, const Rational& t_pin, SplitSide orientation);

/// Number of preimages of a point: p or 1. Closed-form rule in source coordinates.
std::uint64_t torsor_fiber_count(const TorsorSpec& ts, const TubePoint& pt);

/// Same count obtained by moving the point to the model chart and running
/// the level-by-level preimage computation for z -> z^p there.
std::uint64_t torsor_fiber_count_in_model(const TorsorSpec& ts, const TubePoint& pt);

/// Totally split over every point retracting into `sub`.
bool splits_over_tube(const TorsorSpec& ts, const Interval& sub);

/// 1 when the restriction over the sub-annulus is connected, p when it is p sheets.
std::uint64_t components_over(const TorsorSpec& ts, const Interval& sub);

}  // namespace berkcov
