#pragma once

// The covering z -> z^{p^h} of the punctured line: images and preimages of
// points eta_{z,r} with r <= |z|, and the step function describing how many
// preimages a point has as a function of its normalized depth
//     lambda = log_p(|z0| / r) = center exponent - radius exponent.

#include <optional>
#include <vector>

#include "berkcov/berkline.hpp"
#include "berkcov/valgroup.hpp"

namespace berkcov {

/// f(eta_{z1,rho}) = eta_{z1^p, rho_hat}
struct PushResult {
    LogMag center_mag_out = LogMag::zero();
    Rational radius_log_out;

    friend bool operator==(const PushResult&, const PushResult&) = default;
};

/// One step up the tower of p-th roots.
struct FiberLevel {
    Rational radius_log;  // log of the radius of each preimage at this level
    LogMag center_mag = LogMag::zero();
    bool splits = false;  // the p conjugate preimages are distinct

    friend bool operator==(const FiberLevel&, const FiberLevel&) = default;
};

struct FiberProfile {
    unsigned h = 0;
    Rational base_center_exp;
    Rational base_radius_log;
    std::vector<FiberLevel> levels;
    std::uint64_t count = 1;

    unsigned splitting_levels() const;

    friend bool operator==(const FiberProfile&, const FiberProfile&) = default;
};

/// A piece of the step function lambda -> #preimages.
struct ProfileInterval {
    Rational lo;
    std::optional<Rational> hi;  // empty: +infinity
    bool lo_closed = true;
    bool hi_closed = false;
    unsigned exponent = 0;  // count = p^exponent

    bool contains(const Rational& lambda) const;

    friend bool operator==(const ProfileInterval&, const ProfileInterval&) = default;
};

struct SplitProfile {
    std::uint64_t p = 0;
    unsigned h = 0;
    std::vector<ProfileInterval> intervals;

    /// Count for lambda >= 0; throws on negative lambda.
    std::uint64_t count_at(const Rational& lambda) const;

    friend bool operator==(const SplitProfile&, const SplitProfile&) = default;
};

PushResult pushforward_step(const Prime& p, const LogMag& center_mag, const Rational& radius_log);
PushResult pushforward(const Prime& p, unsigned h, const LogMag& center_mag, const Rational& radius_log);

/// Same value as pushforward, computed in one shot as the Gauss seminorm of
/// T^{p^h} - z1^{p^h} expanded around z1 (no recursion on h).
PushResult pushforward_oracle(const Prime& p, unsigned h, const LogMag& center_mag,
                              const Rational& radius_log);

struct FiberStep {
    Rational radius_log_up;
    bool splits = false;

    friend bool operator==(const FiberStep&, const FiberStep&) = default;
};

FiberStep fiber_step(const Prime& p, const LogMag& center_mag, const Rational& radius_log);
FiberProfile fiber(const Prime& p, unsigned h, const LogMag& center_mag, const Rational& radius_log);

/// Closed-form step function over lambda in [0, inf).
SplitProfile split_profile(const Prime& p, unsigned h);

}  // namespace berkcov
