#pragma once

// JSON encodings of the library's values. Every rational crosses this
// boundary as a "num/den" string; magnitudes as "p^{num/den}" or "0".

#include <json.hpp>

#include "berkcov/annuli.hpp"
#include "berkcov/berkline.hpp"
#include "berkcov/glue.hpp"
#include "berkcov/powermap.hpp"
#include "berkcov/torsor.hpp"

namespace berkcov::io {

using nlohmann::json;

json to_json(const PointEta& pt);
PointEta point_from_json(const json& j);

json to_json(const Interval& j);
Interval interval_from_json(const json& j);

json to_json(const Annulus& a);
Annulus annulus_from_json(const json& j);

json to_json(const TorsorSpec& ts);
TorsorSpec torsor_from_json(const json& j);

/// Includes the input point alongside the image.
json to_json(const Prime& p, unsigned h, const LogMag& center_mag, const Rational& radius_log,
             const PushResult& r);
PushResult push_result_from_json(const json& j);

json to_json(const Prime& p, const FiberProfile& f);
FiberProfile fiber_profile_from_json(const json& j);

/// A bare array of {"lambda_interval", "closed", "count"} records.
json to_json(const SplitProfile& s);
SplitProfile split_profile_from_json(const json& j, const Prime& p);

json to_json(const GluedCovering& cov);
GluedCovering covering_from_json(const json& j);

json to_json(const RestrictionCertificate& c);

json to_json(const RefutationReport& r);
RefutationReport report_from_json(const json& j);

}  // namespace berkcov::io
