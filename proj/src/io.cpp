#include "berkcov/io.hpp"

namespace berkcov::io {

namespace {

std::string str(const Rational& q) { return format_rational(q); }

Rational rat(const json& j) { return parse_rational(j.get<std::string>()); }

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw PreconditionError(std::string("missing JSON field '") + key + "'");
    }
    return j.at(key);
}

std::uint64_t u64(const json& j) { return j.get<std::uint64_t>(); }

json sheet_list(const std::vector<SheetLabel>& sheets) {
    json out = json::array();
    for (const auto& s : sheets) out.push_back(format_sheet(s));
    return out;
}

std::vector<SheetLabel> sheets_from(const json& j) {
    std::vector<SheetLabel> out;
    for (const auto& s : j) out.push_back(parse_sheet(s.get<std::string>()));
    return out;
}

const char* side_name(Side s) { return s == Side::minus ? "minus" : "plus"; }

}  // namespace

json to_json(const PointEta& pt) {
    return json{{"center", pt.center.label},
                {"center_mag", format_logmag(pt.center.magnitude)},
                {"radius_log", format_log_radius(pt.radius_log)}};
}

PointEta point_from_json(const json& j) {
    PointEta pt;
    pt.center.label = j.value("center", std::string("a"));
    pt.center.magnitude = parse_logmag(field(j, "center_mag").get<std::string>());
    pt.radius_log = parse_log_radius(field(j, "radius_log").get<std::string>());
    return pt;
}

json to_json(const Interval& j) {
    return json{{"lo", j.lo.is_infinite() ? std::string("-inf") : str(*j.lo.value)},
                {"hi", j.hi.is_infinite() ? std::string("inf") : str(*j.hi.value)},
                {"lo_closed", j.lo.closed},
                {"hi_closed", j.hi.closed}};
}

Interval interval_from_json(const json& j) {
    auto bound = [&](const char* key, const char* inf, const char* closed_key) {
        std::string v = field(j, key).get<std::string>();
        bool closed = field(j, closed_key).get<bool>();
        if (v == inf) {
            if (closed) throw PreconditionError("an infinite end cannot be closed");
            return Bound::infinite();
        }
        return Bound{parse_rational(v), closed};
    };
    return Interval{bound("lo", "-inf", "lo_closed"), bound("hi", "inf", "hi_closed")};
}

json to_json(const Annulus& a) {
    return json{{"center", a.center == AnnulusCenter::zero ? "zero" : "one"}, {"skeleton", to_json(a.skeleton)}};
}

Annulus annulus_from_json(const json& j) {
    std::string c = field(j, "center").get<std::string>();
    if (c != "zero" && c != "one") throw PreconditionError("annulus center must be zero or one");
    return Annulus(c == "zero" ? AnnulusCenter::zero : AnnulusCenter::one,
                   interval_from_json(field(j, "skeleton")));
}

json to_json(const TorsorSpec& ts) {
    return json{{"p", ts.p.value()},
                {"annulus", to_json(ts.annulus)},
                {"pin", str(ts.t_pin)},
                {"orientation", ts.orientation == SplitSide::below ? "below" : "above"}};
}

TorsorSpec torsor_from_json(const json& j) {
    std::string o = field(j, "orientation").get<std::string>();
    if (o != "below" && o != "above") throw PreconditionError("orientation must be below or above");
    return make_torsor(Prime(u64(field(j, "p"))), annulus_from_json(field(j, "annulus")),
                       rat(field(j, "pin")), o == "below" ? SplitSide::below : SplitSide::above);
}

json to_json(const Prime& p, unsigned h, const LogMag& center_mag, const Rational& radius_log,
             const PushResult& r) {
    return json{{"p", p.value()},
                {"h", h},
                {"input", {{"center_mag", format_logmag(center_mag)}, {"radius_log", str(radius_log)}}},
                {"center_mag", format_logmag(r.center_mag_out)},
                {"radius_log", str(r.radius_log_out)}};
}

PushResult push_result_from_json(const json& j) {
    return PushResult{parse_logmag(field(j, "center_mag").get<std::string>()), rat(field(j, "radius_log"))};
}

json to_json(const Prime& p, const FiberProfile& f) {
    json levels = json::array();
    for (std::size_t i = 0; i < f.levels.size(); ++i) {
        const auto& l = f.levels[i];
        levels.push_back(json{{"level", i + 1},
                              {"radius_log", str(l.radius_log)},
                              {"center_mag", format_logmag(l.center_mag)},
                              {"splits", l.splits}});
    }
    return json{{"p", p.value()},
                {"h", f.h},
                {"center_mag", format_logmag(LogMag::of(f.base_center_exp))},
                {"radius_log", str(f.base_radius_log)},
                {"lambda", str(f.base_center_exp - f.base_radius_log)},
                {"levels", levels},
                {"count", f.count}};
}

FiberProfile fiber_profile_from_json(const json& j) {
    FiberProfile f;
    f.h = field(j, "h").get<unsigned>();
    f.base_center_exp = parse_logmag(field(j, "center_mag").get<std::string>()).exponent();
    f.base_radius_log = rat(field(j, "radius_log"));
    for (const auto& l : field(j, "levels")) {
        f.levels.push_back(FiberLevel{rat(field(l, "radius_log")),
                                      parse_logmag(field(l, "center_mag").get<std::string>()),
                                      field(l, "splits").get<bool>()});
    }
    f.count = u64(field(j, "count"));
    return f;
}

json to_json(const SplitProfile& s) {
    json out = json::array();
    const Prime p(s.p);
    for (const auto& piece : s.intervals) {
        out.push_back(json{{"lambda_interval", {str(piece.lo), piece.hi ? str(*piece.hi) : std::string("inf")}},
                           {"closed", {piece.lo_closed, piece.hi_closed}},
                           {"count", "p^" + std::to_string(piece.exponent)},
                           {"cardinality", p.pow(piece.exponent)}});
    }
    return out;
}

SplitProfile split_profile_from_json(const json& j, const Prime& p) {
    if (!j.is_array() || j.empty()) throw PreconditionError("profile must be a nonempty array");
    SplitProfile s;
    s.p = p.value();
    for (const auto& piece : j) {
        const auto& iv = field(piece, "lambda_interval");
        const auto& closed = field(piece, "closed");
        std::string count = field(piece, "count").get<std::string>();
        if (count.rfind("p^", 0) != 0) throw PreconditionError("count must look like p^i");
        std::string hi = iv.at(1).get<std::string>();
        s.intervals.push_back(ProfileInterval{
            rat(iv.at(0)), hi == "inf" ? std::nullopt : std::optional<Rational>(parse_rational(hi)),
            closed.at(0).get<bool>(), closed.at(1).get<bool>(),
            static_cast<unsigned>(std::stoul(count.substr(2)))});
    }
    s.h = s.intervals.back().exponent;
    return s;
}

json to_json(const GluedCovering& cov) {
    const std::uint64_t p = cov.params.p.value();
    json minus = json::array(), plus = json::array();
    for (const auto& ts : cov.minus) minus.push_back(to_json(ts));
    for (const auto& ts : cov.plus) plus.push_back(to_json(ts));

    json owned_minus = json::array(), owned_plus = json::array();
    for (std::uint64_t n = 0; n <= cov.params.truncation; ++n) {
        std::vector<SheetLabel> m, q;
        for (std::uint64_t k = n * p + 1; k <= (n + 1) * p; ++k) {
            m.push_back({Side::minus, k});
            q.push_back({Side::plus, k});
        }
        owned_minus.push_back(sheet_list(m));
        owned_plus.push_back(sheet_list(q));
    }

    json matching = json::array();
    for (const auto& [a, b] : cov.matching) matching.push_back({format_sheet(a), format_sheet(b)});

    return json{{"p", p},
                {"skeleton", to_json(cov.params.skeleton)},
                {"t0", str(cov.params.t0)},
                {"delta", str(cov.params.delta)},
                {"N", cov.params.truncation},
                {"matching_rule", "shift_one"},
                {"minus", minus},
                {"plus", plus},
                {"sheets", {{"minus", owned_minus}, {"plus", owned_plus}}},
                {"matching", matching},
                {"unmatched", sheet_list(cov.unmatched)}};
}

GluedCovering covering_from_json(const json& j) {
    if (field(j, "matching_rule").get<std::string>() != "shift_one") {
        throw PreconditionError("unknown matching rule");
    }
    ConstructionParams params{Prime(u64(field(j, "p"))), interval_from_json(field(j, "skeleton")),
                              rat(field(j, "t0")), rat(field(j, "delta")), u64(field(j, "N")),
                              MatchingRule::shift_one};
    validate(params);
    const Interval& sk = params.skeleton;
    GluedCovering cov{params,
                      Annulus(AnnulusCenter::zero, Interval{sk.lo, Bound::closed_at(params.t0)}),
                      Annulus(AnnulusCenter::zero, Interval{Bound::closed_at(params.t0), sk.hi}),
                      {}, {}, {}, {}};
    for (const auto& t : field(j, "minus")) cov.minus.push_back(torsor_from_json(t));
    for (const auto& t : field(j, "plus")) cov.plus.push_back(torsor_from_json(t));
    for (const auto& pair : field(j, "matching")) {
        cov.matching.emplace_back(parse_sheet(pair.at(0).get<std::string>()),
                                  parse_sheet(pair.at(1).get<std::string>()));
    }
    cov.unmatched = sheets_from(field(j, "unmatched"));
    return cov;
}

json to_json(const RestrictionCertificate& c) {
    json pieces = json::array();
    for (const auto& piece : c.pieces) {
        pieces.push_back(json{{"torsor", piece.torsor},
                              {"degree", piece.degree},
                              {"connected", piece.connected},
                              {"sheets_over_circle", piece.sheets_over_circle}});
    }
    return json{{"side", side_name(c.side)},
                {"exact", c.exact},
                {"pieces", pieces},
                {"exceptions", sheet_list(c.exceptions)},
                {"truncated", sheet_list(c.truncated)}};
}

json to_json(const RefutationReport& r) {
    json entries = json::array();
    json counts = json::object();
    for (const auto& e : r.entries) {
        entries.push_back(json{{"N", e.truncation},
                               {"component", e.component},
                               {"torsors_in_component", e.torsors_in_component},
                               {"gauss_fiber_count", e.gauss_fiber_count},
                               {"closed_form", e.closed_form}});
        counts[std::to_string(e.truncation)] = e.gauss_fiber_count;
    }
    return json{{"epsilon", str(r.epsilon)},
                {"n0", r.n0},
                {"entries", entries},
                {"gauss_fiber_counts", counts},
                {"verdict", r.verdict}};
}

RefutationReport report_from_json(const json& j) {
    RefutationReport r;
    r.epsilon = rat(field(j, "epsilon"));
    r.n0 = u64(field(j, "n0"));
    for (const auto& e : field(j, "entries")) {
        r.entries.push_back(RefutationEntry{u64(field(e, "N")), field(e, "component").get<std::size_t>(),
                                            u64(field(e, "torsors_in_component")),
                                            u64(field(e, "gauss_fiber_count")), u64(field(e, "closed_form"))});
    }
    r.verdict = field(j, "verdict").get<bool>();
    return r;
}

}  // namespace berkcov::io
