#include "berkcov/berkline.hpp"

#include <algorithm>

namespace berkcov {

LogRadius::LogRadius(Rational t) : value_(std::move(t)) { value_->canonicalize(); }

const Rational& LogRadius::value() const {
    if (!value_) throw PreconditionError("radius is zero (log = -inf)");
    return *value_;
}

std::string format_log_radius(const LogRadius& t) {
    return t.is_neg_infinity() ? std::string("-inf") : format_rational(t.value());
}

LogRadius parse_log_radius(std::string_view text) {
    if (text == "-inf") return LogRadius::neg_infinity();
    return LogRadius::of(parse_rational(text));
}

CenteredPolynomial::CenteredPolynomial(std::vector<Term> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw PreconditionError("empty polynomial");
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    auto dup = std::adjacent_find(terms_.begin(), terms_.end(),
                                  [](const Term& a, const Term& b) { return a.first == b.first; });
    if (dup != terms_.end()) throw PreconditionError("repeated degree in polynomial");
    if (std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second.is_zero(); })) {
        throw PreconditionError("polynomial has no nonzero coefficient");
    }
}

LogMag seminorm_eval(const CenteredPolynomial& q, const LogRadius& radius_log) {
    if (radius_log.is_neg_infinity()) {
        const auto& lead = q.terms().front();
        return lead.first == 0 ? lead.second : LogMag::zero();
    }
    const Rational& t = radius_log.value();
    LogMag best = LogMag::zero();
    for (const auto& [degree, coeff] : q.terms()) {
        if (coeff.is_zero()) continue;
        LogMag term = LogMag::of(coeff.exponent() + Rational(static_cast<unsigned long>(degree)) * t);
        if (term > best) best = term;
    }
    return best;
}

bool point_eq(const Rational& t1, const Rational& t2, const LogMag& center_gap) {
    return t1 == t2 && center_gap <= LogMag::of(t1);
}

}  // namespace berkcov
