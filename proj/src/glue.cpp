#include "berkcov/glue.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace berkcov {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<unsigned> rank_;
};

Rational harmonic_step(const Rational& delta, std::uint64_t n) {
    Rational q = delta / Rational(static_cast<unsigned long>(n + 1));
    q.canonicalize();
    return q;
}

}  // namespace

std::string format_sheet(const SheetLabel& s) {
    return std::string(s.side == Side::minus ? "Z-" : "Z+") + std::to_string(s.index);
}

SheetLabel parse_sheet(std::string_view text) {
    if (text.size() < 3 || text[0] != 'Z' || (text[1] != '-' && text[1] != '+')) {
        throw PreconditionError("malformed sheet label: '" + std::string(text) + "'");
    }
    std::uint64_t index = 0;
    for (char c : text.substr(2)) {
        if (c < '0' || c > '9') throw PreconditionError("malformed sheet label: '" + std::string(text) + "'");
        index = index * 10 + static_cast<std::uint64_t>(c - '0');
    }
    if (index == 0) throw PreconditionError("sheet labels start at 1");
    return SheetLabel{text[1] == '-' ? Side::minus : Side::plus, index};
}

std::optional<SheetLabel> sheet_partner(MatchingRule rule, const SheetLabel& s) {
    switch (rule) {
        case MatchingRule::shift_one:
            if (s.side == Side::plus) return SheetLabel{Side::minus, s.index + 1};
            if (s.index >= 2) return SheetLabel{Side::plus, s.index - 1};
            return std::nullopt;
    }
    return std::nullopt;
}

Rational ConstructionParams::pin_minus(std::uint64_t n) const { return t0 - harmonic_step(delta, n); }

Rational ConstructionParams::pin_plus(std::uint64_t n) const { return t0 + harmonic_step(delta, n); }

void validate(const ConstructionParams& params) {
    if (sgn(params.delta) <= 0) throw PreconditionError("delta must be positive");
    if (!params.skeleton.interior_contains(params.t0)) throw PreconditionError("t0 must be interior to J");
    if (!params.skeleton.interior_contains(params.t0 - params.delta) ||
        !params.skeleton.interior_contains(params.t0 + params.delta)) {
        throw PreconditionError("delta too large: [t0 - delta, t0 + delta] must lie inside J");
    }
}

std::uint64_t GluedCovering::sheets_per_side() const {
    return params.p.value() * (params.truncation + 1);
}

std::uint64_t GluedCovering::owner(const SheetLabel& s) const {
    if (s.index == 0 || s.index > sheets_per_side()) throw PreconditionError("sheet out of range");
    return (s.index - 1) / params.p.value();
}

const TorsorSpec& GluedCovering::torsor(Side side, std::uint64_t n) const {
    const auto& family = side == Side::minus ? minus : plus;
    if (n >= family.size()) throw PreconditionError("torsor index beyond truncation");
    return family[n];
}

std::optional<SheetLabel> GluedCovering::matched_with(const SheetLabel& s) const {
    auto partner = sheet_partner(params.rule, s);
    if (!partner || partner->index > sheets_per_side()) return std::nullopt;
    return partner;
}

GluedCovering build_covering(const ConstructionParams& params) {
    validate(params);
    const Interval& j = params.skeleton;
    Annulus minus_annulus(AnnulusCenter::zero, Interval{j.lo, Bound::closed_at(params.t0)});
    Annulus plus_annulus(AnnulusCenter::zero, Interval{Bound::closed_at(params.t0), j.hi});

    GluedCovering cov{params, minus_annulus, plus_annulus, {}, {}, {}, {}};
    for (std::uint64_t n = 0; n <= params.truncation; ++n) {
        cov.minus.push_back(make_torsor(params.p, minus_annulus, params.pin_minus(n), SplitSide::above));
        cov.plus.push_back(make_torsor(params.p, plus_annulus, params.pin_plus(n), SplitSide::below));
    }

    const std::uint64_t sheets = cov.sheets_per_side();
    for (std::uint64_t m = 1; m <= sheets; ++m) {
        SheetLabel s{Side::plus, m};
        if (auto partner = cov.matched_with(s)) cov.matching.emplace_back(s, *partner);
    }
    for (Side side : {Side::minus, Side::plus}) {
        for (std::uint64_t m = 1; m <= sheets; ++m) {
            SheetLabel s{side, m};
            if (!cov.matched_with(s)) cov.unmatched.push_back(s);
        }
    }
    return cov;
}

RestrictionCertificate restriction_certificate(const GluedCovering& cov, Side side) {
    RestrictionCertificate cert;
    cert.side = side;
    const Annulus& annulus = side == Side::minus ? cov.minus_annulus : cov.plus_annulus;
    const Interval circle = Interval::point(cov.params.t0);
    const auto& family = side == Side::minus ? cov.minus : cov.plus;

    bool pieces_ok = true;
    for (std::uint64_t n = 0; n < family.size(); ++n) {
        const TorsorSpec& ts = family[n];
        PieceCheck check;
        check.torsor = n;
        check.degree = ts.p.value();
        check.connected = components_over(ts, annulus.skeleton) == 1;
        check.sheets_over_circle = splits_over_tube(ts, circle) ? ts.p.value() : 1;
        pieces_ok = pieces_ok && check.connected && check.sheets_over_circle == check.degree;
        cert.pieces.push_back(check);
    }

    // The other side contributes its sheets over C(r0) (C(r0) lies in both
    // halves); each must be identified with a sheet of this side.
    const Side other = side == Side::minus ? Side::plus : Side::minus;
    for (std::uint64_t m = 1; m <= cov.sheets_per_side(); ++m) {
        SheetLabel s{other, m};
        auto partner = sheet_partner(cov.params.rule, s);
        if (!partner) {
            cert.exceptions.push_back(s);
        } else if (partner->index > cov.sheets_per_side()) {
            cert.truncated.push_back(s);
        }
    }
    cert.exact = pieces_ok && cert.exceptions.empty();
    return cert;
}

std::uint64_t n0_of_epsilon(const ConstructionParams& params, const Rational& epsilon) {
    validate(params);
    if (sgn(epsilon) <= 0) throw PreconditionError("epsilon must be positive");
    if (epsilon > params.delta) throw PreconditionError("epsilon must not exceed delta");

    // delta/(n+1) <= epsilon  <=>  n >= ceil(delta/epsilon) - 1
    Rational ratio = params.delta / epsilon;
    ratio.canonicalize();
    mpz_class ceil_ratio;
    mpz_cdiv_q(ceil_ratio.get_mpz_t(), ratio.get_num_mpz_t(), ratio.get_den_mpz_t());
    const std::uint64_t n0 = static_cast<std::uint64_t>(ceil_ratio.get_ui()) - 1;

    // Cross-check against connectivity of the torsor restrictions to the two circles.
    const Interval& j = params.skeleton;
    Annulus minus_annulus(AnnulusCenter::zero, Interval{j.lo, Bound::closed_at(params.t0)});
    Annulus plus_annulus(AnnulusCenter::zero, Interval{Bound::closed_at(params.t0), j.hi});
    const Interval lower = Interval::point(params.t0 - epsilon);
    const Interval upper = Interval::point(params.t0 + epsilon);
    auto connected_at = [&](std::uint64_t n) {
        auto lo = make_torsor(params.p, minus_annulus, params.pin_minus(n), SplitSide::above);
        auto hi = make_torsor(params.p, plus_annulus, params.pin_plus(n), SplitSide::below);
        return components_over(lo, lower) == 1 && components_over(hi, upper) == 1;
    };
    if (!connected_at(n0) || (n0 > 0 && connected_at(n0 - 1))) {
        throw InvariantError("n0 closed form disagrees with circle connectivity");
    }
    return n0;
}

std::optional<std::size_t> NeighborhoodStructure::component_of(Side side, std::uint64_t torsor) const {
    for (std::size_t c = 0; c < components.size(); ++c) {
        for (std::size_t idx : components[c].pieces) {
            if (pieces[idx].side == side && pieces[idx].torsor == torsor) return c;
        }
    }
    return std::nullopt;
}

NeighborhoodStructure components_over_neighborhood(const GluedCovering& cov, const Rational& epsilon) {
    NeighborhoodStructure nb;
    nb.epsilon = epsilon;
    nb.n0 = n0_of_epsilon(cov.params, epsilon);

    const std::uint64_t p = cov.params.p.value();
    const std::uint64_t sheets = cov.sheets_per_side();
    const Interval band_minus = Interval::closed(cov.params.t0 - epsilon, cov.params.t0);
    const Interval band_plus = Interval::closed(cov.params.t0, cov.params.t0 + epsilon);

    // piece index of each sheet, per side
    std::vector<std::size_t> piece_minus(sheets + 1), piece_plus(sheets + 1);
    for (std::uint64_t n = 0; n <= cov.params.truncation; ++n) {
        for (Side side : {Side::minus, Side::plus}) {
            const TorsorSpec& ts = cov.torsor(side, n);
            auto& piece_of = side == Side::minus ? piece_minus : piece_plus;
            bool whole = components_over(ts, side == Side::minus ? band_minus : band_plus) == 1;
            if (whole) nb.pieces.push_back(Piece{side, n, std::nullopt});
            for (std::uint64_t m = n * p + 1; m <= (n + 1) * p; ++m) {
                if (!whole) nb.pieces.push_back(Piece{side, n, m});
                piece_of[m] = nb.pieces.size() - 1;
            }
        }
    }

    DisjointSets dsu(nb.pieces.size());
    std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> edge_weight;
    for (const auto& [plus_sheet, minus_sheet] : cov.matching) {
        std::size_t a = piece_plus[plus_sheet.index];
        std::size_t b = piece_minus[minus_sheet.index];
        dsu.unite(a, b);
        ++edge_weight[{std::min(a, b), std::max(a, b)}];
    }
    for (const auto& [key, weight] : edge_weight) nb.edges.push_back(PieceEdge{key.first, key.second, weight});

    std::map<std::size_t, std::size_t> root_to_component;
    for (std::size_t i = 0; i < nb.pieces.size(); ++i) {
        std::size_t root = dsu.find(i);
        auto [it, fresh] = root_to_component.try_emplace(root, nb.components.size());
        if (fresh) nb.components.emplace_back();
        nb.components[it->second].pieces.push_back(i);
    }

    // Sheet classes over eta: a matched pair is one point, a lone sheet is one point.
    for (std::uint64_t m = 1; m <= sheets; ++m) {
        SheetLabel minus_sheet{Side::minus, m};
        Component& c = nb.components[root_to_component.at(dsu.find(piece_minus[m]))];
        c.sheet_count += 1;
        if (!cov.matched_with(minus_sheet)) c.sheet_classes.push_back({minus_sheet});

        SheetLabel plus_sheet{Side::plus, m};
        Component& d = nb.components[root_to_component.at(dsu.find(piece_plus[m]))];
        d.sheet_count += 1;
        if (auto partner = cov.matched_with(plus_sheet)) {
            d.sheet_classes.push_back({plus_sheet, *partner});
            d.matched_pairs += 1;
        } else {
            d.sheet_classes.push_back({plus_sheet});
        }
    }
    return nb;
}

std::uint64_t gauss_fiber_count(const NeighborhoodStructure& nb, std::size_t component) {
    if (component >= nb.components.size()) throw PreconditionError("no such component");
    return nb.components[component].sheet_classes.size();
}

std::uint64_t chain_gauss_count_closed_form(const Prime& p, std::uint64_t truncation, std::uint64_t n0) {
    if (truncation < n0) throw PreconditionError("truncation below n0");
    const std::uint64_t torsors = truncation - n0 + 1;
    const std::uint64_t sheets = 2 * p.value() * torsors;
    const std::uint64_t identifications = p.value() * torsors - 1;
    return sheets - identifications;
}

RefutationReport refute_overconvergent(const ConstructionParams& params, const Rational& epsilon,
                                       const std::vector<std::uint64_t>& truncations) {
    if (truncations.size() < 2) throw PreconditionError("need at least two truncations to judge growth");
    if (std::adjacent_find(truncations.begin(), truncations.end(), std::greater_equal<>{}) != truncations.end()) {
        throw PreconditionError("truncations must be strictly increasing");
    }
    RefutationReport report;
    report.epsilon = epsilon;
    report.n0 = n0_of_epsilon(params, epsilon);
    if (truncations.front() < report.n0) {
        throw PreconditionError("every truncation must be >= n0 = " + std::to_string(report.n0));
    }

    for (std::uint64_t big_n : truncations) {
        ConstructionParams at = params;
        at.truncation = big_n;
        GluedCovering cov = build_covering(at);
        NeighborhoodStructure nb = components_over_neighborhood(cov, epsilon);
        auto comp = nb.component_of(Side::minus, report.n0);
        if (!comp) throw InvariantError("torsor Y_{n0}^- has no component");

        RefutationEntry entry;
        entry.truncation = big_n;
        entry.component = *comp;
        std::vector<std::pair<Side, std::uint64_t>> torsors;
        for (std::size_t idx : nb.components[*comp].pieces) torsors.emplace_back(nb.pieces[idx].side, nb.pieces[idx].torsor);
        std::sort(torsors.begin(), torsors.end());
        torsors.erase(std::unique(torsors.begin(), torsors.end()), torsors.end());
        entry.torsors_in_component = torsors.size();
        entry.gauss_fiber_count = gauss_fiber_count(nb, *comp);
        entry.closed_form = chain_gauss_count_closed_form(params.p, big_n, report.n0);

        const Component& c = nb.components[*comp];
        if (entry.gauss_fiber_count != entry.closed_form ||
            entry.gauss_fiber_count != c.sheet_count - c.matched_pairs) {
            throw InvariantError("union-find Gauss fiber count disagrees with inclusion-exclusion");
        }
        report.entries.push_back(entry);
    }

    const std::uint64_t p = params.p.value();
    report.verdict = true;
    for (std::size_t i = 1; i < report.entries.size(); ++i) {
        const auto& prev = report.entries[i - 1];
        const auto& cur = report.entries[i];
        // as signed: the bound may dip below zero for tiny steps
        auto growth = static_cast<std::int64_t>(cur.gauss_fiber_count) - static_cast<std::int64_t>(prev.gauss_fiber_count);
        auto needed = static_cast<std::int64_t>(p * (cur.truncation - prev.truncation)) - 2;
        if (growth <= 0 || growth < needed) report.verdict = false;
    }
    return report;
}

}  // namespace berkcov
