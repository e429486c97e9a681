#pragma once

// Gluing two families of pinned torsors along the circle C(r0), and the
// analysis showing that no Berkovich neighborhood of the Gauss point of C(r0)
// trivializes the result.
//
// Skeleton coordinates are t = log_p |T|. The minus side is C^- = J n {t <= t0},
// the plus side C^+ = J n {t >= t0}. Torsor n on the minus side is pinned at
// a_n = t0 - delta/(n+1) and splits above its pin; torsor n on the plus side is
// pinned at b_n = t0 + delta/(n+1) and splits below it. Over C(r0) each torsor
// has p sheets; torsor n owns the global labels np+1 .. (n+1)p on its side.
// The object is infinite; everything here works at a truncation N (torsors
// 0..N on each side) and reports quantities as functions of N.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "berkcov/annuli.hpp"
#include "berkcov/torsor.hpp"
#include "berkcov/valgroup.hpp"

namespace berkcov {

enum class Side { minus, plus };

enum class MatchingRule {
    shift_one,  // Z^+_m ~ Z^-_{m+1}
};

struct SheetLabel {
    Side side = Side::minus;
    std::uint64_t index = 1;  // 1-based

    friend bool operator==(const SheetLabel&, const SheetLabel&) = default;
};

std::string format_sheet(const SheetLabel& s);  // "Z-3", "Z+6"
SheetLabel parse_sheet(std::string_view text);

/// Partner of a sheet in the untruncated object; empty when it has none.
std::optional<SheetLabel> sheet_partner(MatchingRule rule, const SheetLabel& s);

struct ConstructionParams {
    Prime p;
    Interval skeleton;  // J, in log_p |T|
    Rational t0;
    Rational delta;
    std::uint64_t truncation = 0;  // N
    MatchingRule rule = MatchingRule::shift_one;

    Rational pin_minus(std::uint64_t n) const;  // a_n
    Rational pin_plus(std::uint64_t n) const;   // b_n

    friend bool operator==(const ConstructionParams&, const ConstructionParams&) = default;
};

/// Throws PreconditionError unless [t0 - delta, t0 + delta] lies in the interior of J.
void validate(const ConstructionParams& params);

struct GluedCovering {
    ConstructionParams params;
    Annulus minus_annulus;
    Annulus plus_annulus;
    std::vector<TorsorSpec> minus;  // Y_n^-, n = 0..N
    std::vector<TorsorSpec> plus;   // Y_n^+
    std::vector<std::pair<SheetLabel, SheetLabel>> matching;  // (Z^+_m, Z^-_{m+1})
    std::vector<SheetLabel> unmatched;

    std::uint64_t sheets_per_side() const;
    std::uint64_t owner(const SheetLabel& s) const;  // torsor index n
    const TorsorSpec& torsor(Side side, std::uint64_t n) const;
    std::optional<SheetLabel> matched_with(const SheetLabel& s) const;

    friend bool operator==(const GluedCovering&, const GluedCovering&) = default;
};

GluedCovering build_covering(const ConstructionParams& params);

struct PieceCheck {
    std::uint64_t torsor = 0;
    std::uint64_t degree = 0;
    bool connected = false;          // over the whole side annulus
    std::uint64_t sheets_over_circle = 0;

    friend bool operator==(const PieceCheck&, const PieceCheck&) = default;
};

struct RestrictionCertificate {
    Side side = Side::minus;
    bool exact = false;
    std::vector<PieceCheck> pieces;
    /// Sheets of the other side lying over C(r0) that match nothing on this side.
    std::vector<SheetLabel> exceptions;
    /// Sheets whose partner exists but was cut off by the truncation.
    std::vector<SheetLabel> truncated;

    friend bool operator==(const RestrictionCertificate&, const RestrictionCertificate&) = default;
};

RestrictionCertificate restriction_certificate(const GluedCovering& cov, Side side);

/// Least n with a_n >= t0 - epsilon and b_n <= t0 + epsilon.
std::uint64_t n0_of_epsilon(const ConstructionParams& params, const Rational& epsilon);

/// A connected piece of a torsor restricted to U n C^{+-}: the whole
/// restriction, or a single sheet-tube when the restriction splits.
struct Piece {
    Side side = Side::minus;
    std::uint64_t torsor = 0;
    std::optional<std::uint64_t> sheet;

    friend bool operator==(const Piece&, const Piece&) = default;
};

struct PieceEdge {
    std::size_t a = 0;
    std::size_t b = 0;
    std::uint64_t multiplicity = 0;  // matched sheets between the two pieces

    friend bool operator==(const PieceEdge&, const PieceEdge&) = default;
};

struct Component {
    std::vector<std::size_t> pieces;
    /// Points over the Gauss point eta of C(r0): a matched pair or a lone sheet.
    std::vector<std::vector<SheetLabel>> sheet_classes;
    std::uint64_t sheet_count = 0;
    std::uint64_t matched_pairs = 0;

    friend bool operator==(const Component&, const Component&) = default;
};

struct NeighborhoodStructure {
    Rational epsilon;
    std::uint64_t n0 = 0;
    std::vector<Piece> pieces;  // Y_0^- pieces, Y_0^+ pieces, Y_1^- pieces, ...
    std::vector<PieceEdge> edges;
    std::vector<Component> components;  // ordered by first piece

    std::optional<std::size_t> component_of(Side side, std::uint64_t torsor) const;

    friend bool operator==(const NeighborhoodStructure&, const NeighborhoodStructure&) = default;
};

/// U is modeled by the band [t0 - epsilon, t0 + epsilon]: any Berkovich
/// neighborhood of eta contains the two circles C(r0 -+ epsilon) and the band between.
NeighborhoodStructure components_over_neighborhood(const GluedCovering& cov, const Rational& epsilon);

std::uint64_t gauss_fiber_count(const NeighborhoodStructure& nb, std::size_t component);

/// Inclusion-exclusion count for the component through Y_{n0}^-:
/// 2p(N - n0 + 1) sheets minus p(N - n0 + 1) - 1 identifications.
std::uint64_t chain_gauss_count_closed_form(const Prime& p, std::uint64_t truncation, std::uint64_t n0);

struct RefutationEntry {
    std::uint64_t truncation = 0;
    std::size_t component = 0;
    std::uint64_t torsors_in_component = 0;
    std::uint64_t gauss_fiber_count = 0;
    std::uint64_t closed_form = 0;

    friend bool operator==(const RefutationEntry&, const RefutationEntry&) = default;
};

struct RefutationReport {
    Rational epsilon;
    std::uint64_t n0 = 0;
    std::vector<RefutationEntry> entries;
    bool verdict = false;

    friend bool operator==(const RefutationReport&, const RefutationReport&) = default;
};

/// Rebuilds at each truncation, tracks the Gauss fiber of the component of
/// Y_{n0}^-. Verdict: counts strictly increase with steps >= p*dN - 2.
RefutationReport refute_overconvergent(const ConstructionParams& params, const Rational& epsilon,
                                       const std::vector<std::uint64_t>& truncations);

}  // namespace berkcov
