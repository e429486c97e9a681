#include "berkcov/dot.hpp"

#include <sstream>

namespace berkcov::dot {

namespace {

std::string node_id(std::size_t level, std::uint64_t k) {
    return "n" + std::to_string(level) + "_" + std::to_string(k);
}

std::string piece_name(const Piece& piece) {
    std::string name = "Y" + std::to_string(piece.torsor) + (piece.side == Side::minus ? "-" : "+");
    if (piece.sheet) name += " / Z" + std::string(piece.side == Side::minus ? "-" : "+") + std::to_string(*piece.sheet);
    return name;
}

}  // namespace

std::string fiber_tree(const Prime& p, const FiberProfile& profile) {
    std::ostringstream out;
    out << "digraph fiber_tree {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=box, fontname=\"Helvetica\"];\n";
    out << "  label=\"z -> z^" << p.pow(profile.h) << ", lambda = "
        << format_rational(profile.base_center_exp - profile.base_radius_log) << ", "
        << profile.count << " preimage(s)\";\n";
    out << "  " << node_id(0, 0) << " [label=\"eta(z0, r)\\n|z0| = "
        << format_logmag(LogMag::of(profile.base_center_exp)) << "\\nr = p^{"
        << format_rational(profile.base_radius_log) << "}\"];\n";

    std::uint64_t width = 1;
    for (std::size_t level = 1; level <= profile.levels.size(); ++level) {
        const FiberLevel& l = profile.levels[level - 1];
        const std::uint64_t fan = l.splits ? p.value() : 1;
        out << "  { rank=same;";
        for (std::uint64_t k = 0; k < width * fan; ++k) out << ' ' << node_id(level, k) << ';';
        out << " }\n";
        for (std::uint64_t parent = 0; parent < width; ++parent) {
            for (std::uint64_t c = 0; c < fan; ++c) {
                const std::uint64_t k = parent * fan + c;
                out << "  " << node_id(level, k) << " [label=\"level " << level << " #" << k
                    << "\\n|z| = " << format_logmag(l.center_mag) << "\\nr = p^{"
                    << format_rational(l.radius_log) << "}\"];\n";
                out << "  " << node_id(level, k) << " -> " << node_id(level - 1, parent)
                    << " [label=\"z^" << p.value() << "\"];\n";
            }
        }
        width *= fan;
    }
    out << "}\n";
    return out.str();
}

std::string component_graph(const NeighborhoodStructure& nb) {
    std::ostringstream out;
    out << "graph components {\n";
    out << "  node [shape=ellipse, fontname=\"Helvetica\"];\n";
    out << "  label=\"epsilon = " << format_rational(nb.epsilon) << ", n0 = " << nb.n0 << "\";\n";
    for (std::size_t c = 0; c < nb.components.size(); ++c) {
        const Component& comp = nb.components[c];
        out << "  subgraph cluster_" << c << " {\n";
        out << "    label=\"component " << c << ": " << comp.sheet_classes.size() << " point(s) over eta\";\n";
        for (std::size_t idx : comp.pieces) {
            out << "    p" << idx << " [label=\"" << piece_name(nb.pieces[idx]) << "\"];\n";
        }
        out << "  }\n";
    }
    for (const auto& e : nb.edges) {
        out << "  p" << e.a << " -- p" << e.b << " [label=\"" << e.multiplicity << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace berkcov::dot
