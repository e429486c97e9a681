// berkcov: command-line front end.
//
// Exit codes: 0 success (or verdict true), 2 usage/precondition error,
// 3 verdict false, 4 internal invariant breach.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "berkcov/dot.hpp"
#include "berkcov/glue.hpp"
#include "berkcov/io.hpp"
#include "berkcov/powermap.hpp"

namespace {

using namespace berkcov;
using nlohmann::json;

constexpr int kExitUsage = 2;
constexpr int kExitVerdictFalse = 3;
constexpr int kExitInvariant = 4;

struct Options {
    std::uint64_t p = 0;
    unsigned h = 1;
    std::string center_mag = "0";
    std::string radius_log;
    std::string lambda;
    std::string delta = "1";
    std::string t0 = "0";
    std::string lo;
    std::string hi;
    std::uint64_t truncation = 1;
    std::string epsilon;
    std::string n_list;
    std::string side = "minus";
    std::string format;
    std::string output;
    bool dot = false;
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

ConstructionParams construction(const Options& o) {
    Rational t0 = parse_rational(o.t0);
    Rational delta = parse_rational(o.delta);
    // default J: the open interval (t0 - 2 delta, t0 + 2 delta)
    auto lower = o.lo.empty() ? Bound::open_at(t0 - 2 * delta)
                 : o.lo == "-inf" ? Bound::infinite()
                                  : Bound::open_at(parse_rational(o.lo));
    auto upper = o.hi.empty() ? Bound::open_at(t0 + 2 * delta)
                 : o.hi == "inf" ? Bound::infinite()
                                 : Bound::open_at(parse_rational(o.hi));
    ConstructionParams params{Prime(o.p), Interval{lower, upper}, t0, delta, o.truncation,
                              MatchingRule::shift_one};
    validate(params);
    return params;
}

std::vector<std::uint64_t> parse_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
            throw PreconditionError("malformed --N-list entry: '" + item + "'");
        }
        out.push_back(std::stoull(item));
    }
    return out;
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed) {
        if (format == a) return;
    }
    throw PreconditionError("unsupported --format '" + format + "' for this command");
}

std::string run_pushforward(const Options& o) {
    require_format(o.format, {"json", "table"});
    Prime p(o.p);
    LogMag g = LogMag::of(parse_rational(o.center_mag));
    Rational t = parse_rational(o.radius_log);
    PushResult r = pushforward(p, o.h, g, t);
    if (pushforward_oracle(p, o.h, g, t) != r) throw InvariantError("pushforward disagrees with its oracle");
    if (o.format == "table") {
        return "center_mag " + format_logmag(r.center_mag_out) + "\nradius_log " + format_rational(r.radius_log_out) + "\n";
    }
    return dump(io::to_json(p, o.h, g, t, r));
}

std::string run_fiber(const Options& o) {
    require_format(o.format, {"json", "table"});
    Prime p(o.p);
    Rational g = parse_rational(o.center_mag);
    Rational t = o.lambda.empty() ? parse_rational(o.radius_log) : Rational(g - parse_rational(o.lambda));
    FiberProfile f = fiber(p, o.h, LogMag::of(g), t);
    if (o.format == "table") {
        std::ostringstream out;
        for (std::size_t i = 0; i < f.levels.size(); ++i) {
            out << "level " << i + 1 << "  radius_log " << format_rational(f.levels[i].radius_log) << "  center_mag "
                << format_logmag(f.levels[i].center_mag) << "  " << (f.levels[i].splits ? "splits" : "single") << "\n";
        }
        out << "count " << f.count << "\n";
        return out.str();
    }
    return dump(io::to_json(p, f));
}

std::string run_profile(const Options& o) {
    require_format(o.format, {"json", "table"});
    SplitProfile s = split_profile(Prime(o.p), o.h);
    if (o.format == "table") {
        std::ostringstream out;
        for (const auto& piece : s.intervals) {
            out << (piece.lo_closed ? "[" : "(") << format_rational(piece.lo) << ", "
                << (piece.hi ? format_rational(*piece.hi) : std::string("inf")) << (piece.hi_closed ? "]" : ")")
                << "  count p^" << piece.exponent << " = " << Prime(o.p).pow(piece.exponent) << "\n";
        }
        return out.str();
    }
    return dump(io::to_json(s));
}

std::string run_fiber_tree(const Options& o) {
    require_format(o.format, {"dot", "json"});
    Prime p(o.p);
    Rational lambda = parse_rational(o.lambda);
    if (sgn(lambda) < 0) throw PreconditionError("lambda must be >= 0");
    FiberProfile f = fiber(p, o.h, LogMag::of(Rational(0)), Rational(-lambda));
    if (o.format == "json") return dump(io::to_json(p, f));
    return dot::fiber_tree(p, f);
}

std::string run_build(const Options& o) {
    ConstructionParams params = construction(o);
    GluedCovering cov = build_covering(params);
    if (o.dot || o.format == "dot") {
        Rational eps = o.epsilon.empty() ? params.delta : parse_rational(o.epsilon);
        return dot::component_graph(components_over_neighborhood(cov, eps));
    }
    require_format(o.format, {"json"});
    return dump(io::to_json(cov));
}

std::string run_certify(const Options& o) {
    require_format(o.format, {"json"});
    if (o.side != "minus" && o.side != "plus") throw PreconditionError("--side must be minus or plus");
    GluedCovering cov = build_covering(construction(o));
    return dump(io::to_json(restriction_certificate(cov, o.side == "minus" ? Side::minus : Side::plus)));
}

std::string run_refute(const Options& o, bool& verdict) {
    require_format(o.format, {"json", "table"});
    ConstructionParams params = construction(o);
    RefutationReport r = refute_overconvergent(params, parse_rational(o.epsilon), parse_list(o.n_list));
    verdict = r.verdict;
    if (o.format == "table") {
        std::ostringstream out;
        out << "epsilon " << format_rational(r.epsilon) << "  n0 " << r.n0 << "\n";
        for (const auto& e : r.entries) {
            out << "N " << e.truncation << "  component " << e.component << "  torsors " << e.torsors_in_component
                << "  gauss_fiber " << e.gauss_fiber_count << "  closed_form " << e.closed_form << "\n";
        }
        out << "verdict " << (r.verdict ? "true" : "false") << "\n";
        return out.str();
    }
    return dump(io::to_json(r));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Splitting of mu_{p^h}-torsors and the glued admissible covering, in exact arithmetic"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    Options o;

    auto add_p = [&](CLI::App* cmd) { cmd->add_option("--p", o.p, "Residue characteristic (prime)")->required(); };
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", o.format, "Output format: json, dot or table");
        cmd->add_option("--output", o.output, "Write to this file instead of stdout");
    };
    auto add_construction = [&](CLI::App* cmd) {
        add_p(cmd);
        cmd->add_option("--delta", o.delta, "Pin offset delta > 0 (num/den)");
        cmd->add_option("--t0", o.t0, "log_p r0 (num/den)");
        cmd->add_option("--lo", o.lo, "Lower end of J (open), default t0 - 2 delta; -inf allowed");
        cmd->add_option("--hi", o.hi, "Upper end of J (open), default t0 + 2 delta; inf allowed");
    };

    auto* push = app.add_subcommand("pushforward", "Image of eta_{z1,rho} under z -> z^{p^h}");
    add_p(push);
    push->add_option("--h", o.h, "Tower height h >= 1")->required();
    push->add_option("--center-mag", o.center_mag, "log_p |z1| (num/den)");
    push->add_option("--radius-log", o.radius_log, "log_p rho (num/den)")->required();

    auto* fib = app.add_subcommand("fiber", "Preimages of eta_{z0,r} level by level");
    add_p(fib);
    fib->add_option("--h", o.h, "Tower height h >= 1")->required();
    fib->add_option("--center-mag", o.center_mag, "log_p |z0| (num/den)");
    auto* fib_r = fib->add_option("--radius-log", o.radius_log, "log_p r (num/den)");
    auto* fib_l = fib->add_option("--lambda", o.lambda, "Depth log_p(|z0|/r) (num/den)");
    fib_r->excludes(fib_l);
    fib->callback([&] {
        if (o.radius_log.empty() && o.lambda.empty()) throw CLI::ValidationError("one of --radius-log, --lambda");
    });

    auto* prof = app.add_subcommand("profile", "Preimage count as a step function of lambda");
    add_p(prof);
    prof->add_option("--h", o.h, "Tower height h >= 1")->required();

    auto* tree = app.add_subcommand("fiber-tree", "Preimage tree over a point of depth lambda (DOT)");
    add_p(tree);
    tree->add_option("--h", o.h, "Tower height h >= 1")->required();
    tree->add_option("--lambda", o.lambda, "Depth log_p(|z0|/r) (num/den)")->required();

    auto* build = app.add_subcommand("build", "Glue the torsor families at truncation N");
    add_construction(build);
    build->add_option("--N", o.truncation, "Truncation N >= 0")->required();
    build->add_flag("--dot", o.dot, "Emit the component graph over the band U as DOT");
    build->add_option("--epsilon", o.epsilon, "Half-width of U for --dot (default delta)");

    auto* cert = app.add_subcommand("certify", "Restriction certificate for one side of the gluing");
    add_construction(cert);
    cert->add_option("--N", o.truncation, "Truncation N >= 0")->required();
    cert->add_option("--side", o.side, "minus or plus")->required();

    auto* refute = app.add_subcommand("refute", "Gauss-fiber growth of the chain component");
    add_construction(refute);
    refute->add_option("--epsilon", o.epsilon, "Half-width of U, 0 < epsilon <= delta")->required();
    refute->add_option("--N-list", o.n_list, "Increasing truncations, comma separated")->required();

    add_common(push);
    add_common(fib);
    add_common(prof);
    add_common(tree);
    add_common(build);
    add_common(cert);
    add_common(refute);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    if (o.format.empty()) o.format = *tree ? "dot" : "json";

    try {
        std::string text;
        bool verdict = true;
        if (*push) text = run_pushforward(o);
        else if (*fib) text = run_fiber(o);
        else if (*prof) text = run_profile(o);
        else if (*tree) text = run_fiber_tree(o);
        else if (*build) text = run_build(o);
        else if (*cert) text = run_certify(o);
        else if (*refute) text = run_refute(o, verdict);

        if (o.output.empty()) {
            std::cout << text;
        } else {
            std::ofstream file(o.output, std::ios::binary);
            if (!file) throw PreconditionError("cannot open output file " + o.output);
            file << text;
        }
        return verdict ? 0 : kExitVerdictFalse;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvariantError& e) {
        std::cerr << "internal invariant breach: " << e.what() << "\n";
        return kExitInvariant;
    }
}
