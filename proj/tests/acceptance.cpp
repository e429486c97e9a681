// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "berkcov/glue.hpp"
#include "berkcov/powermap.hpp"
#include "berkcov/torsor.hpp"
#include "oracles.hpp"

using namespace berkcov;

namespace {

Rational q(long num, unsigned long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;  // 0: untimed
    std::function<Outcome()> body;
};

std::vector<Rational> lambda_grid(std::uint64_t p, unsigned h) {
    std::vector<Rational> grid;
    const Rational tiny = q(1, 1000000);
    for (unsigned i = 0; i <= h; ++i) {
        for (const Rational b : {Rational(i + q(1, p - 1)), Rational(i + q(p, p - 1))}) {
            grid.push_back(b);
            grid.push_back(b - tiny);
            grid.push_back(b + tiny);
        }
    }
    for (long k = 0; grid.size() < 110; ++k) grid.push_back(q(k, 9));
    return grid;
}

Outcome newton_slopes() {
    Outcome out;
    for (std::uint64_t p : {2, 3, 5, 7, 11}) {
        auto slopes = oracle::cyclotomic_shift_slopes(p);
        out.require(slopes.size() == 1, "Newton polygon of Phi_p(X+1) is not a single segment, p=" + std::to_string(p));
        if (!out.ok) break;
        out.require(root_of_unity_gap(Prime(p)).exponent() == slopes.front(),
                    "gap exponent differs from Newton slope, p=" + std::to_string(p));
    }
    if (out.ok) out.detail = "gap = p^{-1/(p-1)} equals the Newton slope for p in {2,3,5,7,11}";
    return out;
}

Outcome pushforward_oracle_equality() {
    Outcome out;
    std::mt19937_64 rng(2026);
    std::size_t pairs = 0;
    for (std::uint64_t pv : {2, 3, 5}) {
        Prime p(pv);
        for (unsigned h = 1; h <= 4; ++h) {
            for (int trial = 0; trial < 210; ++trial) {
                Rational g = oracle::random_rational(rng, 3, 6);
                Rational t;
                switch (trial % 4) {
                    case 0: t = g - q(pv, pv - 1); break;
                    case 1: t = g - q(1, pv - 1); break;
                    default: t = g - abs(oracle::random_rational(rng, 4, 9));
                }
                ++pairs;
                out.require(pushforward(p, h, LogMag::of(g), t) == pushforward_oracle(p, h, LogMag::of(g), t),
                            "mismatch at p=" + std::to_string(pv) + " h=" + std::to_string(h) + " g=" +
                                format_rational(g) + " t=" + format_rational(t));
            }
        }
        // the two branches meet exactly where rho = |z1| p^{-1/(p-1)}
        for (long gn : {-5, -1, 0, 3, 7}) {
            Rational g = q(gn, 3);
            Rational t = g - q(1, pv - 1);
            Rational top = Rational(pv) * t;
            Rational linear = -1 + t + Rational(pv - 1) * g;
            out.require(top == linear, "branches disagree at g - 1/(p-1)");
            auto r = pushforward_step(p, LogMag::of(g), t);
            out.require(r.radius_log_out == r.center_mag_out.exponent() - q(pv, pv - 1),
                        "breakpoint image not at g_out - p/(p-1)");
        }
    }
    if (out.ok) {
        out.detail = std::to_string(pairs) +
                     " pairs equal; branches agree at t = g - 1/(p-1), whose image is g_out - p/(p-1)";
    }
    return out;
}

Outcome profile_vs_enumeration() {
    Outcome out;
    for (std::uint64_t pv : {2, 3, 5, 7}) {
        for (unsigned h = 1; h <= 4; ++h) {
            Prime p(pv);
            auto profile = split_profile(p, h);
            auto grid = lambda_grid(pv, h);
            out.require(grid.size() >= 100, "grid too small");
            for (const auto& lambda : grid) {
                if (sgn(lambda) < 0) continue;
                auto f = fiber(p, h, LogMag::of(q(0)), Rational(-lambda));
                out.require(f.count == profile.count_at(lambda),
                            "profile disagrees at p=" + std::to_string(pv) + " h=" + std::to_string(h) +
                                " lambda=" + format_rational(lambda));
            }
            // total splitting starts strictly after h + 1/(p-1), not h + p/(p-1)
            Rational threshold = Rational(h) + q(1, pv - 1);
            out.require(fiber(p, h, LogMag::of(q(0)), Rational(-threshold)).count < p.pow(h),
                        "count already p^h at h + 1/(p-1)");
            out.require(fiber(p, h, LogMag::of(q(0)), Rational(-threshold - q(1, 1000000))).count == p.pow(h),
                        "count not p^h just past h + 1/(p-1)");
        }
    }
    auto s = split_profile(Prime(3), 2);
    out.require(s.intervals.size() == 3 && *s.intervals[0].hi == q(3, 2) && *s.intervals[1].hi == q(5, 2),
                "p=3, h=2 breakpoints are not 3/2 and 5/2");
    out.require(s.count_at(q(1)) == 1 && s.count_at(q(2)) == 3 && s.count_at(q(3)) == 9,
                "p=3, h=2 counts are not (1, 3, 9)");
    if (out.ok) {
        out.detail = "p=3 h=2: breakpoints 3/2, 5/2, counts (1,3,9); enumeration confirms the total-splitting threshold: "
                     "all p^h preimages iff lambda > h + 1/(p-1) (not h + p/(p-1))";
    }
    return out;
}

Outcome lambda_zero() {
    Outcome out;
    for (std::uint64_t pv : {2, 3, 5, 7}) {
        for (unsigned h = 1; h <= 4; ++h) {
            for (long g : {-3, 0, 2}) {
                out.require(fiber(Prime(pv), h, LogMag::of(q(g)), q(g)).count == 1,
                            "lambda = 0 fiber not a singleton at p=" + std::to_string(pv));
            }
        }
    }
    if (out.ok) out.detail = "skeleton points have a single preimage";
    return out;
}

Outcome round_trip() {
    Outcome out;
    std::size_t checked = 0;
    for (std::uint64_t pv : {2, 3, 5, 7}) {
        for (unsigned h = 1; h <= 4; ++h) {
            Prime p(pv);
            for (const auto& lambda : lambda_grid(pv, h)) {
                if (sgn(lambda) < 0) continue;
                auto f = fiber(p, h, LogMag::of(q(0)), Rational(-lambda));
                for (std::size_t j = 0; j < f.levels.size(); ++j) {
                    const auto& level = f.levels[j];
                    auto back = pushforward(p, static_cast<unsigned>(j + 1), level.center_mag, level.radius_log);
                    ++checked;
                    out.require(back.center_mag_out == LogMag::of(q(0)) && back.radius_log_out == -lambda,
                                "level " + std::to_string(j + 1) + " does not push back at lambda=" +
                                    format_rational(lambda));
                }
            }
        }
    }
    if (out.ok) out.detail = std::to_string(checked) + " preimage levels push forward to the base point";
    return out;
}

Outcome transport_consistency() {
    Outcome out;
    std::mt19937_64 rng(6174);
    const std::uint64_t primes[] = {2, 3, 5, 7};
    int flips = 0, splits = 0;
    const int trials = 600;
    for (int trial = 0; trial < trials; ++trial) {
        Rational lo = oracle::random_rational(rng, 4, 3);
        Rational hi = lo + abs(oracle::random_rational(rng, 3, 4)) + q(1, 4);
        Interval j{Bound{lo, rng() % 2 == 0}, Bound{hi, rng() % 2 == 0}};
        Rational pin = lo + (hi - lo) * q(1 + static_cast<long>(rng() % 9), 10);
        auto ts = make_torsor(Prime(primes[rng() % 4]), Annulus(AnnulusCenter::zero, j), pin,
                              rng() % 2 ? SplitSide::below : SplitSide::above);
        Rational t = lo + (hi - lo) * q(1 + static_cast<long>(rng() % 99), 100);
        Rational depth = rng() % 4 == 0 ? Rational(0) : Rational(abs(oracle::random_rational(rng, 3, 6)));
        TubePoint pt(t, Rational(t - depth));
        flips += ts.to_model.orientation_reversing();
        std::uint64_t closed = torsor_fiber_count(ts, pt);
        splits += closed == ts.p.value();
        out.require(closed == torsor_fiber_count_in_model(ts, pt), "closed form differs from model chart");
    }
    out.require(flips > 0, "no orientation-reversing instances");
    if (out.ok) {
        out.detail = std::to_string(trials) + " instances, " + std::to_string(flips) + " through flips, " +
                     std::to_string(splits) + " split";
    }
    return out;
}

Outcome construction_shape() {
    Outcome out;
    const std::uint64_t pv = 3, truncation = 64;
    ConstructionParams params{Prime(pv), Interval::open(q(-2), q(2)), q(0), q(1), truncation,
                              MatchingRule::shift_one};
    auto cov = build_covering(params);

    auto minus = restriction_certificate(cov, Side::minus);
    out.require(minus.exact, "minus certificate not exact");
    auto plus = restriction_certificate(cov, Side::plus);
    out.require(plus.exceptions == std::vector<SheetLabel>{SheetLabel{Side::minus, 1}},
                "plus certificate exceptions are not {Z-1}");

    auto nb = components_over_neighborhood(cov, params.delta);
    out.require(nb.components.size() == 1, "epsilon = delta gives more than one component");
    out.require(nb.pieces.size() == 2 * (truncation + 1), "some torsor is not whole over the band");
    // pieces are stored as Y_0^-, Y_0^+, Y_1^-, ...; the path visits them in that order
    std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> weight;
    for (const auto& e : nb.edges) weight[{e.a, e.b}] = e.multiplicity;
    out.require(nb.edges.size() + 1 == nb.pieces.size(), "component graph is not a path");
    for (std::size_t k = 0; k < nb.pieces.size(); ++k) {
        const Piece expected{k % 2 ? Side::plus : Side::minus, k / 2, std::nullopt};
        out.require(nb.pieces[k] == expected, "unexpected piece order");
        if (k + 1 < nb.pieces.size()) {
            auto it = weight.find({k, k + 1});
            out.require(it != weight.end(), "missing path edge");
            if (it != weight.end()) {
                out.require(it->second == (k % 2 == 0 ? pv - 1 : 1), "edge multiplicities do not alternate p-1, 1");
            }
        }
    }
    if (out.ok) {
        out.detail = "minus exact, plus exceptions {Z-1}, single path of " + std::to_string(nb.pieces.size()) +
                     " pieces with multiplicities (2, 1, 2, 1, ...)";
    }
    return out;
}

Outcome refutation_growth() {
    Outcome out;
    ConstructionParams params{Prime(3), Interval::open(q(-2), q(2)), q(0), q(1), 0, MatchingRule::shift_one};
    const std::vector<std::uint64_t> truncations{16, 32, 64};
    auto report = refute_overconvergent(params, q(1, 8), truncations);
    out.require(report.n0 == 7, "n0 != 7");
    out.require(report.verdict, "verdict false");
    std::ostringstream counts;
    for (std::size_t k = 0; k < report.entries.size(); ++k) {
        const auto& e = report.entries[k];
        out.require(e.gauss_fiber_count == e.closed_form, "union-find count differs from closed form");
        out.require(e.closed_form == chain_gauss_count_closed_form(Prime(3), e.truncation, 7),
                    "closed form recomputation differs");
        if (k > 0) {
            const auto& prev = report.entries[k - 1];
            out.require(e.gauss_fiber_count > prev.gauss_fiber_count, "counts not strictly increasing");
            out.require(e.gauss_fiber_count + 2 >= prev.gauss_fiber_count + 3 * (e.truncation - prev.truncation),
                        "growth below p*dN - 2");
        }
        counts << (k ? ", " : "") << "N=" << e.truncation << ": " << e.gauss_fiber_count;
    }
    if (out.ok) out.detail = "verdict true; " + counts.str();
    return out;
}

std::string capture(const std::string& args) {
    std::string cmd = std::string(BERKCOV_CLI) + " " + args + " 2>&1";
    std::string text;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return "<popen failed>";
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) text.append(buf, n);
    text += "\nstatus=" + std::to_string(pclose(pipe));
    return text;
}

Outcome determinism() {
    Outcome out;
    const std::vector<std::string> commands{
        "pushforward --p 3 --h 1 --center-mag 0 --radius-log -1",
        "pushforward --p 5 --h 3 --center-mag 2/3 --radius-log -7/2 --format table",
        "pushforward --p 3 --h 1 --center-mag 0 --radius-log 1",
        "fiber --p 3 --h 2 --lambda 2",
        "fiber --p 7 --h 4 --center-mag -1 --radius-log -9 --format table",
        "profile --p 3 --h 2",
        "profile --p 7 --h 4 --format table",
        "fiber-tree --p 3 --h 2 --lambda 3",
        "fiber-tree --p 2 --h 4 --lambda 5/2 --format json",
        "build --p 3 --delta 1 --t0 0 --N 8",
        "build --p 3 --delta 1 --t0 0 --N 12 --dot --epsilon 1/4",
        "build --p 2 --delta 1/2 --t0 1 --N 5 --lo -inf --hi 3",
        "certify --p 3 --delta 1 --t0 0 --N 6 --side minus",
        "certify --p 5 --delta 1 --t0 0 --N 6 --side plus --output /dev/stdout",
        "refute --p 3 --delta 1 --t0 0 --epsilon 1/8 --N-list 16,32,64",
        "refute --p 2 --delta 1 --t0 0 --epsilon 1/3 --N-list 3,5,9 --format table",
    };
    for (const auto& args : commands) {
        std::string first = capture(args);
        std::string second = capture(args);
        out.require(first == second, "output differs between runs: " + args);
        out.require(first.find("<popen failed>") == std::string::npos, "could not run: " + args);
    }
    if (out.ok) out.detail = std::to_string(commands.size()) + " commands byte-identical across two runs";
    return out;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "root-of-unity gap vs Newton polygon", 0.1, newton_slopes},
        {2, "pushforward equals one-shot oracle", 2.0, pushforward_oracle_equality},
        {3, "split profile equals enumeration", 2.0, profile_vs_enumeration},
        {4, "lambda = 0 fiber is a singleton", 0, lambda_zero},
        {5, "preimages push forward to the base", 0, round_trip},
        {6, "torsor counts are chart independent", 0, transport_consistency},
        {7, "construction shape at N = 64", 1.0, construction_shape},
        {8, "Gauss fiber growth, eps = 1/8", 5.0, refutation_growth},
        {9, "CLI output is deterministic", 0, determinism},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        Outcome outcome;
        const auto start = std::chrono::steady_clock::now();
        try {
            outcome = c.body();
        } catch (const std::exception& e) {
            outcome.ok = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && seconds >= c.limit_seconds && outcome.ok) {
            outcome.ok = false;
            outcome.detail = "took longer than the limit";
        }
        failures += !outcome.ok;

        std::ostringstream line;
        line << (outcome.ok ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << " (" << std::fixed;
        line.precision(3);
        line << seconds << " s";
        if (c.limit_seconds > 0) line << " / limit " << c.limit_seconds << " s";
        line << "): " << outcome.detail;
        std::cout << line.str() << '\n';
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
