#pragma once

// Test-only reference computations. Nothing here calls into the library's
// valuation or splitting code; they are the independent side of each check.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

/// v_p(m) by repeated division of an arbitrary-precision integer.
inline std::uint64_t valuation(mpz_class m, std::uint64_t p) {
    std::uint64_t v = 0;
    const mpz_class pp = static_cast<unsigned long>(p);
    while (m != 0 && m % pp == 0) {
        m /= pp;
        ++v;
    }
    return v;
}

/// v_p(n!) by building n! and factoring it.
inline std::uint64_t vp_factorial_by_multiplication(std::uint64_t n, std::uint64_t p) {
    mpz_class f = 1;
    for (std::uint64_t i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
    return valuation(f, p);
}

/// v_p(C(n,k)) from the integer binomial coefficient itself.
inline std::uint64_t vp_binomial_direct(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), n, k);
    return valuation(c, p);
}

/// Slopes of the lower convex hull of points (x_i, y_i), x strictly increasing.
inline std::vector<mpq_class> lower_hull_slopes(const std::vector<std::pair<long, long>>& pts) {
    std::vector<std::pair<long, long>> hull;
    for (const auto& q : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull.back();
            // drop b if it lies on or above segment a-q
            long cross = (b.first - a.first) * (q.second - a.second) - (b.second - a.second) * (q.first - a.first);
            if (cross <= 0) hull.pop_back();
            else break;
        }
        hull.push_back(q);
    }
    std::vector<mpq_class> slopes;
    for (std::size_t i = 1; i < hull.size(); ++i) {
        mpq_class s(hull[i].second - hull[i - 1].second, hull[i].first - hull[i - 1].first);
        s.canonicalize();
        slopes.push_back(s);
    }
    return slopes;
}

/// Newton polygon slopes of Phi_p(X + 1) = ((X+1)^p - 1)/X from its integer coefficients C(p, i+1).
inline std::vector<mpq_class> cyclotomic_shift_slopes(std::uint64_t p) {
    std::vector<std::pair<long, long>> pts;
    for (std::uint64_t i = 0; i < p; ++i) {
        mpz_class c;
        mpz_bin_uiui(c.get_mpz_t(), p, i + 1);
        pts.emplace_back(static_cast<long>(i), static_cast<long>(valuation(c, p)));
    }
    return lower_hull_slopes(pts);
}

/// Random rational num/den with |num| <= span*den.
inline mpq_class random_rational(std::mt19937_64& rng, long span, long max_den) {
    std::uniform_int_distribution<long> den_dist(1, max_den);
    long den = den_dist(rng);
    std::uniform_int_distribution<long> num_dist(-span * den, span * den);
    mpq_class q(num_dist(rng), den);
    q.canonicalize();
    return q;
}

}  // namespace oracle
