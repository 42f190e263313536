#pragma once

#include <optional>
#include <random>

#include "finmet/metric_space.hpp"

namespace finmet {

struct FunctionCheck {
    bool ok = true;
    int i = -1, j = -1;      // worst witness pair (is_admissible) or point (is_extremal)
    double defect = 0.0;
};

// f is admissible if f(x)+f(y) ≥ d(x,y) for all pairs; the pair x = y
// makes admissible functions nonnegative.
inline FunctionCheck is_admissible(const FiniteMetricSpace& space, const PointFunction& f,
                                   double tol = kDefaultTol) {
    if (f.size() != space.n) throw std::invalid_argument("is_admissible: length mismatch");
    FunctionCheck out;
    for (int x = 0; x < space.n; ++x)
        for (int y = x; y < space.n; ++y) {
            const double def = space.at(x, y) - (f[x] + f[y]);
            if (def > out.defect) {
                out.defect = def;
                out.i = x;
                out.j = y;
            }
        }
    out.ok = out.defect <= tol;
    if (out.ok) out = FunctionCheck{};
    return out;
}

// Extremal = minimal admissible. On a finite space this is equivalent to
// the attained fixed-point criterion f(p) = max over q of (d(p,q) − f(q))
// for every p (the q = p term makes the clamp at zero automatic): any
// slack at p lets f(p) drop, and tightness pins every coordinate.
inline FunctionCheck is_extremal(const FiniteMetricSpace& space, const PointFunction& f,
                                 double tol = kDefaultTol) {
    const FunctionCheck adm = is_admissible(space, f, tol);
    if (!adm.ok) throw std::invalid_argument("is_extremal: function is not admissible");
    FunctionCheck out;
    for (int p = 0; p < space.n; ++p) {
        double m = -inf();
        for (int q = 0; q < space.n; ++q) m = std::max(m, space.at(p, q) - f[q]);
        const double slack = f[p] - m;
        if (slack > out.defect) {
            out.defect = slack;
            out.i = p;
        }
    }
    out.ok = out.defect <= tol;
    if (out.ok) out = FunctionCheck{};
    return out;
}

// Extremal function below an admissible one, by cyclic
// coordinate descent g(p) ← max(0, max_{q≠p}(d(p,q) − g(q))); each update
// keeps g admissible and never raises a coordinate, and a full ascending
// sweep already lands on a fixed point. Ties in the max go to the
// smallest q, sweeps run until stable.
inline PointFunction extremal_below(const FiniteMetricSpace& space, const PointFunction& f,
                                    double tol = kDefaultTol) {
    const FunctionCheck adm = is_admissible(space, f, tol);
    if (!adm.ok) throw std::invalid_argument("extremal_below: function is not admissible");
    PointFunction g = f;
    for (int sweep = 0; sweep <= space.n; ++sweep) {
        bool changed = false;
        for (int p = 0; p < space.n; ++p) {
            double m = 0.0;
            for (int q = 0; q < space.n; ++q) {
                if (q == p) continue;
                m = std::max(m, space.at(p, q) - g[q]);
            }
            if (m < g[p]) {
                g[p] = m;
                changed = true;
            }
        }
        if (!changed) break;
    }
    return g;
}

// Sup-norm distance in the space of extremal functions (the tight span).
inline double inj_distance(const FiniteMetricSpace& space, const PointFunction& f, const PointFunction& g) {
    if (f.size() != space.n || g.size() != space.n)
        throw std::invalid_argument("inj_distance: length mismatch");
    double m = 0.0;
    for (int p = 0; p < space.n; ++p) m = std::max(m, std::fabs(f[p] - g[p]));
    return m;
}

inline PointFunction kuratowski_image(const FiniteMetricSpace& space, int p) {
    if (p < 0 || p >= space.n) throw std::invalid_argument("kuratowski_image: index out of range");
    std::vector<double> v(space.n);
    for (int x = 0; x < space.n; ++x) v[x] = space.at(p, x);
    return PointFunction(std::move(v));
}

// dist_pivot plus nonnegative per-point bumps, clipped to [0, 2·diam];
// admissible by construction.
inline PointFunction random_admissible_function(const FiniteMetricSpace& space, std::mt19937_64& rng) {
    if (space.n == 0) throw std::invalid_argument("random_admissible_function: empty space");
    const double diam = diameter(space);
    std::uniform_int_distribution<int> pick(0, space.n - 1);
    std::uniform_real_distribution<double> bump(0.0, std::max(diam, 1e-6));
    const int pivot = pick(rng);
    std::vector<double> v(space.n);
    for (int x = 0; x < space.n; ++x) v[x] = std::min(space.at(pivot, x) + bump(rng), 2.0 * diam);
    return PointFunction(std::move(v));
}

// Points of Inj X: the Kuratowski images dist_p first, then extremal_below
// of random admissible functions, deduplicated at tol. May return fewer
// than `count` when the tight span has too few distinguishable points.
inline std::vector<PointFunction> sample_tight_span(const FiniteMetricSpace& space, int count,
                                                    uint64_t seed, double tol = kDefaultTol) {
    if (count < 1) throw std::invalid_argument("sample_tight_span: count must be positive");
    std::mt19937_64 rng(seed);
    std::vector<PointFunction> out;
    auto push_unique = [&](PointFunction f) {
        for (const PointFunction& h : out)
            if (inj_distance(space, f, h) <= tol) return;
        out.push_back(std::move(f));
    };
    for (int p = 0; p < space.n && static_cast<int>(out.size()) < count; ++p)
        push_unique(kuratowski_image(space, p));
    int attempts = 0;
    const int max_attempts = 64 * count;
    while (static_cast<int>(out.size()) < count && attempts++ < max_attempts)
        push_unique(extremal_below(space, random_admissible_function(space, rng), tol));
    return out;
}

// Witness of non-hyperconvexity: an extremal r such that no
// point p satisfies d(p,x) ≤ r(x)+tol for all x. Candidates: extremal
// functions below the pair midpoint profiles ½(dist_x + dist_y) in index
// order, the Kuratowski images, then random samples. Finite spaces with
// two or more points always yield one at tol = 0 because some pair has no
// exact midpoint.
inline std::optional<PointFunction> hyperconvexity_witness(const FiniteMetricSpace& space,
                                                           double tol = kDefaultTol) {
    if (space.n == 0) throw std::invalid_argument("hyperconvexity_witness: empty space");
    auto defeats_all_points = [&](const PointFunction& r) {
        for (int p = 0; p < space.n; ++p) {
            bool covered = true;
            for (int x = 0; x < space.n; ++x)
                if (space.at(p, x) > r[x] + tol) {
                    covered = false;
                    break;
                }
            if (covered) return false;
        }
        return true;
    };
    for (int x = 0; x < space.n; ++x)
        for (int y = x + 1; y < space.n; ++y) {
            std::vector<double> mid(space.n);
            for (int u = 0; u < space.n; ++u) mid[u] = 0.5 * (space.at(x, u) + space.at(y, u));
            PointFunction r = extremal_below(space, PointFunction(std::move(mid)));
            if (defeats_all_points(r)) return r;
        }
    for (int p = 0; p < space.n; ++p) {
        PointFunction r = kuratowski_image(space, p);
        if (defeats_all_points(r)) return r;
    }
    std::mt19937_64 rng(0);
    for (int t = 0; t < 64; ++t) {
        PointFunction r = extremal_below(space, random_admissible_function(space, rng));
        if (defeats_all_points(r)) return r;
    }
    return std::nullopt;
}

} // namespace finmet
