#pragma once

#include <random>

#include "finmet/metric_space.hpp"

namespace finmet {

// Distance profile of a prospective new point over a subset F: values with
// |f(a)−f(b)| ≤ d(a,b) ≤ f(a)+f(b), 0 < f ≤ d_cap. Exactly the profiles a
// one-point extension with diameter cap can realize.
struct ExtensionCheck {
    bool ok = true;
    std::string reason;
};

inline ExtensionCheck check_extension_function(const FiniteMetricSpace& space, const SubsetSelection& F,
                                               const std::vector<double>& f, double d_cap,
                                               double tol = kDefaultTol) {
    F.check_against(space);
    if (F.empty()) return {false, "empty subset"};
    if (f.size() != F.indices.size()) return {false, "value count mismatch"};
    for (size_t a = 0; a < f.size(); ++a) {
        if (!(f[a] > 0)) return {false, "values must be positive"};
        if (f[a] > d_cap + tol) return {false, "value exceeds cap"};
    }
    for (size_t a = 0; a < f.size(); ++a)
        for (size_t b = a + 1; b < f.size(); ++b) {
            const double dab = space.at(F.indices[a], F.indices[b]);
            if (f[a] + f[b] < dab - tol) return {false, "pair sum below distance"};
            if (std::fabs(f[a] - f[b]) > dab + tol) return {false, "not 1-Lipschitz"};
        }
    return {};
}

namespace detail {

inline double subset_diameter(const FiniteMetricSpace& space, const SubsetSelection& F) {
    double m = 0.0;
    for (size_t a = 0; a < F.indices.size(); ++a)
        for (size_t b = a + 1; b < F.indices.size(); ++b)
            m = std::max(m, space.at(F.indices[a], F.indices[b]));
    return m;
}

} // namespace detail

// Draws a random extension function on F with cap d_cap. When
// d_cap ≥ diam F the draw is pivot-based: f(a) = d(a, pivot) + shift,
// clipped once to the cap (one clip pass is already feasible). For
// ½·diam F ≤ d_cap < diam F the pivot profile can break the pair sums, so
// the values are drawn sequentially from their exact feasible intervals,
// with lower bounds that reserve room for the cap on the points not yet
// drawn. Caps below ½·diam F are infeasible.
inline std::vector<double> random_extension_function(const FiniteMetricSpace& space,
                                                     const SubsetSelection& F, double d_cap,
                                                     std::mt19937_64& rng, double tol = kDefaultTol) {
    F.check_against(space);
    if (F.empty()) throw std::invalid_argument("random_extension_function: empty subset");
    if (!(d_cap > 0)) throw std::invalid_argument("random_extension_function: cap must be positive");
    const double diam_f = detail::subset_diameter(space, F);
    if (d_cap < 0.5 * diam_f - tol)
        throw std::invalid_argument("random_extension_function: cap below half the subset diameter");
    const size_t k = F.indices.size();
    std::vector<double> f(k);

    if (d_cap >= diam_f) {
        std::uniform_int_distribution<int> pick(0, static_cast<int>(k) - 1);
        const int pivot = F.indices[pick(rng)];
        // shift range for capped draws is d_cap/12, calibrated so that a
        // 500-step unit-cap growth realizes ≥ 90% of its own draws at
        // tolerance 0.05
        const double shift_hi = std::isinf(d_cap) ? std::max(1.0, diam_f) : d_cap / 12.0;
        std::uniform_real_distribution<double> sh(0.0, shift_hi);
        const double shift = std::max(sh(rng), 1e-12);
        for (size_t a = 0; a < k; ++a)
            f[a] = std::min(space.at(F.indices[a], pivot) + shift, d_cap);
        return f;
    }

    for (size_t a = 0; a < k; ++a) {
        double lo = 1e-12, hi = d_cap;
        for (size_t j = 0; j < a; ++j) {
            const double daj = space.at(F.indices[a], F.indices[j]);
            lo = std::max(lo, daj - f[j]);
            lo = std::max(lo, f[j] - daj);
            hi = std::min(hi, f[j] + daj);
        }
        for (size_t m = a + 1; m < k; ++m)
            lo = std::max(lo, space.at(F.indices[a], F.indices[m]) - d_cap);
        if (lo > hi) throw std::logic_error("random_extension_function: empty feasible interval");
        std::uniform_real_distribution<double> u(lo, hi);
        f[a] = u(rng);
    }
    return f;
}

struct HistoryEntry {
    std::vector<int> subset;
    std::vector<double> values;
};

// An expanding space plus the provenance of each added point. The space
// passes validation at every step by construction; d(new, a) = f(a)
// exactly on the chosen subset.
struct GrowthState {
    FiniteMetricSpace space;
    double d_cap = inf();
    std::vector<HistoryEntry> history;
    std::mt19937_64 rng;
};

inline GrowthState make_growth_state(double d_cap, uint64_t seed) {
    if (!(d_cap > 0)) throw std::invalid_argument("make_growth_state: cap must be positive");
    GrowthState st;
    st.space = FiniteMetricSpace(1, {0.0});
    st.d_cap = d_cap;
    st.rng.seed(seed);
    return st;
}

// One-point extension: d(p,a) = f(a) on F and the min-sum formula
// d(p,x) = min(d_cap, min over a∈F of f(a) + d(a,x)) elsewhere. Every new
// triangle involves p, so those are checked exhaustively at 1e-12.
inline void grow(GrowthState& state, const SubsetSelection& F, const std::vector<double>& f) {
    const ExtensionCheck chk = check_extension_function(state.space, F, f, state.d_cap);
    if (!chk.ok) throw std::invalid_argument("grow: invalid extension function: " + chk.reason);
    const int n = state.space.n;
    std::vector<double> row(n, inf());
    for (size_t a = 0; a < F.indices.size(); ++a) row[F.indices[a]] = f[a];
    for (int x = 0; x < n; ++x) {
        if (!std::isinf(row[x])) continue;
        double v = state.d_cap;
        for (size_t a = 0; a < F.indices.size(); ++a)
            v = std::min(v, f[a] + state.space.at(F.indices[a], x));
        row[x] = v;
    }
    for (int x = 0; x < n; ++x) {
        if (row[x] > state.d_cap + 1e-12) throw std::logic_error("grow: cap violated");
        for (int y = x + 1; y < n; ++y) {
            const double dxy = state.space.at(x, y);
            if (std::fabs(row[x] - row[y]) > dxy + 1e-12 || row[x] + row[y] < dxy - 1e-12)
                throw std::logic_error("grow: extended metric violates a triangle");
        }
    }

    const int total = n + 1;
    std::vector<double> d(static_cast<size_t>(total) * total, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d[static_cast<size_t>(i) * total + j] = state.space.at(i, j);
    for (int x = 0; x < n; ++x) {
        d[static_cast<size_t>(x) * total + n] = row[x];
        d[static_cast<size_t>(n) * total + x] = row[x];
    }
    state.space = FiniteMetricSpace(total, std::move(d));
    state.history.push_back({F.indices, f});
}

// Subset draw shared by growth and the extension-property sampler: half
// the draws are singletons (dense spokes make pivot profiles realizable
// later), the rest have size uniform on 1..min(6,n).
inline SubsetSelection draw_random_subset(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> szpick(1, std::min(6, n));
    const int size = coin(rng) < 0.5 ? 1 : szpick(rng);
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    for (int i = 0; i < size; ++i) {
        std::uniform_int_distribution<int> jpick(i, n - 1);
        std::swap(all[i], all[jpick(rng)]);
    }
    return SubsetSelection(std::vector<int>(all.begin(), all.begin() + size));
}

inline void grow_random_step(GrowthState& state) {
    SubsetSelection F = draw_random_subset(state.rng, state.space.n);
    const std::vector<double> f = random_extension_function(state.space, F, state.d_cap, state.rng);
    grow(state, F, f);
}

// min over existing points p of max over a ∈ F of |d(p,a) − f(a)|: how
// well the space already realizes the profile.
inline double realization_defect(const FiniteMetricSpace& space, const SubsetSelection& F,
                                 const std::vector<double>& f) {
    F.check_against(space);
    if (F.empty() || f.size() != F.indices.size())
        throw std::invalid_argument("realization_defect: bad subset or values");
    double best = inf();
    for (int p = 0; p < space.n; ++p) {
        double worst = 0.0;
        for (size_t a = 0; a < F.indices.size(); ++a)
            worst = std::max(worst, std::fabs(space.at(p, F.indices[a]) - f[a]));
        best = std::min(best, worst);
    }
    return best;
}

struct ExtensionStats {
    double success_rate = 0.0;
    double worst_defect = 0.0;
};

// Samples random (F, f) pairs and reports how often some existing point
// realizes f within tol (the extension property, at tolerance).
inline ExtensionStats extension_property_stats(const FiniteMetricSpace& space, double d_cap, int trials,
                                               double tol, uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("extension_property_stats: trials must be positive");
    std::mt19937_64 rng(seed);
    int successes = 0;
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        const SubsetSelection F = draw_random_subset(rng, space.n);
        const std::vector<double> f = random_extension_function(space, F, d_cap, rng);
        const double defect = realization_defect(space, F, f);
        if (defect <= tol) ++successes;
        worst = std::max(worst, defect);
    }
    return {static_cast<double>(successes) / trials, worst};
}

// Injective-both-ways index pairing with its worst pairwise distance
// mismatch.
struct PartialIsometry {
    std::vector<std::pair<int, int>> pairs;
    double max_defect = 0.0;
};

inline double pairing_defect(const FiniteMetricSpace& X, const FiniteMetricSpace& Y,
                             const std::vector<std::pair<int, int>>& pairs) {
    double m = 0.0;
    for (size_t a = 0; a < pairs.size(); ++a)
        for (size_t b = a + 1; b < pairs.size(); ++b)
            m = std::max(m, std::fabs(X.at(pairs[a].first, pairs[b].first) -
                                      Y.at(pairs[a].second, pairs[b].second)));
    return m;
}

// Greedy finite surrogate of the back-and-forth construction: odd steps
// match the smallest unmatched point of X, even steps
// of Y, each to the partner minimizing the resulting max defect (smallest
// index on ties).
inline PartialIsometry back_and_forth(const FiniteMetricSpace& X, const FiniteMetricSpace& Y,
                                      const PartialIsometry& start, int steps) {
    if (steps < 0) throw std::invalid_argument("back_and_forth: steps must be nonnegative");
    std::vector<bool> used_x(X.n, false), used_y(Y.n, false);
    for (auto [i, j] : start.pairs) {
        if (i < 0 || i >= X.n || j < 0 || j >= Y.n || used_x[i] || used_y[j])
            throw std::invalid_argument("back_and_forth: start pairing not injective");
        used_x[i] = used_y[j] = true;
    }
    PartialIsometry cur = start;
    cur.max_defect = pairing_defect(X, Y, cur.pairs);

    auto first_free = [](const std::vector<bool>& used) {
        for (size_t i = 0; i < used.size(); ++i)
            if (!used[i]) return static_cast<int>(i);
        return -1;
    };

    for (int s = 1; s <= steps; ++s) {
        const bool from_x = (s % 2 == 1);
        int src = first_free(from_x ? used_x : used_y);
        bool flipped = false;
        if (src == -1) {
            src = first_free(from_x ? used_y : used_x);
            flipped = true;
            if (src == -1) break;
        }
        const bool side_x = flipped ? !from_x : from_x;
        const FiniteMetricSpace& A = side_x ? X : Y;
        const FiniteMetricSpace& B = side_x ? Y : X;
        const std::vector<bool>& used_b = side_x ? used_y : used_x;
        int best_t = -1;
        double best_d = inf();
        for (int t = 0; t < B.n; ++t) {
            if (used_b[t]) continue;
            double d = cur.max_defect;
            for (auto [i, j] : cur.pairs) {
                const int ia = side_x ? i : j;
                const int jb = side_x ? j : i;
                d = std::max(d, std::fabs(A.at(src, ia) - B.at(t, jb)));
            }
            if (d < best_d) {
                best_d = d;
                best_t = t;
            }
        }
        if (best_t == -1) break;
        if (side_x) {
            cur.pairs.push_back({src, best_t});
            used_x[src] = used_y[best_t] = true;
        } else {
            cur.pairs.push_back({best_t, src});
            used_y[src] = used_x[best_t] = true;
        }
        cur.max_defect = std::max(cur.max_defect, best_d);
    }
    return cur;
}

} // namespace finmet
