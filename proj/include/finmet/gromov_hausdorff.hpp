#pragma once

#include <cstdint>
#include <utility>

#include "finmet/hausdorff.hpp"
#include "finmet/metric_space.hpp"

namespace finmet {

// Relation between point indices of two spaces, total on both sides. An
// ε-approximation is a correspondence with distortion below 2ε.
struct Correspondence {
    std::vector<std::pair<int, int>> pairs;

    bool total(int nx, int ny) const {
        std::vector<bool> sx(nx, false), sy(ny, false);
        for (auto [i, j] : pairs) {
            if (i < 0 || i >= nx || j < 0 || j >= ny) return false;
            sx[i] = sy[j] = true;
        }
        for (bool b : sx)
            if (!b) return false;
        for (bool b : sy)
            if (!b) return false;
        return true;
    }
};

// max over related pairs (x≈y, x'≈y') of |d_X(x,x') − d_Y(y,y')|.
inline double distortion(const FiniteMetricSpace& X, const FiniteMetricSpace& Y, const Correspondence& R) {
    if (!R.total(X.n, Y.n)) throw std::invalid_argument("distortion: correspondence not total");
    double m = 0.0;
    for (size_t a = 0; a < R.pairs.size(); ++a)
        for (size_t b = a; b < R.pairs.size(); ++b)
            m = std::max(m, std::fabs(X.at(R.pairs[a].first, R.pairs[b].first) -
                                      Y.at(R.pairs[a].second, R.pairs[b].second)));
    return m;
}

struct GhResult {
    double value = 0.0;          // ½ × distortion of `optimal` when exact
    Correspondence optimal;
    int64_t nodes_explored = 0;
    bool exact = false;
};

namespace detail {

// Search state for the correspondence branch and bound. Every minimal
// correspondence is a union graph(f) ∪ graph(g)ᵀ for maps f: X→Y and
// g: Y→X, so the search assigns one target per slot, slots being the
// points of X then the points of Y, each space ordered by decreasing
// eccentricity. Pruning: ½ × partial distortion never decreases when a
// pair is inserted.
struct GhSearch {
    const FiniteMetricSpace& X;
    const FiniteMetricSpace& Y;
    int64_t budget;
    int64_t nodes = 0;
    double best = inf();
    std::vector<std::pair<int, int>> best_pairs;
    std::vector<std::pair<int, int>> assigned;
    std::vector<int> slot_x, slot_y;   // visit order per side
    bool x_first = true;
    bool exhausted_budget = false;

    GhSearch(const FiniteMetricSpace& x, const FiniteMetricSpace& y, int64_t b) : X(x), Y(y), budget(b) {
        slot_x = eccentricity_order(X);
        slot_y = eccentricity_order(Y);
        x_first = X.n >= Y.n;
    }

    static std::vector<int> eccentricity_order(const FiniteMetricSpace& S) {
        std::vector<double> ecc(S.n, 0.0);
        for (int i = 0; i < S.n; ++i)
            for (int j = 0; j < S.n; ++j) ecc[i] = std::max(ecc[i], S.at(i, j));
        std::vector<int> order(S.n);
        for (int i = 0; i < S.n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (ecc[a] != ecc[b]) return ecc[a] > ecc[b];
            return a < b;
        });
        return order;
    }

    std::pair<int, int> slot_pair(int slot, int choice) const {
        const int first_count = x_first ? X.n : Y.n;
        if (slot < first_count) {
            const int p = x_first ? slot_x[slot] : slot_y[slot];
            return x_first ? std::make_pair(p, choice) : std::make_pair(choice, p);
        }
        const int p = x_first ? slot_y[slot - first_count] : slot_x[slot - first_count];
        return x_first ? std::make_pair(choice, p) : std::make_pair(p, choice);
    }

    int choice_count(int slot) const {
        const int first_count = x_first ? X.n : Y.n;
        return slot < first_count ? (x_first ? Y.n : X.n) : (x_first ? X.n : Y.n);
    }

    double insert_cost(const std::pair<int, int>& pr, double partial) const {
        double m = partial;
        for (const auto& q : assigned)
            m = std::max(m, std::fabs(X.at(pr.first, q.first) - Y.at(pr.second, q.second)));
        return m;
    }

    void run() {
        descend(0, 0.0);
    }

    void descend(int slot, double partial) {
        if (++nodes > budget) {
            exhausted_budget = true;
            return;
        }
        if (0.5 * partial >= best) return;
        if (slot == X.n + Y.n) {
            best = 0.5 * partial;
            best_pairs = assigned;
            return;
        }
        const int cnt = choice_count(slot);
        // try targets in order of incremental cost so the first full
        // descent is greedy and produces an upper bound early
        std::vector<std::pair<double, int>> ranked(cnt);
        for (int c = 0; c < cnt; ++c) ranked[c] = {insert_cost(slot_pair(slot, c), partial), c};
        std::sort(ranked.begin(), ranked.end());
        for (const auto& [cost, c] : ranked) {
            if (exhausted_budget) return;
            if (0.5 * cost >= best) break;
            assigned.push_back(slot_pair(slot, c));
            descend(slot + 1, cost);
            assigned.pop_back();
        }
    }
};

} // namespace detail

// Exact Gromov–Hausdorff distance of finite spaces: the attained minimum
// of ½ × distortion over all correspondences, found by branch and bound.
// If the node budget runs out, the best value
// found so far is returned with exact = false.
inline GhResult gh_exact(const FiniteMetricSpace& X, const FiniteMetricSpace& Y,
                         int64_t budget = 50'000'000) {
    if (X.n == 0 || Y.n == 0) throw std::invalid_argument("gh_exact: empty space");
    if (budget <= 0) throw std::invalid_argument("gh_exact: budget must be positive");
    detail::GhSearch search(X, Y, budget);
    search.run();
    GhResult out;
    out.nodes_explored = search.nodes;
    out.exact = !search.exhausted_budget;
    out.value = search.best;
    out.optimal.pairs = search.best_pairs;
    std::sort(out.optimal.pairs.begin(), out.optimal.pairs.end());
    out.optimal.pairs.erase(std::unique(out.optimal.pairs.begin(), out.optimal.pairs.end()),
                            out.optimal.pairs.end());
    return out;
}

namespace detail {

inline double value_set_gap(const std::vector<double>& a, const std::vector<double>& b) {
    double h = 0.0;
    for (double x : a) {
        double m = inf();
        for (double y : b) m = std::min(m, std::fabs(x - y));
        h = std::max(h, m);
    }
    for (double y : b) {
        double m = inf();
        for (double x : a) m = std::min(m, std::fabs(x - y));
        h = std::max(h, m);
    }
    return h;
}

} // namespace detail

// Certified lower bound for gh_exact. Components, each justified by the
// distortion definition (every pair of one space has a partner pair within
// the distortion, and likewise for eccentricities via their maximizers):
//   · ½ |diam X − diam Y|
//   · ½ × gap between the realized distance value sets (0 included)
//   · ½ × gap between the eccentricity value sets
// where "gap" is the Hausdorff distance between finite subsets of ℝ.
inline double gh_lower_bound(const FiniteMetricSpace& X, const FiniteMetricSpace& Y) {
    if (X.n == 0 || Y.n == 0) throw std::invalid_argument("gh_lower_bound: empty space");
    double bound = 0.5 * std::fabs(diameter(X) - diameter(Y));

    std::vector<double> dx{0.0}, dy{0.0};
    for (int i = 0; i < X.n; ++i)
        for (int j = i + 1; j < X.n; ++j) dx.push_back(X.at(i, j));
    for (int i = 0; i < Y.n; ++i)
        for (int j = i + 1; j < Y.n; ++j) dy.push_back(Y.at(i, j));
    bound = std::max(bound, 0.5 * detail::value_set_gap(dx, dy));

    std::vector<double> ex(X.n, 0.0), ey(Y.n, 0.0);
    for (int i = 0; i < X.n; ++i)
        for (int j = 0; j < X.n; ++j) ex[i] = std::max(ex[i], X.at(i, j));
    for (int i = 0; i < Y.n; ++i)
        for (int j = 0; j < Y.n; ++j) ey[i] = std::max(ey[i], Y.at(i, j));
    bound = std::max(bound, 0.5 * detail::value_set_gap(ex, ey));
    return bound;
}

// ε-isometry-style upper estimate from a map f: X→Y:
// ε = max(metric distortion of f, net radius of f(X) in Y).
inline double gh_upper_from_map(const FiniteMetricSpace& X, const FiniteMetricSpace& Y,
                                const std::vector<int>& f) {
    if (f.size() != static_cast<size_t>(X.n)) throw std::invalid_argument("gh_upper_from_map: map not total on X");
    for (int v : f)
        if (v < 0 || v >= Y.n) throw std::invalid_argument("gh_upper_from_map: target out of range");
    double dis = 0.0;
    for (int a = 0; a < X.n; ++a)
        for (int b = a + 1; b < X.n; ++b) dis = std::max(dis, std::fabs(X.at(a, b) - Y.at(f[a], f[b])));
    double net = 0.0;
    for (int y = 0; y < Y.n; ++y) {
        double m = inf();
        for (int a = 0; a < X.n; ++a) m = std::min(m, Y.at(f[a], y));
        net = std::max(net, m);
    }
    return std::max(dis, net);
}

struct GluedSpace {
    FiniteMetricSpace space;       // X copy at 0..n−1, Y copy at n..n+m−1
    std::vector<int> x_indices;
    std::vector<int> y_indices;
    double delta = 0.0;            // inter-copy link length, max(½·distortion, 1e-12)
};

// Explicit common-ambient witness: the two spaces glued along R with
// cross distances
//   d(x,y) = min over (x',y') ∈ R of d_X(x,x') + δ + d_Y(y',y)
// with δ = max(½·distortion(R), 1e-12). The result is a genuine metric
// whose inter-copy Hausdorff distance is at most δ.
inline GluedSpace glue_along(const FiniteMetricSpace& X, const FiniteMetricSpace& Y,
                             const Correspondence& R) {
    const double dis = distortion(X, Y, R);   // also checks totality
    const double delta = std::max(0.5 * dis, 1e-12);
    const int n = X.n, m = Y.n, total = n + m;
    std::vector<double> d(static_cast<size_t>(total) * total, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d[static_cast<size_t>(i) * total + j] = X.at(i, j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) d[static_cast<size_t>(n + i) * total + (n + j)] = Y.at(i, j);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < m; ++y) {
            double v = inf();
            for (auto [xp, yp] : R.pairs) v = std::min(v, X.at(x, xp) + delta + Y.at(yp, y));
            d[static_cast<size_t>(x) * total + (n + y)] = v;
            d[static_cast<size_t>(n + y) * total + x] = v;
        }
    GluedSpace out;
    out.space = FiniteMetricSpace(total, std::move(d));
    out.delta = delta;
    for (int i = 0; i < n; ++i) out.x_indices.push_back(i);
    for (int j = 0; j < m; ++j) out.y_indices.push_back(n + j);
    const ValidationReport rep = validate(out.space, 1e-12, false, 0);
    if (!rep.ok) throw std::logic_error("glue_along: glued space failed validation");
    return out;
}

struct GhPrimeResult {
    double value = 0.0;
    bool exact = false;
};

namespace detail {

// min over maps f: A→B of max over pairs of (d_A(a,a') − d_B(f a, f a'))+,
// by exhaustive scan with pruning.
inline void gh_prime_scan(const FiniteMetricSpace& A, const FiniteMetricSpace& B, std::vector<int>& f,
                          int depth, double partial, double& best, int64_t& nodes, int64_t budget,
                          bool& exhausted) {
    if (++nodes > budget) {
        exhausted = true;
        return;
    }
    if (partial >= best) return;
    if (depth == A.n) {
        best = partial;
        return;
    }
    for (int target = 0; target < B.n; ++target) {
        if (exhausted) return;
        double p = partial;
        for (int prev = 0; prev < depth; ++prev)
            p = std::max(p, A.at(depth, prev) - B.at(target, f[prev]));
        if (p >= best) continue;
        f[depth] = target;
        gh_prime_scan(A, B, f, depth + 1, p, best, nodes, budget, exhausted);
    }
}

inline double gh_prime_directed(const FiniteMetricSpace& A, const FiniteMetricSpace& B, int64_t& nodes,
                                int64_t budget, bool& exhausted) {
    std::vector<int> f(A.n, 0);
    double best = inf();
    gh_prime_scan(A, B, f, 0, 0.0, best, nodes, budget, exhausted);
    return std::max(best, 0.0);
}

} // namespace detail

// GH′ variant: the least ε with X ≤ Y + ε and Y ≤ X + ε, where
// X ≤ Y + ε means some f: X→Y satisfies d_X(x,x') ≤ d_Y(f x, f x') + ε for
// all pairs. Attained minimum over the finite function space.
inline GhPrimeResult gh_prime(const FiniteMetricSpace& X, const FiniteMetricSpace& Y,
                              int64_t budget = 50'000'000) {
    if (X.n == 0 || Y.n == 0) throw std::invalid_argument("gh_prime: empty space");
    if (budget <= 0) throw std::invalid_argument("gh_prime: budget must be positive");
    int64_t nodes = 0;
    bool exhausted = false;
    const double exy = detail::gh_prime_directed(X, Y, nodes, budget, exhausted);
    const double eyx = detail::gh_prime_directed(Y, X, nodes, budget, exhausted);
    return {std::max(exy, eyx), !exhausted};
}

} // namespace finmet
