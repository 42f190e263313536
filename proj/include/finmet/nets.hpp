#pragma once

#include <random>
#include <string>

#include "finmet/metric_space.hpp"

namespace finmet {

enum class PackingKind { ExactMaximum, GreedyLowerBound };

inline const char* packing_kind_name(PackingKind k) {
    return k == PackingKind::ExactMaximum ? "exact-maximum" : "greedy-lower-bound";
}

// Points pairwise ≥ eps apart, with how the count was obtained.
struct PackingCertificate {
    double eps = 0.0;
    SubsetSelection points;
    PackingKind kind = PackingKind::GreedyLowerBound;
};

struct NetCheck {
    bool ok = true;
    int witness = -1;        // farthest uncovered point when !ok
    double witness_dist = 0.0;
};

// True iff every point lies at strict distance < eps from some member of S.
inline NetCheck is_eps_net(const FiniteMetricSpace& space, const SubsetSelection& S, double eps) {
    if (S.empty()) throw std::invalid_argument("is_eps_net: empty selection");
    if (!(eps > 0)) throw std::invalid_argument("is_eps_net: eps must be positive");
    S.check_against(space);
    NetCheck out;
    double far = -1.0;
    for (int x = 0; x < space.n; ++x) {
        double m = inf();
        for (int s : S.indices) m = std::min(m, space.at(x, s));
        if (m > far) {
            far = m;
            out.witness = x;
            out.witness_dist = m;
        }
    }
    out.ok = far < eps;
    if (out.ok) {
        out.witness = -1;
        out.witness_dist = 0.0;
    }
    return out;
}

// Farthest-point insertion from a seeded start until no point lies ≥ eps
// from every chosen point. The result is a maximal packing, and maximal
// packings are nets.
inline PackingCertificate greedy_packing(const FiniteMetricSpace& space, double eps, uint64_t seed) {
    if (space.n == 0) throw std::invalid_argument("greedy_packing: empty space");
    if (!(eps > 0)) throw std::invalid_argument("greedy_packing: eps must be positive");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, space.n - 1);
    std::vector<int> chosen{pick(rng)};
    std::vector<double> mindist(space.n);
    for (int x = 0; x < space.n; ++x) mindist[x] = space.at(x, chosen[0]);
    for (;;) {
        int far = -1;
        double fd = -1.0;
        for (int x = 0; x < space.n; ++x)
            if (mindist[x] > fd) {
                fd = mindist[x];
                far = x;
            }
        if (fd < eps) break;
        chosen.push_back(far);
        for (int x = 0; x < space.n; ++x) mindist[x] = std::min(mindist[x], space.at(x, far));
    }
    PackingCertificate cert;
    cert.eps = eps;
    cert.points = SubsetSelection(std::move(chosen));
    cert.kind = PackingKind::GreedyLowerBound;
    return cert;
}

namespace detail {

// Maximum independent set in the conflict graph {d < eps}, branch and bound
// with degree ordering.
inline void mis_search(const std::vector<std::vector<int>>& adj, std::vector<int>& order, size_t pos,
                       std::vector<bool>& banned, int current, int& best) {
    if (current + static_cast<int>(order.size() - pos) <= best) return;   // can't improve
    if (pos == order.size()) {
        best = std::max(best, current);
        return;
    }
    // count remaining usable vertices for a tighter bound
    int usable = 0;
    for (size_t t = pos; t < order.size(); ++t)
        if (!banned[order[t]]) ++usable;
    if (current + usable <= best) return;

    const int v = order[pos];
    if (!banned[v]) {
        std::vector<int> flipped;
        for (int w : adj[v])
            if (!banned[w]) {
                banned[w] = true;
                flipped.push_back(w);
            }
        mis_search(adj, order, pos + 1, banned, current + 1, best);
        for (int w : flipped) banned[w] = false;
    }
    mis_search(adj, order, pos + 1, banned, current, best);
}

} // namespace detail

struct PackingNumber {
    int count = 0;
    PackingKind kind = PackingKind::GreedyLowerBound;
};

// pack_ε: largest number of points pairwise ≥ eps apart. Exact for
// n ≤ exact_limit, else the greedy lower bound.
inline PackingNumber packing_number(const FiniteMetricSpace& space, double eps, int exact_limit = 20) {
    if (space.n == 0) throw std::invalid_argument("packing_number: empty space");
    if (!(eps > 0)) throw std::invalid_argument("packing_number: eps must be positive");
    if (space.n > exact_limit) {
        PackingCertificate c = greedy_packing(space, eps, 0);
        return {c.points.size(), PackingKind::GreedyLowerBound};
    }
    const int n = space.n;
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && space.at(i, j) < eps) adj[i].push_back(j);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (adj[a].size() != adj[b].size()) return adj[a].size() < adj[b].size();
        return a < b;
    });
    std::vector<bool> banned(n, false);
    int best = 0;
    detail::mis_search(adj, order, 0, banned, 0, best);
    return {best, PackingKind::ExactMaximum};
}

struct DoublingReport {
    double constant = 1.0;   // sup over centers and radii of w(B(p,2r)) / w(B(p,r))
    int center = -1;
    double radius = 0.0;
};

// Doubling-measure scan: supremum of the open-ball weight ratio
// w(B(p,2r))/w(B(p,r)) over all centers p and all radii where either ball
// changes membership.
inline DoublingReport doubling_report(const FiniteMetricSpace& space, const std::vector<double>& weights) {
    if (space.n == 0) throw std::invalid_argument("doubling_report: empty space");
    if (weights.size() != static_cast<size_t>(space.n))
        throw std::invalid_argument("doubling_report: weight count mismatch");
    double total = 0.0;
    for (double w : weights) {
        if (w < 0 || std::isnan(w)) throw std::invalid_argument("doubling_report: weights must be nonnegative");
        total += w;
    }
    if (!(total > 0)) throw std::invalid_argument("doubling_report: all weights are zero");

    DoublingReport rep;
    rep.center = 0;
    for (int p = 0; p < space.n; ++p) {
        // breakpoints of r ↦ (B(p,r), B(p,2r)): distances and half-distances
        std::vector<double> brk{0.0};
        for (int x = 0; x < space.n; ++x) {
            const double dx = space.at(p, x);
            if (std::isinf(dx)) continue;
            brk.push_back(dx);
            brk.push_back(dx / 2.0);
        }
        std::sort(brk.begin(), brk.end());
        brk.erase(std::unique(brk.begin(), brk.end()), brk.end());
        std::vector<double> radii;
        for (size_t t = 0; t + 1 < brk.size(); ++t) radii.push_back(0.5 * (brk[t] + brk[t + 1]));
        radii.push_back(brk.back() + 1.0);
        for (double r : radii) {
            double wr = 0.0, w2r = 0.0;
            for (int x = 0; x < space.n; ++x) {
                const double dx = space.at(p, x);
                if (dx < r) wr += weights[x];
                if (dx < 2.0 * r) w2r += weights[x];
            }
            double ratio;
            if (wr > 0) ratio = w2r / wr;
            else if (w2r > 0) ratio = inf();   // no finite doubling constant
            else continue;
            if (ratio > rep.constant) {
                rep.constant = ratio;
                rep.center = p;
                rep.radius = r;
            }
        }
    }
    return rep;
}

} // namespace finmet
