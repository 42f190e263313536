#pragma once

#include <random>

#include "finmet/metric_space.hpp"

namespace finmet {

using Rng = std::mt19937_64;

// Euclidean distances of random points in a [0,scale]^dim box.
inline FiniteMetricSpace random_point_cloud_metric(int n, Rng& rng, int dim = 3, double scale = 2.0) {
    if (n <= 0) throw std::invalid_argument("random_point_cloud_metric: n must be positive");
    std::uniform_real_distribution<double> u(0.0, scale);
    std::vector<std::vector<double>> pts(n, std::vector<double>(dim));
    for (auto& p : pts)
        for (double& c : p) c = u(rng);
    std::vector<double> d(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double s = 0;
            for (int k = 0; k < dim; ++k) s += (pts[i][k] - pts[j][k]) * (pts[i][k] - pts[j][k]);
            d[static_cast<size_t>(i) * n + j] = d[static_cast<size_t>(j) * n + i] = std::sqrt(s);
        }
    return FiniteMetricSpace(n, std::move(d));
}

// Shortest-path closure of a random symmetric weight matrix. Produces
// generic metrics whose triangle inequalities are often nearly tight.
inline FiniteMetricSpace random_generic_metric(int n, Rng& rng, double lo = 0.5, double hi = 3.0) {
    if (n <= 0) throw std::invalid_argument("random_generic_metric: n must be positive");
    std::uniform_real_distribution<double> w(lo, hi);
    std::vector<double> d(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) d[static_cast<size_t>(i) * n + j] = d[static_cast<size_t>(j) * n + i] = w(rng);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const double via = d[static_cast<size_t>(i) * n + k] + d[static_cast<size_t>(k) * n + j];
                if (via < d[static_cast<size_t>(i) * n + j]) d[static_cast<size_t>(i) * n + j] = via;
            }
    return FiniteMetricSpace(n, std::move(d));
}

struct WeightedTree {
    // parent[0] = -1; edge i–parent[i] has weight[i] for i ≥ 1
    std::vector<int> parent;
    std::vector<double> weight;
    std::vector<int> leaves;
};

inline WeightedTree random_weighted_tree(int nodes, Rng& rng, double wlo = 0.1, double whi = 2.0) {
    if (nodes < 2) throw std::invalid_argument("random_weighted_tree: need at least 2 nodes");
    WeightedTree t;
    t.parent.assign(nodes, -1);
    t.weight.assign(nodes, 0.0);
    std::uniform_real_distribution<double> w(wlo, whi);
    for (int i = 1; i < nodes; ++i) {
        std::uniform_int_distribution<int> pick(0, i - 1);
        t.parent[i] = pick(rng);
        t.weight[i] = w(rng);
    }
    std::vector<bool> has_child(nodes, false);
    for (int i = 1; i < nodes; ++i) has_child[t.parent[i]] = true;
    for (int i = 0; i < nodes; ++i)
        if (!has_child[i]) t.leaves.push_back(i);
    return t;
}

inline FiniteMetricSpace tree_path_metric(const WeightedTree& t, const std::vector<int>& points) {
    const int nodes = static_cast<int>(t.parent.size());
    // d(a,b) = depth(a) + depth(b) - 2·depth(lca); parent chains suffice at this scale
    std::vector<double> depth(nodes, 0.0);
    for (int i = 1; i < nodes; ++i) depth[i] = depth[t.parent[i]] + t.weight[i];
    auto dist = [&](int a, int b) {
        double da = depth[a], db = depth[b];
        int x = a, y = b;
        while (x != y) {
            if (depth[x] >= depth[y]) x = t.parent[x];
            else y = t.parent[y];
        }
        return da + db - 2 * depth[x];
    };
    const int k = static_cast<int>(points.size());
    std::vector<double> d(static_cast<size_t>(k) * k, 0.0);
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            d[static_cast<size_t>(a) * k + b] = d[static_cast<size_t>(b) * k + a] = dist(points[a], points[b]);
    return FiniteMetricSpace(k, std::move(d));
}

// Path metric on the leaves of a random positively weighted tree.
inline FiniteMetricSpace random_tree_metric(int target_leaves, Rng& rng) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        WeightedTree t = random_weighted_tree(std::max(2, 2 * target_leaves), rng);
        if (static_cast<int>(t.leaves.size()) >= target_leaves) {
            std::vector<int> pts(t.leaves.begin(), t.leaves.begin() + target_leaves);
            return tree_path_metric(t, pts);
        }
    }
    throw std::runtime_error("random_tree_metric: could not reach leaf target");
}

// Ultrametric from a random dendrogram: d(x,y) = merge height of the
// lowest cluster containing both.
inline FiniteMetricSpace random_hierarchy_ultrametric(int n, Rng& rng, double root_height = 2.0) {
    if (n <= 0) throw std::invalid_argument("random_hierarchy_ultrametric: n must be positive");
    std::vector<double> d(static_cast<size_t>(n) * n, 0.0);
    std::uniform_real_distribution<double> shrink(0.3, 0.9);
    struct Item { int lo, hi; double h; };
    std::vector<Item> stack;
    if (n > 1) stack.push_back({0, n, root_height});
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        const int size = it.hi - it.lo;
        if (size < 2) continue;
        std::uniform_int_distribution<int> cutpick(it.lo + 1, it.hi - 1);
        const int cut = cutpick(rng);
        for (int i = it.lo; i < cut; ++i)
            for (int j = cut; j < it.hi; ++j)
                d[static_cast<size_t>(i) * n + j] = d[static_cast<size_t>(j) * n + i] = it.h;
        const double h1 = it.h * shrink(rng), h2 = it.h * shrink(rng);
        stack.push_back({it.lo, cut, h1});
        stack.push_back({cut, it.hi, h2});
    }
    return FiniteMetricSpace(n, std::move(d));
}

} // namespace finmet
