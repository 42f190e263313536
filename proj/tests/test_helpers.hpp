#pragma once

#include <vector>

#include "finmet/gromov_hausdorff.hpp"
#include "finmet/metric_space.hpp"

namespace testutil {

using finmet::FiniteMetricSpace;

inline FiniteMetricSpace from_rows(const std::vector<std::vector<double>>& rows) {
    return FiniteMetricSpace::from_rows(rows);
}

inline FiniteMetricSpace equilateral(int n, double side) {
    std::vector<double> d(static_cast<size_t>(n) * n, side);
    for (int i = 0; i < n; ++i) d[static_cast<size_t>(i) * n + i] = 0.0;
    return FiniteMetricSpace(n, std::move(d));
}

inline FiniteMetricSpace collinear(const std::vector<double>& coords) {
    const int n = static_cast<int>(coords.size());
    std::vector<double> d(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d[static_cast<size_t>(i) * n + j] = std::fabs(coords[i] - coords[j]);
    return FiniteMetricSpace(n, std::move(d));
}

// star with `leaves` unit edges from a hub; hub is index 0
inline FiniteMetricSpace star_tree(int leaves, double edge = 1.0) {
    const int n = leaves + 1;
    std::vector<double> d(static_cast<size_t>(n) * n, 2.0 * edge);
    for (int i = 0; i < n; ++i) d[static_cast<size_t>(i) * n + i] = 0.0;
    for (int i = 1; i < n; ++i) {
        d[static_cast<size_t>(0) * n + i] = edge;
        d[static_cast<size_t>(i) * n + 0] = edge;
    }
    return FiniteMetricSpace(n, std::move(d));
}

inline FiniteMetricSpace permute(const FiniteMetricSpace& s, const std::vector<int>& perm) {
    std::vector<double> d(static_cast<size_t>(s.n) * s.n, 0.0);
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.n; ++j) d[static_cast<size_t>(perm[i]) * s.n + perm[j]] = s.at(i, j);
    return FiniteMetricSpace(s.n, std::move(d));
}

// exhaustive minimum over every correspondence (subsets of X×Y total on
// both sides); usable for n·m ≤ ~16
inline double gh_bruteforce(const FiniteMetricSpace& X, const FiniteMetricSpace& Y) {
    const int n = X.n, m = Y.n, nm = n * m;
    double best = finmet::inf();
    for (unsigned mask = 1; mask < (1u << nm); ++mask) {
        finmet::Correspondence R;
        for (int b = 0; b < nm; ++b)
            if (mask >> b & 1) R.pairs.push_back({b / m, b % m});
        if (!R.total(n, m)) continue;
        best = std::min(best, finmet::distortion(X, Y, R));
    }
    return best / 2.0;
}

// the 4-point space of the square example: d(p,q) = d(x,y) = 2, all other
// pairs 1; order (p, q, x, y)
inline FiniteMetricSpace four_point_square() {
    return from_rows({{0, 2, 1, 1}, {2, 0, 1, 1}, {1, 1, 0, 2}, {1, 1, 2, 0}});
}

} // namespace testutil
