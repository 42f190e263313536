#pragma once

#include "finmet/metric_space.hpp"

namespace finmet {

// distfun_A(x) = min over a ∈ A of d(x,a).
inline PointFunction set_distance_function(const FiniteMetricSpace& space, const SubsetSelection& A) {
    if (A.empty()) throw std::invalid_argument("set_distance_function: empty set");
    A.check_against(space);
    PointFunction f(std::vector<double>(space.n, inf()));
    for (int x = 0; x < space.n; ++x)
        for (int a : A.indices) f[x] = std::min(f[x], space.at(x, a));
    return f;
}

// Hausdorff distance between subsets of a common ambient space:
// sup over ambient points of |distfun_A − distfun_B|.
inline double hausdorff_distance(const FiniteMetricSpace& space, const SubsetSelection& A,
                                 const SubsetSelection& B) {
    const PointFunction fa = set_distance_function(space, A);
    const PointFunction fb = set_distance_function(space, B);
    double h = 0.0;
    for (int x = 0; x < space.n; ++x) h = std::max(h, std::fabs(fa[x] - fb[x]));
    return h;
}

// max over a ∈ A of distfun_B(a): the smallest R putting A inside an
// R-neighborhood of B.
inline double directed_hausdorff(const FiniteMetricSpace& space, const SubsetSelection& A,
                                 const SubsetSelection& B) {
    const PointFunction fb = set_distance_function(space, B);
    if (A.empty()) throw std::invalid_argument("directed_hausdorff: empty set");
    A.check_against(space);
    double h = 0.0;
    for (int a : A.indices) h = std::max(h, fb[a]);
    return h;
}

} // namespace finmet
