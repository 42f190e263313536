#pragma once

#include <array>

#include "finmet/metric_space.hpp"

namespace finmet {

// Magnitude of the worst violation of a tested condition; 0 means the
// condition holds exactly on every tuple. Witness is the lexicographically
// smallest maximizer.
struct DefectWitness {
    double value = 0.0;
    std::array<int, 4> witness{-1, -1, -1, -1};
};

// Gromov-product legs: a_x = ½(d(x,y)+d(x,z)−d(y,z)) and cyclic. In a
// metric tree these are the tripod leg lengths.
inline std::array<double, 3> gromov_tripod(const FiniteMetricSpace& space, int x, int y, int z,
                                           double tol = kDefaultTol) {
    if (x < 0 || x >= space.n || y < 0 || y >= space.n || z < 0 || z >= space.n)
        throw std::invalid_argument("gromov_tripod: index out of range");
    if (x == y || y == z || x == z) throw std::invalid_argument("gromov_tripod: indices must be distinct");
    const double dxy = space.at(x, y), dxz = space.at(x, z), dyz = space.at(y, z);
    std::array<double, 3> legs{0.5 * (dxy + dxz - dyz), 0.5 * (dxy + dyz - dxz), 0.5 * (dxz + dyz - dxy)};
    for (double& leg : legs) {
        if (leg < -tol) throw std::invalid_argument("gromov_tripod: triangle inequality violated");
        if (leg < 0) leg = 0;
    }
    return legs;
}

// Four-point condition scan: among the three pair sums of any
// four points, sorted a ≤ b ≤ c, a tree metric has b = c. Returns max(c−b).
inline DefectWitness four_point_defect(const FiniteMetricSpace& space) {
    DefectWitness out;
    const int n = space.n;
    for (int p = 0; p < n; ++p)
        for (int x = p + 1; x < n; ++x)
            for (int y = x + 1; y < n; ++y)
                for (int z = y + 1; z < n; ++z) {
                    std::array<double, 3> s{space.at(p, x) + space.at(y, z),
                                            space.at(p, y) + space.at(x, z),
                                            space.at(p, z) + space.at(x, y)};
                    std::sort(s.begin(), s.end());
                    const double def = s[2] - s[1];
                    if (def > out.value) {
                        out.value = def;
                        out.witness = {p, x, y, z};
                    }
                }
    return out;
}

// Strong triangle inequality scan:
// max over triples of d(x,z) − max(d(x,y), d(y,z)).
inline DefectWitness ultrametric_defect(const FiniteMetricSpace& space) {
    DefectWitness out;
    const int n = space.n;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (y == x) continue;
            for (int z = x + 1; z < n; ++z) {
                if (z == y) continue;
                const double def = space.at(x, z) - std::max(space.at(x, y), space.at(y, z));
                if (def > out.value) {
                    out.value = def;
                    out.witness = {x, y, z, -1};
                }
            }
        }
    return out;
}

// All x with |d(p,x) − r| ≤ tol: the sphere with center p and radius r.
inline SubsetSelection sphere(const FiniteMetricSpace& space, int p, double r, double tol = kDefaultTol) {
    if (p < 0 || p >= space.n) throw std::invalid_argument("sphere: index out of range");
    std::vector<int> sel;
    for (int x = 0; x < space.n; ++x)
        if (std::fabs(space.at(p, x) - r) <= tol) sel.push_back(x);
    return SubsetSelection(std::move(sel));
}

} // namespace finmet
