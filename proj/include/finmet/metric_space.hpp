#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace finmet {

inline constexpr double kDefaultTol = 1e-9;

inline double inf() { return std::numeric_limits<double>::infinity(); }

// Square array of pairwise distances over indexed points. Entries may be
// +infinity (metric with values in R ∪ {∞}). The universal carrier type.
struct FiniteMetricSpace {
    int n = 0;
    std::vector<double> d;               // row-major n*n
    std::vector<std::string> labels;     // empty or size n

    FiniteMetricSpace() = default;
    FiniteMetricSpace(int count, std::vector<double> dist, std::vector<std::string> lab = {})
        : n(count), d(std::move(dist)), labels(std::move(lab)) {
        if (n < 0 || d.size() != static_cast<size_t>(n) * n)
            throw std::invalid_argument("FiniteMetricSpace: matrix size mismatch");
        if (!labels.empty() && labels.size() != static_cast<size_t>(n))
            throw std::invalid_argument("FiniteMetricSpace: label count mismatch");
    }

    static FiniteMetricSpace from_rows(const std::vector<std::vector<double>>& rows,
                                       std::vector<std::string> lab = {}) {
        const int n = static_cast<int>(rows.size());
        std::vector<double> flat;
        flat.reserve(static_cast<size_t>(n) * n);
        for (const auto& r : rows) {
            if (r.size() != static_cast<size_t>(n))
                throw std::invalid_argument("matrix is not square");
            flat.insert(flat.end(), r.begin(), r.end());
        }
        return FiniteMetricSpace(n, std::move(flat), std::move(lab));
    }

    double at(int i, int j) const { return d[static_cast<size_t>(i) * n + j]; }
    double& at(int i, int j) { return d[static_cast<size_t>(i) * n + j]; }

    std::vector<std::vector<double>> rows() const {
        std::vector<std::vector<double>> r(n);
        for (int i = 0; i < n; ++i) r[i] = std::vector<double>(d.begin() + static_cast<long>(i) * n,
                                                               d.begin() + static_cast<long>(i + 1) * n);
        return r;
    }
};

// Sorted duplicate-free point indices inside an ambient space.
struct SubsetSelection {
    std::vector<int> indices;

    SubsetSelection() = default;
    explicit SubsetSelection(std::vector<int> idx) : indices(std::move(idx)) {
        std::sort(indices.begin(), indices.end());
        indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    }

    bool empty() const { return indices.empty(); }
    int size() const { return static_cast<int>(indices.size()); }

    void check_against(const FiniteMetricSpace& space) const {
        for (int i : indices)
            if (i < 0 || i >= space.n)
                throw std::invalid_argument("SubsetSelection: index out of range");
    }
};

// Real value per point; carries admissible/extremal/extension functions and
// distance functions to sets. Length must match the space it is used with.
struct PointFunction {
    std::vector<double> values;

    PointFunction() = default;
    explicit PointFunction(std::vector<double> v) : values(std::move(v)) {}

    int size() const { return static_cast<int>(values.size()); }
    double operator[](int i) const { return values[static_cast<size_t>(i)]; }
    double& operator[](int i) { return values[static_cast<size_t>(i)]; }
};

enum class Axiom { NonNegativity, Separation, Symmetry, Triangle };

inline const char* axiom_name(Axiom a) {
    switch (a) {
        case Axiom::NonNegativity: return "nonnegativity";
        case Axiom::Separation: return "separation";
        case Axiom::Symmetry: return "symmetry";
        case Axiom::Triangle: return "triangle";
    }
    return "?";
}

struct AxiomViolation {
    Axiom axiom;
    int i = -1, j = -1, k = -1;   // witness indices; unused slots are -1
    double defect = 0.0;
};

struct QuadrilateralInfo {
    bool checked = false;   // scan is O(n^4) and runs only for n ≤ quad_limit
    bool ok = true;
    double max_defect = 0.0;
    int p = -1, q = -1, x = -1, y = -1;
};

struct ValidationReport {
    bool ok = true;
    std::vector<AxiomViolation> violations;   // worst witness per violated axiom
    QuadrilateralInfo quadrilateral;          // informational
};

namespace detail {

inline void require_square(const std::vector<std::vector<double>>& m) {
    for (const auto& r : m)
        if (r.size() != m.size()) throw std::invalid_argument("matrix is not square");
}

inline void require_no_nan(const std::vector<std::vector<double>>& m) {
    for (const auto& r : m)
        for (double v : r)
            if (std::isnan(v)) throw std::invalid_argument("matrix contains NaN");
}

} // namespace detail

// Checks the metric axioms up to tol and reports the worst witness per
// violated axiom. Off-diagonal entries ≤ tol count as pseudometric
// identifications unless require_separation is set. The quadrilateral
// inequality d(p,q)+d(x,y) ≤ d(p,x)+d(p,y)+d(q,x)+d(q,y) is reported
// informationally; it must pass whenever the triangle axiom passes.
inline ValidationReport validate(const std::vector<std::vector<double>>& m, double tol = kDefaultTol,
                                 bool require_separation = false, int quad_limit = 64) {
    if (tol < 0) throw std::invalid_argument("validate: tol must be nonnegative");
    detail::require_square(m);
    detail::require_no_nan(m);
    const int n = static_cast<int>(m.size());
    ValidationReport rep;

    AxiomViolation worst_nonneg{Axiom::NonNegativity, -1, -1, -1, 0.0};
    AxiomViolation worst_sep{Axiom::Separation, -1, -1, -1, 0.0};
    AxiomViolation worst_sym{Axiom::Symmetry, -1, -1, -1, 0.0};
    AxiomViolation worst_tri{Axiom::Triangle, -1, -1, -1, 0.0};

    for (int i = 0; i < n; ++i) {
        const double dii = m[i][i];
        if (std::fabs(dii) > tol && std::fabs(dii) > worst_sep.defect) {
            worst_sep = {Axiom::Separation, i, i, -1, std::fabs(dii)};
        }
        for (int j = 0; j < n; ++j) {
            const double v = m[i][j];
            if (v < -tol && -v > worst_nonneg.defect)
                worst_nonneg = {Axiom::NonNegativity, i, j, -1, -v};
            if (i < j) {
                const double a = m[i][j], b = m[j][i];
                const bool both_inf = std::isinf(a) && std::isinf(b);
                const double gap = both_inf ? 0.0 : std::fabs(a - b);
                if (gap > tol && gap > worst_sym.defect)
                    worst_sym = {Axiom::Symmetry, i, j, -1, gap};
                if (require_separation && i != j) {
                    const double dd = std::min(a, b);
                    if (dd <= tol) {
                        const double def = tol - dd;
                        if (worst_sep.i == -1 || def > worst_sep.defect)
                            worst_sep = {Axiom::Separation, i, j, -1, def};
                    }
                }
            }
        }
    }

    // d(i,k) ≤ d(i,j) + d(j,k); +infinity absorbs on the right.
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const double dik = m[i][k];
            if (std::isinf(dik) && dik > 0) {
                for (int j = 0; j < n; ++j) {
                    if (j == i || j == k) continue;
                    const double rhs = m[i][j] + m[j][k];
                    if (!std::isinf(rhs)) {
                        if (worst_tri.i == -1) worst_tri = {Axiom::Triangle, i, k, j, inf()};
                    }
                }
                continue;
            }
            for (int j = 0; j < n; ++j) {
                if (j == i || j == k) continue;
                const double rhs = m[i][j] + m[j][k];
                if (std::isinf(rhs)) continue;
                const double def = dik - rhs;
                if (def > tol && def > worst_tri.defect) worst_tri = {Axiom::Triangle, i, k, j, def};
            }
        }

    if (worst_nonneg.i != -1) rep.violations.push_back(worst_nonneg);
    if (worst_sep.i != -1) rep.violations.push_back(worst_sep);
    if (worst_sym.i != -1) rep.violations.push_back(worst_sym);
    if (worst_tri.i != -1) rep.violations.push_back(worst_tri);
    rep.ok = rep.violations.empty();

    if (n <= quad_limit) {
        rep.quadrilateral.checked = true;
        for (int p = 0; p < n; ++p)
            for (int q = p; q < n; ++q)
                for (int x = 0; x < n; ++x)
                    for (int y = x; y < n; ++y) {
                        const double lhs = m[p][q] + m[x][y];
                        const double rhs = m[p][x] + m[p][y] + m[q][x] + m[q][y];
                        if (std::isinf(lhs)) {
                            if (!std::isinf(rhs) && rep.quadrilateral.ok)
                                rep.quadrilateral = {true, false, inf(), p, q, x, y};
                            continue;
                        }
                        const double def = std::isinf(rhs) ? -inf() : lhs - rhs;
                        if (def > rep.quadrilateral.max_defect) {
                            rep.quadrilateral.max_defect = def;
                            rep.quadrilateral.p = p;
                            rep.quadrilateral.q = q;
                            rep.quadrilateral.x = x;
                            rep.quadrilateral.y = y;
                        }
                    }
        if (rep.quadrilateral.max_defect > tol) rep.quadrilateral.ok = false;
    }
    return rep;
}

inline ValidationReport validate(const FiniteMetricSpace& space, double tol = kDefaultTol,
                                 bool require_separation = false, int quad_limit = 64) {
    return validate(space.rows(), tol, require_separation, quad_limit);
}

inline void require_valid_or_throw(const std::vector<std::vector<double>>& m, double tol) {
    const ValidationReport rep = validate(m, tol);
    if (!rep.ok) {
        const auto& v = rep.violations.front();
        throw std::invalid_argument(std::string("matrix violates metric axiom: ") + axiom_name(v.axiom));
    }
}

struct QuotientResult {
    FiniteMetricSpace space;                 // classes labelled by smallest member
    std::vector<std::vector<int>> classes;   // ordered by representative index
};

// Merges points at distance ≤ tol and returns the corresponding genuine
// metric space. Class distances are taken between the
// smallest-index representatives.
inline QuotientResult quotient_pseudometric(const std::vector<std::vector<double>>& m,
                                            double tol = kDefaultTol) {
    detail::require_square(m);
    detail::require_no_nan(m);
    const int n = static_cast<int>(m.size());
    if (n == 0) throw std::invalid_argument("quotient_pseudometric: empty space");
    require_valid_or_throw(m, tol);   // symmetry/triangle beyond tol are errors

    std::vector<int> root(n);
    for (int i = 0; i < n; ++i) root[i] = i;
    std::vector<int>* rp = &root;
    auto find = [rp](int x) {
        while ((*rp)[x] != x) x = (*rp)[x] = (*rp)[(*rp)[x]];
        return x;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (m[i][j] <= tol) {
                int a = find(i), b = find(j);
                if (a != b) root[std::max(a, b)] = std::min(a, b);
            }

    std::vector<std::vector<int>> classes;
    std::vector<int> rep_of_class(n, -1), class_of(n, -1);
    for (int i = 0; i < n; ++i) {
        int r = find(i);
        if (rep_of_class[r] == -1) {
            rep_of_class[r] = static_cast<int>(classes.size());
            classes.push_back({});
        }
        class_of[i] = rep_of_class[r];
        classes[class_of[i]].push_back(i);
    }

    const int k = static_cast<int>(classes.size());
    std::vector<double> q(static_cast<size_t>(k) * k, 0.0);
    std::vector<std::string> lab(k);
    for (int a = 0; a < k; ++a) {
        lab[a] = std::to_string(classes[a].front());
        for (int b = 0; b < k; ++b)
            q[static_cast<size_t>(a) * k + b] = m[classes[a].front()][classes[b].front()];
    }
    for (int a = 0; a < k; ++a) q[static_cast<size_t>(a) * k + a] = 0.0;
    return {FiniteMetricSpace(k, std::move(q), std::move(lab)), std::move(classes)};
}

struct MetricComponent {
    FiniteMetricSpace space;
    std::vector<int> indices;
};

// Splits an ∞-metric into its metric components (classes of d < ∞).
inline std::vector<MetricComponent> metric_components(const FiniteMetricSpace& space,
                                                      double tol = kDefaultTol) {
    if (space.n == 0) throw std::invalid_argument("metric_components: empty space");
    require_valid_or_throw(space.rows(), tol);
    const int n = space.n;
    std::vector<int> comp(n, -1);
    std::vector<MetricComponent> out;
    for (int i = 0; i < n; ++i) {
        if (comp[i] != -1) continue;
        std::vector<int> members;
        std::vector<int> stack{i};
        comp[i] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int w = 0; w < n; ++w)
                if (comp[w] == -1 && !std::isinf(space.at(v, w))) {
                    comp[w] = comp[i];
                    stack.push_back(w);
                }
        }
        std::sort(members.begin(), members.end());
        const int k = static_cast<int>(members.size());
        std::vector<double> sub(static_cast<size_t>(k) * k);
        std::vector<std::string> lab;
        if (!space.labels.empty()) lab.resize(k);
        for (int a = 0; a < k; ++a) {
            if (!space.labels.empty()) lab[a] = space.labels[members[a]];
            for (int b = 0; b < k; ++b) sub[static_cast<size_t>(a) * k + b] = space.at(members[a], members[b]);
        }
        out.push_back({FiniteMetricSpace(k, std::move(sub), std::move(lab)), std::move(members)});
    }
    return out;
}

inline FiniteMetricSpace scale(const FiniteMetricSpace& space, double a) {
    if (space.n == 0) throw std::invalid_argument("scale: empty space");
    if (!(a > 0)) throw std::invalid_argument("scale: factor must be positive");
    FiniteMetricSpace out = space;
    for (double& v : out.d) v *= a;
    return out;
}

inline FiniteMetricSpace restrict_to(const FiniteMetricSpace& space, const SubsetSelection& sel) {
    if (space.n == 0) throw std::invalid_argument("restrict: empty space");
    if (sel.empty()) throw std::invalid_argument("restrict: empty selection");
    sel.check_against(space);
    const int k = sel.size();
    std::vector<double> sub(static_cast<size_t>(k) * k);
    std::vector<std::string> lab;
    if (!space.labels.empty()) lab.resize(k);
    for (int a = 0; a < k; ++a) {
        if (!space.labels.empty()) lab[a] = space.labels[sel.indices[a]];
        for (int b = 0; b < k; ++b)
            sub[static_cast<size_t>(a) * k + b] = space.at(sel.indices[a], sel.indices[b]);
    }
    return FiniteMetricSpace(k, std::move(sub), std::move(lab));
}

inline double diameter(const FiniteMetricSpace& space) {
    if (space.n == 0) throw std::invalid_argument("diameter: empty space");
    double m = 0.0;
    for (double v : space.d) m = std::max(m, v);
    return m;
}

// All z with d(x,z) ≤ ½·d(x,y)+eps and d(y,z) ≤ ½·d(x,y)+eps; eps = 0
// gives the exact midpoints.
inline SubsetSelection midpoints(const FiniteMetricSpace& space, int x, int y, double eps = 0.0) {
    if (x < 0 || x >= space.n || y < 0 || y >= space.n)
        throw std::invalid_argument("midpoints: index out of range");
    const double half = 0.5 * space.at(x, y) + eps;
    std::vector<int> sel;
    for (int z = 0; z < space.n; ++z)
        if (space.at(x, z) <= half && space.at(y, z) <= half) sel.push_back(z);
    return SubsetSelection(std::move(sel));
}

} // namespace finmet
