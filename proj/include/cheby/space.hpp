#pragma once

#include <span>
#include <vector>

#include "cheby/common.hpp"

namespace cheby {

// Norm of a finite-dimensional space: the coordinate maximum, a p-norm with
// 1 < p < inf, or a direct sum combining block norms by their maximum.
struct NormSpec {
    enum class Kind { Max, PNorm, DirectSum };

    Kind kind = Kind::Max;
    int dim = 0;
    double p = 0.0;                // PNorm only
    std::vector<NormSpec> blocks;  // DirectSum only

    static NormSpec max_norm(int dim);
    static NormSpec p_norm(double p, int dim);
    static NormSpec direct_sum(std::vector<NormSpec> blocks);
};

// Finite set of points in R^dim. Non-empty; entries finite; duplicates are
// removed on construction at coordinate tolerance 1e-12.
struct PointSet {
    int dim = 0;
    std::vector<Vec> points;

    explicit PointSet(std::vector<Vec> pts);

    std::size_t size() const { return points.size(); }
    const Vec& operator[](std::size_t i) const { return points[i]; }
};

double norm_value(const NormSpec& n, std::span<const double> x);
double norm_value(const NormSpec& n, const Vec& x);

// A subgradient of x -> ||x|| (the zero vector at x = 0).
Vec norm_subgradient(const NormSpec& n, const Vec& x);

double distance(const NormSpec& n, const Vec& x, const Vec& y);

// sup over a in F of ||v - a||.
double farthest_radius(const NormSpec& n, const Vec& v, const PointSet& F);

// Hausdorff distance between two finite sets: the larger of the two
// one-sided deviations max_a min_b ||a-b||.
double hausdorff_finite(const NormSpec& n, const PointSet& A, const PointSet& B);

double diameter(const NormSpec& n, const PointSet& F);

// Lower bound on the modulus of convexity of an l_p norm, capped at eps/2.
// Requires 1 < p < inf and 0 < eps <= 2. For p >= 2 the bound
// 1 - (1 - (eps/2)^p)^(1/p) is used; for 1 < p < 2 the bound (p-1) eps^2 / 8.
double convexity_modulus(double p, double eps);

// True when every leaf norm is Max; the norm then coincides with the
// coordinate maximum on the whole space.
bool is_max_family(const NormSpec& n);

// True when every leaf norm is a PNorm (strictly convex leaves).
bool is_strictly_convex_family(const NormSpec& n);

// Equivalence constant c with ||x|| <= c * ||x||_inf: 1 for Max, dim^(1/p)
// for PNorm, the block maximum for direct sums.
double grid_equiv_constant(const NormSpec& n);

// Offsets of direct-sum blocks in coordinate order (empty for leaf norms).
std::vector<int> block_offsets(const NormSpec& n);

PointSet scale_points(const PointSet& F, double s);

}  // namespace cheby
