#pragma once

#include <cmath>
#include <optional>

#include "cheby/common.hpp"

namespace cheby {

inline double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(const Vec& a) { return std::sqrt(dot(a, a)); }

inline double max_abs_diff(const Vec& a, const Vec& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a[i] - b[i]));
    return m;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec vec_scale(const Vec& a, double s) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}

// Solves A x = b for square A by LU with partial pivoting; nullopt when the
// matrix is singular relative to pivot_tol.
std::optional<Vec> lu_solve(Mat A, Vec b, double pivot_tol = 1e-12);

// Orthonormal basis of the row space of `rows` (modified Gram-Schmidt with
// one re-orthogonalization pass). Rows whose residual falls below tol are
// treated as dependent and dropped.
Mat orthonormal_rows(const Mat& rows, double tol = 1e-11);

// Orthonormal basis of the orthogonal complement of span(ortho_rows) in
// R^dim; ortho_rows must already be orthonormal.
Mat orthonormal_complement(const Mat& ortho_rows, int dim, double tol = 1e-11);

// Minimum-norm solution of A x = b; nullopt when the system is inconsistent
// (residual above tol). A may be rank-deficient or empty.
std::optional<Vec> least_squares_min_norm(const Mat& A, const Vec& b, int dim, double tol = 1e-8);

}  // namespace cheby
