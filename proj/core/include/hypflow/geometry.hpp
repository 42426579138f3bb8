#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <stdexcept>

#include "hypflow/vec.hpp"

// Pointwise differential geometry of the Poincare ball model: the open unit
// ball with metric g = lambda^2 * delta, lambda(x) = 2/(1-|x|^2), which has
// constant sectional curvature -1. All covector/vector components are taken
// in the Euclidean chart of the ball.

namespace hypflow {

// A point of the open unit disk (2D chart). Construction outside the chart
// is rejected.
class DiskPoint {
public:
    DiskPoint(double x, double y) : x_(x), y_(y) {
        if (!(x * x + y * y < 1.0))
            throw std::domain_error("DiskPoint: |p| >= 1 is outside the Poincare disk");
    }

    double x() const { return x_; }
    double y() const { return y_; }
    double r2() const { return x_ * x_ + y_ * y_; }
    double r() const { return std::sqrt(r2()); }
    Vec2 vec() const { return {x_, y_}; }

private:
    double x_;
    double y_;
};

// Points with |p| >= 0.999 are allowed but worth flagging in reports: the
// conformal factor amplifies rounding there.
inline bool near_rim(const DiskPoint& p) { return p.r2() >= 0.999 * 0.999; }

// lambda(p) = 2/(1-|p|^2); lambda(0) = 2.
inline double conformal_factor(const DiskPoint& p) { return 2.0 / (1.0 - p.r2()); }

// u = grad log lambda = 2p/(1-|p|^2).
inline Vec2 log_conformal_gradient(const DiskPoint& p) {
    const double s = 2.0 / (1.0 - p.r2());
    return {s * p.x(), s * p.y()};
}

// Dimension-generic conformal factor on the unit n-ball.
template <std::size_t N>
double conformal_factor(const std::array<double, N>& x) {
    double r2 = 0.0;
    for (double c : x) r2 += c * c;
    if (!(r2 < 1.0))
        throw std::domain_error("conformal_factor: point outside the unit ball");
    return 2.0 / (1.0 - r2);
}

// Musical isomorphisms: sharp raises (alpha^sharp)^i = lambda^-2 alpha_i,
// flat lowers (v^flat)_i = lambda^2 v^i.
inline Vec2 sharp(const Vec2& covector, const DiskPoint& p) {
    const double lam = conformal_factor(p);
    return covector * (1.0 / (lam * lam));
}

inline Vec2 flat(const Vec2& vector, const DiskPoint& p) {
    const double lam = conformal_factor(p);
    return vector * (lam * lam);
}

struct PointwiseNorms {
    double euclidean = 0.0;
    double hyperbolic = 0.0;
};

// |alpha|_h = lambda^-1 |alpha|_e for covectors.
inline PointwiseNorms pointwise_norms(const Vec2& covector, const DiskPoint& p) {
    PointwiseNorms n;
    n.euclidean = covector.norm();
    n.hyperbolic = n.euclidean / conformal_factor(p);
    return n;
}

// Ricci action on 1-forms of hyperbolic n-space: r(alpha) = -(n-1) alpha.
template <std::size_t N>
std::array<double, N> ricci_action(const std::array<double, N>& alpha) {
    std::array<double, N> out{};
    for (std::size_t i = 0; i < N; ++i) out[i] = -(double(N) - 1.0) * alpha[i];
    return out;
}

inline Vec2 ricci_action(const Vec2& alpha) { return {-alpha.x, -alpha.y}; }

// Christoffel symbols of the conformal metric,
//   Gamma^k_ij = delta_ki u_j + delta_kj u_i - delta_ij u_k,  u = grad log lambda.
// Index order (k, i, j); symmetric in (i, j).
template <std::size_t N>
std::array<double, N * N * N> christoffel(const std::array<double, N>& x) {
    double r2 = 0.0;
    for (double c : x) r2 += c * c;
    if (!(r2 < 1.0))
        throw std::domain_error("christoffel: point outside the unit ball");
    std::array<double, N> u;
    const double s = 2.0 / (1.0 - r2);
    for (std::size_t i = 0; i < N; ++i) u[i] = s * x[i];

    std::array<double, N * N * N> g{};
    for (std::size_t k = 0; k < N; ++k)
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j)
                g[(k * N + i) * N + j] = (k == i ? u[j] : 0.0) + (k == j ? u[i] : 0.0) -
                                         (i == j ? u[k] : 0.0);
    return g;
}

struct Christoffel2 {
    double g[2][2][2] = {};
    double operator()(int k, int i, int j) const { return g[k][i][j]; }
};

inline Christoffel2 christoffel(const DiskPoint& p) {
    const Vec2 u = log_conformal_gradient(p);
    const double uc[2] = {u.x, u.y};
    Christoffel2 c;
    for (int k = 0; k < 2; ++k)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                c.g[k][i][j] = (k == i ? uc[j] : 0.0) + (k == j ? uc[i] : 0.0) -
                               (i == j ? uc[k] : 0.0);
    return c;
}

// A covector field on the disk. `components` is required; `jacobian`
// (J(i,j) = d_i alpha_j) and `jacobian_gradient` ([k](i,j) = d_k d_i alpha_j)
// are optional analytic evaluators. When absent they are replaced by central
// finite differences with step fd_step*(1-|p|), which shrinks toward the rim
// so the stencil stays inside the chart.
struct OneFormField {
    std::function<Vec2(const DiskPoint&)> components;
    std::function<Mat2(const DiskPoint&)> jacobian;
    std::function<std::array<Mat2, 2>(const DiskPoint&)> jacobian_gradient;
    double fd_step = 1e-4;

    Mat2 jacobian_at(const DiskPoint& p) const;
    std::array<Mat2, 2> jacobian_gradient_at(const DiskPoint& p) const;
};

struct VectorField {
    std::function<Vec2(const DiskPoint&)> components;
};

// (nabla_v alpha)_j = v^i (d_i alpha_j - Gamma^k_ij alpha_k).
Vec2 covariant_derivative_1form(const OneFormField& alpha, const VectorField& v,
                                const DiskPoint& p);

// delta alpha = -lambda^-2 (d_x alpha_x + d_y alpha_y); equals -div of sharp(alpha).
double codifferential_1form(const OneFormField& alpha, const DiskPoint& p);

// Hodge-deRham Laplacian (d delta + delta d) on 1-forms.
Vec2 hodge_laplacian_1form(const OneFormField& alpha, const DiskPoint& p);

// For closed alpha with v = sharp(alpha), Cartan's formula collapses to
// L_v alpha = d(alpha(v)) = d|alpha|_h^2, evaluated analytically here.
Vec2 lie_derivative_closed_1form(const OneFormField& alpha, const DiskPoint& p);

struct DeformationTensor {
    Mat2 lowered;                 // D_ij = (nabla_i alpha_j + nabla_j alpha_i)/2
    double norm2_hyperbolic = 0;  // lambda^-4 sum D_ij^2
    double metric_trace = 0;      // lambda^-2 sum D_ii (zero for closed+coclosed alpha)
};

DeformationTensor deformation_tensor(const OneFormField& alpha, const DiskPoint& p);

}  // namespace hypflow
