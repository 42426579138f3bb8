#pragma once

#include <functional>
#include <vector>

#include "hypflow/quadrature.hpp"
#include "hypflow/vec.hpp"

// Hyperbolic-harmonic extension on the Poincare ball model of H^3 via the
// hyperbolic Poisson kernel P(x, xi)^2, P = (1 - |x|^2)/|x - xi|^2, against
// the normalized sphere measure. The polar rule is aligned with the
// direction of x and graded geometrically in the kernel denominator, so it
// stays accurate however close x is to the rim (where the kernel turns into
// a spike of angular width ~ 1 - |x|).

namespace hypflow {

using SphereFn = std::function<double(const Vec3&)>;

// Normalized product rule on S^2: Gauss-Legendre in cos(polar) x uniform
// azimuth; weights sum to 1.
class SphereRule {
public:
    SphereRule(int polar_order, int azimuth_count);

    const std::vector<Vec3>& nodes() const { return nodes_; }
    const std::vector<double>& weights() const { return weights_; }
    int polar_order() const { return polar_; }
    int azimuth_count() const { return azimuth_; }
    SphereRule refined() const { return {2 * polar_, 2 * azimuth_}; }

private:
    int polar_;
    int azimuth_;
    std::vector<Vec3> nodes_;
    std::vector<double> weights_;
};

class BallPotential3D {
public:
    BallPotential3D(SphereFn phi, int polar_order, int azimuth_count);

    double value(const Vec3& x) const;
    Vec3 gradient(const Vec3& x) const;  // analytic kernel differentiation

    int polar_order() const { return polar_; }
    int azimuth_count() const { return azimuth_; }
    BallPotential3D refined() const { return {phi_, 2 * polar_, 2 * azimuth_}; }

    // Mean of the boundary data under a plain sphere rule of the same orders
    // (equals value(0) by kernel normalization).
    double boundary_mean() const;

private:
    struct KernelNode {
        double u = 0.0;            // cos of the polar angle around x-hat
        double d = 0.0;            // |x - xi|^2, carried exactly
        double su = 0.0;           // sin of the polar angle
        double rho_minus_u = 0.0;  // cancellation-free (x - xi) . x-hat
        double w = 0.0;            // normalized polar weight
    };
    void polar_nodes(double rho, std::vector<KernelNode>& nodes) const;

    SphereFn phi_;
    int polar_;  // Gauss-Legendre order per polar panel
    int azimuth_;
    std::vector<double> gl_nodes_;  // reference Gauss-Legendre rule on [-1, 1]
    std::vector<double> gl_weights_;
    std::vector<double> cos_az_;
    std::vector<double> sin_az_;
};

// Builds the extension and validates it against a doubled-order rule at a
// fixed set of probe points; throws std::runtime_error when the two differ
// by more than `tolerance` (quadrature non-convergence).
BallPotential3D ball_extend_3d(SphereFn phi, int polar_order, int azimuth_count,
                               double tolerance = 1e-8);

}  // namespace hypflow
