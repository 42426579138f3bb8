#pragma once

#include <functional>
#include <vector>

#include "hypflow/geometry.hpp"
#include "hypflow/harmonic.hpp"

namespace hypflow {

// Neumaier-compensated accumulator. Keeps long quadrature sums accurate to
// ~1 ulp and, being strictly sequential, keeps reports bit-reproducible.
class NeumaierSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Gauss-Legendre nodes/weights on [-1, 1] (Golub-Welsch).
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussRule gauss_legendre(int order);

// Gauss nodes/weights for integrals of the form int_0^1 f(r) r dr
// (Gauss-Jacobi with weight r): exact for deg f <= 2*order - 1.
GaussRule gauss_radial_weight_r(int order);

// Tensor rule on the disk: weight-r Gauss nodes in radius x uniform
// (trapezoid) nodes in angle. Exact for r^a cos(b theta), r^a sin(b theta)
// with a <= 2*radial_order - 1, b <= angular_count - 1. Sum of weights = pi.
class DiskRule {
public:
    DiskRule(int radial_order, int angular_count);

    int radial_order() const { return radial_order_; }
    int angular_count() const { return angular_count_; }
    DiskRule refined() const { return {2 * radial_order_, 2 * angular_count_}; }

    // Rule sized for truncated-Fourier integrands: polynomial of total degree
    // `degree` in (x, y), with headroom.
    static DiskRule for_degree(int degree);

    const std::vector<DiskPoint>& points() const { return points_; }
    const std::vector<double>& weights() const { return weights_; }

private:
    int radial_order_;
    int angular_count_;
    std::vector<DiskPoint> points_;
    std::vector<double> weights_;
};

// sum_i w_i f(p_i), deterministic order, compensated. Throws on non-finite
// node values.
double integrate_disk(const std::function<double(const DiskPoint&)>& f, const DiskRule& rule);

struct L2Norms {
    double euclidean = 0.0;   // ||dPhi||^2_{L2, Euclidean metric}
    double hyperbolic = 0.0;  // ||dPhi||^2_{L2, hyperbolic metric}
};

// Both L2 norms of dPhi, computed through the metric operations (so the two
// values take different floating-point paths); in 2D they agree exactly by
// conformal invariance, and both match spectral_dirichlet_energy.
L2Norms l2_norms(const HarmonicPotential& pot, const DiskRule& rule);

// Fourth power of the hyperbolic L4 norm of dPhi:
//   int lambda^-2 |dPhi|_e^4 dmu_e = 1/4 int (1-r^2)^2 |dPhi|_e^4 dmu_e.
double l4_norm_hyperbolic(const HarmonicPotential& pot, const DiskRule& rule);

// Fourth power of the Euclidean L4 norm (majorant side of the inequality).
double l4_norm_euclidean(const HarmonicPotential& pot, const DiskRule& rule);

// Radially graded rule for integrands with conformal-factor blowups tamed by
// metric weights: geometric panels (ratio 1/2) toward the rim, per-panel
// Gauss-Legendre in radius, trapezoid in angle.
class GradedDiskRule {
public:
    GradedDiskRule(int max_panels, int panel_nodes, int angular_count);

    GradedDiskRule refined() const;  // doubles nodes per panel

    const std::vector<DiskPoint>& points() const { return points_; }
    const std::vector<double>& weights() const { return weights_; }
    double rim_cut() const { return rim_cut_; }

private:
    int max_panels_;
    int panel_nodes_;
    int angular_count_;
    double rim_cut_;
    std::vector<DiskPoint> points_;
    std::vector<double> weights_;
};

struct RefinedValue {
    double value = 0.0;             // refined-rule result
    double refinement_delta = 0.0;  // |refined - base| / max(|refined|, tiny)
};

// int |Def v|_h^2 dmu_h for v = sharp(dPhi), on a graded rule; evaluates the
// base rule and one refinement and reports their relative agreement. For
// closed coclosed dPhi this equals the hyperbolic L2 energy (curvature -1
// Weitzenboeck identity).
RefinedValue deformation_energy(const HarmonicPotential& pot, const GradedDiskRule& rule);

}  // namespace hypflow
