#include "hypflow/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace hypflow {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;

// Golub-Welsch: nodes are eigenvalues of the Jacobi matrix of the three-term
// recurrence, weights are mu0 * (first eigenvector component)^2.
GaussRule golub_welsch(const std::vector<double>& diag, const std::vector<double>& offdiag,
                       double mu0) {
    const int n = static_cast<int>(diag.size());
    Eigen::MatrixXd jm = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) jm(i, i) = diag[i];
    for (int i = 0; i + 1 < n; ++i) {
        jm(i, i + 1) = offdiag[i];
        jm(i + 1, i) = offdiag[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jm);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("Golub-Welsch eigensolve failed");
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = es.eigenvalues()(i);
        const double v0 = es.eigenvectors()(0, i);
        rule.weights[i] = mu0 * v0 * v0;
    }
    return rule;
}

}  // namespace

GaussRule gauss_legendre(int order) {
    if (order < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    std::vector<double> diag(order, 0.0), off(order - 1);
    for (int k = 1; k < order; ++k) {
        // Legendre recurrence: b_k = k^2 / (4k^2 - 1)
        off[k - 1] = std::sqrt(double(k) * k / (4.0 * k * k - 1.0));
    }
    return golub_welsch(diag, off, 2.0);
}

GaussRule gauss_radial_weight_r(int order) {
    if (order < 1) throw std::invalid_argument("gauss_radial_weight_r: order must be >= 1");
    // Jacobi weight (1+u) on [-1,1], alpha = 0, beta = 1:
    //   a_k = 1 / ((2k+1)(2k+3)),   b_k = k(k+1) / (2k+1)^2,   mu0 = 2.
    std::vector<double> diag(order), off(order - 1);
    for (int k = 0; k < order; ++k) diag[k] = 1.0 / ((2.0 * k + 1.0) * (2.0 * k + 3.0));
    for (int k = 1; k < order; ++k)
        off[k - 1] = std::sqrt(double(k) * (k + 1.0) / ((2.0 * k + 1.0) * (2.0 * k + 1.0)));
    GaussRule jac = golub_welsch(diag, off, 2.0);
    // Map int_{-1}^{1} g(u)(1+u) du onto int_0^1 f(r) r dr via r = (1+u)/2.
    for (int i = 0; i < order; ++i) {
        jac.nodes[i] = 0.5 * (1.0 + jac.nodes[i]);
        jac.weights[i] *= 0.25;
    }
    return jac;
}

DiskRule::DiskRule(int radial_order, int angular_count)
    : radial_order_(radial_order), angular_count_(angular_count) {
    if (angular_count < 1) throw std::invalid_argument("DiskRule: angular_count must be >= 1");
    const GaussRule radial = gauss_radial_weight_r(radial_order);
    points_.reserve(static_cast<std::size_t>(radial_order) * angular_count);
    weights_.reserve(points_.capacity());
    const double wtheta = kTwoPi / angular_count;
    for (int i = 0; i < radial_order; ++i) {
        const double r = radial.nodes[i];
        const double wr = radial.weights[i];
        for (int j = 0; j < angular_count; ++j) {
            const double t = kTwoPi * j / angular_count;
            points_.emplace_back(r * std::cos(t), r * std::sin(t));
            weights_.push_back(wr * wtheta);
        }
    }
}

DiskRule DiskRule::for_degree(int degree) {
    const int radial = std::max(8, degree / 2 + 4);
    const int angular = std::max(16, degree + 8);
    return {radial, angular};
}

double integrate_disk(const std::function<double(const DiskPoint&)>& f, const DiskRule& rule) {
    NeumaierSum acc;
    const auto& pts = rule.points();
    const auto& w = rule.weights();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double v = f(pts[i]);
        if (!std::isfinite(v))
            throw std::domain_error("integrate_disk: non-finite integrand value at node");
        acc.add(w[i] * v);
    }
    return acc.value();
}

L2Norms l2_norms(const HarmonicPotential& pot, const DiskRule& rule) {
    NeumaierSum eucl, hyp;
    const auto& pts = rule.points();
    const auto& w = rule.weights();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Vec2 d = pot.gradient(pts[i]);
        const PointwiseNorms n = pointwise_norms(d, pts[i]);
        const double lam = conformal_factor(pts[i]);
        eucl.add(w[i] * n.euclidean * n.euclidean);
        // |dPhi|_h^2 against the hyperbolic area element lambda^2 dmu_e
        hyp.add(w[i] * (n.hyperbolic * n.hyperbolic) * (lam * lam));
    }
    return {eucl.value(), hyp.value()};
}

double l4_norm_hyperbolic(const HarmonicPotential& pot, const DiskRule& rule) {
    NeumaierSum acc;
    const auto& pts = rule.points();
    const auto& w = rule.weights();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const PointwiseNorms n = pointwise_norms(pot.gradient(pts[i]), pts[i]);
        const double lam = conformal_factor(pts[i]);
        const double h2 = n.hyperbolic * n.hyperbolic;
        acc.add(w[i] * h2 * h2 * (lam * lam));
    }
    return acc.value();
}

double l4_norm_euclidean(const HarmonicPotential& pot, const DiskRule& rule) {
    NeumaierSum acc;
    const auto& pts = rule.points();
    const auto& w = rule.weights();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double e2 = pot.gradient(pts[i]).norm2();
        acc.add(w[i] * e2 * e2);
    }
    return acc.value();
}

GradedDiskRule::GradedDiskRule(int max_panels, int panel_nodes, int angular_count)
    : max_panels_(max_panels), panel_nodes_(panel_nodes), angular_count_(angular_count) {
    if (max_panels < 1 || panel_nodes < 2 || angular_count < 1)
        throw std::invalid_argument("GradedDiskRule: bad parameters");

    // Panel edges approach the rim geometrically: 1 - 2^-k, k = 0..max_panels.
    std::vector<double> edges;
    edges.push_back(0.0);
    for (int k = 1; k <= max_panels; ++k) edges.push_back(1.0 - std::ldexp(1.0, -k));
    rim_cut_ = 1.0 - edges.back();

    const GaussRule gl = gauss_legendre(panel_nodes);
    const double wtheta = kTwoPi / angular_count;
    for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
        const double lo = edges[e], hi = edges[e + 1];
        const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        for (int i = 0; i < panel_nodes; ++i) {
            const double r = mid + half * gl.nodes[i];
            const double wr = half * gl.weights[i] * r;  // area weight r dr
            for (int j = 0; j < angular_count_; ++j) {
                const double t = kTwoPi * j / angular_count_;
                points_.emplace_back(r * std::cos(t), r * std::sin(t));
                weights_.push_back(wr * wtheta);
            }
        }
    }
}

GradedDiskRule GradedDiskRule::refined() const {
    return {max_panels_, 2 * panel_nodes_, angular_count_};
}

namespace {

double deformation_energy_on(const HarmonicPotential& pot, const std::vector<DiskPoint>& pts,
                             const std::vector<double>& w) {
    const OneFormField alpha = pot.differential();
    NeumaierSum acc;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const DeformationTensor d = deformation_tensor(alpha, pts[i]);
        const double lam = conformal_factor(pts[i]);
        acc.add(w[i] * d.norm2_hyperbolic * (lam * lam));
    }
    return acc.value();
}

}  // namespace

RefinedValue deformation_energy(const HarmonicPotential& pot, const GradedDiskRule& rule) {
    const double base = deformation_energy_on(pot, rule.points(), rule.weights());
    const GradedDiskRule fine = rule.refined();
    const double refined = deformation_energy_on(pot, fine.points(), fine.weights());
    RefinedValue out;
    out.value = refined;
    out.refinement_delta = std::abs(refined - base) / std::max(std::abs(refined), 1e-300);
    return out;
}

}  // namespace hypflow
