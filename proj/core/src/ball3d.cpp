#include "hypflow/ball3d.hpp"

#include <cmath>
#include <stdexcept>

namespace hypflow {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

// Orthonormal frame (e1, e2, n) for a unit direction n; deterministic choice.
void frame_for(const Vec3& n, Vec3& e1, Vec3& e2) {
    if (std::abs(n.x) <= std::abs(n.y) && std::abs(n.x) <= std::abs(n.z))
        e1 = {0.0, -n.z, n.y};
    else if (std::abs(n.y) <= std::abs(n.z))
        e1 = {-n.z, 0.0, n.x};
    else
        e1 = {-n.y, n.x, 0.0};
    const double len = e1.norm();
    e1 = e1 * (1.0 / len);
    e2 = {n.y * e1.z - n.z * e1.y, n.z * e1.x - n.x * e1.z, n.x * e1.y - n.y * e1.x};
}

}  // namespace

SphereRule::SphereRule(int polar_order, int azimuth_count)
    : polar_(polar_order), azimuth_(azimuth_count) {
    if (polar_order < 1 || azimuth_count < 1)
        throw std::invalid_argument("SphereRule: orders must be >= 1");
    const GaussRule gl = gauss_legendre(polar_order);
    nodes_.reserve(static_cast<std::size_t>(polar_order) * azimuth_count);
    weights_.reserve(nodes_.capacity());
    for (int i = 0; i < polar_order; ++i) {
        const double u = gl.nodes[i];
        const double su = std::sqrt(std::max(0.0, 1.0 - u * u));
        // normalized measure: (1/2) du x (1/M) d(az)
        const double w = 0.5 * gl.weights[i] / azimuth_count;
        for (int j = 0; j < azimuth_count; ++j) {
            const double az = kTwoPi * j / azimuth_count;
            nodes_.push_back({su * std::cos(az), su * std::sin(az), u});
            weights_.push_back(w);
        }
    }
}

BallPotential3D::BallPotential3D(SphereFn phi, int polar_order, int azimuth_count)
    : phi_(std::move(phi)), polar_(polar_order), azimuth_(azimuth_count) {
    if (polar_order < 2 || azimuth_count < 1)
        throw std::invalid_argument("BallPotential3D: need polar_order >= 2, azimuth >= 1");
    const GaussRule gl = gauss_legendre(polar_order);
    gl_nodes_ = gl.nodes;
    gl_weights_ = gl.weights;
    cos_az_.resize(azimuth_count);
    sin_az_.resize(azimuth_count);
    for (int j = 0; j < azimuth_count; ++j) {
        const double az = kTwoPi * j / azimuth_count;
        cos_az_[j] = std::cos(az);
        sin_az_[j] = std::sin(az);
    }
}

// Polar rule for the kernel integral at Euclidean radius rho < 1. The kernel
// (A/D)^2 with A = 1 - rho^2, D = |x - xi|^2 = 1 + rho^2 - 2 rho u spans a
// factor ((1+rho)/(1-rho))^4 over u in [-1, 1], so for rho > 1/4 the panels
// are graded geometrically in D (ratio <= 4 each) and the nodes live in
// D-space: D near (1-rho)^2 would drown in cancellation if recomputed from
// u, while u, 1 -+ u and rho - u all derive from D with no precision loss:
//   u = (1 + rho^2 - D)/(2 rho),   1 - u = (D - (1-rho)^2)/(2 rho),
//   1 + u = ((1+rho)^2 - D)/(2 rho),   rho - u = (D - A)/(2 rho).
void BallPotential3D::polar_nodes(double rho, std::vector<KernelNode>& nodes) const {
    nodes.clear();
    if (rho <= 0.25) {
        for (int i = 0; i < polar_; ++i) {
            KernelNode kn;
            kn.u = gl_nodes_[i];
            kn.d = 1.0 + rho * rho - 2.0 * rho * kn.u;
            kn.su = std::sqrt(std::max(0.0, (1.0 - kn.u) * (1.0 + kn.u)));
            kn.rho_minus_u = rho - kn.u;
            kn.w = 0.5 * gl_weights_[i];
            nodes.push_back(kn);
        }
        return;
    }

    const double d_lo = (1.0 - rho) * (1.0 - rho);
    const double d_hi = (1.0 + rho) * (1.0 + rho);
    const double area = (1.0 - rho) * (1.0 + rho);
    const int panels = std::max(1, (int)std::ceil(std::log2(d_hi / d_lo) / 2.0));
    const double ratio = std::pow(d_hi / d_lo, 1.0 / panels);
    const double inv_2rho = 1.0 / (2.0 * rho);

    double d_left = d_lo;
    for (int k = 0; k < panels; ++k) {
        const double d_right = (k + 1 == panels) ? d_hi : d_left * ratio;
        const double mid = 0.5 * (d_left + d_right), half = 0.5 * (d_right - d_left);
        for (int i = 0; i < polar_; ++i) {
            KernelNode kn;
            kn.d = mid + half * gl_nodes_[i];
            kn.u = (1.0 + rho * rho - kn.d) * inv_2rho;
            const double one_minus_u = (kn.d - d_lo) * inv_2rho;
            const double one_plus_u = (d_hi - kn.d) * inv_2rho;
            kn.su = std::sqrt(std::max(0.0, one_minus_u * one_plus_u));
            kn.rho_minus_u = (kn.d - area) * inv_2rho;
            // measure: (1/2) du with du = dD/(2 rho)
            kn.w = 0.5 * half * gl_weights_[i] * inv_2rho;
            nodes.push_back(kn);
        }
        d_left = d_right;
    }
}

double BallPotential3D::value(const Vec3& x) const {
    const double rho2 = x.norm2();
    if (!(rho2 < 1.0))
        throw std::domain_error("BallPotential3D::value: point outside the unit ball");
    const double rho = std::sqrt(rho2);

    Vec3 n{0.0, 0.0, 1.0}, e1{1.0, 0.0, 0.0}, e2{0.0, 1.0, 0.0};
    if (rho > 0.0) {
        n = x * (1.0 / rho);
        frame_for(n, e1, e2);
    }
    const double area = (1.0 - rho) * (1.0 + rho);

    std::vector<KernelNode> nodes;
    polar_nodes(rho, nodes);

    NeumaierSum acc;
    for (const KernelNode& kn : nodes) {
        const double p = area / kn.d;
        const double w = kn.w * p * p / azimuth_;
        NeumaierSum ring;
        for (int j = 0; j < azimuth_; ++j) {
            const Vec3 xi = n * kn.u + (e1 * cos_az_[j] + e2 * sin_az_[j]) * kn.su;
            ring.add(phi_(xi));
        }
        acc.add(w * ring.value());
    }
    return acc.value();
}

Vec3 BallPotential3D::gradient(const Vec3& x) const {
    const double rho2 = x.norm2();
    if (!(rho2 < 1.0))
        throw std::domain_error("BallPotential3D::gradient: point outside the unit ball");
    const double rho = std::sqrt(rho2);

    Vec3 n{0.0, 0.0, 1.0}, e1{1.0, 0.0, 0.0}, e2{0.0, 1.0, 0.0};
    if (rho > 0.0) {
        n = x * (1.0 / rho);
        frame_for(n, e1, e2);
    }
    const double area = (1.0 - rho) * (1.0 + rho);

    std::vector<KernelNode> nodes;
    polar_nodes(rho, nodes);

    // grad_x(P^2) = P^2 * (-4x/A - 4(x - xi)/D); x - xi is assembled from
    // rho - u and sin(polar) in their cancellation-free forms.
    NeumaierSum gx, gy, gz;
    for (const KernelNode& kn : nodes) {
        const double p = area / kn.d;
        const double w = kn.w * p * p / azimuth_;
        NeumaierSum rx, ry, rz;
        for (int j = 0; j < azimuth_; ++j) {
            const Vec3 xi = n * kn.u + (e1 * cos_az_[j] + e2 * sin_az_[j]) * kn.su;
            const double f = phi_(xi);
            const Vec3 diff =
                n * kn.rho_minus_u - (e1 * cos_az_[j] + e2 * sin_az_[j]) * kn.su;
            const Vec3 ratio = x * (-4.0 / area) + diff * (-4.0 / kn.d);
            rx.add(f * ratio.x);
            ry.add(f * ratio.y);
            rz.add(f * ratio.z);
        }
        gx.add(w * rx.value());
        gy.add(w * ry.value());
        gz.add(w * rz.value());
    }
    return {gx.value(), gy.value(), gz.value()};
}

double BallPotential3D::boundary_mean() const {
    const SphereRule rule(polar_, azimuth_);
    NeumaierSum acc;
    for (std::size_t i = 0; i < rule.nodes().size(); ++i)
        acc.add(rule.weights()[i] * phi_(rule.nodes()[i]));
    return acc.value();
}

BallPotential3D ball_extend_3d(SphereFn phi, int polar_order, int azimuth_count,
                               double tolerance) {
    BallPotential3D base(phi, polar_order, azimuth_count);
    const BallPotential3D fine = base.refined();
    const double radii[] = {0.0, 0.35, 0.7, 0.9};
    const Vec3 dirs[] = {{0.0, 0.0, 1.0},
                         {0.70710678118654752, 0.70710678118654752, 0.0},
                         {-0.57735026918962576, 0.57735026918962576, 0.57735026918962576}};
    for (double r : radii)
        for (const Vec3& d : dirs) {
            const Vec3 x = d * r;
            const double delta = std::abs(base.value(x) - fine.value(x));
            if (!(delta <= tolerance))
                throw std::runtime_error(
                    "ball_extend_3d: quadrature did not converge (doubling the rule moved a "
                    "probe value by " +
                    std::to_string(delta) + ")");
        }
    return base;
}

}  // namespace hypflow
