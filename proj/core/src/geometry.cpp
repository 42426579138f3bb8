#include "hypflow/geometry.hpp"

#include <cmath>

namespace hypflow {

namespace {

// Shift p by h along axis `axis`; throws if the stencil would leave the chart.
DiskPoint shifted(const DiskPoint& p, int axis, double h) {
    const double x = p.x() + (axis == 0 ? h : 0.0);
    const double y = p.y() + (axis == 1 ? h : 0.0);
    if (!(x * x + y * y < 1.0))
        throw std::domain_error("finite-difference stencil leaves the unit disk");
    return {x, y};
}

double effective_step(const OneFormField& f, const DiskPoint& p) {
    return f.fd_step * (1.0 - p.r());
}

}  // namespace

Mat2 OneFormField::jacobian_at(const DiskPoint& p) const {
    if (jacobian) return jacobian(p);
    const double h = effective_step(*this, p);
    Mat2 j;
    for (int i = 0; i < 2; ++i) {
        const Vec2 plus = components(shifted(p, i, h));
        const Vec2 minus = components(shifted(p, i, -h));
        j(i, 0) = (plus.x - minus.x) / (2.0 * h);
        j(i, 1) = (plus.y - minus.y) / (2.0 * h);
    }
    return j;
}

std::array<Mat2, 2> OneFormField::jacobian_gradient_at(const DiskPoint& p) const {
    if (jacobian_gradient) return jacobian_gradient(p);
    const double h = effective_step(*this, p);
    std::array<Mat2, 2> s;
    for (int k = 0; k < 2; ++k) {
        const Mat2 plus = jacobian_at(shifted(p, k, h));
        const Mat2 minus = jacobian_at(shifted(p, k, -h));
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) s[k](i, j) = (plus(i, j) - minus(i, j)) / (2.0 * h);
    }
    return s;
}

Vec2 covariant_derivative_1form(const OneFormField& alpha, const VectorField& v,
                                const DiskPoint& p) {
    const Vec2 a = alpha.components(p);
    const Vec2 vv = v.components(p);
    const Mat2 jac = alpha.jacobian_at(p);
    const Christoffel2 gamma = christoffel(p);

    const double ac[2] = {a.x, a.y};
    const double vc[2] = {vv.x, vv.y};
    double out[2] = {0.0, 0.0};
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < 2; ++i) {
            double t = jac(i, j);
            for (int k = 0; k < 2; ++k) t -= gamma(k, i, j) * ac[k];
            out[j] += vc[i] * t;
        }
    return {out[0], out[1]};
}

double codifferential_1form(const OneFormField& alpha, const DiskPoint& p) {
    const double lam = conformal_factor(p);
    return -alpha.jacobian_at(p).trace() / (lam * lam);
}

Vec2 hodge_laplacian_1form(const OneFormField& alpha, const DiskPoint& p) {
    const Mat2 jac = alpha.jacobian_at(p);
    const std::array<Mat2, 2> grad_jac = alpha.jacobian_gradient_at(p);

    const double lam = conformal_factor(p);
    const double ilam2 = 1.0 / (lam * lam);
    const Vec2 u = log_conformal_gradient(p);

    const double div = jac.trace();                 // d_x a_x + d_y a_y
    const double curl = jac(0, 1) - jac(1, 0);      // d_x a_y - d_y a_x
    const double ddiv[2] = {grad_jac[0](0, 0) + grad_jac[0](1, 1),
                            grad_jac[1](0, 0) + grad_jac[1](1, 1)};
    const double dcurl[2] = {grad_jac[0](0, 1) - grad_jac[0](1, 0),
                             grad_jac[1](0, 1) - grad_jac[1](1, 0)};

    // d(delta alpha) with delta alpha = -lambda^-2 div
    const double ddelta[2] = {2.0 * ilam2 * u.x * div - ilam2 * ddiv[0],
                              2.0 * ilam2 * u.y * div - ilam2 * ddiv[1]};
    // delta(d alpha): d alpha = curl dx^dy, star(dx^dy) = lambda^-2
    const double deltad[2] = {-2.0 * ilam2 * u.y * curl + ilam2 * dcurl[1],
                              2.0 * ilam2 * u.x * curl - ilam2 * dcurl[0]};

    return {ddelta[0] + deltad[0], ddelta[1] + deltad[1]};
}

Vec2 lie_derivative_closed_1form(const OneFormField& alpha, const DiskPoint& p) {
    const Vec2 a = alpha.components(p);
    const Mat2 jac = alpha.jacobian_at(p);
    const double lam = conformal_factor(p);
    const double ilam2 = 1.0 / (lam * lam);
    const Vec2 u = log_conformal_gradient(p);

    // d(lambda^-2 |alpha|_e^2)_j = 2 lambda^-2 (sum_i a_i J(j,i) - u_j |alpha|_e^2)
    const double n2 = a.norm2();
    return {2.0 * ilam2 * (a.x * jac(0, 0) + a.y * jac(0, 1) - u.x * n2),
            2.0 * ilam2 * (a.x * jac(1, 0) + a.y * jac(1, 1) - u.y * n2)};
}

DeformationTensor deformation_tensor(const OneFormField& alpha, const DiskPoint& p) {
    const Vec2 a = alpha.components(p);
    const Mat2 jac = alpha.jacobian_at(p);
    const Christoffel2 gamma = christoffel(p);
    const double ac[2] = {a.x, a.y};

    Mat2 nabla;  // nabla(i,j) = nabla_i alpha_j
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            double t = jac(i, j);
            for (int k = 0; k < 2; ++k) t -= gamma(k, i, j) * ac[k];
            nabla(i, j) = t;
        }

    DeformationTensor d;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) d.lowered(i, j) = 0.5 * (nabla(i, j) + nabla(j, i));

    const double lam = conformal_factor(p);
    const double ilam2 = 1.0 / (lam * lam);
    double frob = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) frob += d.lowered(i, j) * d.lowered(i, j);
    d.norm2_hyperbolic = ilam2 * ilam2 * frob;
    d.metric_trace = ilam2 * d.lowered.trace();
    return d;
}

}  // namespace hypflow
