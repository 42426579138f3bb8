#include "hypflow/euler.hpp"

#include <cmath>

namespace hypflow {

SteadySolution::SteadySolution(BoundaryData data, double pressure_factor)
    : pot_(std::move(data)), pressure_factor_(pressure_factor) {}

double SteadySolution::pressure(const DiskPoint& p) const {
    const PointwiseNorms n = pointwise_norms(pot_.gradient(p), p);
    return -0.5 * pressure_factor_ * n.hyperbolic * n.hyperbolic;
}

Vec2 SteadySolution::pressure_differential(const DiskPoint& p) const {
    // d(-1/2 |dPhi|_h^2) = -1/2 d(lambda^-2 |dPhi|_e^2), shared with the
    // Lie-derivative evaluator.
    const Vec2 d_norm2 = lie_derivative_closed_1form(pot_.differential(), p);
    return d_norm2 * (-0.5 * pressure_factor_);
}

SteadySolution SteadySolution::with_pressure_factor(double factor) const {
    return SteadySolution(pot_.boundary(), factor);
}

SteadySolution build_steady(const BoundaryData& data) { return SteadySolution(data); }

Vec2 euler_residual(const SteadySolution& sol, const DiskPoint& p) {
    const OneFormField alpha = sol.potential().differential();
    const VectorField v = sol.potential().velocity();
    const Vec2 advective = covariant_derivative_1form(alpha, v, p);
    return advective + sol.pressure_differential(p);
}

double coset_triviality_check(const SteadySolution& sol, const DiskRule& rule) {
    const HarmonicPotential& pot = sol.potential();

    // int (alpha(v_alpha))^2 dmu_h: contract dPhi with sharp(dPhi) pointwise.
    const double contraction = integrate_disk(
        [&pot](const DiskPoint& p) {
            const Vec2 a = pot.gradient(p);
            const Vec2 va = sharp(a, p);
            const double pairing = a.dot(va);
            const double lam = conformal_factor(p);
            return pairing * pairing * lam * lam;
        },
        rule);

    const double l4 = l4_norm_hyperbolic(pot, rule);
    if (l4 == 0.0) return 0.0;  // zero form: both sides vanish identically
    return std::abs(contraction - l4) / l4;
}

}  // namespace hypflow
