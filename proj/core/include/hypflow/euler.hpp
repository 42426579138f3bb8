#pragma once

#include "hypflow/harmonic.hpp"
#include "hypflow/quadrature.hpp"

namespace hypflow {

// Steady Euler solution built from a harmonic potential: velocity
// v = sharp(dPhi), Bernoulli pressure p = -|dPhi|_h^2 / 2. The pressure may
// carry a deliberate corruption factor so residual tests can prove they
// detect wrong pressures, not just accept zeros.
class SteadySolution {
public:
    explicit SteadySolution(BoundaryData data, double pressure_factor = 1.0);

    const HarmonicPotential& potential() const { return pot_; }
    double pressure_factor() const { return pressure_factor_; }

    Vec2 velocity(const DiskPoint& p) const { return sharp(pot_.gradient(p), p); }
    double pressure(const DiskPoint& p) const;
    Vec2 pressure_differential(const DiskPoint& p) const;  // dp, analytic

    // Corrupted copy for negative controls.
    SteadySolution with_pressure_factor(double factor) const;

private:
    HarmonicPotential pot_;
    double pressure_factor_;
};

SteadySolution build_steady(const BoundaryData& data);

// nabla_v v^flat + dp, evaluated analytically; vanishes to rounding for the
// Bernoulli pressure since nabla_v v^flat = d|dPhi|_h^2 / 2.
Vec2 euler_residual(const SteadySolution& sol, const DiskPoint& p);

// Relative gap | int (alpha(v_alpha))^2 dmu_h - ||alpha||^4_{L4,h} | /
// ||alpha||^4_{L4,h}; the two sides integrate the same function through
// different code paths. Returns 0 for the zero form.
double coset_triviality_check(const SteadySolution& sol, const DiskRule& rule);

}  // namespace hypflow
