#pragma once

#include "hypflow/harmonic.hpp"
#include "hypflow/quadrature.hpp"
#include "hypflow/report.hpp"
#include "hypflow/time_profile.hpp"

namespace hypflow {

// Time-rescaled solution v(t) = f(t) sharp(dPhi) with pressure
//   p(t, x) = (2 f(t) - f'(t)) Phi(x) - f(t)^2 |dPhi|_h^2(x) / 2,
// which absorbs both the Ricci term and the advective term of the 1-form
// Navier-Stokes equations.
class NSSolution {
public:
    NSSolution(BoundaryData data, TimeProfile profile);

    const HarmonicPotential& potential() const { return pot_; }
    const TimeProfile& profile() const { return profile_; }

    Vec2 velocity(double t, const DiskPoint& p) const;
    Vec2 velocity_flat(double t, const DiskPoint& p) const;  // f(t) dPhi
    double pressure(double t, const DiskPoint& p) const;
    Vec2 pressure_differential(double t, const DiskPoint& p) const;

    // delta v^flat (hyperbolic divergence, negated); ~0 for all t.
    double coclosedness(double t, const DiskPoint& p) const;

private:
    HarmonicPotential pot_;
    TimeProfile profile_;
};

// The five covectors of the 1-form momentum equation at (t, p):
//   T1 + T2 + T3 + T4 + T5 = dv/dt + nabla_v v^flat - Lap v^flat + 2 r(v^flat) + dp,
// whose sum vanishes for the constructed pair (v, p).
struct NSResidualTerms {
    Vec2 time_derivative;    // T1 = f' dPhi
    Vec2 advective;          // T2 = nabla_v v^flat
    Vec2 minus_laplacian;    // T3 = -(d delta + delta d) v^flat
    Vec2 ricci;              // T4 = 2 r(v^flat) = -2 f dPhi
    Vec2 pressure_gradient;  // T5 = dp
    Vec2 sum;
    // T2 - f^2 d|dPhi|_h^2 / 2; zero up to rounding (the closed-form identity
    // the pressure construction relies on).
    Vec2 advective_identity_gap;
};

NSResidualTerms ns_residual_terms(const NSSolution& sol, double t, const DiskPoint& p);

// Energy table over [0, t_max]: columns t, f, E, four_F2, lhs, rhs, margin
// where E = f^2 ||dPhi||^2_h, four_F2 = 4 F2 ||dPhi||^2_h (the accumulated
// dissipation, using ||Def v||^2 = ||dPhi||^2_h), lhs = E + four_F2 and
// rhs = E(0). Also usable as the initial-data continuity table via
// ||v(t) - v0|| = |f(t) - f(0)| ||dPhi||.
Report energy_report(const NSSolution& sol, const DiskRule& rule, double t_max, int steps);

struct NonUniquenessCertificate {
    bool same_initial_data = false;
    bool both_admissible = false;
    double max_residual = 0.0;    // over both solutions on the probe grid
    double max_ricci_term = 0.0;  // non-triviality witness
    double max_separation = 0.0;
    double l2_velocity = 0.0;  // ||sharp(dPhi)||_{L2,h} by quadrature
    bool pass = false;
    Report table;  // t, f, E, four_F2, lhs, rhs, margin, sep

    NonUniquenessCertificate() : table(std::vector<std::string>{}) {}
};

// Two admissible profiles with the same f(0) solving the same Cauchy
// problem: certifies identical initial data, residual smallness for both,
// and positive L2 separation at later times. Throws std::invalid_argument
// when f1(0) != f2(0) and std::runtime_error (naming the violating time)
// when a profile fails admissibility.
NonUniquenessCertificate nonuniqueness_demo(const BoundaryData& data, const TimeProfile& f1,
                                            const TimeProfile& f2, const DiskRule& rule,
                                            double t_max, int steps,
                                            const std::vector<DiskPoint>& probes);

}  // namespace hypflow
