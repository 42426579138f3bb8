#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hypflow/ball3d.hpp"
#include "hypflow/harmonic.hpp"
#include "hypflow/report.hpp"

// Truncated exhaustion of the hyperbolic Dirichlet energy
//   E(R) = int_{B_R} |dPhi|_h^2 dmu_h = int_{B_r(R)} lambda^(n-2) |dPhi|_e^2 dmu_e,
// parametrized by hyperbolic radius R, Euclidean radius r = tanh(R/2).
// Dimensions 2 and 3 run through the same shell accumulation and the same
// classification; only the weight lambda^(n-2) and the angular energy
// evaluator differ.

namespace hypflow {

// S(rho) = integral of |dPhi(rho * omega)|_e^2 over the unit circle/sphere
// with the unnormalized angular measure (2*pi resp. 4*pi total mass).
using AngularEnergy = std::function<double(double)>;

AngularEnergy circle_energy(const HarmonicPotential& pot, int angular_count);
AngularEnergy sphere_energy(const BallPotential3D& pot, const SphereRule& rule);

struct GrowthCurve {
    std::vector<double> radius;      // hyperbolic radii R_j (increasing)
    std::vector<double> energy;      // cumulative E(R_j)
    std::vector<double> increments;  // per-shell contributions (nonnegative)

    double fit_window_lo = 0.0;  // linear fit of E vs R over R >= fit_window_lo
    double fit_slope = 0.0;
    double fit_intercept = 0.0;
    double fit_residual = 0.0;  // rms residual of the fit

    double final_energy() const { return energy.empty() ? 0.0 : energy.back(); }
};

// Accumulates E over shells [R_{j-1}, R_j] with per-shell Gauss-Legendre in
// R (panel_nodes nodes); shells run in parallel, accumulation order is
// fixed. `radii` must be strictly increasing and positive.
GrowthCurve truncated_energy_growth(const AngularEnergy& s, int dim, std::vector<double> radii,
                                    int panel_nodes, double fit_window_lo);

// Uniform radius grid helper: R_j = r_max * j / shells, j = 1..shells.
std::vector<double> uniform_radii(double r_max, int shells);

// Iterated-Aitken limit of the cumulative energies restricted to R >=
// burn_in (requires a uniform grid there). For exponentially saturating
// curves this recovers the limit far beyond the raw truncation error.
double extrapolate_limit(const GrowthCurve& curve, double burn_in, int sweeps = 2);

// CSV schema (R, E, delta_E, fit_slope, fit_residual).
Report growth_report(const GrowthCurve& curve);

enum class GrowthClass { Convergent, Divergent, Inconclusive };
std::string to_string(GrowthClass c);

struct ClassificationThresholds {
    double tail_rel_tol = 1e-2;       // estimated remaining tail / limit
    double abs_floor = 1e-12;         // energies below this are just zero
    double decay_ratio_max = 0.9;     // geometric decay of shell increments
    double residual_rel_tol = 1e-2;   // rms fit residual / E(R_max)
    double slope_stability = 5e-2;    // relative slope shift under doubling
};

struct Classification {
    GrowthClass label = GrowthClass::Inconclusive;
    double tail_estimate = 0.0;   // estimated E(inf) - E(R_max) (Convergent)
    double limit_estimate = 0.0;  // estimated E(inf) (Convergent)
    double slope_shift = 0.0;     // relative slope change vs doubled curve
};

// `doubled` is the same experiment at doubled quadrature orders; pass
// nullptr to skip the stability gate (2D convergent runs don't need it).
Classification classify_growth(const GrowthCurve& curve, const GrowthCurve* doubled,
                               const ClassificationThresholds& thresholds = {});

}  // namespace hypflow
