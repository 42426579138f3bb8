#pragma once

#include "hypflow/growth.hpp"

// Desk-scale evidence for the dimensional dichotomy: the hyperbolic
// Dirichlet energy of a bounded harmonic extension saturates on H^2 and
// keeps growing linearly in the hyperbolic radius on H^3. Both runs share
// the shell accumulation and the classifier; only the dimension weight and
// the extension operator differ. The report language is deliberately
// "consistent with" the non-existence statement, not a proof of it, and the
// linear growth rate is measured, not asserted.

namespace hypflow {

struct DichotomyParams {
    double r_max = 10.0;
    int shells = 40;
    int panel_nodes = 8;
    double fit_window_lo = 4.0;

    int circle_count = 64;    // angular energy rule, n = 2

    int kernel_polar = 12;    // Poisson-kernel rule, n = 3 (order per polar panel)
    int kernel_azimuth = 32;
    int sphere_polar = 12;    // angular energy rule, n = 3
    int sphere_azimuth = 24;

    ClassificationThresholds thresholds{};
};

struct DichotomyResult {
    GrowthCurve curve2;
    GrowthCurve curve3;
    GrowthCurve curve3_doubled;  // doubled kernel + angular quadrature
    Classification class2;
    Classification class3;
    double spectral_oracle2 = 0.0;  // exact 2D limit for the given data
};

DichotomyResult dichotomy_experiment(const BoundaryData& data2d, const SphereFn& data3d,
                                     const DichotomyParams& params = {});

}  // namespace hypflow
