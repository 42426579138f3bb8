#include "hypflow/higher_dim.hpp"

#include <stdexcept>

namespace hypflow {

DichotomyResult dichotomy_experiment(const BoundaryData& data2d, const SphereFn& data3d,
                                     const DichotomyParams& params) {
    if (!(params.r_max >= 6.0))
        throw std::invalid_argument("dichotomy_experiment: r_max must be >= 6");
    if (params.shells < 20)
        throw std::invalid_argument("dichotomy_experiment: shells must be >= 20");

    DichotomyResult out;
    out.spectral_oracle2 = spectral_dirichlet_energy(data2d);

    const HarmonicPotential pot2(data2d);
    out.curve2 = truncated_energy_growth(circle_energy(pot2, params.circle_count), 2,
                                         uniform_radii(params.r_max, params.shells),
                                         params.panel_nodes, params.fit_window_lo);

    const BallPotential3D pot3(data3d, params.kernel_polar, params.kernel_azimuth);
    const SphereRule angular(params.sphere_polar, params.sphere_azimuth);
    out.curve3 = truncated_energy_growth(sphere_energy(pot3, angular), 3,
                                         uniform_radii(params.r_max, params.shells),
                                         params.panel_nodes, params.fit_window_lo);

    const BallPotential3D pot3_fine = pot3.refined();
    out.curve3_doubled = truncated_energy_growth(sphere_energy(pot3_fine, angular.refined()), 3,
                                                 uniform_radii(params.r_max, params.shells),
                                                 params.panel_nodes, params.fit_window_lo);

    out.class2 = classify_growth(out.curve2, nullptr, params.thresholds);
    out.class3 = classify_growth(out.curve3, &out.curve3_doubled, params.thresholds);
    return out;
}

}  // namespace hypflow
