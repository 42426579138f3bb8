#include "hypflow/navier_stokes.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace hypflow {

NSSolution::NSSolution(BoundaryData data, TimeProfile profile)
    : pot_(std::move(data)), profile_(std::move(profile)) {}

Vec2 NSSolution::velocity(double t, const DiskPoint& p) const {
    return sharp(pot_.gradient(p), p) * profile_.value(t);
}

Vec2 NSSolution::velocity_flat(double t, const DiskPoint& p) const {
    return pot_.gradient(p) * profile_.value(t);
}

double NSSolution::pressure(double t, const DiskPoint& p) const {
    const double f = profile_.value(t);
    const double fp = profile_.derivative(t);
    const PointwiseNorms n = pointwise_norms(pot_.gradient(p), p);
    return (2.0 * f - fp) * pot_.value(p) - 0.5 * f * f * n.hyperbolic * n.hyperbolic;
}

Vec2 NSSolution::pressure_differential(double t, const DiskPoint& p) const {
    const double f = profile_.value(t);
    const double fp = profile_.derivative(t);
    const Vec2 dphi = pot_.gradient(p);
    const Vec2 d_norm2 = lie_derivative_closed_1form(pot_.differential(), p);
    return dphi * (2.0 * f - fp) + d_norm2 * (-0.5 * f * f);
}

double NSSolution::coclosedness(double t, const DiskPoint& p) const {
    return profile_.value(t) * codifferential_1form(pot_.differential(), p);
}

NSResidualTerms ns_residual_terms(const NSSolution& sol, double t, const DiskPoint& p) {
    const TimeProfile& prof = sol.profile();
    const HarmonicPotential& pot = sol.potential();
    const double f = prof.value(t);
    const double fp = prof.derivative(t);

    const OneFormField alpha = pot.differential();
    const Vec2 dphi = pot.gradient(p);

    NSResidualTerms terms;
    terms.time_derivative = dphi * fp;
    terms.advective =
        covariant_derivative_1form(alpha, pot.velocity(), p) * (f * f);
    terms.minus_laplacian = hodge_laplacian_1form(alpha, p) * (-f);
    terms.ricci = ricci_action(dphi) * (2.0 * f);
    terms.pressure_gradient = sol.pressure_differential(t, p);
    terms.sum = terms.time_derivative + terms.advective + terms.minus_laplacian + terms.ricci +
                terms.pressure_gradient;
    terms.advective_identity_gap =
        terms.advective - lie_derivative_closed_1form(alpha, p) * (0.5 * f * f);
    return terms;
}

Report energy_report(const NSSolution& sol, const DiskRule& rule, double t_max, int steps) {
    if (!(t_max > 0.0) || steps < 1)
        throw std::invalid_argument("energy_report: need t_max > 0 and steps >= 1");
    const double dirichlet = l2_norms(sol.potential(), rule).hyperbolic;
    const TimeProfile& prof = sol.profile();
    const double f0 = prof.value(0.0);
    const double rhs = f0 * f0 * dirichlet;

    Report rep({"t", "f", "E", "four_F2", "lhs", "rhs", "margin"});
    for (int i = 0; i <= steps; ++i) {
        const double t = t_max * i / steps;
        const double f = prof.value(t);
        const double energy = f * f * dirichlet;
        const double dissipated = 4.0 * prof.squared_integral(t) * dirichlet;
        const double lhs = energy + dissipated;
        rep.add_row({t, f, energy, dissipated, lhs, rhs, rhs - lhs});
    }
    return rep;
}

NonUniquenessCertificate nonuniqueness_demo(const BoundaryData& data, const TimeProfile& f1,
                                            const TimeProfile& f2, const DiskRule& rule,
                                            double t_max, int steps,
                                            const std::vector<DiskPoint>& probes) {
    if (f1.value(0.0) != f2.value(0.0))
        throw std::invalid_argument("nonuniqueness_demo: profiles disagree at t = 0, not the "
                                    "same Cauchy problem");
    for (const TimeProfile* prof : {&f1, &f2}) {
        const AdmissibilityResult adm = leray_hopf_admissible(*prof, t_max, steps);
        if (!adm.pass) {
            char msg[160];
            std::snprintf(msg, sizeof(msg),
                          "nonuniqueness_demo: profile %s violates the Leray-Hopf condition at "
                          "t = %.17g (margin %.17g)",
                          prof->describe().c_str(), adm.min_margin_time, adm.min_margin);
            throw std::runtime_error(msg);
        }
    }

    NonUniquenessCertificate cert;
    cert.both_admissible = true;

    NSSolution sol1(data, f1);
    NSSolution sol2(data, f2);

    const double dirichlet = l2_norms(sol1.potential(), rule).hyperbolic;
    cert.l2_velocity = std::sqrt(dirichlet);
    cert.same_initial_data =
        std::abs(f1.value(0.0) - f2.value(0.0)) * cert.l2_velocity == 0.0;

    for (const DiskPoint& p : probes) {
        for (int i = 0; i <= steps; ++i) {
            const double t = t_max * i / steps;
            for (const NSSolution* sol : {&sol1, &sol2}) {
                const NSResidualTerms terms = ns_residual_terms(*sol, t, p);
                cert.max_residual = std::max(cert.max_residual, terms.sum.norm());
                cert.max_ricci_term = std::max(cert.max_ricci_term, terms.ricci.norm());
            }
        }
    }

    const double f0 = f1.value(0.0);
    const double rhs = f0 * f0 * dirichlet;
    Report rep({"t", "f", "E", "four_F2", "lhs", "rhs", "margin", "sep"});
    for (int i = 0; i <= steps; ++i) {
        const double t = t_max * i / steps;
        const double fa = f1.value(t);
        const double energy = fa * fa * dirichlet;
        const double dissipated = 4.0 * f1.squared_integral(t) * dirichlet;
        const double sep = std::abs(fa - f2.value(t)) * cert.l2_velocity;
        cert.max_separation = std::max(cert.max_separation, sep);
        rep.add_row({t, fa, energy, dissipated, energy + dissipated, rhs, rhs - (energy + dissipated),
                     sep});
    }
    cert.table = std::move(rep);
    cert.pass = cert.same_initial_data && cert.both_admissible && cert.max_separation > 0.0;
    return cert;
}

}  // namespace hypflow
