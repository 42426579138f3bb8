#include "hypflow/growth.hpp"

#include <cmath>
#include <future>
#include <stdexcept>
#include <thread>

#include "hypflow/quadrature.hpp"

namespace hypflow {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

// Integrand of dE/dR: S(rho) * lambda^(dim-2) * rho^(dim-1) * drho/dR with
// rho = tanh(R/2), drho/dR = (1 - rho^2)/2.
double shell_integrand(const AngularEnergy& s, int dim, double r_hyp) {
    const double rho = std::tanh(0.5 * r_hyp);
    const double one_minus_rho2 = 1.0 - rho * rho;
    double weight = 0.5 * one_minus_rho2;  // drho/dR
    for (int k = 0; k < dim - 1; ++k) weight *= rho;
    if (dim != 2) {
        const double lam = 2.0 / one_minus_rho2;
        for (int k = 0; k < dim - 2; ++k) weight *= lam;
    }
    return weight * s(rho);
}

}  // namespace

AngularEnergy circle_energy(const HarmonicPotential& pot, int angular_count) {
    if (angular_count < 1) throw std::invalid_argument("circle_energy: angular_count >= 1");
    return [pot, angular_count](double rho) {
        NeumaierSum acc;
        for (int j = 0; j < angular_count; ++j) {
            const double t = kTwoPi * j / angular_count;
            const DiskPoint p(rho * std::cos(t), rho * std::sin(t));
            acc.add(pot.gradient(p).norm2());
        }
        return kTwoPi * acc.value() / angular_count;
    };
}

AngularEnergy sphere_energy(const BallPotential3D& pot, const SphereRule& rule) {
    return [pot, rule](double rho) {
        NeumaierSum acc;
        const auto& nodes = rule.nodes();
        const auto& w = rule.weights();
        for (std::size_t i = 0; i < nodes.size(); ++i)
            acc.add(w[i] * pot.gradient(nodes[i] * rho).norm2());
        return 2.0 * kTwoPi * acc.value();  // weights are normalized to 1
    };
}

std::vector<double> uniform_radii(double r_max, int shells) {
    if (!(r_max > 0.0) || shells < 1) throw std::invalid_argument("uniform_radii: bad arguments");
    std::vector<double> r(shells);
    for (int j = 1; j <= shells; ++j) r[j - 1] = r_max * j / shells;
    return r;
}

GrowthCurve truncated_energy_growth(const AngularEnergy& s, int dim, std::vector<double> radii,
                                    int panel_nodes, double fit_window_lo) {
    if (dim < 2) throw std::invalid_argument("truncated_energy_growth: dim must be >= 2");
    if (panel_nodes < 2) throw std::invalid_argument("truncated_energy_growth: panel_nodes >= 2");
    if (radii.empty()) throw std::invalid_argument("truncated_energy_growth: no radii");
    for (std::size_t j = 0; j < radii.size(); ++j) {
        const double prev = j == 0 ? 0.0 : radii[j - 1];
        if (!(radii[j] > prev))
            throw std::invalid_argument("truncated_energy_growth: radii must increase from 0");
    }

    const GaussRule gl = gauss_legendre(panel_nodes);
    const std::size_t shells = radii.size();
    std::vector<double> increments(shells, 0.0);

    // Shells are independent; each shell's own sum stays sequential and the
    // final accumulation order is fixed, so results do not depend on the
    // thread count.
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned workers = std::min<unsigned>(hw, static_cast<unsigned>(shells));
    auto worker = [&](unsigned w) {
        for (std::size_t j = w; j < shells; j += workers) {
            const double lo = j == 0 ? 0.0 : radii[j - 1];
            const double hi = radii[j];
            const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
            NeumaierSum acc;
            for (int i = 0; i < panel_nodes; ++i)
                acc.add(half * gl.weights[i] * shell_integrand(s, dim, mid + half * gl.nodes[i]));
            const double v = acc.value();
            if (!std::isfinite(v))
                throw std::domain_error("truncated_energy_growth: non-finite shell contribution");
            increments[j] = v;
        }
    };
    if (workers <= 1) {
        worker(0);
    } else {
        std::vector<std::future<void>> futs;
        for (unsigned w = 0; w < workers; ++w)
            futs.push_back(std::async(std::launch::async, worker, w));
        for (auto& f : futs) f.get();  // rethrows shell errors
    }

    GrowthCurve curve;
    curve.radius = std::move(radii);
    curve.increments = increments;
    curve.energy.resize(shells);
    NeumaierSum cum;
    for (std::size_t j = 0; j < shells; ++j) {
        cum.add(increments[j]);
        curve.energy[j] = cum.value();
    }

    // Least-squares line E ~ a + m R over the window R >= fit_window_lo.
    curve.fit_window_lo = fit_window_lo;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int count = 0;
    for (std::size_t j = 0; j < shells; ++j) {
        if (curve.radius[j] < fit_window_lo) continue;
        sx += curve.radius[j];
        sy += curve.energy[j];
        sxx += curve.radius[j] * curve.radius[j];
        sxy += curve.radius[j] * curve.energy[j];
        ++count;
    }
    if (count >= 2) {
        const double det = count * sxx - sx * sx;
        curve.fit_slope = (count * sxy - sx * sy) / det;
        curve.fit_intercept = (sy * sxx - sx * sxy) / det;
        double ss = 0.0;
        for (std::size_t j = 0; j < shells; ++j) {
            if (curve.radius[j] < fit_window_lo) continue;
            const double r = curve.energy[j] - (curve.fit_intercept + curve.fit_slope * curve.radius[j]);
            ss += r * r;
        }
        curve.fit_residual = std::sqrt(ss / count);
    }
    return curve;
}

double extrapolate_limit(const GrowthCurve& curve, double burn_in, int sweeps) {
    std::vector<double> tail;
    for (std::size_t j = 0; j < curve.radius.size(); ++j)
        if (curve.radius[j] >= burn_in) tail.push_back(curve.energy[j]);
    if (tail.empty()) throw std::invalid_argument("extrapolate_limit: empty window");
    for (int sweep = 0; sweep < sweeps && tail.size() >= 3; ++sweep) {
        std::vector<double> next;
        for (std::size_t i = 0; i + 2 < tail.size(); ++i) {
            const double d1 = tail[i + 1] - tail[i];
            const double d2 = tail[i + 2] - tail[i + 1];
            const double den = d2 - d1;
            next.push_back(den == 0.0 ? tail[i + 2] : tail[i + 2] - d2 * d2 / den);
        }
        tail = std::move(next);
    }
    return tail.back();
}

Report growth_report(const GrowthCurve& curve) {
    Report rep({"R", "E", "delta_E", "fit_slope", "fit_residual"});
    for (std::size_t j = 0; j < curve.radius.size(); ++j)
        rep.add_row({curve.radius[j], curve.energy[j], curve.increments[j], curve.fit_slope,
                     curve.fit_residual});
    return rep;
}

std::string to_string(GrowthClass c) {
    switch (c) {
        case GrowthClass::Convergent: return "CONVERGENT";
        case GrowthClass::Divergent: return "DIVERGENT";
        default: return "INCONCLUSIVE";
    }
}

Classification classify_growth(const GrowthCurve& curve, const GrowthCurve* doubled,
                               const ClassificationThresholds& thresholds) {
    Classification out;
    const double total = curve.final_energy();

    // Zero field: nothing ever accumulates.
    if (total < thresholds.abs_floor) {
        out.label = GrowthClass::Convergent;
        out.limit_estimate = total;
        return out;
    }

    // Geometric decay of shell increments over the upper half of the range
    // marks saturation; estimate the remaining tail from the decay ratio.
    const std::size_t n = curve.increments.size();
    if (n >= 4) {
        double max_ratio = 0.0;
        bool decaying = true;
        for (std::size_t j = n / 2; j + 1 < n; ++j) {
            const double a = curve.increments[j], b = curve.increments[j + 1];
            if (a <= 0.0 || b <= 0.0) continue;
            const double ratio = b / a;
            max_ratio = std::max(max_ratio, ratio);
            if (ratio >= 1.0) decaying = false;
        }
        if (decaying && max_ratio < thresholds.decay_ratio_max) {
            const double last = curve.increments.back();
            out.tail_estimate = max_ratio > 0.0 ? last * max_ratio / (1.0 - max_ratio) : 0.0;
            out.limit_estimate = total + out.tail_estimate;
            if (out.tail_estimate <= thresholds.tail_rel_tol * out.limit_estimate) {
                out.label = GrowthClass::Convergent;
                return out;
            }
        }
    }

    // Divergence gate: positive linear growth, small fit residual, slope
    // stable under quadrature doubling.
    if (curve.fit_slope > 0.0 && curve.fit_residual <= thresholds.residual_rel_tol * total) {
        if (doubled != nullptr) {
            out.slope_shift = std::abs(curve.fit_slope - doubled->fit_slope) /
                              std::max(std::abs(curve.fit_slope), 1e-300);
            if (out.slope_shift > thresholds.slope_stability) {
                out.label = GrowthClass::Inconclusive;
                return out;
            }
        }
        out.label = GrowthClass::Divergent;
        return out;
    }

    out.label = GrowthClass::Inconclusive;
    return out;
}

}  // namespace hypflow
