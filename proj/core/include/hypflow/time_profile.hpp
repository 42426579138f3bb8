#pragma once

#include <string>
#include <vector>

namespace hypflow {

// Scalar rescaling f(t) with derivative and running squared integral
// F2(t) = int_0^t f(s)^2 ds. Two families:
//   - exponential f = f0 exp(-rate t): everything in closed form;
//   - sampled values on a uniform time grid: natural cubic spline for f and
//     f', composite Simpson on the spline for F2.
class TimeProfile {
public:
    static TimeProfile exponential(double rate, double f0 = 1.0);
    static TimeProfile sampled(double t_max, std::vector<double> values);
    static TimeProfile parse(const std::string& spec);  // "exp:RATE" or "exp:RATE:F0"

    double value(double t) const;
    double derivative(double t) const;
    double squared_integral(double t) const;

    bool closed_form() const { return kind_ == Kind::Exponential; }
    // Default admissibility slack: 1e-12 for closed-form F2, 1e-8 for
    // quadrature F2.
    double default_tolerance() const { return closed_form() ? 1e-12 : 1e-8; }
    std::string describe() const;

private:
    enum class Kind { Exponential, Sampled };

    TimeProfile() = default;

    double spline_value(double t) const;
    double spline_derivative(double t) const;

    Kind kind_ = Kind::Exponential;
    double rate_ = 0.0;
    double f0_ = 1.0;

    // sampled family
    double t_max_ = 0.0;
    std::vector<double> values_;
    std::vector<double> second_;   // spline second derivatives at knots
    std::vector<double> f2_knots_; // F2 at knots (Simpson over spline)
};

struct AdmissibilityResult {
    bool pass = false;
    double min_margin = 0.0;       // min over grid of f(0)^2 - f(t)^2 - 4 F2(t)
    double min_margin_time = 0.0;
    double tolerance = 0.0;
    std::vector<double> times;
    std::vector<double> margins;
};

// Leray-Hopf scalar condition f(t)^2 + 4 int_0^t f(s)^2 ds <= f(0)^2 sampled
// on a uniform grid over [0, t_max]; pass iff min margin >= -tolerance.
AdmissibilityResult leray_hopf_admissible(const TimeProfile& profile, double t_max, int steps,
                                          double tolerance = -1.0);

}  // namespace hypflow
