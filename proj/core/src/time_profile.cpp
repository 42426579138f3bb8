#include "hypflow/time_profile.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace hypflow {

TimeProfile TimeProfile::exponential(double rate, double f0) {
    if (!std::isfinite(rate) || !std::isfinite(f0))
        throw std::invalid_argument("TimeProfile: non-finite exponential parameters");
    TimeProfile p;
    p.kind_ = Kind::Exponential;
    p.rate_ = rate;
    p.f0_ = f0;
    return p;
}

TimeProfile TimeProfile::sampled(double t_max, std::vector<double> values) {
    if (values.size() < 4) throw std::invalid_argument("TimeProfile::sampled: need >= 4 samples");
    if (!(t_max > 0.0)) throw std::invalid_argument("TimeProfile::sampled: t_max must be > 0");
    TimeProfile p;
    p.kind_ = Kind::Sampled;
    p.t_max_ = t_max;
    p.values_ = std::move(values);

    // Natural cubic spline on a uniform grid (spacing h): the knot second
    // derivatives M solve M[i-1] + 4 M[i] + M[i+1] = 6 (f[i+1] - 2 f[i] +
    // f[i-1]) / h^2 with M[0] = M[n-1] = 0 (Thomas algorithm).
    const std::size_t n = p.values_.size();
    const double h = t_max / double(n - 1);
    p.second_.assign(n, 0.0);
    {
        std::vector<double> a(n, 0.0), bdiag(n, 1.0), cup(n, 0.0), d(n, 0.0);
        for (std::size_t i = 1; i + 1 < n; ++i) {
            a[i] = 1.0;
            bdiag[i] = 4.0;
            cup[i] = 1.0;
            d[i] = 6.0 * (p.values_[i + 1] - 2.0 * p.values_[i] + p.values_[i - 1]) / (h * h);
        }
        for (std::size_t i = 1; i < n; ++i) {
            const double m = a[i] / bdiag[i - 1];
            bdiag[i] -= m * cup[i - 1];
            d[i] -= m * d[i - 1];
        }
        p.second_[n - 1] = d[n - 1] / bdiag[n - 1];
        for (std::size_t i = n - 1; i-- > 0;)
            p.second_[i] = (d[i] - cup[i] * p.second_[i + 1]) / bdiag[i];
    }

    // F2 at knots by composite Simpson of f^2 over each knot interval,
    // with the spline evaluated at midpoints.
    p.f2_knots_.assign(n, 0.0);
    for (std::size_t i = 1; i < n; ++i) {
        const double t0 = (i - 1) * h, t1 = i * h;
        const double fa = p.spline_value(t0), fm = p.spline_value(0.5 * (t0 + t1)),
                     fb = p.spline_value(t1);
        p.f2_knots_[i] =
            p.f2_knots_[i - 1] + (h / 6.0) * (fa * fa + 4.0 * fm * fm + fb * fb);
    }
    return p;
}

TimeProfile TimeProfile::parse(const std::string& spec) {
    if (spec.rfind("exp:", 0) != 0)
        throw std::invalid_argument("profile spec must look like exp:RATE or exp:RATE:F0, got '" +
                                    spec + "'");
    const std::string rest = spec.substr(4);
    const std::size_t colon = rest.find(':');
    try {
        const double rate = std::stod(rest.substr(0, colon));
        const double f0 = colon == std::string::npos ? 1.0 : std::stod(rest.substr(colon + 1));
        return exponential(rate, f0);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("cannot parse profile spec '" + spec + "'");
    }
}

double TimeProfile::value(double t) const {
    if (kind_ == Kind::Exponential) return f0_ * std::exp(-rate_ * t);
    return spline_value(t);
}

double TimeProfile::derivative(double t) const {
    if (kind_ == Kind::Exponential) return -rate_ * f0_ * std::exp(-rate_ * t);
    return spline_derivative(t);
}

double TimeProfile::squared_integral(double t) const {
    if (kind_ == Kind::Exponential) {
        if (rate_ == 0.0) return f0_ * f0_ * t;
        return f0_ * f0_ * (1.0 - std::exp(-2.0 * rate_ * t)) / (2.0 * rate_);
    }
    // Simpson over the spline from the nearest lower knot.
    const std::size_t n = values_.size();
    const double h = t_max_ / double(n - 1);
    double tc = std::min(std::max(t, 0.0), t_max_);
    const std::size_t i = std::min<std::size_t>(static_cast<std::size_t>(tc / h), n - 2);
    const double t0 = i * h;
    const double fa = spline_value(t0), fm = spline_value(0.5 * (t0 + tc)),
                 fb = spline_value(tc);
    return f2_knots_[i] + ((tc - t0) / 6.0) * (fa * fa + 4.0 * fm * fm + fb * fb);
}

double TimeProfile::spline_value(double t) const {
    const std::size_t n = values_.size();
    const double h = t_max_ / double(n - 1);
    const double tc = std::min(std::max(t, 0.0), t_max_);
    const std::size_t i = std::min<std::size_t>(static_cast<std::size_t>(tc / h), n - 2);
    const double u = tc - i * h, v = h - u;
    return (second_[i] * v * v * v + second_[i + 1] * u * u * u) / (6.0 * h) +
           (values_[i] / h - second_[i] * h / 6.0) * v +
           (values_[i + 1] / h - second_[i + 1] * h / 6.0) * u;
}

double TimeProfile::spline_derivative(double t) const {
    const std::size_t n = values_.size();
    const double h = t_max_ / double(n - 1);
    const double tc = std::min(std::max(t, 0.0), t_max_);
    const std::size_t i = std::min<std::size_t>(static_cast<std::size_t>(tc / h), n - 2);
    const double u = tc - i * h, v = h - u;
    return (-second_[i] * v * v + second_[i + 1] * u * u) / (2.0 * h) -
           (values_[i] / h - second_[i] * h / 6.0) +
           (values_[i + 1] / h - second_[i + 1] * h / 6.0);
}

std::string TimeProfile::describe() const {
    char buf[64];
    if (kind_ == Kind::Exponential) {
        std::snprintf(buf, sizeof(buf), "exp:%g:%g", rate_, f0_);
        return buf;
    }
    std::snprintf(buf, sizeof(buf), "sampled[%zu,0..%g]", values_.size(), t_max_);
    return buf;
}

AdmissibilityResult leray_hopf_admissible(const TimeProfile& profile, double t_max, int steps,
                                          double tolerance) {
    if (!(t_max > 0.0) || steps < 1)
        throw std::invalid_argument("leray_hopf_admissible: need t_max > 0 and steps >= 1");
    AdmissibilityResult r;
    r.tolerance = tolerance >= 0.0 ? tolerance : profile.default_tolerance();
    const double f0 = profile.value(0.0);
    r.min_margin = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= steps; ++i) {
        const double t = t_max * i / steps;
        const double f = profile.value(t);
        const double margin = f0 * f0 - f * f - 4.0 * profile.squared_integral(t);
        r.times.push_back(t);
        r.margins.push_back(margin);
        if (margin < r.min_margin) {
            r.min_margin = margin;
            r.min_margin_time = t;
        }
    }
    r.pass = r.min_margin >= -r.tolerance;
    return r;
}

}  // namespace hypflow
