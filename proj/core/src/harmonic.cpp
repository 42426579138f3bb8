#include "hypflow/harmonic.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace hypflow {

double BoundaryData::eval(double theta) const {
    double v = 0.5 * a0;
    for (int k = 1; k <= max_mode(); ++k)
        v += cos_coeff(k) * std::cos(k * theta) + sin_coeff(k) * std::sin(k * theta);
    return v;
}

double BoundaryData::coefficient_majorant() const {
    double s = 0.0;
    for (int k = 1; k <= max_mode(); ++k)
        s += k * (std::abs(cos_coeff(k)) + std::abs(sin_coeff(k)));
    return s;
}

double BoundaryData::smoothness_proxy(double alpha) const {
    double s = 0.0;
    for (int k = 1; k <= max_mode(); ++k)
        s += std::pow(k, 1.0 + alpha) * (std::abs(cos_coeff(k)) + std::abs(sin_coeff(k)));
    return s;
}

std::string to_json_string(const BoundaryData& data) {
    nlohmann::ordered_json j;
    j["a0"] = data.a0;
    j["a"] = data.a;
    j["b"] = data.b;
    return j.dump();
}

BoundaryData boundary_from_json_string(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    BoundaryData d;
    d.a0 = j.value("a0", 0.0);
    if (j.contains("a")) d.a = j.at("a").get<std::vector<double>>();
    if (j.contains("b")) d.b = j.at("b").get<std::vector<double>>();
    for (double c : d.a)
        if (!std::isfinite(c)) throw std::invalid_argument("boundary data: non-finite coefficient");
    for (double c : d.b)
        if (!std::isfinite(c)) throw std::invalid_argument("boundary data: non-finite coefficient");
    if (!std::isfinite(d.a0)) throw std::invalid_argument("boundary data: non-finite a0");
    return d;
}

HarmonicPotential::HarmonicPotential(BoundaryData data) : data_(std::move(data)) {
    const int n = data_.max_mode();
    c_.resize(n + 1);
    c_[0] = {0.5 * data_.a0, 0.0};
    for (int k = 1; k <= n; ++k) c_[k] = {data_.cos_coeff(k), -data_.sin_coeff(k)};
}

std::complex<double> HarmonicPotential::series(const DiskPoint& p, int derivative) const {
    const std::complex<double> z(p.x(), p.y());
    const int n = static_cast<int>(c_.size()) - 1;
    std::complex<double> acc(0.0, 0.0);
    // Horner on the coefficient sequence of F^(derivative).
    for (int k = n; k >= derivative; --k) {
        double fall = 1.0;
        for (int d = 0; d < derivative; ++d) fall *= double(k - d);
        acc = acc * z + fall * c_[k];
    }
    return acc;
}

double HarmonicPotential::value(const DiskPoint& p) const { return series(p, 0).real(); }

Vec2 HarmonicPotential::gradient(const DiskPoint& p) const {
    const std::complex<double> f1 = series(p, 1);
    return {f1.real(), -f1.imag()};
}

Mat2 HarmonicPotential::hessian(const DiskPoint& p) const {
    const std::complex<double> f2 = series(p, 2);
    Mat2 h;
    h(0, 0) = f2.real();
    h(0, 1) = -f2.imag();
    h(1, 0) = -f2.imag();
    h(1, 1) = -f2.real();
    return h;
}

std::array<Mat2, 2> HarmonicPotential::hessian_gradient(const DiskPoint& p) const {
    const std::complex<double> f3 = series(p, 3);
    // Phi_xxx = Re F''', Phi_xxy = -Im F''', Phi_xyy = -Re F''', Phi_yyy = Im F'''.
    std::array<Mat2, 2> s;
    s[0](0, 0) = f3.real();
    s[0](0, 1) = -f3.imag();
    s[0](1, 0) = -f3.imag();
    s[0](1, 1) = -f3.real();
    s[1](0, 0) = -f3.imag();
    s[1](0, 1) = -f3.real();
    s[1](1, 0) = -f3.real();
    s[1](1, 1) = f3.imag();
    return s;
}

OneFormField HarmonicPotential::differential() const {
    HarmonicPotential self = *this;  // value capture keeps the field self-contained
    OneFormField f;
    f.components = [self](const DiskPoint& p) { return self.gradient(p); };
    f.jacobian = [self](const DiskPoint& p) { return self.hessian(p); };
    f.jacobian_gradient = [self](const DiskPoint& p) { return self.hessian_gradient(p); };
    return f;
}

VectorField HarmonicPotential::velocity() const {
    HarmonicPotential self = *this;
    VectorField v;
    v.components = [self](const DiskPoint& p) { return sharp(self.gradient(p), p); };
    return v;
}

double spectral_dirichlet_energy(const BoundaryData& data) {
    double s = 0.0;
    for (int k = data.max_mode(); k >= 1; --k) {
        const double ak = data.cos_coeff(k);
        const double bk = data.sin_coeff(k);
        s += k * (ak * ak + bk * bk);
    }
    const double pi = 3.14159265358979323846;
    return pi * s;
}

std::vector<DiskPoint> PolarGrid::points() const {
    std::vector<DiskPoint> pts;
    pts.reserve(static_cast<std::size_t>(n_r) * n_theta);
    const double two_pi = 6.28318530717958647692;
    for (int i = 1; i <= n_r; ++i) {
        const double r = r_max * i / n_r;
        for (int j = 0; j < n_theta; ++j) {
            const double t = two_pi * j / n_theta;
            pts.emplace_back(r * std::cos(t), r * std::sin(t));
        }
    }
    return pts;
}

double gradient_sup_bound(const HarmonicPotential& pot, const PolarGrid& grid) {
    double sup = 0.0;
    for (const DiskPoint& p : grid.points()) sup = std::max(sup, pot.gradient(p).norm());
    return sup;
}

}  // namespace hypflow
