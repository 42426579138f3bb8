#pragma once

#include <complex>
#include <string>
#include <vector>

#include "hypflow/geometry.hpp"
#include "hypflow/vec.hpp"

// Dirichlet problem on the unit disk, solved spectrally: boundary values are
// a truncated Fourier series, the harmonic extension is the real part of the
// complex power series with matching coefficients. Every derivative is then
// available in closed form, so downstream identities are exact up to rounding.

namespace hypflow {

// phi(theta) = a0/2 + sum_k (a_k cos k theta + b_k sin k theta), k = 1..N.
struct BoundaryData {
    double a0 = 0.0;
    std::vector<double> a;  // a[k-1] is the cos(k theta) coefficient
    std::vector<double> b;  // b[k-1] is the sin(k theta) coefficient

    int max_mode() const { return static_cast<int>(std::max(a.size(), b.size())); }
    double cos_coeff(int k) const { return k >= 1 && k <= (int)a.size() ? a[k - 1] : 0.0; }
    double sin_coeff(int k) const { return k >= 1 && k <= (int)b.size() ? b[k - 1] : 0.0; }

    double eval(double theta) const;

    // sum_k k (|a_k| + |b_k|): majorizes |dPhi| everywhere in the disk.
    double coefficient_majorant() const;
    // sum_k k^(1+alpha) (|a_k| + |b_k|), the C^{1+alpha} smoothness proxy.
    double smoothness_proxy(double alpha) const;
};

// JSON round trip for boundary data: {"a0": real, "a": [...], "b": [...]}.
std::string to_json_string(const BoundaryData& data);
BoundaryData boundary_from_json_string(const std::string& text);

// Harmonic extension Phi = Re F(z), F(z) = a0/2 + sum_k (a_k - i b_k) z^k.
class HarmonicPotential {
public:
    explicit HarmonicPotential(BoundaryData data);

    const BoundaryData& boundary() const { return data_; }

    double value(const DiskPoint& p) const;
    Vec2 gradient(const DiskPoint& p) const;  // components of dPhi
    Mat2 hessian(const DiskPoint& p) const;
    // Third derivatives arranged as [k](i,j) = d_k (Hess Phi)_ij.
    std::array<Mat2, 2> hessian_gradient(const DiskPoint& p) const;

    // dPhi as a covector field with analytic first and second derivatives.
    OneFormField differential() const;
    VectorField velocity() const;  // sharp(dPhi)

private:
    std::complex<double> series(const DiskPoint& p, int derivative) const;

    BoundaryData data_;
    std::vector<std::complex<double>> c_;  // c_[0] = a0/2, c_[k] = a_k - i b_k
};

// Exact Dirichlet energy pi * sum_k k (a_k^2 + b_k^2); the spectral oracle
// for every quadrature L2 norm of dPhi.
double spectral_dirichlet_energy(const BoundaryData& data);

// Deterministic polar probe grid: radii r_max*i/n_r (i=1..n_r, rim included),
// angles 2*pi*j/n_theta.
struct PolarGrid {
    int n_r = 30;
    int n_theta = 60;
    double r_max = 0.95;

    std::vector<DiskPoint> points() const;
};

// max over the grid of |dPhi|_e; bounded by data.coefficient_majorant().
double gradient_sup_bound(const HarmonicPotential& pot, const PolarGrid& grid);

}  // namespace hypflow
