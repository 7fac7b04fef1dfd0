#pragma once

#include <complex>
#include <vector>

namespace minann {

using Cplx = std::complex<double>;

bool is_power_of_two(int n);

// Round annulus inner_radius <= r <= outer_radius. The symmetric convention
// (inner = 1/outer) is the default; an explicit inner radius is kept for the
// asymmetric r1 <= r <= r2 convention.
struct AnnulusSpec {
    double outer_radius = 0.0;
    double inner_radius = 0.0;

    static AnnulusSpec symmetric(double R);
    static AnnulusSpec banded(double r1, double r2);

    bool is_symmetric(double tol = 1e-12) const;
    bool contains(double r, double tol = 1e-9) const;
    double log_inner() const;
    double log_outer() const;
};

// Polar grid on an annulus: radii log-uniform, angles uniform periodic with
// the duplicate endpoint excluded. n_theta is kept a power of two so the
// angular direction can be differentiated and analyzed by exact-length FFTs.
struct PolarGrid {
    AnnulusSpec spec;
    int n_r = 0;
    int n_theta = 0;
    std::vector<double> radii;
    std::vector<double> thetas;
    double du = 0.0; // spacing in ln r

    int size() const { return n_r * n_theta; }
    int index(int j, int k) const { return j * n_theta + k; }
    double r(int j) const { return radii[static_cast<size_t>(j)]; }
    double theta(int k) const { return thetas[static_cast<size_t>(k)]; }
    Cplx node(int j, int k) const;
};

PolarGrid make_grid(const AnnulusSpec& spec, int n_r, int n_theta);

// Points rho*exp(2*pi*i*k/n), k = 0..n-1, counterclockwise.
std::vector<Cplx> circle_samples(double rho, int n);

} // namespace minann
