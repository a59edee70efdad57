#pragma once

// Continuum 1+1 dimensional realization of the algebra on sampled wave
// packets f(alpha, beta): alpha is the time direction (plane waves carry
// exp(-i k0 alpha)), beta the spatial one (exp(i k1 beta)).  The binary star
// product is reconstructed from the displayed square kernel by polarization;
// phase and dilation signs are fixed by requiring the deformed mode
// composition law to emerge on plane-wave packets:
//
//   (f * g)(alpha, beta) = (1/2pi) int du dv e^{i u v} f(alpha+u, beta)
//                                           g(alpha, e^{-v/kappa} beta).
//
// The oscillatory integral factors into one Fourier transform along alpha
// followed by one dilation-resampling per frequency.

#include <complex>
#include <vector>

namespace kforms {

class GridFunction {
public:
    GridFunction() = default;
    GridFunction(int n, double domain);

    int n() const { return n_; }
    double domain() const { return L_; }
    double step() const { return 2.0 * L_ / n_; }
    double coord(int i) const { return -L_ + step() * i; }

    std::complex<double>& at(int ia, int ib) { return v_[static_cast<size_t>(ia) * n_ + ib]; }
    const std::complex<double>& at(int ia, int ib) const {
        return v_[static_cast<size_t>(ia) * n_ + ib];
    }
    const std::vector<std::complex<double>>& data() const { return v_; }
    std::vector<std::complex<double>>& data() { return v_; }

    double max_abs() const;
    double boundary_max_abs() const;

private:
    int n_ = 0;
    double L_ = 0.0;
    std::vector<std::complex<double>> v_;
};

// Gaussian wave packet centred at the origin with width s, carrying the mode
// (k0, k1); normalized to unit L1 mass when `unit_mass`.
GridFunction gaussian_packet(int n, double domain, double width, double k0, double k1,
                             bool unit_mass = false);

std::complex<double> trace(const GridFunction& f);

GridFunction star(const GridFunction& f, const GridFunction& g, double kappa);

// Involution through the spectral representation (conjugate, then the
// antipode dilation along the spatial axis).
GridFunction star_involution(const GridFunction& f, double kappa);

// f^dag * f; throws "domain too small" when the packet has not decayed at
// the boundary.
GridFunction star_square(const GridFunction& f, double kappa, double decay_tol = 1e-8);

// T^p |> f with T = exp(P0/kappa): spectral multiplier exp(p k0/kappa).
GridFunction twist_apply(const GridFunction& f, double kappa, int exponent);

struct CyclicityReport {
    std::complex<double> lhs;  // trace(f * g)
    std::complex<double> rhs;  // trace(g * (T |> f))
    double relative_residual = 0.0;
};
CyclicityReport twisted_cyclicity_check(const GridFunction& f, const GridFunction& g,
                                        double kappa, int exponent = 1);

} // namespace kforms
