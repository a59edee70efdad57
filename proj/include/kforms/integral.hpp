#pragma once

// The left-invariant integral on 5-forms over the plane-wave backend, with
// the Kronecker normalization int e_k = [k = 0].  Translation invariance,
// closedness and the sesquilinear inner product all live here; the
// measure-sensitive twisted-trace content is exercised in the continuum
// star-product module instead.

#include "kforms/forms.hpp"

#include <complex>

namespace kforms {

std::complex<double> integrate(const WaveFormAlgebra& alg, const WaveForm& omega);

// (omega, rho) = int omega^dag wedge *rho, forms of equal degree.
std::complex<double> inner_product(const WaveFormAlgebra& alg, const WaveForm& omega,
                                   const WaveForm& rho);

// Components with an odd number of zero indices flipped.
WaveForm tilde_conjugate(const WaveFormAlgebra& alg, const WaveForm& omega);

struct PositivityReport {
    std::complex<double> value;
    double imag_magnitude = 0.0;
    bool nonnegative = false;
    bool zero = false;
};
PositivityReport tilde_positivity(const WaveFormAlgebra& alg, const WaveForm& omega,
                                  double tol = 1e-12);

} // namespace kforms
