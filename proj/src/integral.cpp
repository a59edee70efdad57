#include "kforms/integral.hpp"

namespace kforms {

std::complex<double> integrate(const WaveFormAlgebra& alg, const WaveForm& omega) {
    if (omega.is_zero()) return {0.0, 0.0};
    if (omega.degree() != 5) throw std::invalid_argument("degree-5 form required");
    const WaveElement c = omega.coeff(alg, kVolMask);
    return c.coeff(ModeKey{0, 0, 0, 0});
}

std::complex<double> inner_product(const WaveFormAlgebra& alg, const WaveForm& omega,
                                   const WaveForm& rho) {
    if (!omega.is_zero() && !rho.is_zero() && omega.degree() != rho.degree())
        throw std::invalid_argument("inner product expects forms of equal degree");
    WaveForm five = wedge(alg, form_dagger(alg, omega), hodge(alg, rho));
    if (five.is_zero()) return {0.0, 0.0};
    return integrate(alg, five);
}

WaveForm tilde_conjugate(const WaveFormAlgebra& alg, const WaveForm& omega) {
    WaveForm out;
    for (const auto& [m, f] : omega.terms) {
        bool has_zero_index = (m & 1u) != 0;
        out.add(alg, m, has_zero_index ? -f : f);
    }
    return out;
}

PositivityReport tilde_positivity(const WaveFormAlgebra& alg, const WaveForm& omega,
                                  double tol) {
    PositivityReport rep;
    rep.value = inner_product(alg, omega, tilde_conjugate(alg, omega));
    rep.imag_magnitude = std::abs(rep.value.imag());
    rep.nonnegative = rep.value.real() >= -tol && rep.imag_magnitude <= tol;
    double scale = 0.0;
    for (const auto& [m, f] : omega.terms) scale = std::max(scale, f.max_abs());
    rep.zero = rep.value.real() <= tol * std::max(1.0, scale * scale);
    return rep;
}

} // namespace kforms
