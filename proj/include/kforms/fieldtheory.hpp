#pragma once

// Complex scalar field on the deformed spacetime: action, equation of
// motion, dispersion relation, the conserved vector-valued current 4-form
// and the energy-momentum components it encodes, and the U(1) current.
//
// Conventions: with the involutive Hodge star the forms pipeline gives
//   * d * d phi = -box |> phi,     box = eta^{ab} xi_a xi_b,
// whose plane-wave eigenvalue -box(k) = 2 kappa^2 (cosh(k0/kappa) - 1)
//                                      - e^{k0/kappa} |kvec|^2
// reduces to k0^2 - |kvec|^2 for large kappa.  On-shell modes solve
// -box(k) = m^2, i.e. the equation of motion * d * d phi = m^2 phi.

#include "kforms/forms.hpp"
#include "kforms/integral.hpp"

#include <array>
#include <complex>

namespace kforms {

struct FieldConfig {
    WaveElement phi;
    double mass = 0.0;
    double kappa = 1.0;
};

// Eigenvalues of the named operator families on the mode k, evaluated
// through the operator algebra (not transcribed formulas).
double xi_eigen(int a, const Mode& k, double kappa);
double chi_eigen(int a, const Mode& k, double kappa);
// eta^{ab} xi_a(k) xi_b(k)
double casimir_eigen(const Mode& k, double kappa);

// Solves -casimir_eigen(k) = m^2 for k0 >= 0 at fixed spatial momentum.
// Residual of the returned root is at most `tol`.
double dispersion_solve(const std::array<double, 3>& kvec, double mass, double kappa,
                        double tol = 1e-12);

struct ActionValue {
    std::complex<double> hodge_form;    // 1/2 int { (d phi)^dag ^ *(d phi) + m^2 phi^dag ^ *(phi) }
    std::complex<double> casimir_form;  // 1/2 int { phi^dag (box |> phi) + m^2 phi^dag phi } vol^5
};
ActionValue action_eval(const FieldConfig& cfg);

// * d * d phi - m^2 phi through the forms pipeline.
WaveElement eom_residual(const FieldConfig& cfg);

// Lagrangian 5-form 1/2 { (d phi)^dag ^ *(d phi) + m^2 phi^dag ^ *(phi) }.
WaveForm lagrangian_form(const FieldConfig& cfg);

// The conserved vector-valued 4-form
//   j_a = 1/2 { (i chi_a |> phi^dag) ^ * d phi
//             + * d (sigma^b_a |> phi^dag) ^ (i chi_b |> phi) } - i_a(L).
WaveForm noether_current(const FieldConfig& cfg, int a);

// Degree-5 residual d j_a; identically zero on-shell.
WaveForm noether_residual(const FieldConfig& cfg, int a);

struct EMTensor {
    std::array<std::array<WaveElement, 5>, 5> comp;
};
// Extracted from the decomposition j_a = *(e^b) T_{ab}.
EMTensor em_tensor(const FieldConfig& cfg);

// U(1) current j = *(phi^dag d phi - d phi^dag phi), degree 4.
WaveForm u1_current(const FieldConfig& cfg);
WaveForm u1_residual(const FieldConfig& cfg);

} // namespace kforms
