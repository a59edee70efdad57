#include "kforms/fieldtheory.hpp"

#include <cmath>
#include <stdexcept>

namespace kforms {

double xi_eigen(int a, const Mode& k, double kappa) {
    return xi(a).wave_eigenvalue(k, kappa).real();
}

double chi_eigen(int a, const Mode& k, double kappa) {
    return chi(a).wave_eigenvalue(k, kappa).real();
}

double casimir_eigen(const Mode& k, double kappa) {
    return casimir().wave_eigenvalue(k, kappa).real();
}

double dispersion_solve(const std::array<double, 3>& kvec, double mass, double kappa,
                        double tol) {
    const Mode base{0.0, kvec[0], kvec[1], kvec[2]};
    auto residual = [&](double k0) {
        Mode k = base;
        k[0] = k0;
        return -casimir_eigen(k, kappa) - mass * mass;
    };
    double p = std::sqrt(kvec[0] * kvec[0] + kvec[1] * kvec[1] + kvec[2] * kvec[2]);
    if (p == 0.0 && mass == 0.0) return 0.0;

    double lo = 0.0;
    double hi = std::sqrt(p * p + mass * mass) + 1.0;
    double flo = residual(lo);
    double fhi = residual(hi);
    int guard = 0;
    while (flo * fhi > 0.0) {
        hi *= 2.0;
        fhi = residual(hi);
        if (++guard > 60) throw std::runtime_error("dispersion bracket failed");
    }
    for (int it = 0; it < 200 && hi - lo > 1e-15 * (1.0 + hi); ++it) {
        double mid = 0.5 * (lo + hi);
        double fm = residual(mid);
        if (fm == 0.0) { lo = hi = mid; break; }
        if ((fm > 0.0) == (flo > 0.0)) { lo = mid; flo = fm; }
        else hi = mid;
    }
    double k0 = 0.5 * (lo + hi);
    // Newton polish on the analytic residual
    for (int it = 0; it < 8 && std::abs(residual(k0)) > tol; ++it) {
        double eps = 1e-7 * (1.0 + std::abs(k0));
        double d = (residual(k0 + eps) - residual(k0 - eps)) / (2.0 * eps);
        if (d == 0.0) break;
        k0 -= residual(k0) / d;
    }
    if (std::abs(residual(k0)) > tol) throw std::runtime_error("dispersion bracket failed");
    return k0;
}

namespace {

WaveForm zero_form(const WaveFormAlgebra& alg, const WaveElement& f) {
    return form_scalar(alg, f);
}

} // namespace

WaveForm lagrangian_form(const FieldConfig& cfg) {
    WaveFormAlgebra alg(cfg.kappa);
    WaveForm phi = zero_form(alg, cfg.phi);
    WaveForm dphi = differential(alg, phi);
    WaveForm kinetic = wedge(alg, form_dagger(alg, dphi), hodge(alg, dphi));
    WaveForm massterm = wedge(alg, form_dagger(alg, phi), hodge(alg, phi));
    WaveForm out;
    const double m2 = cfg.mass * cfg.mass;
    for (const auto& [mk, c] : kinetic.terms) out.add(alg, mk, 0.5 * c);
    for (const auto& [mk, c] : massterm.terms) out.add(alg, mk, 0.5 * m2 * c);
    return out;
}

ActionValue action_eval(const FieldConfig& cfg) {
    WaveFormAlgebra alg(cfg.kappa);
    ActionValue v;
    WaveForm lag = lagrangian_form(cfg);
    v.hodge_form = lag.is_zero() ? std::complex<double>{0.0, 0.0} : integrate(alg, lag);

    // 1/2 { phi^dag (box |> phi) + m^2 phi^dag phi } at the zero mode
    WaveElement pd = alg.alg.dagger(cfg.phi);
    WaveElement boxphi = alg.alg.act(casimir(), cfg.phi);
    WaveElement second = alg.alg.mul(pd, boxphi) +
                         (cfg.mass * cfg.mass) * alg.alg.mul(pd, cfg.phi);
    v.casimir_form = 0.5 * second.coeff(ModeKey{0, 0, 0, 0});
    return v;
}

WaveElement eom_residual(const FieldConfig& cfg) {
    WaveFormAlgebra alg(cfg.kappa);
    WaveForm phi = zero_form(alg, cfg.phi);
    WaveForm sdsd = hodge(alg, differential(alg, hodge(alg, differential(alg, phi))));
    WaveElement out = sdsd.coeff(alg, 0) - (cfg.mass * cfg.mass) * cfg.phi;
    return out;
}

WaveForm noether_current(const FieldConfig& cfg, int a) {
    WaveFormAlgebra alg(cfg.kappa);
    const ExactScalar I = ExactScalar::i();
    WaveForm phi = zero_form(alg, cfg.phi);
    WaveForm stardphi = hodge(alg, differential(alg, phi));
    WaveElement phid = alg.alg.dagger(cfg.phi);

    // (i chi_a |> phi^dag) ^ * d phi
    WaveElement chia = alg.alg.act(I * chi(a), phid);
    WaveForm term1 = wedge(alg, zero_form(alg, chia), stardphi);

    // * d (sigma^b_a |> phi^dag) ^ (i chi_b |> phi)
    WaveForm term2;
    for (int b = 0; b < 5; ++b) {
        WaveElement sp = alg.alg.act(sigma_entry(b, a), phid);
        if (sp.is_zero()) continue;
        WaveForm sd = hodge(alg, differential(alg, zero_form(alg, sp)));
        WaveElement cb = alg.alg.act(I * chi(b), cfg.phi);
        if (cb.is_zero()) continue;
        term2 = form_add(alg, term2, wedge(alg, sd, zero_form(alg, cb)));
    }

    WaveForm brace = form_add(alg, term1, term2);
    WaveForm half;
    for (const auto& [mk, c] : brace.terms) half.add(alg, mk, 0.5 * c);

    WaveForm lag = lagrangian_form(cfg);
    return form_sub(alg, half, inner(alg, a, lag));
}

WaveForm noether_residual(const FieldConfig& cfg, int a) {
    WaveFormAlgebra alg(cfg.kappa);
    return differential(alg, noether_current(cfg, a));
}

EMTensor em_tensor(const FieldConfig& cfg) {
    WaveFormAlgebra alg(cfg.kappa);
    EMTensor t;
    for (int a = 0; a < 5; ++a) {
        WaveForm ja = noether_current(cfg, a);
        auto comps = right_components(alg, ja);
        for (int b = 0; b < 5; ++b) {
            HodgeImage hb = hodge_basis(static_cast<uint8_t>(1u << b));
            auto it = comps.find(hb.mask);
            if (it == comps.end()) continue;
            t.comp[a][b] = (hb.sign < 0) ? -it->second : it->second;
        }
    }
    return t;
}

WaveForm u1_current(const FieldConfig& cfg) {
    WaveFormAlgebra alg(cfg.kappa);
    WaveForm phi = zero_form(alg, cfg.phi);
    WaveForm phid = zero_form(alg, alg.alg.dagger(cfg.phi));
    WaveForm dphi = differential(alg, phi);
    WaveForm dphid = differential(alg, phid);
    WaveForm x = form_sub(alg, wedge(alg, phid, dphi), wedge(alg, dphid, phi));
    return hodge(alg, x);
}

WaveForm u1_residual(const FieldConfig& cfg) {
    WaveFormAlgebra alg(cfg.kappa);
    return differential(alg, u1_current(cfg));
}

} // namespace kforms
