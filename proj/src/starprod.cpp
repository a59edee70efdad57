#include "kforms/starprod.hpp"

#include <fftw3.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace kforms {

namespace {

constexpr double kPi = std::numbers::pi;

// In-place DFT along the alpha axis (slow axis of the row-major [ia][ib]
// layout) for every beta column.  sign is FFTW_FORWARD or FFTW_BACKWARD.
void dft_axis0(std::vector<std::complex<double>>& v, int n, int sign) {
    fftw_complex* p = reinterpret_cast<fftw_complex*>(v.data());
    int dims[1] = {n};
    fftw_plan plan = fftw_plan_many_dft(1, dims, n, p, nullptr, n, 1, p, nullptr, n, 1,
                                        sign, FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
}

double signed_freq_index(int m, int n) { return m < n / 2 ? m : m - n; }

// Catmull-Rom interpolation of a beta row at fractional index p; zero
// outside the sampled window.
std::complex<double> cubic_sample(const std::complex<double>* row, int n, double p) {
    if (p < 1.0 || p > n - 3.0) {
        // fall back to linear near the edge, zero outside
        if (p < -1.0 || p > n) return {0.0, 0.0};
        int j = static_cast<int>(std::floor(p));
        double t = p - j;
        std::complex<double> a = (j >= 0 && j < n) ? row[j] : std::complex<double>{0.0, 0.0};
        std::complex<double> b =
            (j + 1 >= 0 && j + 1 < n) ? row[j + 1] : std::complex<double>{0.0, 0.0};
        return a * (1.0 - t) + b * t;
    }
    int j = static_cast<int>(std::floor(p));
    double t = p - j;
    double t2 = t * t, t3 = t2 * t;
    double w0 = 0.5 * (-t + 2.0 * t2 - t3);
    double w1 = 0.5 * (2.0 - 5.0 * t2 + 3.0 * t3);
    double w2 = 0.5 * (t + 4.0 * t2 - 3.0 * t3);
    double w3 = 0.5 * (-t2 + t3);
    return w0 * row[j - 1] + w1 * row[j] + w2 * row[j + 1] + w3 * row[j + 2];
}

} // namespace

GridFunction::GridFunction(int n, double domain) : n_(n), L_(domain) {
    if (n <= 0 || (n & (n - 1)) != 0) throw std::invalid_argument("grid size must be a power of two");
    v_.assign(static_cast<size_t>(n) * n, {0.0, 0.0});
}

double GridFunction::max_abs() const {
    double m = 0.0;
    for (const auto& z : v_) m = std::max(m, std::abs(z));
    return m;
}

double GridFunction::boundary_max_abs() const {
    double m = 0.0;
    for (int i = 0; i < n_; ++i) {
        m = std::max({m, std::abs(at(0, i)), std::abs(at(n_ - 1, i)), std::abs(at(i, 0)),
                      std::abs(at(i, n_ - 1))});
    }
    return m;
}

GridFunction gaussian_packet(int n, double domain, double width, double k0, double k1,
                             bool unit_mass) {
    GridFunction f(n, domain);
    double norm = unit_mass ? 1.0 / (2.0 * kPi * width * width) : 1.0;
    for (int ia = 0; ia < n; ++ia) {
        double a = f.coord(ia);
        for (int ib = 0; ib < n; ++ib) {
            double b = f.coord(ib);
            double env = norm * std::exp(-(a * a + b * b) / (2.0 * width * width));
            double phase = k1 * b - k0 * a;
            f.at(ia, ib) = env * std::complex<double>(std::cos(phase), std::sin(phase));
        }
    }
    return f;
}

std::complex<double> trace(const GridFunction& f) {
    std::complex<double> s{0.0, 0.0};
    for (const auto& z : f.data()) s += z;
    double h = f.step();
    return s * (h * h);
}

GridFunction star(const GridFunction& f, const GridFunction& g, double kappa) {
    const int n = f.n();
    if (g.n() != n || g.domain() != f.domain())
        throw std::invalid_argument("star product needs matching grids");
    const double L = f.domain();

    // F[m][l] = unnormalized inverse DFT of f along alpha
    std::vector<std::complex<double>> F = f.data();
    dft_axis0(F, n, FFTW_BACKWARD);

    GridFunction out(n, L);
    std::vector<double> pos(n);
    std::vector<std::complex<double>> phase(n);
    const double h = f.step();
    const double inv_n = 1.0 / n;

    for (int m = 0; m < n; ++m) {
        double v = kPi * signed_freq_index(m, n) / L;
        double dil = std::exp(-v / kappa);
        bool any = false;
        for (int l = 0; l < n; ++l) {
            double beta = -L + h * l;
            pos[l] = (dil * beta + L) / h;
            if (pos[l] > -1.0 && pos[l] < n + 0.0) any = true;
        }
        if (!any) continue;
        for (int i = 0; i < n; ++i) {
            double ang = -2.0 * kPi * static_cast<double>(i) * m / n;
            phase[i] = {std::cos(ang), std::sin(ang)};
        }
        for (int i = 0; i < n; ++i) {
            const std::complex<double>* grow = &g.data()[static_cast<size_t>(i) * n];
            std::complex<double>* orow = &out.data()[static_cast<size_t>(i) * n];
            for (int l = 0; l < n; ++l) {
                std::complex<double> fm = F[static_cast<size_t>(m) * n + l];
                if (fm == std::complex<double>{0.0, 0.0}) continue;
                std::complex<double> gv = cubic_sample(grow, n, pos[l]);
                orow[l] += inv_n * fm * phase[i] * gv;
            }
        }
    }
    return out;
}

GridFunction star_involution(const GridFunction& f, double kappa) {
    const int n = f.n();
    const double L = f.domain();
    const double h = f.step();

    std::vector<std::complex<double>> F(f.data().size());
    for (size_t i = 0; i < F.size(); ++i) F[i] = std::conj(f.data()[i]);
    dft_axis0(F, n, FFTW_BACKWARD);

    // M[m][l] = F[m][.] resampled at exp(-v_m/kappa) beta_l
    std::vector<std::complex<double>> M(F.size(), {0.0, 0.0});
    for (int m = 0; m < n; ++m) {
        double v = kPi * signed_freq_index(m, n) / L;
        double dil = std::exp(-v / kappa);
        const std::complex<double>* row = &F[static_cast<size_t>(m) * n];
        for (int l = 0; l < n; ++l) {
            double beta = -L + h * l;
            double p = (dil * beta + L) / h;
            M[static_cast<size_t>(m) * n + l] = cubic_sample(row, n, p);
        }
    }
    dft_axis0(M, n, FFTW_FORWARD);

    GridFunction out(n, L);
    const double inv_n = 1.0 / n;
    for (size_t i = 0; i < M.size(); ++i) out.data()[i] = inv_n * M[i];
    return out;
}

GridFunction twist_apply(const GridFunction& f, double kappa, int exponent) {
    const int n = f.n();
    const double L = f.domain();
    std::vector<std::complex<double>> F = f.data();
    dft_axis0(F, n, FFTW_BACKWARD);

    // drop spectral noise before the exponential multiplier
    double peak = 0.0;
    for (const auto& z : F) peak = std::max(peak, std::abs(z));
    const double floor = peak * 1e-13;

    for (int m = 0; m < n; ++m) {
        double v = kPi * signed_freq_index(m, n) / L;
        double mult = std::exp(exponent * v / kappa);
        for (int l = 0; l < n; ++l) {
            auto& z = F[static_cast<size_t>(m) * n + l];
            z = (std::abs(z) <= floor) ? std::complex<double>{0.0, 0.0} : z * mult;
        }
    }
    dft_axis0(F, n, FFTW_FORWARD);

    GridFunction out(n, L);
    const double inv_n = 1.0 / n;
    for (size_t i = 0; i < F.size(); ++i) out.data()[i] = inv_n * F[i];
    return out;
}

GridFunction star_square(const GridFunction& f, double kappa, double decay_tol) {
    double peak = f.max_abs();
    if (peak > 0.0 && f.boundary_max_abs() > decay_tol * peak)
        throw std::runtime_error("domain too small");
    return star(star_involution(f, kappa), f, kappa);
}

CyclicityReport twisted_cyclicity_check(const GridFunction& f, const GridFunction& g,
                                        double kappa, int exponent) {
    CyclicityReport rep;
    rep.lhs = trace(star(f, g, kappa));
    rep.rhs = trace(star(g, twist_apply(f, kappa, exponent), kappa));
    double scale = std::max({std::abs(rep.lhs), std::abs(rep.rhs), 1e-300});
    rep.relative_residual = std::abs(rep.lhs - rep.rhs) / scale;
    return rep;
}

} // namespace kforms
