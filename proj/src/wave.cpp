#include "kforms/wave.hpp"

#include <cmath>
#include <sstream>

namespace kforms {

void WaveElement::add(const ModeKey& k, std::complex<double> c) {
    if (c == std::complex<double>{0.0, 0.0}) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_[k] = c;
    } else {
        it->second += c;
        if (it->second == std::complex<double>{0.0, 0.0}) terms_.erase(it);
    }
}

WaveElement operator+(const WaveElement& a, const WaveElement& b) {
    WaveElement r = a;
    for (const auto& [k, c] : b.terms_) r.add(k, c);
    return r;
}

WaveElement operator-(const WaveElement& a, const WaveElement& b) {
    WaveElement r = a;
    for (const auto& [k, c] : b.terms_) r.add(k, -c);
    return r;
}

WaveElement WaveElement::operator-() const {
    WaveElement r;
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

WaveElement operator*(std::complex<double> c, const WaveElement& f) {
    WaveElement r;
    if (c == std::complex<double>{0.0, 0.0}) return r;
    for (const auto& [k, d] : f.terms()) r.add(k, c * d);
    return r;
}

double WaveElement::max_abs() const {
    double m = 0.0;
    for (const auto& [k, c] : terms_) m = std::max(m, std::abs(c));
    return m;
}

std::complex<double> WaveElement::coeff(const ModeKey& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? std::complex<double>{0.0, 0.0} : it->second;
}

std::string WaveElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    os.precision(12);
    bool first = true;
    const double g = kModeGrid;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i)*wave("
           << k[0] * g << "," << k[1] * g << "," << k[2] * g << "," << k[3] * g << ")";
    }
    return os.str();
}

ModeKey WaveAlgebra::quantize(const Mode& k) const {
    ModeKey q;
    for (int i = 0; i < 4; ++i) {
        double v = k[i];
        q[i] = (std::abs(v) < kModeZeroSnap) ? 0
                                             : static_cast<int64_t>(std::llround(v / grid_));
    }
    return q;
}

Mode WaveAlgebra::dequantize(const ModeKey& q) const {
    Mode k;
    for (int i = 0; i < 4; ++i) k[i] = static_cast<double>(q[i]) * grid_;
    return k;
}

Mode WaveAlgebra::oplus(const Mode& k, const Mode& l) const {
    double damp = std::exp(-k[0] / kappa_);
    return {k[0] + l[0], k[1] + damp * l[1], k[2] + damp * l[2], k[3] + damp * l[3]};
}

Mode WaveAlgebra::antipode(const Mode& k) const {
    double amp = std::exp(k[0] / kappa_);
    return {-k[0], -amp * k[1], -amp * k[2], -amp * k[3]};
}

WaveElement WaveAlgebra::mode(const Mode& k, std::complex<double> c) const {
    WaveElement f;
    f.add(quantize(k), c);
    return f;
}

WaveElement WaveAlgebra::mul(const WaveElement& f, const WaveElement& g) const {
    WaveElement out;
    for (const auto& [qa, ca] : f.terms())
        for (const auto& [qb, cb] : g.terms()) {
            Mode k = oplus(dequantize(qa), dequantize(qb));
            std::complex<double> c = ca * cb;
            check_finite(c, "wave_mul");
            out.add(quantize(k), c);
        }
    return out;
}

WaveElement WaveAlgebra::dagger(const WaveElement& f) const {
    WaveElement out;
    for (const auto& [q, c] : f.terms())
        out.add(quantize(antipode(dequantize(q))), std::conj(c));
    return out;
}

WaveElement WaveAlgebra::act(const OperatorElement& h, const WaveElement& f) const {
    WaveElement out;
    for (const auto& [q, c] : f.terms()) {
        std::complex<double> ev = h.wave_eigenvalue(dequantize(q), kappa_);
        out.add(q, ev * c);
    }
    return out;
}

} // namespace kforms
