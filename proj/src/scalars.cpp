#include "kforms/scalars.hpp"

#include <cmath>
#include <sstream>

namespace kforms {

namespace {

std::string rat_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

} // namespace

std::string GaussianRational::str() const {
    if (im == 0) return rat_str(re);
    std::string imag = (im == 1) ? "i" : (im == -1) ? "-i" : rat_str(im) + "*i";
    if (re == 0) return imag;
    if (im < 0) return "(" + rat_str(re) + " - " + (im == -1 ? "i" : rat_str(-im) + "*i") + ")";
    return "(" + rat_str(re) + " + " + imag + ")";
}

std::string ExactScalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [n, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (n == 0) {
            os << c.str();
        } else {
            os << c.str() << "*kappa^" << -n;
        }
    }
    if (terms_.size() > 1) return "(" + os.str() + ")";
    return os.str();
}

void check_finite(const std::complex<double>& z, const char* what) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::runtime_error(std::string("non-finite value in ") + what);
}

} // namespace kforms
