#pragma once

// Numeric plane-wave backend.  An element is a finite sum of normal-ordered
// modes e_k = exp(i kvec.xvec) exp(-i k0 x0), labelled by k = (k0,k1,k2,k3).
// Modes compose through the deformed addition
//   (k (+) l)_0 = k0 + l0,   (k (+) l)_j = k_j + exp(-k0/kappa) l_j
// and invert through the antipode S(k) = (-k0, -exp(k0/kappa) kvec).
// Mode labels are quantized to a fixed grid so equality is exact.

#include "kforms/operators.hpp"
#include "kforms/scalars.hpp"

#include <array>
#include <complex>
#include <map>

namespace kforms {

using Mode = std::array<double, 4>;       // (k0, k1, k2, k3)
using ModeKey = std::array<int64_t, 4>;

// Mode labels quantize to this grid; components below the snap window are
// treated as exactly zero so that antipode round trips (k (+) S(k) = 0)
// land on the zero mode despite the exp(k0/kappa) error amplification.
constexpr double kModeGrid = 1.0 / 281474976710656.0;  // 2^-48
constexpr double kModeZeroSnap = 1.0 / 1073741824.0;   // 2^-30

class WaveAlgebra;

class WaveElement {
public:
    using Terms = std::map<ModeKey, std::complex<double>>;

    WaveElement() = default;

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    void add(const ModeKey& k, std::complex<double> c);

    friend WaveElement operator+(const WaveElement& a, const WaveElement& b);
    friend WaveElement operator-(const WaveElement& a, const WaveElement& b);
    WaveElement operator-() const;
    friend WaveElement operator*(std::complex<double> c, const WaveElement& f);

    double max_abs() const;
    std::complex<double> coeff(const ModeKey& k) const;

    std::string str() const;

private:
    Terms terms_;
};

class WaveAlgebra {
public:
    explicit WaveAlgebra(double kappa, double grid = kModeGrid)
        : kappa_(kappa), grid_(grid) {}

    double kappa() const { return kappa_; }

    ModeKey quantize(const Mode& k) const;
    Mode dequantize(const ModeKey& q) const;

    Mode oplus(const Mode& k, const Mode& l) const;
    Mode antipode(const Mode& k) const;

    WaveElement mode(const Mode& k, std::complex<double> c = {1.0, 0.0}) const;
    WaveElement unit() const { return mode(Mode{0, 0, 0, 0}); }

    WaveElement mul(const WaveElement& f, const WaveElement& g) const;
    WaveElement dagger(const WaveElement& f) const;

    // Diagonal action of a momentum-sector operator (eigenvalue substitution
    // P0 -> k0, P_j -> k_j, E -> exp(k0/kappa)).  Throws for Lorentz letters.
    WaveElement act(const OperatorElement& h, const WaveElement& f) const;

private:
    double kappa_;
    double grid_;
};

} // namespace kforms
