#pragma once

// Coefficient arithmetic shared by every layer of the kernel.
//
// The exact backend works over Gaussian rationals times integer powers of
// 1/kappa, so every identity of the deformed algebra can be checked for all
// values of the deformation parameter at once.  The numeric backend is plain
// complex<double> and is used wherever transcendental functions of k0/kappa
// appear (plane waves, dispersion relations, the continuum star product).

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace kforms {

using Rational = boost::multiprecision::cpp_rational;

// a + b*i with exact rational a, b.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long r) : re(r) {}

    bool is_zero() const { return re == 0 && im == 0; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    GaussianRational operator-() const { return {-re, -im}; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }

    GaussianRational conj() const { return {re, -im}; }

    GaussianRational inv() const {
        Rational n = re * re + im * im;
        if (n == 0) throw std::domain_error("division by zero");
        return {re / n, -im / n};
    }

    std::complex<double> to_complex() const {
        return {static_cast<double>(re), static_cast<double>(im)};
    }

    std::string str() const;
};

inline GaussianRational gr_i() { return {Rational(0), Rational(1)}; }

// Sparse Laurent polynomial in 1/kappa: key n holds the coefficient of
// kappa^{-n} (negative keys are positive powers of kappa).  Canonical form
// never stores a zero coefficient.
class ExactScalar {
public:
    ExactScalar() = default;
    ExactScalar(long v) { if (v != 0) terms_[0] = GaussianRational(v); }
    ExactScalar(GaussianRational c) { if (!c.is_zero()) terms_[0] = std::move(c); }

    static ExactScalar zero() { return {}; }
    static ExactScalar one() { return ExactScalar(1); }
    static ExactScalar i() { return ExactScalar(gr_i()); }
    // c * kappa^{-n}
    static ExactScalar term(GaussianRational c, int n) {
        ExactScalar s;
        if (!c.is_zero()) s.terms_[n] = std::move(c);
        return s;
    }
    static ExactScalar kappa_inv_pow(int n) { return term(GaussianRational(1), n); }
    static ExactScalar rational(long num, long den) {
        return ExactScalar(GaussianRational(Rational(num, den)));
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, GaussianRational>& terms() const { return terms_; }

    friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
        ExactScalar r = a;
        for (const auto& [n, c] : b.terms_) r.add_term(n, c);
        return r;
    }
    friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) {
        ExactScalar r = a;
        for (const auto& [n, c] : b.terms_) r.add_term(n, -c);
        return r;
    }
    friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
        ExactScalar r;
        for (const auto& [n, c] : a.terms_)
            for (const auto& [m, d] : b.terms_) r.add_term(n + m, c * d);
        return r;
    }
    ExactScalar operator-() const {
        ExactScalar r;
        for (const auto& [n, c] : terms_) r.terms_[n] = -c;
        return r;
    }
    friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
        return a.terms_ == b.terms_;
    }

    // Conjugation negates imaginary parts and fixes powers of 1/kappa
    // (kappa is a real deformation parameter).
    ExactScalar conj() const {
        ExactScalar r;
        for (const auto& [n, c] : terms_) r.terms_[n] = c.conj();
        return r;
    }

    // Defined for nonzero single-term scalars only.
    ExactScalar inv() const {
        if (terms_.empty()) throw std::domain_error("division by zero");
        if (terms_.size() != 1) throw std::domain_error("not a unit");
        const auto& [n, c] = *terms_.begin();
        return term(c.inv(), -n);
    }

    std::complex<double> eval(double kappa) const {
        std::complex<double> v{0.0, 0.0};
        for (const auto& [n, c] : terms_) v += c.to_complex() * std::pow(kappa, -n);
        return v;
    }

    // Exact substitution of a rational kappa.
    GaussianRational eval_exact(const Rational& kappa) const {
        GaussianRational v;
        for (const auto& [n, c] : terms_) {
            Rational p = 1;
            if (n >= 0) { for (int k = 0; k < n; ++k) p /= kappa; }
            else        { for (int k = 0; k < -n; ++k) p *= kappa; }
            v = v + c * GaussianRational(p);
        }
        return v;
    }

    std::string str() const;

private:
    void add_term(int n, const GaussianRational& c) {
        auto it = terms_.find(n);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_[n] = c;
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::map<int, GaussianRational> terms_;
};

inline ExactScalar operator*(long a, const ExactScalar& b) { return ExactScalar(a) * b; }

void check_finite(const std::complex<double>& z, const char* what);

} // namespace kforms
