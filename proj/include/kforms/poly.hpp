#pragma once

// Exact elements of the coordinate algebra: normal-ordered polynomials
// x1^{n1} x2^{n2} x3^{n3} x0^{n0} (spatial letters left, time rightmost, the
// same ordering as the plane waves) with coefficients in the Laurent ring in
// 1/kappa.

#include "kforms/operators.hpp"
#include "kforms/scalars.hpp"

#include <array>
#include <map>

namespace kforms {

// exponents (n1, n2, n3, n0)
using Mono = std::array<uint16_t, 4>;

class PolyElement {
public:
    using Terms = std::map<Mono, ExactScalar>;

    PolyElement() = default;

    static PolyElement zero() { return {}; }
    static PolyElement unit() { return scalar(ExactScalar::one()); }
    static PolyElement scalar(const ExactScalar& c);
    static PolyElement x(int mu);  // mu = 0..3

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    void add(const Mono& m, const ExactScalar& c);

    friend PolyElement operator+(const PolyElement& a, const PolyElement& b);
    friend PolyElement operator-(const PolyElement& a, const PolyElement& b);
    PolyElement operator-() const;
    friend bool operator==(const PolyElement& a, const PolyElement& b) {
        return a.terms_ == b.terms_;
    }
    friend PolyElement operator*(const ExactScalar& c, const PolyElement& f);

    std::string str() const;

private:
    Terms terms_;
};

// Normal-ordered noncommutative product, using
//   x0^a f(xvec) = f(xvec restricted) ... via x0 x_j = x_j (x0 - i/kappa).
PolyElement nc_mul(const PolyElement& f, const PolyElement& g);

// The star involution: coordinates are selfadjoint, (fg)^dag = g^dag f^dag.
PolyElement involution(const PolyElement& f);

// Left Hopf-module action of the symmetry algebra, extended to products
// through the coproduct.
PolyElement act(const OperatorElement& h, const PolyElement& f);

} // namespace kforms
