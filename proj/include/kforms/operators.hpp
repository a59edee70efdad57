#pragma once

// The deformed symmetry algebra as a term-rewriting system.
//
// Elements are finite sums of normal-ordered words in the generators
//   R1 R2 R3  N1 N2 N3  P1 P2 P3  P0  E^m
// with E = exp(P0/kappa) kept as an independent invertible letter so the
// whole ring stays polynomial.  The fixed letter order R < N < P < P0 < E
// sends momentum-sector letters to the right; every swap of an out-of-order
// adjacent pair either keeps the Lorentz letter count and removes one
// inversion or strictly lowers the Lorentz letter count, so rewriting
// terminates.

#include "kforms/scalars.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace kforms {

// Normal-ordered word: exponents of (R1,R2,R3,N1,N2,N3,P1,P2,P3,P0) plus the
// integer power of E.  The empty word is the unit.
struct OpWord {
    std::array<uint16_t, 10> exp{};  // r1 r2 r3 n1 n2 n3 p1 p2 p3 p0
    int32_t epow = 0;

    bool is_unit() const {
        for (auto e : exp) if (e) return false;
        return epow == 0;
    }
    // True when the word involves only P, P0, E letters.
    bool momentum_only() const {
        return !exp[0] && !exp[1] && !exp[2] && !exp[3] && !exp[4] && !exp[5];
    }
    // ... and no bare P0 either (E-sector words act diagonally on waves
    // together with P and P0, so this is rarely needed).
    bool is_pure_epow() const {
        for (auto e : exp) if (e) return false;
        return true;
    }
    auto operator<=>(const OpWord&) const = default;
};

struct Letter {
    enum Kind : uint8_t { R = 0, N = 1, P = 2, P0 = 3, E = 4 };
    Kind kind;
    uint8_t idx;   // 1..3 for R, N, P
    int32_t epow;  // for E only

    static Letter r(int j) { return {R, static_cast<uint8_t>(j), 0}; }
    static Letter n(int j) { return {N, static_cast<uint8_t>(j), 0}; }
    static Letter p(int j) { return {P, static_cast<uint8_t>(j), 0}; }
    static Letter p0() { return {P0, 0, 0}; }
    static Letter e(int32_t m) { return {E, 0, m}; }

    int rank() const {
        switch (kind) {
            case R: return idx - 1;
            case N: return 3 + idx - 1;
            case P: return 6 + idx - 1;
            case P0: return 9;
            default: return 10;
        }
    }
};

class TensorOperator;

class OperatorElement {
public:
    using Terms = std::map<OpWord, ExactScalar>;

    OperatorElement() = default;

    static OperatorElement zero() { return {}; }
    static OperatorElement unit();
    static OperatorElement scalar(const ExactScalar& c);
    static OperatorElement p(int j);    // P_j, j = 1..3
    static OperatorElement p0();
    static OperatorElement e(int m);    // E^m
    static OperatorElement n(int j);
    static OperatorElement r(int j);

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    void add(const OpWord& w, const ExactScalar& c);

    friend OperatorElement operator+(const OperatorElement& a, const OperatorElement& b);
    friend OperatorElement operator-(const OperatorElement& a, const OperatorElement& b);
    friend OperatorElement operator*(const OperatorElement& a, const OperatorElement& b);
    OperatorElement operator-() const;
    friend bool operator==(const OperatorElement& a, const OperatorElement& b) {
        return a.terms_ == b.terms_;
    }

    friend OperatorElement operator*(const ExactScalar& c, const OperatorElement& a);

    bool momentum_only() const;

    // Eigenvalue of a momentum-sector element on the plane wave labelled by
    // k = (k0, k1, k2, k3).  Throws for Lorentz letters.
    std::complex<double> wave_eigenvalue(const std::array<double, 4>& k, double kappa) const;

    std::string str() const;

private:
    Terms terms_;
};

OperatorElement commutator(const OperatorElement& a, const OperatorElement& b);

// Coproducts live in the two-leg tensor square, each leg normal-ordered.
class TensorOperator {
public:
    using Key = std::pair<OpWord, OpWord>;
    using Terms = std::map<Key, ExactScalar>;

    TensorOperator() = default;
    static TensorOperator tensor(const OperatorElement& a, const OperatorElement& b);

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    void add(const OpWord& a, const OpWord& b, const ExactScalar& c);

    friend TensorOperator operator+(const TensorOperator& a, const TensorOperator& b);
    friend TensorOperator operator-(const TensorOperator& a, const TensorOperator& b);
    friend TensorOperator operator*(const TensorOperator& a, const TensorOperator& b);
    friend bool operator==(const TensorOperator& a, const TensorOperator& b) {
        return a.terms_ == b.terms_;
    }

private:
    Terms terms_;
};

TensorOperator coproduct(const OperatorElement& a);
OperatorElement antipode(const OperatorElement& a);
ExactScalar counit(const OperatorElement& a);
OperatorElement dagger(const OperatorElement& a);

// Named operator families of the five-dimensional calculus.  chi and sigma
// are produced by the antipode, not transcribed separately.
const OperatorElement& lambda_entry(int a, int b);  // 5x5, indices 0..4
const OperatorElement& sigma_entry(int a, int b);   // S(lambda^a_b)
const OperatorElement& xi(int a);                   // 0..4
const OperatorElement& chi(int a);                  // -S(xi_a)
OperatorElement twist();                            // E^3
const OperatorElement& casimir();                   // eta^{ab} xi_a xi_b

inline int eta5(int a) { return a == 0 ? -1 : 1; }  // diag(-1,1,1,1,1)
int epsilon3(int j, int k, int l);                  // spatial indices 1..3

// eta^{cd} lambda^a_c lambda^b_d - eta^{ab} for all 25 index pairs; empty
// report means the identity holds exactly.
struct So41Failure { int a, b; OperatorElement residual; };
std::vector<So41Failure> so41_check();

// Exhaustive check of the epsilon-lambda exchange identity of degree n:
//   lambda^{a1}_{b1}..lambda^{an}_{bn} eps^{b1..bn a_{n+1}..a5}
//     = S(lambda^{a_{n+1}}_{b_{n+1}})..S(lambda^{a5}_{b5}) eps^{a1..an b_{n+1}..b5}
// for every assignment of the five free indices.  Returns the number of
// assignments checked and the failures.
struct EpsilonLambdaReport {
    int degree = 0;
    long assignments = 0;
    long failures = 0;
};
EpsilonLambdaReport epsilon_lambda_check(int n);

} // namespace kforms
