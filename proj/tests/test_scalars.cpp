#include <doctest.h>

#include "kforms/scalars.hpp"

#include <complex>
#include <random>

using namespace kforms;

namespace {

ExactScalar random_scalar(std::mt19937_64& rng, int max_terms = 3) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> power(-2, 2);
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    ExactScalar s;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        GaussianRational c{Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
        s = s + ExactScalar::term(c, power(rng));
    }
    return s;
}

} // namespace

TEST_CASE("gaussian rational units multiply correctly") {
    // (i/kappa) * (-i/kappa) = kappa^{-2}
    ExactScalar a = ExactScalar::i() * ExactScalar::kappa_inv_pow(1);
    ExactScalar b = -(ExactScalar::i()) * ExactScalar::kappa_inv_pow(1);
    CHECK(a * b == ExactScalar::kappa_inv_pow(2));
}

TEST_CASE("conjugation fixes kappa and flips i") {
    ExactScalar a = ExactScalar::i() * ExactScalar::kappa_inv_pow(1);
    CHECK(a.conj() == -(ExactScalar::i()) * ExactScalar::kappa_inv_pow(1));
}

TEST_CASE("additive cancellation restores canonical form") {
    ExactScalar half = ExactScalar::rational(1, 2);
    ExactScalar a = half + ExactScalar::kappa_inv_pow(1);
    ExactScalar b = half - ExactScalar::kappa_inv_pow(1);
    CHECK(a + b == ExactScalar::one());
    CHECK((a + b).terms().size() == 1);
}

TEST_CASE("ring axioms on randomized scalars") {
    std::mt19937_64 rng(12345);
    for (int it = 0; it < 300; ++it) {
        ExactScalar a = random_scalar(rng);
        ExactScalar b = random_scalar(rng);
        ExactScalar c = random_scalar(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK((a * b).conj() == b.conj() * a.conj());
        CHECK(a.conj().conj() == a);
    }
}

TEST_CASE("inversion succeeds on single terms and fails otherwise") {
    ExactScalar a = ExactScalar::term({Rational(3, 4), Rational(-1, 2)}, 2);
    CHECK(a * a.inv() == ExactScalar::one());
    CHECK_THROWS_WITH_AS((void)ExactScalar::zero().inv(), "division by zero",
                         std::domain_error);
    ExactScalar multi = ExactScalar::one() + ExactScalar::kappa_inv_pow(1);
    CHECK_THROWS_WITH_AS((void)multi.inv(), "not a unit", std::domain_error);
}

TEST_CASE("numeric backend agrees with exact backend at kappa = 1") {
    std::mt19937_64 rng(777);
    for (int it = 0; it < 200; ++it) {
        // randomized degree <= 4 expression built from sums and products
        ExactScalar a = random_scalar(rng);
        ExactScalar b = random_scalar(rng);
        ExactScalar c = random_scalar(rng);
        ExactScalar d = random_scalar(rng);
        ExactScalar expr = (a * b + c) * d + a;
        std::complex<double> numeric =
            (a.eval(1.0) * b.eval(1.0) + c.eval(1.0)) * d.eval(1.0) + a.eval(1.0);
        CHECK(std::abs(expr.eval(1.0) - numeric) <= 1e-12);
    }
}

TEST_CASE("exact rational substitution matches double evaluation") {
    ExactScalar a = ExactScalar::rational(3, 2) * ExactScalar::kappa_inv_pow(2) +
                    ExactScalar::i();
    GaussianRational g = a.eval_exact(Rational(2));
    CHECK(g == GaussianRational{Rational(3, 8), Rational(1)});
}
