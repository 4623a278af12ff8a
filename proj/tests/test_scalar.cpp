#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "schroq/errors.hpp"
#include "schroq/scalar.hpp"

using namespace schroq;

namespace {

// Independent oracle for [n]: the geometric sum q^{n-1} + q^{n-3} + ... + q^{1-n}.
Scalar qint_oracle(long n) {
    if (n < 0) return -qint_oracle(-n);
    Scalar s;
    for (long j = 0; j < n; ++j) s += Scalar::q(static_cast<int>(n - 1 - 2 * j));
    return s;
}

Scalar random_scalar(std::mt19937& rng, bool allow_zero = true) {
    std::uniform_int_distribution<int> coef(-3, 3), ex(0, 2), nterms(1, 3);
    auto rand_poly = [&](bool nonzero) {
        Poly p;
        int k = nterms(rng);
        for (int i = 0; i < k; ++i) {
            Exponents m{{ex(rng), ex(rng), ex(rng)}};
            p += Poly(mpq_class(coef(rng)), m);
        }
        if (nonzero && p.is_zero()) p += Poly(1);
        return p;
    };
    Poly num = rand_poly(false);
    if (!allow_zero && num.is_zero()) num += Poly(1);
    return Scalar(num, rand_poly(true));
}

} // namespace

TEST_CASE("qint basic values") {
    CHECK(qint(0).is_zero());
    CHECK(qint(1) == Scalar(1));
    CHECK(qint(2) == qint_oracle(2));
    CHECK(qint(2) == Scalar::q(1) + Scalar::q(-1));
    for (long n = -8; n <= 8; ++n) CHECK(qint(n) == qint_oracle(n));
}

TEST_CASE("qint antisymmetry") {
    for (long n = 0; n <= 20; ++n) CHECK(qint(-n) == -qint(n));
}

TEST_CASE("qint addition rule") {
    for (long m = -10; m <= 10; ++m) {
        for (long n = -10; n <= 10; ++n) {
            Scalar lhs = qint(m + n);
            Scalar rhs = Scalar::q(static_cast<int>(n)) * qint(m) +
                         Scalar::q(static_cast<int>(-m)) * qint(n);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("field axioms on random scalars") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 40; ++trial) {
        Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
    }
}

TEST_CASE("canonical form is idempotent") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 30; ++trial) {
        Scalar a = random_scalar(rng);
        // Rebuilding from the stored numerator/denominator must not change anything.
        CHECK(Scalar(a.num(), a.den()) == a);
        // Unreduced representations of the same value normalize identically.
        Scalar m = random_scalar(rng, false);
        CHECK(Scalar(a.num() * m.num(), a.den() * m.num()) == a);
    }
}

TEST_CASE("eval_numeric") {
    // [2] at q = 4: 4 + 1/4 = 17/4
    CHECK(qint(2).eval(4, 0, 0) == mpq_class(17, 4));
    CHECK(Scalar().eval(4, 1, 1) == 0);
    CHECK(Scalar(1).eval(mpq_class(9, 4), 2, 3) == 1);

    Scalar sing = Scalar(1) / (Scalar::q(1) - Scalar(1));
    CHECK_THROWS_AS(sing.eval(1, 0, 0), DenominatorVanishes);
    CHECK_THROWS_AS(qint(2).eval(2, 0, 0), NonRationalRoot);

    // w and z substitute directly
    Scalar s = Scalar::w() * Scalar::z() / Scalar::t();
    CHECK(s.eval_t(2, 3, 5) == mpq_class(15, 2));
}

TEST_CASE("division by zero is rejected") {
    CHECK_THROWS_AS(Scalar(1) / Scalar(), DivisionByZero);
    CHECK_THROWS_AS(Scalar().inverse(), DivisionByZero);
    CHECK_THROWS_AS(Scalar(Poly(1), Poly()), DivisionByZero);
}

TEST_CASE("parser round trips") {
    CHECK(Scalar::parse("q + q^-1") == qint(2));
    CHECK(Scalar::parse("(q^2 - q^-2)/(q - q^-1)") == qint(2));
    CHECK(Scalar::parse("t^2") == Scalar::q());
    CHECK(Scalar::parse("q^(-1)") == Scalar::q(-1));  // parenthesized exponent
    CHECK(Scalar::parse("q^(-1/2)") == Scalar::t(-1));
    CHECK(Scalar::parse("q^(3/2)") == Scalar::t(3));
    CHECK_THROWS_AS(Scalar::parse("w^(1/2)"), SyntaxError);
    CHECK(Scalar::parse("-3*w*z/t") == Scalar(-3) * Scalar::w() * Scalar::z() / Scalar::t());
    CHECK(Scalar::parse("0") == Scalar());

    std::mt19937 rng(4242);
    for (int trial = 0; trial < 25; ++trial) {
        Scalar a = random_scalar(rng);
        CHECK(Scalar::parse(a.str()) == a);
    }
}

TEST_CASE("parser rejects malformed input") {
    CHECK_THROWS_AS(Scalar::parse("q +"), SyntaxError);
    CHECK_THROWS_AS(Scalar::parse("(q"), SyntaxError);
    CHECK_THROWS_AS(Scalar::parse("a"), SyntaxError);
    CHECK_THROWS_AS(Scalar::parse("1/0"), SyntaxError);
}

TEST_CASE("weight helpers") {
    CHECK_THROWS_AS(Weight{Scalar()}, InvalidWeight);
    Weight lam = Weight::q_half_power(-1);  // q^{-1/2}
    auto mono = lam.as_t_monomial();
    REQUIRE(mono.has_value());
    CHECK(mono->sign == 1);
    CHECK(mono->t_exp == -1);

    Weight neg = Weight::q_half_power(3, -1);
    auto m2 = neg.as_t_monomial();
    REQUIRE(m2.has_value());
    CHECK(m2->sign == -1);
    CHECK(m2->t_exp == 3);

    Weight gen = Weight::generic();
    CHECK(!gen.as_t_monomial().has_value());
    auto wm = gen.as_w_monomial();
    REQUIRE(wm.has_value());
    CHECK(wm->t_exp == 0);

    CHECK(lam.shifted(2) == Weight(Scalar::t(1)));
    CHECK(lam.q_shifted(-1).as_t_monomial()->t_exp == -3);
}
