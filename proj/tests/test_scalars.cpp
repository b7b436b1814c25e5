#include <doctest.h>

#include <random>

#include "rank2/scalar.hpp"

using namespace rank2;

namespace {

CycScalar q() { return CycScalar::q_power(1); }
CycScalar qi() { return CycScalar::q_power(-1); }

// independent numeric oracle: exact big-rational evaluation at v = v0
CycNum ev(const CycScalar& x, long v0 = 2) { return x.evaluate(Rational(v0)); }

// deterministic scalar generator: small Laurent fractions
CycScalar random_scalar(std::mt19937& rng) {
    auto coin = [&](int m) { return static_cast<int>(rng() % m); };
    LaurentPoly num, den(1);
    int terms = 1 + coin(3);
    for (int t = 0; t < terms; ++t)
        num = num + LaurentPoly::term(CycNum(coin(7) - 3), coin(9) - 4);
    if (coin(2)) den = den + LaurentPoly::term(CycNum(1 + coin(3)), 1 + coin(5));
    if (num.is_zero()) num = LaurentPoly(1);
    return CycScalar(num, den);
}

}  // namespace

TEST_CASE("cyclotomic polynomial and basic field structure") {
    CHECK(euler_phi(12) == 4);
    auto phi12 = cyclotomic_polynomial(12);   // x^4 - x^2 + 1
    REQUIRE(phi12.size() == 5);
    CHECK(phi12[0] == 1);
    CHECK(phi12[2] == -1);
    CHECK(phi12[4] == 1);
    CHECK(cyclotomic_polynomial(1).size() == 2);
    CHECK(cyclotomic_polynomial(2)[0] == 1);

    CycNum z = CycNum::zeta_power(1);
    CycNum acc(1);
    for (int i = 0; i < 12; ++i) acc = acc * z;
    CHECK(acc.is_one());
    CHECK(CycNum::zeta_power(6) == CycNum(-1));
    CHECK((CycNum::zeta_power(4) * CycNum::zeta_power(8)).is_one());
    CHECK((z.inverse() * z).is_one());
    // zeta_3 = zeta_12^4 satisfies x^2 + x + 1 = 0
    CycNum z3 = CycNum::zeta_power(4);
    CHECK((z3 * z3 + z3 + CycNum(1)).is_zero());
}

TEST_CASE("addition examples") {
    CHECK(q_minus_qinv() + qi() == q());                       // cancellation
    CycScalar x = CycScalar(3) - CycScalar::v_power(2);
    CHECK(x + CycScalar() == x);                               // identity
    // 1/(1-q^2) + 1/(1-q^{-2}) = 1, frozen via the evaluation oracle
    CycScalar a = CycScalar(1) / (CycScalar(1) - CycScalar::q_power(2));
    CycScalar b = CycScalar(1) / (CycScalar(1) - CycScalar::q_power(-2));
    CHECK(ev(a) + ev(b) == CycNum(1));
    CHECK(a + b == CycScalar(1));
}

TEST_CASE("inverse examples") {
    CHECK(q().inverse() == qi());
    // (q - q^{-1}) / (1 - q^2) = -q^{-1}
    CycScalar lhs = q_minus_qinv() / (CycScalar(1) - CycScalar::q_power(2));
    CHECK(lhs == -qi());
    CHECK(ev(lhs) == ev(-qi()));
    // inv(zeta_3) = zeta_3^2
    CycScalar z3 = CycScalar(CycNum::zeta_power(4));
    CHECK(z3.inverse() == CycScalar(CycNum::zeta_power(8)));
    CHECK_THROWS_AS(CycScalar().inverse(), std::domain_error);
}

TEST_CASE("evaluation oracle") {
    CHECK(ev(q()) == CycNum(64));                              // 2^6
    CHECK(ev(q_minus_qinv(), 1).is_zero());
    // (q - q^{-1})/(1 - q^{-2}) equals q
    CycScalar x = q_minus_qinv() / (CycScalar(1) - CycScalar::q_power(-2));
    CHECK(ev(x) == CycNum(64));
    CHECK(x == q());
    // pole detection
    CycScalar pole = CycScalar(1) / (CycScalar(1) - CycScalar::v_power(1));
    CHECK_THROWS_AS(pole.evaluate(Rational(1)), std::domain_error);
}

TEST_CASE("monomial group") {
    Monomial a(0, 12), b(0, -12);
    CHECK((a * b).is_one());                                   // q^2 q^{-2} = 1
    CHECK(CycScalar::from_monomial(Monomial(6, 0)) == CycScalar(-1));
    // the G2 cube identity: (zeta^4 v^{-4})^3 = v^{-12} = q^{-2}
    CHECK(Monomial(4, -4).power(3) == Monomial(0, -12));
    CHECK(Monomial(4, -4).power(3) == Monomial::q_power(-2));
    CHECK(Monomial(5, 3).inverse() * Monomial(5, 3) == Monomial::one());

    // embedding is injective and multiplicative
    std::mt19937 rng(99u);
    for (int k = 0; k < 50; ++k) {
        Monomial m1(static_cast<int>(rng() % 12), static_cast<int>(rng() % 9) - 4);
        Monomial m2(static_cast<int>(rng() % 12), static_cast<int>(rng() % 9) - 4);
        CHECK(CycScalar::from_monomial(m1 * m2) ==
              CycScalar::from_monomial(m1) * CycScalar::from_monomial(m2));
        if (m1 != m2) CHECK(CycScalar::from_monomial(m1) != CycScalar::from_monomial(m2));
    }
    CHECK(CycScalar::from_monomial(Monomial(3, 2)).as_monomial() == Monomial(3, 2));
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(2024u);
    for (int k = 0; k < 40; ++k) {
        CycScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK(a * a.inverse() == CycScalar(1));
        // evaluation is a homomorphism wherever defined
        try {
            CHECK(ev(a + b) == ev(a) + ev(b));
            CHECK(ev(a * b) == ev(a) * ev(b));
        } catch (const std::domain_error&) {
            // pole at v = 2; nothing to compare
        }
    }
}

TEST_CASE("canonical form is idempotent and normalized") {
    std::mt19937 rng(7u);
    for (int k = 0; k < 30; ++k) {
        CycScalar a = random_scalar(rng);
        // rebuilding from the stored num/den must not change anything
        CycScalar again(a.num(), a.den());
        CHECK(again == a);
        if (!a.is_zero()) {
            // denominator is a polynomial with constant term 1
            CHECK(a.den().min_exp() == 0);
            CHECK(a.den().terms().begin()->second.is_one());
        }
    }
    // gcd cancellation happens: (1 - q^2)/(1 - q^4) = 1/(1 + q^2)
    CycScalar x = (CycScalar(1) - CycScalar::q_power(2)) / (CycScalar(1) - CycScalar::q_power(4));
    CycScalar y = CycScalar(1) / (CycScalar(1) + CycScalar::q_power(2));
    CHECK(x == y);
}

TEST_CASE("square root helper") {
    CHECK(*try_sqrt(CycScalar::q_power(2)) * *try_sqrt(CycScalar::q_power(2)) == CycScalar::q_power(2));
    CycScalar sq = (CycScalar(1) + CycScalar::v_power(1)) * (CycScalar(1) + CycScalar::v_power(1));
    auto r = try_sqrt(sq);
    REQUIRE(r.has_value());
    CHECK(*r * *r == sq);
    CHECK(!try_sqrt(CycScalar::v_power(1)).has_value());       // odd v-order
    CHECK(!try_sqrt(CycScalar(2)).has_value());                // 2 is not a square in Q(zeta_12)
    CHECK(try_sqrt(CycScalar(3)).has_value());                 // but 3 is
    CHECK(try_sqrt(CycScalar(-1)).has_value());
}
