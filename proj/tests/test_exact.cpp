#include "artinsym/exact.hpp"

#include <doctest.h>

using namespace artinsym;

TEST_SUITE("exact")
{
    TEST_CASE("cyclotomic polynomials")
    {
        CHECK(cyclotomic_polynomial(1) == UniPoly(std::vector<Rational>{-1, 1}));
        CHECK(cyclotomic_polynomial(2) == UniPoly(std::vector<Rational>{1, 1}));
        CHECK(cyclotomic_polynomial(4) == UniPoly(std::vector<Rational>{1, 0, 1}));
        // x^n - 1 is the product of Phi_d over d | n
        for (int n = 1; n <= 30; ++n) {
            UniPoly prod(1);
            for (int d = 1; d <= n; ++d)
                if (n % d == 0)
                    prod = prod * cyclotomic_polynomial(d);
            CHECK(prod == UniPoly::monomial(1, n) - UniPoly(1));
            CHECK(cyclotomic_polynomial(n).degree() == euler_phi(n));
        }
    }

    TEST_CASE("roots of unity")
    {
        CHECK(Cyclotomic::root_of_unity(1, 0) == Cyclotomic(1));
        CHECK(Cyclotomic::root_of_unity(4, 2) == Cyclotomic(-1));
        CHECK(Cyclotomic::root_of_unity(3, 1) + Cyclotomic::root_of_unity(3, 2) == Cyclotomic(-1));
        auto i = Cyclotomic::root_of_unity(4, 1);
        CHECK(Cyclotomic(1) * i == i);
        CHECK(i * i == Cyclotomic(-1));
        auto w = Cyclotomic::root_of_unity(3, 1) * i;
        CHECK(w.conductor() == 12);
        CHECK(w == Cyclotomic::root_of_unity(12, 7));
        // the sum of all primitive n-th roots is the Moebius function
        CHECK(Cyclotomic::from_powers(12, {{1, 1}, {5, 1}, {7, 1}, {11, 1}}) == Cyclotomic(0));
        CHECK(Cyclotomic::from_powers(6, {{1, 1}, {5, 1}}) == Cyclotomic(1));
    }

    TEST_CASE("cyclotomic field arithmetic")
    {
        auto z5 = Cyclotomic::root_of_unity(5, 1);
        Cyclotomic x = z5 + Cyclotomic(Rational(1, 3)) * z5.pow(3) - Cyclotomic(2);
        CHECK(x * x.inverse() == Cyclotomic(1));
        CHECK(x.conj().conj() == x);
        CHECK((x * x.conj()).conj() == x * x.conj());
        CHECK(x.norm() > 0);
        CHECK(z5.pow(5) == Cyclotomic(1));
        CHECK(z5.pow(-1) == z5.conj());
        auto c = (x * z5).to_complex();
        auto expected = x.to_complex() * z5.to_complex();
        CHECK(std::abs(c - expected) < 1e-12);
        // sqrt(-3) = 2 zeta_3 + 1 squares to -3
        auto s = Cyclotomic::root_of_unity(3, 1) * Rational(2) + Cyclotomic(1);
        CHECK(s * s == Cyclotomic(-3));
        CHECK_THROWS_AS(Cyclotomic(0).inverse(), DivisionByZero);
    }

    TEST_CASE("cyclotomic serialization round trip")
    {
        auto x = Cyclotomic::root_of_unity(12, 5) * Rational(-7, 4) + Cyclotomic(Rational(1, 2));
        CHECK(Cyclotomic::parse_json(x.json()) == x);
        CHECK(Cyclotomic::parse_json(Cyclotomic(Rational(-3, 5)).json()) == Cyclotomic(Rational(-3, 5)));
        CHECK(Cyclotomic(Rational(8, 3)).str() == "8/3");
    }

    TEST_CASE("rational functions")
    {
        auto t = RatFun::variable();
        CHECK(RatFun(UniPoly::one_minus_power(2), UniPoly::one_minus_power(1)) == RatFun(1) + t);
        RatFun a(UniPoly(1), UniPoly::one_minus_power(1));
        CHECK(a.eval(Rational(1, 2)) == 2);
        RatFun b(UniPoly(1), UniPoly::one_minus_power(2));
        CHECK((a * b).eval(Rational(1, 2)) == Rational(8, 3));
        CHECK((a / a) == RatFun(1));
        CHECK((a - a).is_zero());
        CHECK(t.inverted_variable() * t == RatFun(1));
        CHECK_THROWS_AS(a.eval(Rational(1)), PoleError);
    }

    TEST_CASE("polynomial division and gcd")
    {
        UniPoly f = UniPoly::one_minus_power(6), g = UniPoly::one_minus_power(4);
        CHECK(gcd(f, g) == UniPoly::one_minus_power(2).monic());
        auto [q, r] = divmod(f, g);
        CHECK(q * g + r == f);
        CHECK(parse_rational("-6/4") == Rational(-3, 2));
        CHECK(binomial(10, 3) == 120);
        CHECK(factorial(6) == 720);
    }
}
