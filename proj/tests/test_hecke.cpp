#include "artinsym/hecke.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace artinsym;

namespace {

MultiPartition single(std::uint64_t p, Partition la)
{
    return MultiPartition({{PrimeKey::rational_prime(p), std::move(la)}});
}

}  // namespace

TEST_SUITE("hecke")
{
    TEST_CASE("Satake image of the Dedekind series")
    {
        FieldContext Q(make_provider("rational"));
        auto zeta = dedekind_series(Q, 64, Basis::HallLittlewoodPNormalized);
        for (int n = 1; n <= 3; ++n) {
            auto h = satake(zeta, n);
            CHECK(h.terms.size() == enumerate_multipartitions(provider_rational(64), 64, n).size());
            for (const auto& [lam, c] : h.terms) {
                CHECK(lam.length() <= n);
                CHECK(c == Cyclotomic(1));
            }
        }
        CHECK(satake(zeta, 1).coefficient(single(2, {1, 1})) == Cyclotomic(0));
    }

    TEST_CASE("Satake image of a Dirichlet character on GL1")
    {
        auto qi = make_provider("quadratic:-1");
        FieldContext Q(qi);
        auto h = satake(artin_series(qi->character("chi:-4"), Q, 200, Basis::HallLittlewoodPNormalized), 1);
        for (auto p : primes_up_to(200))
            for (int k = 1; checked_pow(p, k, 200) <= 200; ++k) {
                int v = oracle::chi_minus4(p);
                CHECK(h.coefficient(single(p, Partition{k})) == Cyclotomic(k % 2 ? v : v * v));
            }
    }

    TEST_CASE("convolution")
    {
        for (int a = 0; a <= 3; ++a)
            for (int b = 0; b <= 3; ++b) {
                auto c = local_convolution(Partition::from_unsorted({a}), Partition::from_unsorted({b}), 3, 1);
                REQUIRE(c.size() == 1);
                CHECK(c.begin()->first == Partition::from_unsorted({a + b}));
                CHECK(c.begin()->second == 1);
            }
        for (std::uint64_t p : {2, 3, 5, 7}) {
            auto c = local_convolution(Partition{1}, Partition{1}, p, 2);
            CHECK(c.size() == 2);
            CHECK(c[Partition{2}] == 1);
            CHECK(c[Partition{1, 1}] == Rational(static_cast<long>(p + 1)));
        }
        auto x = HeckeElement::identity(2);
        x.add(single(3, {2, 1}), Cyclotomic(5));
        CHECK(convolve(x, HeckeElement::identity(2)) == x);
        CHECK_THROWS_AS(x.add(single(2, {1, 1, 1}), Cyclotomic(1)), LengthError);
    }

    TEST_CASE("Satake is multiplicative")
    {
        for (int n = 1; n <= 3; ++n) {
            auto r = verify_satake(n, 30, 7 + n, 6);
            INFO(r.detail);
            CHECK(r.pass);
        }
    }

    TEST_CASE("kappa weights")
    {
        CHECK(kappa(MultiPartition(), 3) == 1);
        for (std::uint64_t p : {2, 3, 5, 7}) {
            CHECK(kappa(single(p, {1}), 1) == 1);
            CHECK(kappa(single(p, {1}), 2) == Rational(static_cast<long>(oracle::sigma(p, 1))));
        }
        // at rank 2 the weights reproduce sigma_1 for prime powers
        for (std::uint64_t p : {2, 3})
            for (int a = 1; a <= 4; ++a) {
                Rational total(0);
                for (const auto& la : enumerate_partitions(a, 2))
                    total += kappa(single(p, la), 2);
                std::uint64_t N = checked_pow(p, a, 1000);
                CHECK(total == Rational(static_cast<long>(oracle::sigma(N, 1))));
            }
        auto r = kappa_routes(single(2, {2, 1}), 3);
        CHECK(r.definition == r.simplified);
        CHECK(r.definition == r.specialization);
    }

    TEST_CASE("gamma weights")
    {
        CHECK(gamma(MultiPartition()) == 1);
        CHECK(gamma(single(2, {1})) == 2);
        CHECK(gamma(single(2, {1, 1})) == Rational(2, 3));
        auto r = gamma_routes(single(3, {3, 1, 1}));
        CHECK(r.closed_form == r.principal_specialization);
        CHECK(r.closed_form == r.power_sum);
    }

    TEST_CASE("F values")
    {
        auto Qp = make_provider("rational");
        FieldContext Q(Qp);
        for (const auto& lam : enumerate_multipartitions(provider_rational(50), 50))
            CHECK(f_eval(Qp->character("trivial"), Q, lam) == Cyclotomic(1));
        auto qi = make_provider("quadratic:-1");
        FieldContext K(qi);
        auto chi = qi->character("chi:-4");
        CHECK(f_eval(chi, K, single(5, {1})) == Cyclotomic(1));
        CHECK(f_eval(chi, K, single(3, {1})) == Cyclotomic(-1));
        CHECK(f_eval(chi, K, single(3, {2, 1})) == Cyclotomic(-1));
        // the value does not depend on the rank the type is viewed in
        auto e2 = f_element(chi, K, 2, 60), e3 = f_element(chi, K, 3, 60);
        for (const auto& [lam, c] : e2.terms)
            CHECK(e3.coefficient(lam) == c);
    }

    TEST_CASE("transfer along a field extension")
    {
        auto E = make_provider("quadratic:-1");
        FieldContext top(E, {0}), Q(E);
        auto lifted = r_map(f_element(top.restrict_character(E->character("trivial")), top, 2, 40), top, Q);
        CHECK(lifted == f_element(E->character("regular"), Q, 2, 40));
        auto id = r_map(HeckeElement::identity(2), top, Q);
        CHECK(id == HeckeElement::identity(2));
    }
}
