#include "artinsym/artin.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace artinsym;

namespace {

MultiPartition single(std::uint64_t p, Partition la)
{
    return MultiPartition({{PrimeKey::rational_prime(p), std::move(la)}});
}

const Basis kBases[] = {Basis::Monomial, Basis::Schur, Basis::HallLittlewoodPNormalized, Basis::Homogeneous,
                        Basis::PowerSum};

}  // namespace

TEST_SUITE("artin")
{
    TEST_CASE("Dedekind series over Q")
    {
        FieldContext Q(make_provider("rational"));
        auto m = dedekind_series(Q, 200, Basis::Monomial);
        for (const auto& [lam, c] : m.expand())
            CHECK(c == Cyclotomic(1));
        auto hl = dedekind_series(Q, 200, Basis::HallLittlewoodPNormalized);
        CHECK(hl.coefficient(single(2, {1, 1})) == Cyclotomic(1));
        CHECK(hl.coefficient(MultiPartition()) == Cyclotomic(1));
        for (const auto& [lam, c] : hl.expand())
            CHECK(c == Cyclotomic(1));
        // the trivial character gives the Dedekind series in every basis
        auto triv = Q.provider()->character("trivial");
        for (Basis b : kBases)
            CHECK(compare_series(artin_series(triv, Q, 100, b), dedekind_series(Q, 100, b)).equal);
    }

    TEST_CASE("relative Dedekind series of Q(i)")
    {
        auto E = make_provider("quadratic:-1");
        FieldContext top(E, {0}), Q(E);
        auto rel = relative_dedekind_series(top, Q, 100, Basis::Monomial);
        CHECK(rel.coefficient(single(5, {1})) == Cyclotomic(2));
        CHECK(rel.coefficient(single(3, {1})) == Cyclotomic(0));
        // m_(1) coefficients count ideals of norm p: r_2(p)/4
        for (auto p : primes_up_to(100))
            CHECK(rel.coefficient(single(p, {1})) == Cyclotomic(oracle::sum_of_two_squares(p) / 4));
    }

    TEST_CASE("Artin series coefficients")
    {
        auto qi = make_provider("cyclotomic:4");
        FieldContext Q(qi);
        auto chi = qi->character("chi:-4");
        auto hl = artin_series(chi, Q, 100, Basis::HallLittlewoodPNormalized);
        CHECK(hl.coefficient(single(3, {1, 1})) == Cyclotomic(1));
        auto s = artin_series(chi, Q, 100, Basis::Schur);
        for (auto p : primes_up_to(100))
            CHECK(s.coefficient(single(p, {1})) == Cyclotomic(oracle::chi_minus4(p)));

        auto L = make_provider("cubic-s3:2");
        FieldContext QL(L);
        auto stds = artin_series(L->character("std"), QL, 50, Basis::Schur);
        CHECK(stds.coefficient(single(5, {1, 1})) == Cyclotomic(-1));
        // the permutation character trivial + std counts roots of x^3 - 2
        auto perm = direct_sum(L->character("trivial"), L->character("std"));
        auto m = artin_series(perm, QL, 400, Basis::Monomial);
        for (auto p : primes_up_to(400))
            if (p > 3)
                CHECK(m.coefficient(single(p, {1})) == Cyclotomic(oracle::cube_roots(2, p)));
    }

    TEST_CASE("expansion matches enumeration")
    {
        FieldContext Q(make_provider("rational"));
        auto a = dedekind_series(Q, 10, Basis::HallLittlewoodPNormalized);
        CHECK(a.expand().size() == enumerate_multipartitions(provider_rational(10), 10).size());
        CHECK(a.expand().size() == 14);
        auto dump = a.dump("rational", "trivial");
        CHECK(dump.rfind("# field Q\n", 0) == 0);
        CHECK(std::count(dump.begin(), dump.end(), '\n') == 5 + 14);
    }

    TEST_CASE("series products")
    {
        auto qi = make_provider("quadratic:-1");
        FieldContext Q(qi), top(qi, {0});
        for (Basis b : kBases) {
            auto zeta = artin_series(qi->character("trivial"), Q, 100, b);
            auto l = artin_series(qi->character("chi:-4"), Q, 100, b);
            auto rel = relative_dedekind_series(top, Q, 100, b);
            CHECK(compare_series(series_multiply(zeta, l), rel).equal);
            CHECK(compare_series(series_multiply(l, series_one(Q, 100, b)), l).equal);
        }
        auto a = artin_series(qi->character("trivial"), Q, 50, Basis::Schur);
        auto b = artin_series(qi->character("trivial"), Q, 50, Basis::Monomial);
        CHECK_THROWS_AS(series_multiply(a, b), BasisMismatch);
    }

    TEST_CASE("norm map of a Dedekind series")
    {
        auto E = make_provider("cyclotomic:12");
        FieldContext top(E, {0}), Q(E);
        for (Basis b : kBases) {
            auto lhs = norm_map(dedekind_series(top, 60, b), top, Q);
            CHECK(compare_series(lhs, relative_dedekind_series(top, Q, 60, b)).equal);
        }
    }

    TEST_CASE("identity verifiers")
    {
        auto qi = make_provider("quadratic:-1");
        FieldContext Q(qi);
        CHECK(verify_factorization(Q, 100, Basis::HallLittlewoodPNormalized).pass);
        CHECK(verify_factorization(Q, 100, Basis::Monomial).pass);
        auto L = make_provider("cubic-s3:2");
        FieldContext QL(L);
        CHECK(verify_factorization(QL, 50, Basis::HallLittlewoodPNormalized).pass);
        CHECK(verify_regular(QL, 50, Basis::Schur).pass);
        for (const auto& kind : identity_kinds())
            for (const auto& r : verify_identity(kind, make_provider("cyclotomic:12"), 40)) {
                INFO(r.kind << " " << r.instance << " " << r.detail);
                CHECK(r.pass);
            }
    }

    TEST_CASE("a wrong factorization is detected")
    {
        auto qi = make_provider("quadratic:-1");
        FieldContext Q(qi), top(qi, {0});
        auto zeta = artin_series(qi->character("trivial"), Q, 50, Basis::Schur);
        auto rel = relative_dedekind_series(top, Q, 50, Basis::Schur);
        auto cmp = compare_series(series_multiply(zeta, zeta), rel);
        CHECK_FALSE(cmp.equal);
        CHECK(!cmp.mismatch.empty());
    }

    TEST_CASE("norm grading and pairings")
    {
        auto lam = MultiPartition({{PrimeKey::rational_prime(2), Partition{2, 1}},
                                   {PrimeKey::rational_prime(5), Partition{1}}});
        CHECK(norm_grade(lam).value() == 40);
        CHECK((norm_grade(lam) * norm_grade(single(2, {1}))).value() == 80);
        for (auto p : {2, 3, 5, 7})
            CHECK(z_value(single(p, {1})) == Rational(1) / (Rational(1) - Rational(1, p)));
        for (int d = 1; d <= 3; ++d)
            for (const auto& la : partitions_of(d)) {
                auto q = single(3, la);
                GlobalExpansion P{Basis::HallLittlewoodP, {}}, Qx{Basis::HallLittlewoodQ, {}};
                P.add(q, Cyclotomic(1));
                Qx.add(q, Cyclotomic(1));
                CHECK(pairing(P, Qx) == Cyclotomic(1));
                Rational b = b_poly(la).eval(Rational(1, 3));
                CHECK(pairing(P, P) == Cyclotomic(Rational(1) / b));
            }
    }
}
