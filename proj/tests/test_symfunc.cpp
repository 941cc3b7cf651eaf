#include "artinsym/symfunc.hpp"

#include <doctest.h>

using namespace artinsym;

namespace {

using RExp = SymExpansion<Rational>;
using FExp = SymExpansion<RatFun>;

RatFun poly(std::vector<Rational> c) { return RatFun(UniPoly(std::move(c))); }

}  // namespace

TEST_SUITE("symfunc")
{
    TEST_CASE("basis conversions")
    {
        auto h2 = convert(RExp::unit(Basis::Homogeneous, Partition{2}), Basis::Monomial);
        CHECK(h2.coefficient(Partition{2}) == 1);
        CHECK(h2.coefficient(Partition{1, 1}) == 1);
        auto s11 = convert(RExp::unit(Basis::Schur, Partition{1, 1}), Basis::Monomial);
        CHECK(s11.terms().size() == 1);
        CHECK(s11.coefficient(Partition{1, 1}) == 1);
        auto P2 = convert(FExp::unit(Basis::HallLittlewoodP, Partition{2}), Basis::Monomial);
        CHECK(P2.coefficient(Partition{2}) == RatFun(1));
        CHECK(P2.coefficient(Partition{1, 1}) == poly({1, -1}));
        // every basis round-trips through every other at degree 5
        const Basis all[] = {Basis::Monomial, Basis::Homogeneous, Basis::Elementary, Basis::PowerSum,
                             Basis::Schur,    Basis::Forgotten,   Basis::HallLittlewoodP};
        FExp f(Basis::Schur);
        f.add(Partition{3, 2}, poly({1, 2}));
        f.add(Partition{2, 1, 1, 1}, RatFun(-3));
        for (Basis a : all)
            for (Basis b : all)
                CHECK(convert(convert(convert(f, a), b), Basis::Schur) == f);
    }

    TEST_CASE("forgotten basis is the image of m under omega")
    {
        // e_lambda expands in f with the same coefficients as h_lambda in m
        for (const auto& la : partitions_of(4)) {
            auto hm = convert(RExp::unit(Basis::Homogeneous, la), Basis::Monomial);
            auto ef = convert(RExp::unit(Basis::Elementary, la), Basis::Forgotten);
            CHECK(hm.terms() == ef.terms());
        }
    }

    TEST_CASE("Hall-Littlewood P by two routes")
    {
        for (int d = 1; d <= 6; ++d)
            for (const auto& la : partitions_of(d))
                CHECK(hall_littlewood_P_schur(la) == hall_littlewood_P_schur_coset(la));
        auto x1 = hl_P_finite(Partition{1}, 2);
        CHECK(x1.size() == 2);
        CHECK(x1.at({1, 0}) == UniPoly(1));
        CHECK(x1.at({0, 1}) == UniPoly(1));
        auto x11 = hl_P_finite(Partition{1, 1}, 2);
        CHECK(x11.size() == 1);
        CHECK(x11.at({1, 1}) == UniPoly(1));
        // the expanded polynomial agrees with the defining coset sum at a generic point
        std::vector<Rational> x = {2, 5, Rational(1, 7)};
        for (const auto& la : {Partition{2, 1}, Partition{3}, Partition{1, 1, 1}, Partition{2, 2, 1}}) {
            Rational t(1, 3), v(0);
            for (const auto& [e, c] : hl_P_finite(la, 3, t)) {
                Rational m = c;
                for (int i = 0; i < 3; ++i)
                    m *= rational_pow(x[i], e[i]);
                v += m;
            }
            CHECK(v == hl_P_coset_value(la, x, t));
        }
    }

    TEST_CASE("multiplication")
    {
        auto P1 = FExp::unit(Basis::HallLittlewoodP, Partition{1});
        auto sq = multiply(P1, P1);
        CHECK(sq.coefficient(Partition{2}) == RatFun(1));
        CHECK(sq.coefficient(Partition{1, 1}) == poly({1, 1}));
        auto one = FExp::unit(Basis::HallLittlewoodP, Partition{});
        auto f = FExp::unit(Basis::HallLittlewoodP, Partition{2, 1}, poly({0, 3}));
        CHECK(multiply(f, one) == f);
        auto h1 = RExp::unit(Basis::Homogeneous, Partition{1});
        auto p1 = RExp::unit(Basis::PowerSum, Partition{1});
        CHECK(convert(multiply(h1, h1), Basis::Monomial) == convert(multiply(p1, p1), Basis::Monomial));
        // structure constants at t = 0 are Littlewood-Richardson numbers
        auto c = hl_structure_constants(Partition{2, 1}, Partition{2, 1}, Rational(0));
        CHECK(c[Partition{3, 2, 1}] == 2);
        CHECK(c[Partition{4, 2}] == 1);
    }

    TEST_CASE("modified Hall-Littlewood functions")
    {
        auto t = RatFun::variable();
        CHECK(modified_hl_schur(Partition{1}) == FExp::unit(Basis::Schur, Partition{1}));
        CHECK(modified_hl_schur(Partition{2}) == FExp::unit(Basis::Schur, Partition{2}));
        FExp h11(Basis::Schur);
        h11.add(Partition{2}, RatFun(1));
        h11.add(Partition{1, 1}, t);
        CHECK(modified_hl_schur(Partition{1, 1}) == h11);
        CHECK(modified_hl_plethysm_oracle(Partition{1}) == FExp::unit(Basis::Schur, Partition{1}));
        CHECK(modified_hl_plethysm_oracle(Partition{1, 1}) == h11);
        for (int d = 1; d <= 4; ++d)
            for (const auto& la : partitions_of(d))
                CHECK(modified_hl_schur(la) == modified_hl_plethysm_oracle(la));
    }

    TEST_CASE("evaluation at power traces")
    {
        auto h2 = RExp::unit(Basis::Homogeneous, Partition{2});
        CHECK(eval_at_traces(h2, PowerTraceSeq{{Cyclotomic(0), Cyclotomic(-2)}}) == Cyclotomic(-1));
        auto s11 = RExp::unit(Basis::Schur, Partition{1, 1});
        CHECK(eval_at_traces(s11, PowerTraceSeq{{Cyclotomic(-1), Cyclotomic(1)}}) == Cyclotomic(0));
        for (int d = 1; d <= 4; ++d)
            for (int m = 1; m <= 4; ++m) {
                PowerTraceSeq tr{std::vector<Cyclotomic>(m, Cyclotomic(d))};
                auto hm = RExp::unit(Basis::Homogeneous, Partition{m});
                CHECK(eval_at_traces(hm, tr) == Cyclotomic(Rational(binomial(d + m - 1, m))));
            }
        // multiset {i, -i}: e_2 = 1, s_11 = e_2
        TraceEvaluator ev(PowerTraceSeq{{Cyclotomic(0), Cyclotomic(-2), Cyclotomic(0), Cyclotomic(2)}});
        CHECK(ev.e(2) == Cyclotomic(1));
        CHECK(ev.s(Partition{1, 1}) == Cyclotomic(1));
        CHECK(ev.e(3) == Cyclotomic(0));
    }

    TEST_CASE("principal specialization and plethystic exponential")
    {
        auto t = UniPoly::variable();
        CHECK(principal_specialization_P(Partition{}) == RatFun(1));
        CHECK(principal_specialization_P(Partition{1}) == RatFun(UniPoly(1), UniPoly::one_minus_power(1)));
        CHECK(principal_specialization_P(Partition{1, 1}) ==
              RatFun(t, UniPoly::one_minus_power(1) * UniPoly::one_minus_power(2)));
        auto e0 = convert(plethystic_exp_truncated(0), Basis::Homogeneous);
        CHECK(e0 == RExp::unit(Basis::Homogeneous, Partition{}));
        auto e2 = convert(plethystic_exp_truncated(2), Basis::Homogeneous);
        CHECK(e2.terms().size() == 3);
        CHECK(e2.coefficient(Partition{}) == 1);
        CHECK(e2.coefficient(Partition{1}) == 1);
        CHECK(e2.coefficient(Partition{2}) == 1);
    }

    TEST_CASE("Hall pairings")
    {
        auto p1 = FExp::unit(Basis::PowerSum, Partition{1});
        CHECK(hall_pairing_t(p1, p1) == RatFun(UniPoly(1), UniPoly::one_minus_power(1)));
        auto s2 = RExp::unit(Basis::Schur, Partition{2});
        auto s11 = RExp::unit(Basis::Schur, Partition{1, 1});
        CHECK(hall_pairing(s2, s11) == 0);
        CHECK(hall_pairing(s2, s2) == 1);
        for (int d = 1; d <= 4; ++d)
            for (const auto& a : partitions_of(d))
                for (const auto& b : partitions_of(d)) {
                    auto r = hall_pairing_t(FExp::unit(Basis::HallLittlewoodP, a), FExp::unit(Basis::HallLittlewoodQ, b));
                    CHECK(r == RatFun(a == b ? 1 : 0));
                }
    }

    TEST_CASE("plethysm by power sums")
    {
        auto p21 = RExp::unit(Basis::PowerSum, Partition{2, 1});
        auto out = plethysm_power(p21, 3, Basis::PowerSum, std::nullopt);
        CHECK(out == RExp::unit(Basis::PowerSum, Partition{6, 3}));
        // h_2[p_2 X] evaluated on one variable x is x^4
        auto h2 = plethysm_power(RExp::unit(Basis::Homogeneous, Partition{2}), 2, Basis::Monomial, std::nullopt);
        CHECK(eval_at_traces(h2, PowerTraceSeq{std::vector<Cyclotomic>(4, Cyclotomic(1))}) == Cyclotomic(1));
        CHECK(h2.coefficient(Partition{4}) == 1);
        CHECK(h2.coefficient(Partition{2, 2}) == 1);
    }

    TEST_CASE("mismatched bases are rejected")
    {
        auto a = RExp::unit(Basis::Schur, Partition{1});
        auto b = RExp::unit(Basis::Monomial, Partition{1});
        CHECK_THROWS_AS(a += b, BasisMismatch);
        CHECK_THROWS(parse_basis("nonsense"));
        CHECK(parse_basis("hl") == Basis::HallLittlewoodPNormalized);
    }
}
