#include "artinsym/galois.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace artinsym;

namespace {

std::vector<Cyclotomic> ints(std::initializer_list<long> v)
{
    std::vector<Cyclotomic> out;
    for (long x : v)
        out.emplace_back(x);
    return out;
}

/* class index in S3 of e, a transposition, a 3-cycle */
std::vector<int> s3_class_reps() { return {0, 1, 4}; }

}  // namespace

TEST_SUITE("galois")
{
    TEST_CASE("group construction and validation")
    {
        auto s3 = FiniteGroup::symmetric3();
        CHECK(s3.order() == 6);
        CHECK(s3.num_classes() == 3);
        CHECK(s3.exponent() == 6);
        CHECK(FiniteGroup::cyclic(5).exponent() == 5);
        std::vector<int> res;
        auto u12 = FiniteGroup::units_mod(12, &res);
        CHECK(res == std::vector<int>{1, 5, 7, 11});
        CHECK(u12.exponent() == 2);
        CHECK_THROWS_AS(FiniteGroup(std::vector<std::vector<int>>{{0, 1}, {0, 1}}), GroupError);
        CHECK(all_subgroups(s3).size() == 6);
        CHECK(is_normal(s3, {0, 4, 5}));
        CHECK(!is_normal(s3, {0, 1}));
    }

    TEST_CASE("character operations")
    {
        auto c2 = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(2));
        auto triv1 = trivial_character(std::make_shared<const FiniteGroup>(FiniteGroup::trivial()));
        auto reg = induce(triv1, c2, {0});
        CHECK(reg.values == ints({2, 0}));
        CHECK(reg.values == regular_character(c2).values);

        auto s3 = std::make_shared<const FiniteGroup>(FiniteGroup::symmetric3());
        auto q = make_quotient(*s3, {0, 4, 5});
        auto lin = linear_characters(q.group);
        REQUIRE(lin.size() == 2);
        auto sign = inflate(lin[1], s3, q.proj);
        for (int g = 0; g < 6; ++g)
            CHECK(sign.at(g) == Cyclotomic(g == 1 || g == 2 || g == 3 ? -1 : 1));

        auto irr = irreducible_characters(s3);
        REQUIRE(irr.size() == 3);
        CharacterData sum = multiple(irr[0], irr[0].degree());
        for (std::size_t i = 1; i < irr.size(); ++i)
            sum = direct_sum(sum, multiple(irr[i], irr[i].degree()));
        CHECK(sum.values == regular_character(s3).values);
        for (std::size_t i = 0; i < irr.size(); ++i)
            for (std::size_t j = 0; j < irr.size(); ++j)
                CHECK(inner_product(irr[i], irr[j]) == Cyclotomic(i == j ? 1 : 0));
        CHECK(tensor(irr[2], irr[2]).values == direct_sum(direct_sum(irr[0], irr[1]), irr[2]).values);
    }

    TEST_CASE("inertia power traces")
    {
        auto qi = make_provider("quadratic:-1");
        auto chi = qi->character("chi:-4");
        auto triv = qi->character("trivial");
        auto s2 = qi->splitting(2), s3 = qi->splitting(3);
        for (long k = 1; k <= 6; ++k) {
            CHECK(inertia_power_trace(triv, s2.frobenius, s2.inertia, k) == Cyclotomic(1));
            CHECK(inertia_power_trace(chi, s2.frobenius, s2.inertia, k) == Cyclotomic(0));
            CHECK(inertia_power_trace(chi, s3.frobenius, s3.inertia, k) == Cyclotomic(k % 2 ? -1 : 1));
        }
    }

    TEST_CASE("rational primes")
    {
        auto primes = [](std::uint64_t B) {
            std::vector<std::uint64_t> v;
            for (auto k : provider_rational(B))
                v.push_back(k.p);
            return v;
        };
        CHECK(primes(10) == std::vector<std::uint64_t>{2, 3, 5, 7});
        CHECK(primes(2) == std::vector<std::uint64_t>{2});
        CHECK(primes(100).size() == 25);
        for (auto p : primes_up_to(2000))
            CHECK(oracle::is_prime(p));
    }

    TEST_CASE("cyclotomic splitting")
    {
        CyclotomicProvider z4(4), z3(3);
        auto a = z4.splitting(5);
        CHECK(a.unramified());
        CHECK(z4.residues()[a.frobenius] == 1);
        auto b = z4.splitting(2);
        CHECK(b.inertia.size() == 2);
        auto c = z3.splitting(2);
        CHECK(c.unramified());
        CHECK(z3.residues()[c.frobenius] == 2);
        // Frobenius is p mod m for every unramified p
        CyclotomicProvider z15(15);
        for (auto p : primes_up_to(200))
            if (15 % p != 0)
                CHECK(z15.residues()[z15.splitting(p).frobenius] == static_cast<int>(p % 15));
    }

    TEST_CASE("quadratic characters agree with point counts")
    {
        for (long d : {-1L, 2L, -3L, 5L, -7L, 13L}) {
            QuadraticProvider K(d);
            auto chi = K.characters().back();
            for (auto p : primes_up_to(150)) {
                if (p == 2 || K.discriminant() % static_cast<long>(p) == 0)
                    continue;
                auto sd = K.splitting(p);
                CHECK(chi.at(sd.frobenius) == Cyclotomic(oracle::legendre_by_count(K.discriminant(), p)));
            }
        }
    }

    TEST_CASE("cubic S3 splitting by root counts")
    {
        CubicS3Provider L(2);
        const auto& G = *L.group();
        auto rep = s3_class_reps();
        CHECK(G.class_of(L.splitting(5).frobenius) == G.class_of(rep[1]));
        CHECK(G.class_of(L.splitting(7).frobenius) == G.class_of(rep[2]));
        CHECK(G.class_of(L.splitting(31).frobenius) == G.class_of(rep[0]));
        for (auto p : primes_up_to(400)) {
            if (p <= 3)
                continue;
            int roots = oracle::cube_roots(2, p);
            int cls = G.class_of(L.splitting(p).frobenius);
            CHECK(cubic_root_count(2, p) == roots);
            CHECK(cls == G.class_of(rep[roots == 3 ? 0 : roots == 1 ? 1 : 2]));
        }
    }

    TEST_CASE("S3 fixture table")
    {
        auto L = make_provider("cubic-s3:2");
        auto at2 = L->splitting(2);
        CHECK(at2.inertia.size() == 3);
        CHECK(at2.residue_degrees == std::vector<int>{2});
        CHECK(L->group()->element_order(at2.inertia[1]) == 3);
        auto at3 = L->splitting(3);
        CHECK(at3.inertia.size() == 6);
        CHECK(at3.residue_degrees == std::vector<int>{1});
        CHECK_THROWS_AS(TableProvider::from_json("{\"name\": \"broken\"}"), std::exception);
        CHECK_THROWS_AS(make_provider("nonsense:3"), ProviderError);
    }

    TEST_CASE("Galois data")
    {
        auto Q = make_provider("rational");
        FieldContext KQ(Q);
        for (const auto& q : KQ.primes_up_to(50)) {
            auto g = galois_datum(Q->character("trivial"), KQ, q, 4);
            for (int k = 1; k <= 4; ++k)
                CHECK(g.power_traces.at(k) == Cyclotomic(1));
            CHECK(g.invariant_dim == Cyclotomic(1));
        }
        auto qi = make_provider("quadratic:-1");
        FieldContext K(qi);
        auto g13 = galois_datum(qi->character("chi:-4"), K, K.primes_above(13)[0], 3);
        for (int k = 1; k <= 3; ++k)
            CHECK(g13.power_traces.at(k) == Cyclotomic(1));
        auto L = make_provider("cubic-s3:2");
        FieldContext KL(L);
        auto g5 = galois_datum(L->character("std"), KL, KL.primes_above(5)[0], 4);
        CHECK(g5.power_traces.traces == ints({0, 2, 0, 2}));
    }

    TEST_CASE("primes of subfields")
    {
        auto E = make_provider("cyclotomic:12");
        // Q(i) is fixed by the residues congruent to 1 mod 4
        auto z12 = std::dynamic_pointer_cast<const CyclotomicProvider>(E);
        REQUIRE(z12);
        FieldContext Qi(E, {z12->element_of(1), z12->element_of(5)});
        CHECK(Qi.primes_above(2).size() == 1);
        CHECK(Qi.primes_above(3).size() == 1);
        CHECK(Qi.primes_above(3)[0].key.norm == 9);
        CHECK(Qi.primes_above(5).size() == 2);
        for (auto p : primes_up_to(200)) {
            if (p == 2)
                continue;
            std::size_t expected = p % 4 == 1 ? 2 : 1;
            CHECK(Qi.primes_above(p).size() == expected);
        }
        // Q(cube root of 2) inside the S3 field: primes above p match root counts
        auto L = make_provider("cubic-s3:2");
        FieldContext cubic(L, {0, 1});
        for (auto p : primes_up_to(200)) {
            if (p <= 3)
                continue;
            int degree_one = 0;
            for (const auto& q : cubic.primes_above(p))
                degree_one += q.residue_degree == 1;
            CHECK(degree_one == oracle::cube_roots(2, p));
        }
    }
}
