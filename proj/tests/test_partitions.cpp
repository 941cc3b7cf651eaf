#include "artinsym/partitions.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace artinsym;

TEST_SUITE("partitions")
{
    TEST_CASE("enumeration counts")
    {
        CHECK(enumerate_partitions(0).size() == 1);
        CHECK(enumerate_partitions(0)[0].empty());
        CHECK(enumerate_partitions(4).size() == 5);
        CHECK(enumerate_partitions(10).size() == 42);
        for (int m = 0; m <= 20; ++m)
            CHECK(partition_count(m) == oracle::partitions(m));
    }

    TEST_CASE("canonical order")
    {
        const auto& p4 = partitions_of(4);
        std::vector<Partition> expected = {{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
        CHECK(p4 == expected);
        for (std::size_t i = 0; i < p4.size(); ++i)
            CHECK(partition_index(p4[i]) == static_cast<int>(i));
        CHECK(Partition{1} < Partition{2});
        CHECK(Partition::parse("(2, 1)") == Partition{2, 1});
        CHECK(Partition::parse("()").empty());
        CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
    }

    TEST_CASE("statistics")
    {
        CHECK(n_stat(Partition{}) == 0);
        CHECK(n_stat(Partition{1, 1}) == 1);
        CHECK(n_stat(Partition{3, 1, 1}) == 3);
        CHECK(b_poly(Partition{1, 1}) == UniPoly::one_minus_power(1) * UniPoly::one_minus_power(2));
        CHECK(v_poly(2) == UniPoly(std::vector<Rational>{1, 1}));
        CHECK(v_lambda_n(Partition{1}, 2) == UniPoly(1));
        CHECK(z_integer(Partition{2, 1, 1}) == 4);
    }

    TEST_CASE("tableaux and cocharge")
    {
        CHECK(enumerate_ssyt(Partition{2}, Partition{2}).size() == 1);
        CHECK(enumerate_ssyt(Partition{1, 1}, Partition{2}).empty());
        CHECK(enumerate_ssyt(Partition{2, 1}, Partition{1, 1, 1}).size() == 2);
        auto col = enumerate_ssyt(Partition{1, 1}, Partition{1, 1});
        REQUIRE(col.size() == 1);
        CHECK(cocharge(col[0]) == 1);
        auto row = enumerate_ssyt(Partition{2}, Partition{1, 1});
        REQUIRE(row.size() == 1);
        CHECK(cocharge(row[0]) == 0);
        for (int m = 1; m <= 6; ++m)
            for (const auto& mu : partitions_of(m))
                for (const auto& la : partitions_of(m))
                    for (const auto& T : enumerate_ssyt(mu, la)) {
                        CHECK(T.is_semistandard());
                        CHECK(cocharge(T) == cocharge_direct(T));
                    }
    }

    TEST_CASE("Kostka-Foulkes values")
    {
        auto t = UniPoly::variable();
        CHECK(kostka_foulkes_tilde(Partition{2}, Partition{2}) == UniPoly(1));
        CHECK(kostka_foulkes_tilde(Partition{1, 1}, Partition{1, 1}) == t);
        CHECK(kostka_foulkes_tilde(Partition{2}, Partition{1, 1}) == UniPoly(1));
        for (int m = 1; m <= 7; ++m)
            for (const auto& la : partitions_of(m)) {
                CHECK(kostka_foulkes_tilde(Partition{m}, la) == UniPoly(1));
                // at t = 1 the value is the Kostka number
                for (const auto& mu : partitions_of(m))
                    CHECK(kostka_foulkes_tilde(mu, la).eval(1) == count_ssyt(mu, la.parts()));
            }
    }

    TEST_CASE("multipartitions")
    {
        auto primes = [](std::uint64_t B) {
            std::vector<PrimeKey> out;
            for (std::uint64_t p = 2; p <= B; ++p)
                if (oracle::is_prime(p))
                    out.push_back(PrimeKey::rational_prime(p));
            return out;
        };
        auto one = enumerate_multipartitions(primes(1), 1);
        REQUIRE(one.size() == 1);
        CHECK(one[0].empty());
        auto four = enumerate_multipartitions(primes(4), 4);
        REQUIRE(four.size() == 5);
        CHECK(four[1].str() == "{2:(1)}");
        CHECK(four[2].str() == "{3:(1)}");
        CHECK(four[3].str() == "{2:(2)}");
        CHECK(four[4].str() == "{2:(1,1)}");
        auto q2 = PrimeKey::rational_prime(2), q3 = PrimeKey::rational_prime(3);
        CHECK(MultiPartition({{q2, Partition{1}}, {q3, Partition{1}}}).norm() == 6);
        // the count at bound B is the sum over N <= B of the abelian group counts
        for (std::uint64_t B : {10, 100, 500}) {
            long expected = 0;
            for (std::uint64_t N = 1; N <= B; ++N)
                expected += oracle::abelian_groups(N);
            CHECK(enumerate_multipartitions(primes(B), B).size() == static_cast<std::size_t>(expected));
        }
        auto all = enumerate_multipartitions(primes(200), 200, 2);
        for (std::size_t i = 1; i < all.size(); ++i) {
            CHECK(all[i - 1] < all[i]);
            CHECK(all[i].length() <= 2);
        }
        CHECK(max_local_degree(2, 1000) == 9);
        CHECK(max_local_degree(10, 1000) == 3);
    }
}
