#include "artinsym/dirichlet.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace artinsym;

namespace {

void check_against(const DirichletSeriesExact& d, const std::vector<Rational>& expected)
{
    for (std::uint64_t N = 1; N <= d.bound; ++N) {
        INFO("N = " << N);
        CHECK(d.at(N) == Cyclotomic(expected[N]));
    }
}

}  // namespace

TEST_SUITE("dirichlet")
{
    TEST_CASE("truncated products over Q")
    {
        auto Qp = make_provider("rational");
        FieldContext Q(Qp);
        auto triv = Qp->character("trivial");
        auto one = [](std::uint64_t) { return 1; };
        for (int n = 1; n <= 3; ++n) {
            auto m = mellin_truncated(triv, Q, n, 120);
            check_against(m, oracle::shifted_product(one, n, 120));
            CHECK(m == euler_truncated(triv, Q, n, 120));
            CHECK(m.is_multiplicative());
        }
        auto s1 = mellin_truncated(triv, Q, 2, 6);
        for (std::uint64_t N = 1; N <= 6; ++N)
            CHECK(s1.at(N) == Cyclotomic(static_cast<long>(oracle::sigma(N, 1))));
    }

    TEST_CASE("truncated products for a Dirichlet character")
    {
        auto qi = make_provider("quadratic:-1");
        FieldContext Q(qi);
        auto chi = qi->character("chi:-4");
        for (int n = 1; n <= 3; ++n) {
            auto m = mellin_truncated(chi, Q, n, 100);
            check_against(m, oracle::shifted_product(oracle::chi_minus4, n, 100));
            CHECK(m == euler_truncated(chi, Q, n, 100));
        }
        // ramified factor at 2 is trivial
        CHECK(euler_truncated(chi, Q, 1, 64).at(2) == Cyclotomic(0));
        CHECK(euler_truncated(chi, Q, 1, 64).at(64) == Cyclotomic(0));
    }

    TEST_CASE("Dirichlet products")
    {
        auto Qp = make_provider("rational");
        FieldContext Q(Qp);
        auto z = mellin_truncated(Qp->character("trivial"), Q, 1, 80);
        auto zz = dirichlet_multiply(z, z);
        for (std::uint64_t N = 1; N <= 80; ++N)
            CHECK(zz.at(N) == Cyclotomic(static_cast<long>(oracle::divisors(N).size())));
        CHECK(dirichlet_multiply(z, DirichletSeriesExact::unit(80)) == z);
    }

    TEST_CASE("stable coefficients")
    {
        auto Qp = make_provider("rational");
        FieldContext Q(Qp);
        auto st = stable_coefficients(Qp->character("trivial"), Q, 300);
        auto th = oracle::theta_by_recursion(300);
        check_against(st, th);
        CHECK(st.at(1) == Cyclotomic(1));
        CHECK(st.at(2) == Cyclotomic(2));
        CHECK(st.at(4) == Cyclotomic(Rational(8, 3)));
        CHECK(st.at(12) == Cyclotomic(4));

        auto qi = make_provider("quadratic:-1");
        FieldContext K(qi);
        auto sc = stable_coefficients(qi->character("chi:-4"), K, 200);
        for (std::uint64_t N = 1; N <= 200; ++N)
            CHECK(sc.at(N) == Cyclotomic(th[N] * oracle::chi_minus4(N)));
    }

    TEST_CASE("theta and module counts")
    {
        CHECK(theta(1) == 1);
        CHECK(theta(4) == Rational(8, 3));
        CHECK(theta(4) == 1 + theta(2) / 2 + theta(4) / 4);
        auto th = oracle::theta_by_recursion(2000);
        for (std::uint64_t n = 1; n <= 2000; ++n)
            CHECK(theta(n) == th[n]);
        auto rep = theta_recursion_check(3000);
        CHECK(rep.pass);
        CHECK(rep.checked == 3000);
        CHECK(module_count(4) == 2);
        CHECK(module_count(8) == 3);
        auto table = module_count_table(3000);
        for (std::uint64_t n = 1; n <= 3000; ++n)
            CHECK(table[n] == static_cast<std::uint64_t>(oracle::abelian_groups(n)));
        for (std::uint64_t n = 1; n <= 300; ++n)
            CHECK(module_count(n) == table[n]);
    }

    TEST_CASE("numeric Euler products")
    {
        auto Qp = make_provider("rational");
        FieldContext Q(Qp);
        auto triv = Qp->character("trivial");
        auto z2 = numeric_L(triv, Q, 2.0, 1000000);
        double pi2 = std::numbers::pi * std::numbers::pi;
        CHECK(std::abs(z2.value - pi2 / 6) < 1e-4);
        CHECK(std::abs(z2.value - pi2 / 6) <= z2.error_bound);
        auto z4 = numeric_L(triv, Q, 4.0, 10000);
        CHECK(std::abs(z4.value - pi2 * pi2 / 90) <= z4.error_bound + 1e-14);
        // L(chi_{-4}, 2) is Catalan's constant
        auto qi = make_provider("quadratic:-1");
        FieldContext K(qi);
        auto catalan = numeric_L(qi->character("chi:-4"), K, 2.0, 100000);
        CHECK(std::abs(catalan.value - 0.915965594177219015) <= catalan.error_bound + 1e-12);
        CHECK_THROWS_AS(numeric_L(triv, Q, 1.0, 100), DomainError);
        CHECK_THROWS_AS(numeric_L(triv, Q, std::complex<double>(0.5, 3), 100), DomainError);
        auto t = numeric_L_tilde(triv, Q, 3.0, 10000, 3);
        double expected = 1;
        for (int j = 3; j <= 6; ++j)
            expected *= zeta_real(j).value.real();
        CHECK(std::abs(t.value - expected) <= t.error_bound + 1e-12);
    }

    TEST_CASE("functional equation with matched truncation")
    {
        auto qi = make_provider("quadratic:-1");
        FieldContext K(qi);
        for (const char* name : {"trivial", "chi:-4"})
            for (double s : {2.0, 2.5, 3.0})
                CHECK(functional_equation_gap(qi->character(name), K, s, 20000, 25) < 1e-9);
    }

    TEST_CASE("zeta values and the residue constant")
    {
        double pi2 = std::numbers::pi * std::numbers::pi;
        CHECK(std::abs(zeta_real(2).value.real() - pi2 / 6) < 1e-12);
        CHECK(std::abs(zeta_real(4).value.real() - pi2 * pi2 / 90) < 1e-13);
        CHECK(std::abs(zeta_real(6).value.real() - pi2 * pi2 * pi2 / 945) < 1e-13);
        auto d = residue_dtilde();
        CHECK(std::abs(d.value.real() - 2.294856591) < 1e-8);
        CHECK(d.error_bound < 1e-8);
        auto x = residue_extrapolated(10);
        CHECK(std::abs(x.value.real() - d.value.real()) < 1e-6);
    }

    TEST_CASE("partial sums of the stable weights")
    {
        FieldContext Q(make_provider("rational"));
        auto r = convergence_partial_sums(Q, Rational(1), 2000);
        CHECK(r.increasing);
        CHECK(r.bounded);
        CHECK(r.local_identity);
        CHECK(r.partial_sum > 1);
        CHECK(r.partial_sum < r.majorant);
    }
}
