#pragma once

#include "artinsym/hecke.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace artinsym {

/* a_1 .. a_B of a Dirichlet series sum a_N N^{-s} */
struct DirichletSeriesExact {
    std::uint64_t bound = 0;
    std::vector<Cyclotomic> coeffs; /* coeffs[N - 1] = a_N */

    static DirichletSeriesExact unit(std::uint64_t bound);
    const Cyclotomic& at(std::uint64_t N) const { return coeffs.at(N - 1); }
    /* a_{mn} = a_m a_n for coprime m, n with mn <= bound */
    bool is_multiplicative() const;
    friend bool operator==(const DirichletSeriesExact& a, const DirichletSeriesExact& b)
    {
        return a.bound == b.bound && a.coeffs == b.coeffs;
    }
};

/* Dirichlet product truncated at the smaller bound */
DirichletSeriesExact dirichlet_multiply(const DirichletSeriesExact& a, const DirichletSeriesExact& b);

/* a_N = sum over ||lambda.|| = N, length <= n of kappa^{(n)}(lambda.) F(lambda.) */
DirichletSeriesExact mellin_truncated(const CharacterData& chi, const FieldContext& K, int n, std::uint64_t bound);
/* prod_{i=1}^{n} L(s - i + 1) from the characteristic polynomials of the shifted multisets */
DirichletSeriesExact euler_truncated(const CharacterData& chi, const FieldContext& K, int n, std::uint64_t bound);
/* a_N = sum over ||lambda.|| = N of gamma(lambda.) F(lambda.) */
DirichletSeriesExact stable_coefficients(const CharacterData& chi, const FieldContext& K, std::uint64_t bound);

/* prod_{p^a || N} prod_{j=1}^{a} (1 - p^{-j})^{-1} */
Rational theta(std::uint64_t N);

struct CheckReport {
    bool pass = true;
    std::uint64_t checked = 0;
    std::string detail;
};
/* theta(n) = sum_{d | n} theta(d)/d for n <= bound */
CheckReport theta_recursion_check(std::uint64_t bound);

/* isomorphism classes of abelian groups of order N */
std::uint64_t module_count(std::uint64_t N);
std::vector<std::uint64_t> module_count_table(std::uint64_t bound);

struct NumericValue {
    std::complex<double> value;
    double error_bound = 0;
};

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/* truncated Euler product over primes of norm <= prime_bound, Re s > 1 */
NumericValue numeric_L(const CharacterData& chi, const FieldContext& K, std::complex<double> s,
                       std::uint64_t prime_bound);
/* prod_{j=0}^{J} L(s + j) with a tail bound for the omitted shifts */
NumericValue numeric_L_tilde(const CharacterData& chi, const FieldContext& K, std::complex<double> s,
                             std::uint64_t prime_bound, int shifts);
/* |L(s) L~(s+1) - L~(s)| with the shift ranges matched (J - 1 and J) */
double functional_equation_gap(const CharacterData& chi, const FieldContext& K, std::complex<double> s,
                               std::uint64_t prime_bound, int shifts);

/* zeta(j) for real j > 1: Euler-Maclaurin for j <= 3.5, plain summation above */
NumericValue zeta_real(double j);
/* prod_{j=2}^{J} zeta(j) with the tail bound for j > J */
NumericValue residue_dtilde(int J = 40);
/* (s - 1) zeta~(s) at s = 1 + 2^{-k}, Richardson-extrapolated to s = 1 */
NumericValue residue_extrapolated(int kmax = 12);

struct ConvergenceReport {
    bool increasing = true;
    bool bounded = true;
    double partial_sum = 0;
    double majorant = 0;
    bool local_identity = true; /* sum over |lambda| = a of local gamma = prod (1 - N^{-j})^{-1} */
};
/* sum of gamma(lambda.)/||lambda.||^{1+eps} over ||lambda.|| <= bound */
ConvergenceReport convergence_partial_sums(const FieldContext& K, const Rational& eps, std::uint64_t bound);

}  // namespace artinsym
