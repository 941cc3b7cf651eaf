#pragma once

#include "artinsym/artin.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <string>

namespace artinsym {

/* finite combination of double-coset indicators 1_{lambda.} of GL_n, every
 * lambda. having at most n parts at each prime */
struct HeckeElement {
    int n = 1;
    std::map<MultiPartition, Cyclotomic> terms;

    static HeckeElement identity(int n);
    void add(const MultiPartition& lam, const Cyclotomic& c);
    Cyclotomic coefficient(const MultiPartition& lam) const;
    HeckeElement truncated(std::uint64_t norm_bound) const;
    std::string str() const;

    friend bool operator==(const HeckeElement& a, const HeckeElement& b)
    {
        return a.n == b.n && a.terms == b.terms;
    }
};

/* g(lambda.) = prod N(q)^{n(lambda_q)} */
Rational g_factor(const MultiPartition& lam);
/* b(lambda.) = prod b_{lambda_q}(1/N(q)) */
Rational b_factor(const MultiPartition& lam);

/* a must be in the t^{n(lambda)}P basis; keeps the terms of length <= n */
HeckeElement satake(const ArithSeries& a, int n);
HeckeElement convolve(const HeckeElement& a, const HeckeElement& b);
/* coefficient of 1_nu in 1_lambda * 1_mu at one prime of norm N (length <= n) */
std::map<Partition, Rational> local_convolution(const Partition& lambda, const Partition& mu, std::uint64_t norm,
                                                int n);

struct KappaRoutes {
    Rational definition;     /* N^{sum (n-i) lambda_i} v_n / v_lambda^{(n)} / g */
    Rational simplified;     /* ||lambda||^{n-1} g^{-2} v_n / v_lambda^{(n)} */
    Rational specialization; /* g^{-1} P_lambda(1, N, ..., N^{n-1}; 1/N) */
};
KappaRoutes kappa_routes(const MultiPartition& lam, int n);
/* all routes must agree; throws std::logic_error otherwise */
Rational kappa(const MultiPartition& lam, int n);
/* the simplified closed form alone, for any n */
Rational kappa_closed(const MultiPartition& lam, int n);

struct GammaRoutes {
    Rational closed_form;              /* 1/(g^2 b) */
    Rational principal_specialization; /* g^{-1} t^{n(lambda)}/b_lambda(t) at t = 1/N */
    Rational power_sum;                /* g^{-1} P_lambda through p_r(1, t, t^2, ...) = 1/(1 - t^r) */
};
GammaRoutes gamma_routes(const MultiPartition& lam);
Rational gamma(const MultiPartition& lam);

/* prod_q sum_mu K~_{mu lambda_q}(N(q)) s_mu evaluated at the local power traces */
Cyclotomic f_eval(const CharacterData& chi, const FieldContext& K, const MultiPartition& type);
/* the element sum_lambda F(lambda) 1_lambda over ||lambda|| <= bound */
HeckeElement f_element(const CharacterData& chi, const FieldContext& K, int n, std::uint64_t bound);

/* phi o N_{L/K} o phi^{-1} for the field pair upper = L, lower = K */
HeckeElement r_map(const HeckeElement& a, const FieldContext& upper, const FieldContext& lower);

/* random multiplicative series with small integer local coefficients and constant term 1 */
ArithSeries random_series(const FieldContext& K, std::uint64_t bound, Basis b, std::mt19937_64& rng,
                          int coeff_range = 3);

/* satake(a b) = satake(a) * satake(b) on `pairs` seeded random pairs, truncated at bound */
IdentityReport verify_satake(int n, std::uint64_t bound, std::uint64_t seed, int pairs);

}  // namespace artinsym
