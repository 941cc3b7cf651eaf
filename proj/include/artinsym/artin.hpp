#pragma once

#include "artinsym/galois.hpp"
#include "artinsym/partitions.hpp"
#include "artinsym/symfunc.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace artinsym {

/*
 * Multiplicative series in the arithmetic variables of a number field K,
 * stored prime by prime.  The local expansion at q is truncated to degree
 * floor(log_{N(q)} B) and, for t-dependent bases, specialized at t = 1/N(q).
 * Primes of K with N(q) <= B and no stored local expansion have local part 1.
 */
struct ArithSeries {
    Basis basis = Basis::Monomial;
    std::uint64_t bound = 1;
    std::string field;
    std::string label;
    std::vector<PrimeKey> primes;
    std::map<PrimeKey, SymExpansion<Cyclotomic>> locals;

    SymExpansion<Cyclotomic> local(const PrimeKey& q) const;
    Cyclotomic local_coefficient(const PrimeKey& q, const Partition& lambda) const;
    /* product of the local coefficients */
    Cyclotomic coefficient(const MultiPartition& lam) const;
    /* every multipartition of norm <= bound (and length <= max_length) with its coefficient */
    std::vector<std::pair<MultiPartition, Cyclotomic>> expand(int max_length = -1) const;
    /* header plus one "multipartition coefficient" line per index in (norm, lex) order */
    std::string dump(const std::string& extension, const std::string& character) const;
};

/* local t specialization for a basis at a prime of norm N */
std::optional<Rational> local_t(Basis b, std::uint64_t norm);

/*
 * Local factor of the Cauchy kernel Exp[X A] truncated at the given degree,
 * where A is the multiset with power sums tr.  Coefficients: h_lambda(A) on
 * m, s_lambda(A) on s, m_lambda(A) on h, e_lambda(A) on the forgotten basis,
 * H~_lambda(A; N) on the t^{n(lambda)}P basis; other bases by conversion.
 */
SymExpansion<Cyclotomic> local_kernel(const PowerTraceSeq& tr, Basis b, int degree, std::uint64_t norm);

ArithSeries series_from_traces(const FieldContext& K, std::uint64_t bound, Basis b,
                               const std::function<PowerTraceSeq(const LocalPrime&, int)>& traces);

ArithSeries dedekind_series(const FieldContext& K, std::uint64_t bound, Basis b);
/* upper = L, lower = K with L containing K, both fixed fields inside the same E */
ArithSeries relative_dedekind_series(const FieldContext& upper, const FieldContext& lower, std::uint64_t bound,
                                     Basis b);
/* chi is a character of Gal(E/K) = K.galois().group */
ArithSeries artin_series(const CharacterData& chi, const FieldContext& K, std::uint64_t bound, Basis b);

ArithSeries series_multiply(const ArithSeries& a, const ArithSeries& b);
ArithSeries series_power(const ArithSeries& a, int k);
ArithSeries series_one(const FieldContext& K, std::uint64_t bound, Basis b);
/* a lives over upper; p_r at a prime P becomes p_{r f(P|q)} at the prime q below */
ArithSeries norm_map(const ArithSeries& a, const FieldContext& upper, const FieldContext& lower);

struct SeriesComparison {
    bool equal = true;
    std::size_t compared = 0;
    std::string mismatch;
};
/* coefficient-by-coefficient over every multipartition of norm <= bound */
SeriesComparison compare_series(const ArithSeries& a, const ArithSeries& b);

struct IdentityReport {
    std::string kind;
    std::string instance;
    bool pass = false;
    std::size_t compared = 0;
    std::string detail;
};

IdentityReport verify_direct_sum(const FieldContext& K, const CharacterData& a, const CharacterData& b,
                                 std::uint64_t bound, Basis basis);
/* small = E/N with its own provider; the quotient G/N must carry the same table as the small group */
IdentityReport verify_inflation(const ProviderPtr& big, const std::vector<int>& normal, const ProviderPtr& small,
                                const CharacterData& chi, std::uint64_t bound, Basis basis);
/* N_{L/K} of the series of chi over L equals the series of Ind chi over K */
IdentityReport verify_induction(const FieldContext& upper, const FieldContext& lower, const CharacterData& chi,
                                std::uint64_t bound, Basis basis);
IdentityReport verify_regular(const FieldContext& K, std::uint64_t bound, Basis basis);
IdentityReport verify_factorization(const FieldContext& K, std::uint64_t bound, Basis basis);
IdentityReport verify_norm_of_dedekind(const FieldContext& upper, const FieldContext& lower, std::uint64_t bound,
                                       Basis basis);
/* N_{L/K} o N_{E/L} = N_{E/K} applied to zeta of the top field */
IdentityReport verify_tower(const FieldContext& top, const FieldContext& middle, const FieldContext& bottom,
                            std::uint64_t bound, Basis basis);
/* chi = Ind psi for a linear psi of a subgroup, then compare through the norm map */
IdentityReport verify_brauer(const FieldContext& K, const CharacterData& chi, std::uint64_t bound, Basis basis);
/* every inertia/Frobenius choice at p (coset representatives and conjugates) gives the same series */
IdentityReport verify_frobenius_choice(const ProviderPtr& provider, std::uint64_t p, const CharacterData& chi,
                                       std::uint64_t bound, Basis basis);

/* kind in {direct_sum, inflation, induction, regular, factorization, norm, tower, brauer, frobenius};
 * runs every instance the extension offers over Q */
std::vector<IdentityReport> verify_identity(const std::string& kind, const ProviderPtr& provider,
                                            std::uint64_t bound, Basis basis = Basis::HallLittlewoodPNormalized);
const std::vector<std::string>& identity_kinds();

/* ||F|| as exponents of prime ideals */
struct NormGrade {
    std::map<PrimeKey, int> exponents;

    std::uint64_t value() const;
    friend NormGrade operator*(const NormGrade& a, const NormGrade& b);
    friend bool operator==(const NormGrade& a, const NormGrade& b) { return a.exponents == b.exponents; }
};
NormGrade norm_grade(const MultiPartition& lam);

/* prod_q z_{lambda_q}(1/N(q)) with z_mu(t) = z_mu prod_i 1/(1 - t^{mu_i}) */
Rational z_value(const MultiPartition& lam);

/* finite linear combination of products of local basis elements */
struct GlobalExpansion {
    Basis basis = Basis::HallLittlewoodP;
    std::map<MultiPartition, Cyclotomic> terms;

    void add(const MultiPartition& lam, const Cyclotomic& c);
};
/* bilinear extension of the local pairings at t = 1/N(q), for which <P, Q> = delta */
Cyclotomic pairing(const GlobalExpansion& a, const GlobalExpansion& b);
/* the pairing of two single local basis elements at t = 1/N */
Rational local_pairing(Basis a, const Partition& lambda, Basis b, const Partition& mu, std::uint64_t norm);

}  // namespace artinsym
