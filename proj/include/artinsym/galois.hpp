#pragma once

#include "artinsym/exact.hpp"
#include "artinsym/partitions.hpp"
#include "artinsym/symfunc.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace artinsym {

struct GroupError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ProviderError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Finite group on 0..n-1 with 0 the identity, given by its multiplication table. */
class FiniteGroup {
public:
    explicit FiniteGroup(std::vector<std::vector<int>> mul);

    static FiniteGroup trivial();
    static FiniteGroup cyclic(int n);
    /* S3 acting on three roots, elements e,(01),(02),(12),(012),(021) */
    static FiniteGroup symmetric3();
    /* (Z/m)^*, element i is residues[i] with residues sorted ascending */
    static FiniteGroup units_mod(int m, std::vector<int>* residues = nullptr);

    int order() const { return static_cast<int>(mul_.size()); }
    int mul(int a, int b) const { return mul_[a][b]; }
    int inv(int a) const { return inv_[a]; }
    int pow(int a, long k) const;
    /* x g x^-1 */
    int conj(int g, int x) const { return mul(mul(x, g), inv(x)); }
    int element_order(int a) const { return orders_[a]; }
    int exponent() const { return exponent_; }
    const std::vector<std::vector<int>>& table() const { return mul_; }

    const std::vector<std::vector<int>>& classes() const { return classes_; }
    int num_classes() const { return static_cast<int>(classes_.size()); }
    int class_of(int g) const { return class_of_[g]; }

    std::vector<int> closure(const std::vector<int>& gens) const;
    bool is_subgroup(const std::vector<int>& s) const;
    bool normalizes(int g, const std::vector<int>& s) const;
    /* g s g^-1, sorted */
    std::vector<int> conjugate_set(const std::vector<int>& s, int g) const;

    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.mul_ == b.mul_; }

private:
    std::vector<std::vector<int>> mul_;
    std::vector<int> inv_, orders_, class_of_;
    std::vector<std::vector<int>> classes_;
    int exponent_ = 1;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/* subgroup H of G as a group in its own right; embed[h] is the element of G */
struct Subgroup {
    GroupPtr group;
    std::vector<int> embed;
    std::vector<int> index; /* G element -> H element or -1 */

    bool contains(int g) const { return index[g] >= 0; }
};
Subgroup make_subgroup(const FiniteGroup& G, std::vector<int> elements);

/* G/N with cosets ordered by their smallest element */
struct Quotient {
    GroupPtr group;
    std::vector<int> proj;
};
Quotient make_quotient(const FiniteGroup& G, const std::vector<int>& normal);

/* class function with one value per conjugacy class */
struct CharacterData {
    GroupPtr group;
    std::vector<Cyclotomic> values;
    std::string name;

    const Cyclotomic& at(int g) const { return values[group->class_of(g)]; }
    Cyclotomic dim() const { return values[0]; }
    int degree() const;
};

CharacterData trivial_character(const GroupPtr& G);
CharacterData regular_character(const GroupPtr& G);
CharacterData direct_sum(const CharacterData& a, const CharacterData& b);
CharacterData tensor(const CharacterData& a, const CharacterData& b);
CharacterData dual(const CharacterData& a);
/* k copies of a (k >= 0) */
CharacterData multiple(const CharacterData& a, int k);
Cyclotomic inner_product(const CharacterData& a, const CharacterData& b);
/* Ind_H^G chi, H embedded in G by an injective homomorphism */
CharacterData induce(const CharacterData& chi, const GroupPtr& G, const std::vector<int>& embedding);
/* chi o proj for a surjective homomorphism proj: G -> Q */
CharacterData inflate(const CharacterData& chi, const GroupPtr& G, const std::vector<int>& projection);
CharacterData restrict_to(const CharacterData& chi, const Subgroup& H);
/* 1-dimensional characters, enumerated as homomorphisms to the e-th roots of unity */
std::vector<CharacterData> linear_characters(const GroupPtr& G);
/* linear characters plus, when the remainder is a single irreducible, that one
 * obtained from orthogonality against the regular character */
std::vector<CharacterData> irreducible_characters(const GroupPtr& G);

/* (1/|I|) sum_{h in I} chi(sigma^k h): trace of sigma^k on V^I */
Cyclotomic inertia_power_trace(const CharacterData& chi, int sigma, const std::vector<int>& inertia, long k);

/* data for a rational prime p in the Galois extension E/Q: inertia group and
 * Frobenius of one chosen prime above p, and the residue degrees above p */
struct SplittingDatum {
    std::uint64_t p = 0;
    std::vector<int> inertia;
    int frobenius = 0;
    std::vector<int> residue_degrees;

    bool unramified() const { return inertia.size() == 1; }
};

class ExtensionProvider {
public:
    virtual ~ExtensionProvider() = default;
    virtual std::string name() const = 0;
    virtual const GroupPtr& group() const = 0;
    virtual SplittingDatum splitting(std::uint64_t p) const = 0;
    /* named characters: "trivial" first, then irreducibles and others */
    virtual std::vector<CharacterData> characters() const;
    /* lookup by name; also "regular", "lin:k", "order:k" */
    CharacterData character(const std::string& name) const;
};

using ProviderPtr = std::shared_ptr<const ExtensionProvider>;

class RationalProvider : public ExtensionProvider {
public:
    RationalProvider();
    std::string name() const override { return "rational"; }
    const GroupPtr& group() const override { return g_; }
    SplittingDatum splitting(std::uint64_t p) const override;

private:
    GroupPtr g_;
};

/* Q(sqrt d) for squarefree d != 0, 1 */
class QuadraticProvider : public ExtensionProvider {
public:
    explicit QuadraticProvider(long d);
    std::string name() const override { return "quadratic:" + std::to_string(d_); }
    const GroupPtr& group() const override { return g_; }
    SplittingDatum splitting(std::uint64_t p) const override;
    std::vector<CharacterData> characters() const override;
    long discriminant() const { return disc_; }

private:
    long d_, disc_;
    GroupPtr g_;
};

/* Q(zeta_m) with group (Z/m)^* */
class CyclotomicProvider : public ExtensionProvider {
public:
    explicit CyclotomicProvider(int m);
    std::string name() const override { return "cyclotomic:" + std::to_string(m_); }
    const GroupPtr& group() const override { return g_; }
    SplittingDatum splitting(std::uint64_t p) const override;
    std::vector<CharacterData> characters() const override;
    int modulus() const { return m_; }
    const std::vector<int>& residues() const { return residues_; }
    int element_of(long residue) const;

private:
    int m_;
    std::vector<int> residues_;
    GroupPtr g_;
};

class TableProvider;

/* splitting field of x^3 - a; unramified primes by cubic residuosity,
 * ramified primes from a validated table */
class CubicS3Provider : public ExtensionProvider {
public:
    explicit CubicS3Provider(long a, std::shared_ptr<const TableProvider> ramified = nullptr);
    std::string name() const override { return "cubic-s3:" + std::to_string(a_); }
    const GroupPtr& group() const override { return g_; }
    SplittingDatum splitting(std::uint64_t p) const override;
    std::vector<CharacterData> characters() const override;
    /* class of Frobenius at an unramified p from the cubic residue criterion */
    SplittingDatum unramified_splitting(std::uint64_t p) const;

private:
    long a_;
    GroupPtr g_;
    std::shared_ptr<const TableProvider> table_;
};

/* provider read from the JSON splitting-table format */
class TableProvider : public ExtensionProvider {
public:
    static std::shared_ptr<TableProvider> from_json(const std::string& text, bool attach_rule = true);
    static std::shared_ptr<TableProvider> from_file(const std::string& path);

    std::string name() const override { return name_; }
    const GroupPtr& group() const override { return g_; }
    SplittingDatum splitting(std::uint64_t p) const override;
    std::vector<CharacterData> characters() const override { return chars_; }
    bool has_entry(std::uint64_t p) const { return entries_.count(p) != 0; }
    const std::string& rule() const { return rule_; }

private:
    TableProvider() = default;
    std::string name_, rule_;
    GroupPtr g_;
    std::vector<CharacterData> chars_;
    std::map<std::uint64_t, SplittingDatum> entries_;
    ProviderPtr fallback_;
};

/* The built-in S3 fixture (x^3 - 2) as a table provider. */
std::shared_ptr<const TableProvider> s3_fixture();

/* wraps a provider and replaces the inertia/Frobenius choice at selected primes */
class FrobeniusOverride : public ExtensionProvider {
public:
    FrobeniusOverride(ProviderPtr base, std::map<std::uint64_t, std::pair<std::vector<int>, int>> choices);
    std::string name() const override { return base_->name(); }
    const GroupPtr& group() const override { return base_->group(); }
    SplittingDatum splitting(std::uint64_t p) const override;
    std::vector<CharacterData> characters() const override { return base_->characters(); }

private:
    ProviderPtr base_;
    std::map<std::uint64_t, std::pair<std::vector<int>, int>> choices_;
};

/* the fixed field of a normal subgroup N: group G/N, data pushed through the projection */
class QuotientProvider : public ExtensionProvider {
public:
    QuotientProvider(ProviderPtr base, const std::vector<int>& normal);
    std::string name() const override;
    const GroupPtr& group() const override { return q_.group; }
    SplittingDatum splitting(std::uint64_t p) const override;
    const std::vector<int>& projection() const { return q_.proj; }

private:
    ProviderPtr base_;
    std::vector<int> normal_;
    Quotient q_;
};

/* every subgroup of G as a sorted element list, ordered by size then lexicographically */
std::vector<std::vector<int>> all_subgroups(const FiniteGroup& G);
bool is_normal(const FiniteGroup& G, const std::vector<int>& s);

/* "rational", "quadratic:d", "cyclotomic:m", "cubic-s3:a", "table:path" */
ProviderPtr make_provider(const std::string& spec);

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);
/* PrimeKeys of Q with norm <= bound */
std::vector<PrimeKey> provider_rational(std::uint64_t bound);
/* number of roots of x^3 - a modulo p, by brute force */
int cubic_root_count(long a, std::uint64_t p);

/* a prime q of K = E^H with the data of one prime of E above it */
struct LocalPrime {
    PrimeKey key;
    int rep = 0;                    /* q corresponds to the double coset H rep D */
    std::vector<int> coset;         /* that double coset, sorted */
    std::vector<int> decomposition; /* H cap rep D rep^-1 */
    std::vector<int> inertia;       /* H cap rep I rep^-1 */
    int frobenius = 0;              /* element of the decomposition group */
    int residue_degree = 1;         /* f(q|p) */
};

/* the base field K = E^H for a subgroup H of Gal(E/Q) */
class FieldContext {
public:
    explicit FieldContext(ProviderPtr provider, std::vector<int> fixing = {});

    const ProviderPtr& provider() const { return provider_; }
    const Subgroup& galois() const { return h_; }
    const std::vector<int>& fixing() const { return fixing_; }
    bool is_rational() const { return rational_; }
    std::string name() const;

    const std::vector<LocalPrime>& primes_above(std::uint64_t p) const;
    /* every prime of K with norm <= bound, in PrimeKey order */
    std::vector<LocalPrime> primes_up_to(std::uint64_t bound) const;
    const LocalPrime& prime(const PrimeKey& q) const;

    /* for a larger field M = E^{H_M} (H_M inside H): the prime of K below a prime of M */
    const LocalPrime& below(const FieldContext& upper, const PrimeKey& P) const;
    int relative_degree(const FieldContext& upper, const PrimeKey& P) const;

    /* characters of Gal(E/K) obtained by restricting the provider's characters */
    CharacterData restrict_character(const CharacterData& chi) const;

private:
    ProviderPtr provider_;
    std::vector<int> fixing_;
    Subgroup h_;
    bool rational_;
    mutable std::mutex lock_;
    mutable std::map<std::uint64_t, std::unique_ptr<std::vector<LocalPrime>>> cache_;
};

struct GaloisDatum {
    PrimeKey prime;
    PowerTraceSeq power_traces;
    Cyclotomic invariant_dim;
};

/* chi is a character of Gal(E/K) (K's galois().group) */
GaloisDatum galois_datum(const CharacterData& chi, const FieldContext& K, const LocalPrime& q, int degree_bound);

}  // namespace artinsym
