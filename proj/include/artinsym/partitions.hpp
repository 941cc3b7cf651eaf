#pragma once

#include "artinsym/exact.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace artinsym {

struct LengthError : std::domain_error {
    using std::domain_error::domain_error;
};

/*
 * Weakly decreasing sequence of positive integers.  The ordering used by
 * every container is: smaller size first, then lexicographically larger
 * parts first, so (4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1).
 */
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    /* sorts and drops zeros */
    static Partition from_unsorted(std::vector<int> parts);
    /* "(2,1)", "[2,1]", "2,1", "2 1", "()" */
    static Partition parse(const std::string& s);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](int i) const { return i < length() ? parts_[i] : 0; }
    int multiplicity(int i) const;
    /* m[i] = multiplicity of part i, for 1 <= i <= largest part */
    std::vector<int> multiplicities() const;
    Partition conjugate() const;
    Partition scaled(int f) const;

    std::string str() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

private:
    std::vector<int> parts_;
    int size_ = 0;
};

Partition merge(const Partition& a, const Partition& b);

std::vector<Partition> enumerate_partitions(int m);
std::vector<Partition> enumerate_partitions(int m, int max_length);
const std::vector<Partition>& partitions_of(int m); /* cached copy */
int partition_index(const Partition& p);             /* position in partitions_of(|p|) */
long partition_count(int m);

int n_stat(const Partition& p);
bool dominates(const Partition& a, const Partition& b);
Integer z_integer(const Partition& p);
int epsilon_sign(const Partition& p);

UniPoly b_poly(const Partition& p);
UniPoly v_poly(int m);
UniPoly v_lambda_n(const Partition& p, int n);

struct Tableau {
    Partition shape;
    std::vector<std::vector<int>> rows;

    bool is_semistandard() const;
    std::vector<int> content() const;
    /* rows from bottom to top, each left to right */
    std::vector<int> row_reading_word() const;
    /* columns from left to right, each bottom to top */
    std::vector<int> column_reading_word() const;
    std::string str() const;
};

std::vector<Tableau> enumerate_ssyt(const Partition& shape, const Partition& content);
/* Kostka number: number of SSYT of the shape with the given content */
long count_ssyt(const Partition& shape, const std::vector<int>& content);

/* Lascoux-Schuetzenberger charge of a word with partition content */
int charge(const std::vector<int>& word);
/* cocharge = n(content) - charge(reading word) */
int cocharge(const Tableau& t);
/* same statistic, computed directly with cocharge indices on the column word */
int cocharge_direct(const Tableau& t);

/* sum over SSYT of shape mu and content lambda of t^cocharge */
UniPoly kostka_foulkes_tilde(const Partition& mu, const Partition& lambda);
void prefill_kostka_foulkes(int max_degree);

/* A prime ideal of a base field, identified by its rational prime, an index
 * among the primes above it, and its absolute norm. */
struct PrimeKey {
    std::uint64_t p = 0;
    int index = 0;
    std::uint64_t norm = 0;
    bool rational = true; /* label is "p" instead of "p.index" */

    static PrimeKey rational_prime(std::uint64_t p) { return PrimeKey{p, 0, p, true}; }
    std::string label() const;

    friend bool operator==(const PrimeKey& a, const PrimeKey& b)
    {
        return a.norm == b.norm && a.p == b.p && a.index == b.index;
    }
    friend std::strong_ordering operator<=>(const PrimeKey& a, const PrimeKey& b)
    {
        if (auto c = a.norm <=> b.norm; c != 0)
            return c;
        if (auto c = a.p <=> b.p; c != 0)
            return c;
        return a.index <=> b.index;
    }
};

class MultiPartition {
public:
    using Entry = std::pair<PrimeKey, Partition>;

    MultiPartition() = default;
    explicit MultiPartition(std::vector<Entry> entries);

    const std::vector<Entry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    Partition at(const PrimeKey& q) const;
    void set(const PrimeKey& q, const Partition& p);

    /* product of N(q)^|lambda_q|; throws on overflow */
    std::uint64_t norm() const;
    int length() const;

    std::string str() const;
    std::string json() const;

    friend bool operator==(const MultiPartition& a, const MultiPartition& b)
    {
        return a.entries_ == b.entries_;
    }
    friend std::strong_ordering operator<=>(const MultiPartition& a, const MultiPartition& b);

private:
    std::vector<Entry> entries_;
};

std::vector<MultiPartition> enumerate_multipartitions(std::vector<PrimeKey> primes,
                                                      std::uint64_t norm_bound,
                                                      int max_length = -1);

/* floor(log_N B) */
int max_local_degree(std::uint64_t norm, std::uint64_t bound);
std::uint64_t checked_pow(std::uint64_t base, int e, std::uint64_t cap);

}  // namespace artinsym
