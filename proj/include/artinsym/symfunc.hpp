#pragma once

#include "artinsym/exact.hpp"
#include "artinsym/partitions.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace artinsym {

/*
 * HallLittlewoodPNormalized has unit t^{n(lambda)} P_lambda(t); with
 * t = 1/N this is g(lambda)^{-1} P_lambda, the unit sent to an indicator
 * function by the Satake map.
 */
enum class Basis {
    Monomial,
    Homogeneous,
    Elementary,
    PowerSum,
    Schur,
    Forgotten,
    HallLittlewoodP,
    HallLittlewoodQ,
    HallLittlewoodPNormalized,
    ModifiedHallLittlewood,
};

bool depends_on_t(Basis b);
std::string basis_name(Basis b);
Basis parse_basis(const std::string& s);

struct BasisMismatch : std::logic_error {
    using std::logic_error::logic_error;
};

struct DegreeCapExceeded : std::domain_error {
    using std::domain_error::domain_error;
};

inline bool coeff_is_zero(const Rational& q) { return q == 0; }
inline bool coeff_is_zero(const RatFun& f) { return f.is_zero(); }
inline bool coeff_is_zero(const Cyclotomic& z) { return z.is_zero(); }
inline bool coeff_is_zero(const UniPoly& f) { return f.is_zero(); }
inline std::string coeff_str(const Rational& q) { return to_string(q); }
inline std::string coeff_str(const RatFun& f) { return f.str(); }
inline std::string coeff_str(const Cyclotomic& z) { return z.json(); }
inline std::string coeff_str(const UniPoly& f) { return f.str(); }

/*
 * Finitely supported partition -> coefficient map in one basis.  When the
 * coefficients are numbers (Rational or Cyclotomic) and the basis involves
 * t, the specialization t_value must be set.
 */
template <class C>
class SymExpansion {
public:
    SymExpansion() = default;
    explicit SymExpansion(Basis b, std::optional<Rational> t = std::nullopt) : basis_(b), t_(std::move(t)) {}

    static SymExpansion unit(Basis b, const Partition& p, const C& c = C(1),
                             std::optional<Rational> t = std::nullopt)
    {
        SymExpansion f(b, std::move(t));
        f.add(p, c);
        return f;
    }

    Basis basis() const { return basis_; }
    const std::optional<Rational>& t_value() const { return t_; }
    void set_t_value(std::optional<Rational> t) { t_ = std::move(t); }
    const std::map<Partition, C>& terms() const { return terms_; }

    void add(const Partition& p, const C& c)
    {
        if (coeff_is_zero(c))
            return;
        auto it = terms_.find(p);
        if (it == terms_.end()) {
            terms_.emplace(p, c);
            return;
        }
        it->second += c;
        if (coeff_is_zero(it->second))
            terms_.erase(it);
    }

    C coefficient(const Partition& p) const
    {
        auto it = terms_.find(p);
        return it == terms_.end() ? C(0) : it->second;
    }

    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.size(); }
    bool is_zero() const { return terms_.empty(); }

    SymExpansion truncated(int max_degree) const
    {
        SymExpansion r(basis_, t_);
        for (const auto& [p, c] : terms_)
            if (p.size() <= max_degree)
                r.terms_.emplace(p, c);
        return r;
    }

    SymExpansion& operator+=(const SymExpansion& o)
    {
        check_compatible(o);
        for (const auto& [p, c] : o.terms_)
            add(p, c);
        return *this;
    }

    SymExpansion& operator-=(const SymExpansion& o)
    {
        check_compatible(o);
        for (const auto& [p, c] : o.terms_)
            add(p, -c);
        return *this;
    }

    SymExpansion scaled(const C& c) const
    {
        SymExpansion r(basis_, t_);
        for (const auto& [p, x] : terms_) {
            C y = x;
            y *= c;
            r.add(p, y);
        }
        return r;
    }

    friend bool operator==(const SymExpansion& a, const SymExpansion& b)
    {
        if (a.basis_ != b.basis_ || a.terms_ != b.terms_)
            return false;
        return !depends_on_t(a.basis_) || a.t_ == b.t_;
    }

    /* lines "basis partition coefficient" in canonical partition order */
    std::string dump() const
    {
        std::string s;
        for (const auto& [p, c] : terms_)
            s += basis_name(basis_) + " " + p.str() + " " + coeff_str(c) + "\n";
        return s;
    }

private:
    void check_compatible(const SymExpansion& o) const
    {
        if (basis_ != o.basis_)
            throw BasisMismatch("adding expansions in different bases");
        if (depends_on_t(basis_) && t_ != o.t_)
            throw BasisMismatch("adding expansions with different t specializations");
    }

    Basis basis_ = Basis::PowerSum;
    std::optional<Rational> t_;
    std::map<Partition, C> terms_;
};

template <class C>
using MultiPoly = std::map<std::vector<int>, C>;

using RMatrix = std::vector<std::vector<Rational>>;
using FMatrix = std::vector<std::vector<RatFun>>;

/* row lambda holds the p-basis expansion of the basis element lambda, both
 * indexed by partitions_of(d) */
const RMatrix& transition_to_p(Basis b, int d, const std::optional<Rational>& t = std::nullopt);
const RMatrix& transition_from_p(Basis b, int d, const std::optional<Rational>& t = std::nullopt);
const FMatrix& transition_to_p_symbolic(Basis b, int d);
const FMatrix& transition_from_p_symbolic(Basis b, int d);

/* irreducible character of S_n: chi^lambda at cycle type mu */
long character_value(const Partition& lambda, const Partition& mu);

/* P_lambda(t) in the Schur basis; computed from the tableau formula
 * P_lambda = sum_T psi_T(t) x^T and cached */
const std::map<Partition, UniPoly>& hall_littlewood_P_schur(const Partition& lambda);
/* the same expansion from antisymmetrizing the coset sum in nvars variables
 * (default |lambda|); exact only for Schur terms of length <= nvars */
std::map<Partition, UniPoly> hall_littlewood_P_schur_coset(const Partition& lambda, int nvars = -1);
/* coefficient of m_nu in P_lambda */
UniPoly hall_littlewood_P_monomial(const Partition& lambda, const Partition& nu);

/* coset-sum polynomial P_lambda(x_1..x_n; t), coefficients in Z[t] */
MultiPoly<UniPoly> hl_P_finite(const Partition& lambda, int nvars);
MultiPoly<Rational> hl_P_finite(const Partition& lambda, int nvars, const Rational& t);
/* the defining coset sum evaluated at a point with pairwise distinct coordinates */
Rational hl_P_coset_value(const Partition& lambda, const std::vector<Rational>& x, const Rational& t);
MultiPoly<Rational> schur_polynomial(const Partition& mu, int nvars);

template <class C>
SymExpansion<C> convert(const SymExpansion<C>& f, Basis target);
/* convert with an explicit t specialization for the target (specialized coefficients only) */
template <class C>
SymExpansion<C> convert(const SymExpansion<C>& f, Basis target, const std::optional<Rational>& t);

template <class C>
SymExpansion<C> multiply(const SymExpansion<C>& f, const SymExpansion<C>& g, int max_degree = -1);

/* f[X] -> f[p_k X], i.e. p_r -> p_{rk}; the result is re-expressed in the
 * given basis with t specialization t_out */
template <class C>
SymExpansion<C> plethysm_power(const SymExpansion<C>& f, int k, Basis target,
                               const std::optional<Rational>& t_out);

std::map<Partition, RatFun> hl_structure_constants(const Partition& lambda, const Partition& mu);
std::map<Partition, Rational> hl_structure_constants(const Partition& lambda, const Partition& mu,
                                                     const Rational& t);

SymExpansion<RatFun> modified_hl_schur(const Partition& lambda);
SymExpansion<RatFun> modified_hl_plethysm_oracle(const Partition& lambda, int degree_cap = 8);

RatFun principal_specialization_P(const Partition& lambda);
SymExpansion<Rational> plethystic_exp_truncated(int degree);

RatFun hall_pairing_t(const SymExpansion<RatFun>& f, const SymExpansion<RatFun>& g);
template <class C>
C hall_pairing(const SymExpansion<C>& f, const SymExpansion<C>& g);

template <class C>
SymExpansion<RatFun> to_symbolic(const SymExpansion<C>& f);

/* t_k = p_k at an implicit multiset; traces[k-1] holds t_k */
struct PowerTraceSeq {
    std::vector<Cyclotomic> traces;

    int degree() const { return static_cast<int>(traces.size()); }
    const Cyclotomic& at(int k) const;
};

/* memoizing evaluator of symmetric functions at the multiset behind a trace sequence */
class TraceEvaluator {
public:
    explicit TraceEvaluator(PowerTraceSeq tr);

    const PowerTraceSeq& traces() const { return tr_; }
    Cyclotomic p(const Partition& mu) const;
    const Cyclotomic& h(int k);
    const Cyclotomic& e(int k);
    Cyclotomic h(const Partition& lambda);
    Cyclotomic e(const Partition& lambda);
    /* Jacobi-Trudi determinant */
    Cyclotomic s(const Partition& lambda);
    Cyclotomic m(const Partition& lambda);
    /* modified HL at parameter value q: sum_mu K~_{mu lambda}(q) s_mu */
    Cyclotomic modified_hl(const Partition& lambda, const Rational& q);

private:
    PowerTraceSeq tr_;
    std::vector<Cyclotomic> h_, e_;
    std::map<Partition, Cyclotomic> s_memo_;
};

template <class C>
Cyclotomic eval_at_traces(const SymExpansion<C>& f, const PowerTraceSeq& tr);

}  // namespace artinsym
