#include "artinsym/hecke.hpp"

#include <mutex>
#include <set>
#include <stdexcept>
#include <tuple>

namespace artinsym {

namespace {

Rational rpow(const Rational& x, long e)
{
    Rational base = e < 0 ? Rational(1) / x : x;
    Rational r(1);
    for (long i = 0; i < (e < 0 ? -e : e); ++i)
        r *= base;
    return r;
}

Rational inv_norm(std::uint64_t norm)
{
    return Rational(1) / Rational(norm);
}

/* combine per-prime maps into global multipartition maps */
template <class C>
std::map<MultiPartition, C> tensor_locals(const std::vector<std::pair<PrimeKey, std::map<Partition, C>>>& locals)
{
    std::vector<std::pair<std::vector<MultiPartition::Entry>, C>> acc;
    acc.emplace_back(std::vector<MultiPartition::Entry>{}, C(1));
    for (const auto& [q, m] : locals) {
        std::vector<std::pair<std::vector<MultiPartition::Entry>, C>> next;
        for (const auto& [entries, c] : acc)
            for (const auto& [lam, x] : m) {
                auto e = entries;
                if (!lam.empty())
                    e.emplace_back(q, lam);
                next.emplace_back(std::move(e), c * x);
            }
        acc = std::move(next);
    }
    std::map<MultiPartition, C> out;
    for (auto& [entries, c] : acc) {
        MultiPartition lam(std::move(entries));
        auto it = out.find(lam);
        if (it == out.end())
            out.emplace(std::move(lam), c);
        else
            it->second += c;
    }
    return out;
}

std::set<PrimeKey> support_union(const MultiPartition& a, const MultiPartition& b)
{
    std::set<PrimeKey> keys;
    for (const auto& e : a.entries())
        keys.insert(e.first);
    for (const auto& e : b.entries())
        keys.insert(e.first);
    return keys;
}

}  // namespace

/* ------------------------------------------------------------ HeckeElement */

HeckeElement HeckeElement::identity(int n)
{
    HeckeElement h;
    h.n = n;
    h.terms.emplace(MultiPartition(), Cyclotomic(1));
    return h;
}

void HeckeElement::add(const MultiPartition& lam, const Cyclotomic& c)
{
    if (lam.length() > n)
        throw LengthError("double coset " + lam.str() + " needs more than " + std::to_string(n) + " rows");
    if (c.is_zero())
        return;
    auto it = terms.find(lam);
    if (it == terms.end()) {
        terms.emplace(lam, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        terms.erase(it);
}

Cyclotomic HeckeElement::coefficient(const MultiPartition& lam) const
{
    auto it = terms.find(lam);
    return it == terms.end() ? Cyclotomic(0) : it->second;
}

HeckeElement HeckeElement::truncated(std::uint64_t norm_bound) const
{
    HeckeElement h;
    h.n = n;
    for (const auto& [lam, c] : terms)
        if (lam.norm() <= norm_bound)
            h.terms.emplace(lam, c);
    return h;
}

std::string HeckeElement::str() const
{
    std::string s;
    for (const auto& [lam, c] : terms)
        s += lam.str() + " " + c.str() + "\n";
    return s;
}

Rational g_factor(const MultiPartition& lam)
{
    Rational g(1);
    for (const auto& [q, part] : lam.entries())
        g *= rpow(Rational(q.norm), n_stat(part));
    return g;
}

Rational b_factor(const MultiPartition& lam)
{
    Rational b(1);
    for (const auto& [q, part] : lam.entries())
        b *= b_poly(part).eval(inv_norm(q.norm));
    return b;
}

/* ------------------------------------------------------------- Satake map */

HeckeElement satake(const ArithSeries& a, int n)
{
    if (a.basis != Basis::HallLittlewoodPNormalized)
        throw BasisMismatch("the Satake map takes series in the " + basis_name(Basis::HallLittlewoodPNormalized) +
                            " basis");
    HeckeElement h;
    h.n = n;
    for (const auto& [lam, c] : a.expand(n))
        h.add(lam, c);
    return h;
}

std::map<Partition, Rational> local_convolution(const Partition& lambda, const Partition& mu, std::uint64_t norm,
                                                int n)
{
    using Key = std::tuple<Partition, Partition, std::uint64_t, int>;
    static std::mutex lock;
    static std::map<Key, std::map<Partition, Rational>> memo;
    Key key{lambda, mu, norm, n};
    {
        std::lock_guard<std::mutex> g(lock);
        auto it = memo.find(key);
        if (it != memo.end())
            return it->second;
    }
    std::map<Partition, Rational> out;
    Rational N(norm);
    if (lambda.empty() || mu.empty()) {
        const Partition& other = lambda.empty() ? mu : lambda;
        if (other.length() <= n)
            out.emplace(other, Rational(1));
    } else {
        Rational scale = rpow(N, -n_stat(lambda) - n_stat(mu));
        for (const auto& [nu, c] : hl_structure_constants(lambda, mu, inv_norm(norm)))
            if (nu.length() <= n)
                out.emplace(nu, c * rpow(N, n_stat(nu)) * scale);
    }
    std::lock_guard<std::mutex> g(lock);
    memo.emplace(key, out);
    return out;
}

HeckeElement convolve(const HeckeElement& a, const HeckeElement& b)
{
    if (a.n != b.n)
        throw std::invalid_argument("convolving Hecke elements of different rank");
    HeckeElement r;
    r.n = a.n;
    for (const auto& [la, ca] : a.terms)
        for (const auto& [lb, cb] : b.terms) {
            std::vector<std::pair<PrimeKey, std::map<Partition, Rational>>> locals;
            for (const auto& q : support_union(la, lb))
                locals.emplace_back(q, local_convolution(la.at(q), lb.at(q), q.norm, a.n));
            Cyclotomic c = ca * cb;
            for (const auto& [nu, x] : tensor_locals(locals))
                r.add(nu, c * x);
        }
    return r;
}

/* ------------------------------------------------------------ kappa, gamma */

KappaRoutes kappa_routes(const MultiPartition& lam, int n)
{
    if (lam.length() > n)
        throw LengthError("kappa needs length <= n");
    KappaRoutes k{Rational(1), Rational(1), Rational(1)};
    for (const auto& [q, part] : lam.entries()) {
        Rational N(q.norm), t = inv_norm(q.norm);
        Rational ratio = v_poly(n).eval(t) / v_lambda_n(part, n).eval(t);
        long weighted = 0;
        for (int i = 0; i < part.length(); ++i)
            weighted += static_cast<long>(n - 1 - i) * part[i];
        Rational g = rpow(N, n_stat(part));
        k.definition *= rpow(N, weighted) * ratio / g;
        k.simplified *= rpow(N, static_cast<long>(n - 1) * part.size()) / (g * g) * ratio;
        Rational value(0);
        for (const auto& [expo, c] : hl_P_finite(part, n, t)) {
            long e = 0;
            for (std::size_t i = 0; i < expo.size(); ++i)
                e += static_cast<long>(i) * expo[i];
            value += c * rpow(N, e);
        }
        k.specialization *= value / g;
    }
    return k;
}

Rational kappa(const MultiPartition& lam, int n)
{
    auto k = kappa_routes(lam, n);
    if (k.definition != k.simplified || k.definition != k.specialization)
        throw std::logic_error("kappa routes disagree at " + lam.str() + " n=" + std::to_string(n));
    return k.definition;
}

Rational kappa_closed(const MultiPartition& lam, int n)
{
    if (lam.length() > n)
        throw LengthError("kappa needs length <= n");
    Rational k(1);
    for (const auto& [q, part] : lam.entries()) {
        Rational N(q.norm), t = inv_norm(q.norm);
        Rational g = rpow(N, n_stat(part));
        k *= rpow(N, static_cast<long>(n - 1) * part.size()) / (g * g) * v_poly(n).eval(t) /
             v_lambda_n(part, n).eval(t);
    }
    return k;
}

GammaRoutes gamma_routes(const MultiPartition& lam)
{
    GammaRoutes r{Rational(1), Rational(1), Rational(1)};
    Rational g = g_factor(lam);
    r.closed_form = Rational(1) / (g * g * b_factor(lam));
    for (const auto& [q, part] : lam.entries()) {
        Rational t = inv_norm(q.norm);
        Rational gq = rpow(Rational(q.norm), n_stat(part));
        r.principal_specialization *= principal_specialization_P(part).eval(t) / gq;
        const auto& row = transition_to_p(Basis::HallLittlewoodP, part.size(), t)[partition_index(part)];
        const auto& parts = partitions_of(part.size());
        Rational v(0);
        for (std::size_t j = 0; j < parts.size(); ++j) {
            if (row[j] == 0)
                continue;
            Rational pv(1);
            for (int m : parts[j].parts())
                pv /= (Rational(1) - rpow(t, m));
            v += row[j] * pv;
        }
        r.power_sum *= v / gq;
    }
    return r;
}

Rational gamma(const MultiPartition& lam)
{
    auto r = gamma_routes(lam);
    if (r.closed_form != r.principal_specialization || r.closed_form != r.power_sum)
        throw std::logic_error("gamma routes disagree at " + lam.str());
    return r.closed_form;
}

/* ---------------------------------------------------------------- F values */

Cyclotomic f_eval(const CharacterData& chi, const FieldContext& K, const MultiPartition& type)
{
    Cyclotomic v(1);
    for (const auto& [q, part] : type.entries()) {
        const auto& lp = K.prime(q);
        TraceEvaluator ev(galois_datum(chi, K, lp, part.size()).power_traces);
        v *= ev.modified_hl(part, Rational(q.norm));
    }
    return v;
}

HeckeElement f_element(const CharacterData& chi, const FieldContext& K, int n, std::uint64_t bound)
{
    return satake(artin_series(chi, K, bound, Basis::HallLittlewoodPNormalized), n);
}

HeckeElement r_map(const HeckeElement& a, const FieldContext& upper, const FieldContext& lower)
{
    const Basis b = Basis::HallLittlewoodPNormalized;
    HeckeElement r;
    r.n = a.n;
    for (const auto& [lam, c] : a.terms) {
        std::map<PrimeKey, SymExpansion<Rational>> local;
        for (const auto& [P, part] : lam.entries()) {
            const auto& q = lower.below(upper, P);
            int f = lower.relative_degree(upper, P);
            auto unit = SymExpansion<Rational>::unit(b, part, Rational(1), local_t(b, P.norm));
            auto image = plethysm_power(unit, f, b, local_t(b, q.key.norm));
            auto it = local.find(q.key);
            if (it == local.end())
                local.emplace(q.key, std::move(image));
            else
                it->second = multiply(it->second, image);
        }
        std::vector<std::pair<PrimeKey, std::map<Partition, Rational>>> locals;
        for (const auto& [q, e] : local) {
            std::map<Partition, Rational> m;
            for (const auto& [nu, x] : e.terms())
                if (nu.length() <= a.n)
                    m.emplace(nu, x);
            locals.emplace_back(q, std::move(m));
        }
        for (const auto& [nu, x] : tensor_locals(locals))
            r.add(nu, c * x);
    }
    return r;
}

/* ------------------------------------------------------ random property */

ArithSeries random_series(const FieldContext& K, std::uint64_t bound, Basis b, std::mt19937_64& rng, int coeff_range)
{
    std::uniform_int_distribution<int> dist(-coeff_range, coeff_range);
    ArithSeries s = series_one(K, bound, b);
    s.label = "random";
    for (const auto& q : s.primes) {
        SymExpansion<Cyclotomic> e(b, local_t(b, q.norm));
        e.add(Partition(), Cyclotomic(1));
        int d = max_local_degree(q.norm, bound);
        for (int k = 1; k <= d; ++k)
            for (const auto& lam : partitions_of(k))
                e.add(lam, Cyclotomic(dist(rng)));
        s.locals.emplace(q, std::move(e));
    }
    return s;
}

IdentityReport verify_satake(int n, std::uint64_t bound, std::uint64_t seed, int pairs)
{
    IdentityReport r;
    r.kind = "satake";
    r.instance = "n=" + std::to_string(n) + " bound=" + std::to_string(bound) + " seed=" + std::to_string(seed);
    r.pass = true;
    FieldContext K(std::make_shared<RationalProvider>());
    std::mt19937_64 rng(seed);
    const Basis b = Basis::HallLittlewoodPNormalized;
    for (int i = 0; i < pairs; ++i) {
        auto x = random_series(K, bound, b, rng);
        auto y = random_series(K, bound, b, rng);
        auto lhs = satake(series_multiply(x, y), n);
        auto rhs = convolve(satake(x, n), satake(y, n)).truncated(bound);
        r.compared += lhs.terms.size();
        if (!(lhs == rhs)) {
            r.pass = false;
            for (const auto& [lam, c] : rhs.terms)
                if (!(lhs.coefficient(lam) == c)) {
                    r.detail = "pair " + std::to_string(i) + " at " + lam.str() + ": " + lhs.coefficient(lam).str() +
                               " vs " + c.str();
                    return r;
                }
            r.detail = "pair " + std::to_string(i) + ": supports differ";
            return r;
        }
    }
    return r;
}

}  // namespace artinsym
