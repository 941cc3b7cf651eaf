#include "artinsym/artin.hpp"

#include "artinsym/parallel.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <tuple>

namespace artinsym {

std::optional<Rational> local_t(Basis b, std::uint64_t norm)
{
    if (!depends_on_t(b))
        return std::nullopt;
    return Rational(1) / Rational(norm);
}

/* ------------------------------------------------------------ ArithSeries */

SymExpansion<Cyclotomic> ArithSeries::local(const PrimeKey& q) const
{
    auto it = locals.find(q);
    if (it != locals.end())
        return it->second;
    return SymExpansion<Cyclotomic>::unit(basis, Partition(), Cyclotomic(1), local_t(basis, q.norm));
}

Cyclotomic ArithSeries::local_coefficient(const PrimeKey& q, const Partition& lambda) const
{
    auto it = locals.find(q);
    if (it == locals.end())
        return lambda.empty() ? Cyclotomic(1) : Cyclotomic(0);
    return it->second.coefficient(lambda);
}

Cyclotomic ArithSeries::coefficient(const MultiPartition& lam) const
{
    if (lam.norm() > bound)
        throw DegreeCapExceeded("multipartition " + lam.str() + " exceeds the norm bound " + std::to_string(bound));
    Cyclotomic c(1);
    for (const auto& [q, part] : lam.entries()) {
        c *= local_coefficient(q, part);
        if (c.is_zero())
            break;
    }
    return c;
}

std::vector<std::pair<MultiPartition, Cyclotomic>> ArithSeries::expand(int max_length) const
{
    std::vector<std::pair<MultiPartition, Cyclotomic>> out;
    for (auto& lam : enumerate_multipartitions(primes, bound, max_length)) {
        Cyclotomic c = coefficient(lam);
        out.emplace_back(std::move(lam), std::move(c));
    }
    return out;
}

std::string ArithSeries::dump(const std::string& extension, const std::string& character) const
{
    std::string s;
    s += "# field " + field + "\n";
    s += "# extension " + extension + "\n";
    s += "# character " + character + "\n";
    s += "# basis " + basis_name(basis) + "\n";
    s += "# bound " + std::to_string(bound) + "\n";
    for (const auto& [lam, c] : expand())
        s += lam.str() + " " + c.str() + "\n";
    return s;
}

/* ---------------------------------------------------------- construction */

SymExpansion<Cyclotomic> local_kernel(const PowerTraceSeq& tr, Basis b, int degree, std::uint64_t norm)
{
    Basis direct = b;
    switch (b) {
    case Basis::Monomial:
    case Basis::Schur:
    case Basis::Homogeneous:
    case Basis::Forgotten:
    case Basis::HallLittlewoodPNormalized:
        break;
    default:
        direct = Basis::Schur;
    }
    TraceEvaluator ev(tr);
    Rational N(norm);
    SymExpansion<Cyclotomic> r(direct, local_t(direct, norm));
    r.add(Partition(), Cyclotomic(1));
    for (int d = 1; d <= degree; ++d)
        for (const auto& lam : partitions_of(d)) {
            switch (direct) {
            case Basis::Monomial:
                r.add(lam, ev.h(lam));
                break;
            case Basis::Schur:
                r.add(lam, ev.s(lam));
                break;
            case Basis::Homogeneous:
                r.add(lam, ev.m(lam));
                break;
            case Basis::Forgotten:
                r.add(lam, ev.e(lam));
                break;
            default:
                r.add(lam, ev.modified_hl(lam, N));
            }
        }
    if (direct != b)
        r = convert(r, b, local_t(b, norm));
    return r;
}

ArithSeries series_one(const FieldContext& K, std::uint64_t bound, Basis b)
{
    ArithSeries s;
    s.basis = b;
    s.bound = bound;
    s.field = K.name();
    for (const auto& lp : K.primes_up_to(bound))
        s.primes.push_back(lp.key);
    return s;
}

ArithSeries series_from_traces(const FieldContext& K, std::uint64_t bound, Basis b,
                               const std::function<PowerTraceSeq(const LocalPrime&, int)>& traces)
{
    ArithSeries s;
    s.basis = b;
    s.bound = bound;
    s.field = K.name();
    auto primes = K.primes_up_to(bound);
    std::vector<SymExpansion<Cyclotomic>> local(primes.size());
    parallel_for(primes.size(), [&](std::size_t i) {
        int d = max_local_degree(primes[i].key.norm, bound);
        local[i] = local_kernel(traces(primes[i], d), b, d, primes[i].key.norm);
    });
    for (std::size_t i = 0; i < primes.size(); ++i) {
        s.primes.push_back(primes[i].key);
        s.locals.emplace(primes[i].key, std::move(local[i]));
    }
    return s;
}

ArithSeries dedekind_series(const FieldContext& K, std::uint64_t bound, Basis b)
{
    auto s = series_from_traces(K, bound, b, [](const LocalPrime&, int d) {
        return PowerTraceSeq{std::vector<Cyclotomic>(d, Cyclotomic(1))};
    });
    s.label = "zeta";
    return s;
}

ArithSeries relative_dedekind_series(const FieldContext& upper, const FieldContext& lower, std::uint64_t bound,
                                     Basis b)
{
    auto s = series_from_traces(lower, bound, b, [&](const LocalPrime& q, int d) {
        std::vector<Cyclotomic> t(d, Cyclotomic(0));
        for (const auto& P : upper.primes_above(q.key.p)) {
            if (!(lower.below(upper, P.key).key == q.key))
                continue;
            int f = lower.relative_degree(upper, P.key);
            for (int k = f; k <= d; k += f)
                t[k - 1] += Cyclotomic(f);
        }
        return PowerTraceSeq{std::move(t)};
    });
    s.label = "zeta(" + upper.name() + "/" + lower.name() + ")";
    return s;
}

ArithSeries artin_series(const CharacterData& chi, const FieldContext& K, std::uint64_t bound, Basis b)
{
    if (!(*chi.group == *K.galois().group))
        throw GroupError("character " + chi.name + " is not a character of the Galois group over " + K.name());
    auto s = series_from_traces(K, bound, b, [&](const LocalPrime& q, int d) {
        return galois_datum(chi, K, q, d).power_traces;
    });
    s.label = chi.name;
    return s;
}

namespace {

void require_compatible(const ArithSeries& a, const ArithSeries& b)
{
    if (a.basis != b.basis)
        throw BasisMismatch("series in different bases");
    if (a.bound != b.bound)
        throw BasisMismatch("series with different norm bounds");
    if (a.field != b.field)
        throw BasisMismatch("series over different fields");
}

}  // namespace

ArithSeries series_multiply(const ArithSeries& a, const ArithSeries& b)
{
    require_compatible(a, b);
    ArithSeries r;
    r.basis = a.basis;
    r.bound = a.bound;
    r.field = a.field;
    r.label = a.label + "*" + b.label;
    std::set<PrimeKey> keys(a.primes.begin(), a.primes.end());
    keys.insert(b.primes.begin(), b.primes.end());
    r.primes.assign(keys.begin(), keys.end());
    std::set<PrimeKey> stored;
    for (const auto& [q, e] : a.locals)
        stored.insert(q);
    for (const auto& [q, e] : b.locals)
        stored.insert(q);
    std::vector<PrimeKey> qs(stored.begin(), stored.end());
    std::vector<SymExpansion<Cyclotomic>> out(qs.size());
    parallel_for(qs.size(), [&](std::size_t i) {
        out[i] = multiply(a.local(qs[i]), b.local(qs[i]), max_local_degree(qs[i].norm, a.bound));
    });
    for (std::size_t i = 0; i < qs.size(); ++i)
        r.locals.emplace(qs[i], std::move(out[i]));
    return r;
}

ArithSeries series_power(const ArithSeries& a, int k)
{
    if (k < 0)
        throw std::invalid_argument("negative series power");
    ArithSeries r = a;
    r.locals.clear();
    r.label = "1";
    for (int i = 0; i < k; ++i)
        r = series_multiply(r, a);
    r.label = a.label + "^" + std::to_string(k);
    return r;
}

ArithSeries norm_map(const ArithSeries& a, const FieldContext& upper, const FieldContext& lower)
{
    if (a.field != upper.name())
        throw BasisMismatch("series lives over " + a.field + ", not " + upper.name());
    ArithSeries r = series_one(lower, a.bound, a.basis);
    r.label = "N(" + a.label + ")";
    auto primes = lower.primes_up_to(a.bound);
    std::vector<SymExpansion<Cyclotomic>> out(primes.size());
    parallel_for(primes.size(), [&](std::size_t i) {
        const auto& q = primes[i];
        int d = max_local_degree(q.key.norm, a.bound);
        auto t_out = local_t(a.basis, q.key.norm);
        auto acc = SymExpansion<Cyclotomic>::unit(a.basis, Partition(), Cyclotomic(1), t_out);
        for (const auto& P : upper.primes_above(q.key.p)) {
            if (P.key.norm > a.bound || !(lower.below(upper, P.key).key == q.key))
                continue;
            int f = lower.relative_degree(upper, P.key);
            auto image = plethysm_power(a.local(P.key), f, a.basis, t_out).truncated(d);
            acc = multiply(acc, image, d);
        }
        out[i] = std::move(acc);
    });
    for (std::size_t i = 0; i < primes.size(); ++i)
        r.locals.emplace(primes[i].key, std::move(out[i]));
    return r;
}

SeriesComparison compare_series(const ArithSeries& a, const ArithSeries& b)
{
    SeriesComparison cmp;
    if (a.basis != b.basis) {
        cmp.equal = false;
        cmp.mismatch = "bases differ: " + basis_name(a.basis) + " vs " + basis_name(b.basis);
        return cmp;
    }
    std::uint64_t bound = std::min(a.bound, b.bound);
    std::set<PrimeKey> keys(a.primes.begin(), a.primes.end());
    keys.insert(b.primes.begin(), b.primes.end());
    for (const auto& lam : enumerate_multipartitions(std::vector<PrimeKey>(keys.begin(), keys.end()), bound)) {
        ++cmp.compared;
        Cyclotomic x = a.coefficient(lam), y = b.coefficient(lam);
        if (!(x == y)) {
            cmp.equal = false;
            cmp.mismatch = lam.str() + ": " + x.str() + " vs " + y.str();
            return cmp;
        }
    }
    return cmp;
}

/* ------------------------------------------------------------ verifiers */

namespace {

/* the extension as well as the base when the base is Q */
std::string describe(const FieldContext& K)
{
    return K.is_rational() ? K.provider()->name() : K.name();
}

IdentityReport report_from(std::string kind, std::string instance, const SeriesComparison& cmp)
{
    IdentityReport r;
    r.kind = std::move(kind);
    r.instance = std::move(instance);
    r.pass = cmp.equal;
    r.compared = cmp.compared;
    r.detail = cmp.equal ? "" : "first mismatch at " + cmp.mismatch;
    return r;
}

IdentityReport failure(std::string kind, std::string instance, std::string detail)
{
    IdentityReport r;
    r.kind = std::move(kind);
    r.instance = std::move(instance);
    r.pass = false;
    r.detail = std::move(detail);
    return r;
}

std::string set_str(const std::vector<int>& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

bool is_trivial_character(const CharacterData& chi)
{
    return std::all_of(chi.values.begin(), chi.values.end(), [](const Cyclotomic& v) { return v == Cyclotomic(1); });
}

std::vector<CharacterData> field_irreducibles(const FieldContext& K)
{
    if (K.is_rational())
        return K.provider()->characters();
    return irreducible_characters(K.galois().group);
}

std::vector<int> embedding_between(const FieldContext& upper, const FieldContext& lower)
{
    std::vector<int> emb;
    for (int g : upper.galois().embed) {
        int h = lower.galois().index[g];
        if (h < 0)
            throw GroupError(upper.name() + " does not contain " + lower.name());
        emb.push_back(h);
    }
    return emb;
}

}  // namespace

IdentityReport verify_direct_sum(const FieldContext& K, const CharacterData& a, const CharacterData& b,
                                 std::uint64_t bound, Basis basis)
{
    auto lhs = artin_series(direct_sum(a, b), K, bound, basis);
    auto rhs = series_multiply(artin_series(a, K, bound, basis), artin_series(b, K, bound, basis));
    return report_from("direct_sum", describe(K) + " " + a.name + "+" + b.name, compare_series(lhs, rhs));
}

IdentityReport verify_inflation(const ProviderPtr& big, const std::vector<int>& normal, const ProviderPtr& small,
                                const CharacterData& chi, std::uint64_t bound, Basis basis)
{
    std::string inst = big->name() + " -> " + small->name() + " " + chi.name;
    auto Q = make_quotient(*big->group(), normal);
    if (!(*Q.group == *small->group()))
        return failure("inflation", inst, "quotient group table differs from the small field's group");
    auto inf = inflate(chi, big->group(), Q.proj);
    auto lhs = artin_series(chi, FieldContext(small), bound, basis);
    auto rhs = artin_series(inf, FieldContext(big), bound, basis);
    return report_from("inflation", inst, compare_series(lhs, rhs));
}

IdentityReport verify_induction(const FieldContext& upper, const FieldContext& lower, const CharacterData& chi,
                                std::uint64_t bound, Basis basis)
{
    auto ind = induce(chi, lower.galois().group, embedding_between(upper, lower));
    auto lhs = norm_map(artin_series(chi, upper, bound, basis), upper, lower);
    auto rhs = artin_series(ind, lower, bound, basis);
    return report_from("induction", upper.name() + " / " + lower.name() + " " + chi.name, compare_series(lhs, rhs));
}

IdentityReport verify_regular(const FieldContext& K, std::uint64_t bound, Basis basis)
{
    FieldContext top(K.provider(), {0});
    auto lhs = artin_series(regular_character(K.galois().group), K, bound, basis);
    auto rhs = relative_dedekind_series(top, K, bound, basis);
    return report_from("regular", describe(K), compare_series(lhs, rhs));
}

IdentityReport verify_factorization(const FieldContext& K, std::uint64_t bound, Basis basis)
{
    FieldContext top(K.provider(), {0});
    auto irr = field_irreducibles(K);
    long dim_sq = 0;
    for (const auto& chi : irr)
        dim_sq += static_cast<long>(chi.degree()) * chi.degree();
    if (dim_sq != K.galois().group->order())
        return failure("factorization", describe(K), "character list is not a complete set of irreducibles");
    auto rhs = dedekind_series(K, bound, basis);
    for (const auto& chi : irr)
        if (!is_trivial_character(chi))
            rhs = series_multiply(rhs, series_power(artin_series(chi, K, bound, basis), chi.degree()));
    auto lhs = relative_dedekind_series(top, K, bound, basis);
    return report_from("factorization", describe(K), compare_series(lhs, rhs));
}

IdentityReport verify_norm_of_dedekind(const FieldContext& upper, const FieldContext& lower, std::uint64_t bound,
                                       Basis basis)
{
    auto lhs = norm_map(dedekind_series(upper, bound, basis), upper, lower);
    auto rhs = relative_dedekind_series(upper, lower, bound, basis);
    return report_from("norm", upper.name() + " / " + lower.name(), compare_series(lhs, rhs));
}

IdentityReport verify_tower(const FieldContext& top, const FieldContext& middle, const FieldContext& bottom,
                            std::uint64_t bound, Basis basis)
{
    auto z = dedekind_series(top, bound, basis);
    auto lhs = norm_map(norm_map(z, top, middle), middle, bottom);
    auto rhs = norm_map(z, top, bottom);
    return report_from("tower", top.name() + " / " + middle.name() + " / " + bottom.name(), compare_series(lhs, rhs));
}

IdentityReport verify_brauer(const FieldContext& K, const CharacterData& chi, std::uint64_t bound, Basis basis)
{
    const auto& Gk = *K.galois().group;
    for (const auto& S : all_subgroups(Gk)) {
        auto sub = make_subgroup(Gk, S);
        for (const auto& psi : linear_characters(sub.group)) {
            auto ind = induce(psi, K.galois().group, sub.embed);
            if (ind.values != chi.values)
                continue;
            std::vector<int> fixing;
            for (int s : S)
                fixing.push_back(K.galois().embed[s]);
            FieldContext L(K.provider(), fixing);
            auto lhs = norm_map(artin_series(psi, L, bound, basis), L, K);
            auto rhs = artin_series(chi, K, bound, basis);
            return report_from("brauer", describe(K) + " " + chi.name + " = Ind from " + set_str(fixing) + " of " + psi.name,
                               compare_series(lhs, rhs));
        }
    }
    return failure("brauer", describe(K) + " " + chi.name, "not induced from a linear character of any subgroup");
}

IdentityReport verify_frobenius_choice(const ProviderPtr& provider, std::uint64_t p, const CharacterData& chi,
                                       std::uint64_t bound, Basis basis)
{
    const auto& G = *provider->group();
    auto sd = provider->splitting(p);
    auto base = artin_series(chi, FieldContext(provider), bound, basis);
    IdentityReport r;
    r.kind = "frobenius";
    r.instance = provider->name() + " p=" + std::to_string(p) + " " + chi.name;
    r.pass = true;
    for (int g = 0; g < G.order(); ++g)
        for (int h : sd.inertia) {
            auto inertia = G.conjugate_set(sd.inertia, g);
            int frob = G.conj(G.mul(sd.frobenius, h), g);
            auto alt = std::make_shared<FrobeniusOverride>(
                provider, std::map<std::uint64_t, std::pair<std::vector<int>, int>>{{p, {inertia, frob}}});
            auto cmp = compare_series(base, artin_series(chi, FieldContext(alt), bound, basis));
            r.compared += cmp.compared;
            if (!cmp.equal) {
                r.pass = false;
                r.detail = "choice I=" + set_str(inertia) + " sigma=" + std::to_string(frob) + ": " + cmp.mismatch;
                return r;
            }
        }
    return r;
}

const std::vector<std::string>& identity_kinds()
{
    static const std::vector<std::string> kinds = {"direct_sum", "inflation", "induction", "regular",  "factorization",
                                                   "norm",       "tower",     "brauer",    "frobenius"};
    return kinds;
}

std::vector<IdentityReport> verify_identity(const std::string& kind, const ProviderPtr& provider, std::uint64_t bound,
                                            Basis basis)
{
    FieldContext K(provider);
    const auto& G = *provider->group();
    std::vector<IdentityReport> out;
    auto proper = [&] {
        std::vector<std::vector<int>> v;
        for (auto& S : all_subgroups(G))
            if (static_cast<int>(S.size()) < G.order())
                v.push_back(S);
        return v;
    };
    if (kind == "direct_sum") {
        auto chars = provider->characters();
        for (std::size_t i = 0; i < chars.size(); ++i)
            for (std::size_t j = i; j < chars.size(); ++j)
                out.push_back(verify_direct_sum(K, chars[i], chars[j], bound, basis));
    } else if (kind == "inflation") {
        for (const auto& N : proper()) {
            if (N.size() == 1 || !is_normal(G, N))
                continue;
            auto small = std::make_shared<QuotientProvider>(provider, N);
            for (const auto& psi : irreducible_characters(small->group()))
                out.push_back(verify_inflation(provider, N, small, psi, bound, basis));
        }
    } else if (kind == "induction") {
        for (const auto& S : proper()) {
            FieldContext L(provider, S);
            for (const auto& psi : irreducible_characters(L.galois().group))
                out.push_back(verify_induction(L, K, psi, bound, basis));
        }
    } else if (kind == "regular") {
        out.push_back(verify_regular(K, bound, basis));
    } else if (kind == "factorization") {
        out.push_back(verify_factorization(K, bound, basis));
    } else if (kind == "norm") {
        for (const auto& S : proper())
            out.push_back(verify_norm_of_dedekind(FieldContext(provider, S), K, bound, basis));
    } else if (kind == "tower") {
        FieldContext top(provider, {0});
        for (const auto& S : proper())
            if (S.size() > 1)
                out.push_back(verify_tower(top, FieldContext(provider, S), K, bound, basis));
    } else if (kind == "brauer") {
        for (const auto& chi : provider->characters())
            out.push_back(verify_brauer(K, chi, bound, basis));
    } else if (kind == "frobenius") {
        std::vector<std::uint64_t> ps;
        for (auto p : primes_up_to(bound))
            if (!provider->splitting(p).unramified())
                ps.push_back(p);
        for (auto p : ps)
            for (const auto& chi : provider->characters())
                out.push_back(verify_frobenius_choice(provider, p, chi, bound, basis));
    } else {
        throw std::invalid_argument("unknown identity '" + kind + "'");
    }
    return out;
}

/* --------------------------------------------------- grading and pairing */

std::uint64_t NormGrade::value() const
{
    std::uint64_t v = 1;
    for (const auto& [q, e] : exponents) {
        std::uint64_t f = checked_pow(q.norm, e, UINT64_MAX);
        if (f != 0 && v > UINT64_MAX / f)
            throw std::overflow_error("norm grade overflows 64 bits");
        v *= f;
    }
    return v;
}

NormGrade operator*(const NormGrade& a, const NormGrade& b)
{
    NormGrade r = a;
    for (const auto& [q, e] : b.exponents)
        r.exponents[q] += e;
    return r;
}

NormGrade norm_grade(const MultiPartition& lam)
{
    NormGrade g;
    for (const auto& [q, part] : lam.entries())
        g.exponents[q] = part.size();
    return g;
}

namespace {

/* z_mu(t) at t = 1/N */
Rational z_local(const Partition& mu, std::uint64_t norm)
{
    Rational t = Rational(1) / Rational(norm);
    Rational z(z_integer(mu));
    for (int r : mu.parts()) {
        Rational tr(1);
        for (int i = 0; i < r; ++i)
            tr *= t;
        z /= (Rational(1) - tr);
    }
    return z;
}

}  // namespace

Rational z_value(const MultiPartition& lam)
{
    Rational z(1);
    for (const auto& [q, part] : lam.entries())
        z *= z_local(part, q.norm);
    return z;
}

void GlobalExpansion::add(const MultiPartition& lam, const Cyclotomic& c)
{
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

Rational local_pairing(Basis a, const Partition& lambda, Basis b, const Partition& mu, std::uint64_t norm)
{
    if (lambda.size() != mu.size())
        return Rational(0);
    using Key = std::tuple<int, Partition, int, Partition, std::uint64_t>;
    static std::mutex lock;
    static std::map<Key, Rational> memo;
    Key key{static_cast<int>(a), lambda, static_cast<int>(b), mu, norm};
    {
        std::lock_guard<std::mutex> g(lock);
        auto it = memo.find(key);
        if (it != memo.end())
            return it->second;
    }
    int d = lambda.size();
    const auto& ra = transition_to_p(a, d, local_t(a, norm))[partition_index(lambda)];
    const auto& rb = transition_to_p(b, d, local_t(b, norm))[partition_index(mu)];
    const auto& parts = partitions_of(d);
    Rational s(0);
    for (std::size_t j = 0; j < parts.size(); ++j) {
        if (ra[j] == 0 || rb[j] == 0)
            continue;
        s += ra[j] * rb[j] * z_local(parts[j], norm);
    }
    std::lock_guard<std::mutex> g(lock);
    memo.emplace(key, s);
    return s;
}

Cyclotomic pairing(const GlobalExpansion& a, const GlobalExpansion& b)
{
    Cyclotomic total(0);
    for (const auto& [la, ca] : a.terms)
        for (const auto& [lb, cb] : b.terms) {
            if (la.norm() != lb.norm())
                continue;
            std::set<PrimeKey> keys;
            for (const auto& e : la.entries())
                keys.insert(e.first);
            for (const auto& e : lb.entries())
                keys.insert(e.first);
            Rational v(1);
            for (const auto& q : keys) {
                v *= local_pairing(a.basis, la.at(q), b.basis, lb.at(q), q.norm);
                if (v == 0)
                    break;
            }
            if (v != 0)
                total += ca * cb * v;
        }
    return total;
}

}  // namespace artinsym
