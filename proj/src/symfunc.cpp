#include "artinsym/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace artinsym {

bool depends_on_t(Basis b)
{
    switch (b) {
    case Basis::HallLittlewoodP:
    case Basis::HallLittlewoodQ:
    case Basis::HallLittlewoodPNormalized:
    case Basis::ModifiedHallLittlewood:
        return true;
    default:
        return false;
    }
}

std::string basis_name(Basis b)
{
    switch (b) {
    case Basis::Monomial: return "m";
    case Basis::Homogeneous: return "h";
    case Basis::Elementary: return "e";
    case Basis::PowerSum: return "p";
    case Basis::Schur: return "s";
    case Basis::Forgotten: return "f";
    case Basis::HallLittlewoodP: return "hl_P";
    case Basis::HallLittlewoodQ: return "hl_Q";
    case Basis::HallLittlewoodPNormalized: return "hl_Pn";
    case Basis::ModifiedHallLittlewood: return "hl_mod";
    }
    return "?";
}

Basis parse_basis(const std::string& s)
{
    static const std::map<std::string, Basis> names = {
        {"m", Basis::Monomial},
        {"monomial", Basis::Monomial},
        {"h", Basis::Homogeneous},
        {"homogeneous", Basis::Homogeneous},
        {"e", Basis::Elementary},
        {"elementary", Basis::Elementary},
        {"p", Basis::PowerSum},
        {"powersum", Basis::PowerSum},
        {"s", Basis::Schur},
        {"schur", Basis::Schur},
        {"f", Basis::Forgotten},
        {"forgotten", Basis::Forgotten},
        {"hl_P", Basis::HallLittlewoodP},
        {"P", Basis::HallLittlewoodP},
        {"hl_Q", Basis::HallLittlewoodQ},
        {"Q", Basis::HallLittlewoodQ},
        {"hl_Pn", Basis::HallLittlewoodPNormalized},
        {"hl_mod", Basis::ModifiedHallLittlewood},
        {"hl", Basis::HallLittlewoodPNormalized},
        {"Ht", Basis::ModifiedHallLittlewood},
    };
    auto it = names.find(s);
    if (it == names.end())
        throw std::invalid_argument("unknown basis '" + s + "'");
    return it->second;
}

namespace {

/* ---------------------------------------------------------- matrix helpers */

template <class F>
using Mat = std::vector<std::vector<F>>;

template <class F>
Mat<F> zero_matrix(std::size_t n)
{
    return Mat<F>(n, std::vector<F>(n, F(0)));
}

template <class F>
Mat<F> identity_matrix(std::size_t n)
{
    auto m = zero_matrix<F>(n);
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = F(1);
    return m;
}

template <class F>
Mat<F> mat_mul(const Mat<F>& a, const Mat<F>& b)
{
    std::size_t n = a.size();
    auto c = zero_matrix<F>(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (coeff_is_zero(a[i][k]))
                continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!coeff_is_zero(b[k][j]))
                    c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

/* Gauss-Jordan with partial pivoting on the first nonzero entry */
template <class F>
Mat<F> invert(Mat<F> a)
{
    std::size_t n = a.size();
    auto inv = identity_matrix<F>(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && coeff_is_zero(a[piv][col]))
            ++piv;
        if (piv == n)
            throw DivisionByZero("singular transition matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        F d = a[col][col];
        bool unit = (d == F(1));
        if (!unit) {
            F di = F(1) / d;
            for (std::size_t j = 0; j < n; ++j) {
                if (!coeff_is_zero(a[col][j]))
                    a[col][j] *= di;
                if (!coeff_is_zero(inv[col][j]))
                    inv[col][j] *= di;
            }
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || coeff_is_zero(a[r][col]))
                continue;
            F f = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                if (!coeff_is_zero(a[col][j]))
                    a[r][j] -= f * a[col][j];
                if (!coeff_is_zero(inv[col][j]))
                    inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

FMatrix lift(const RMatrix& m)
{
    FMatrix r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        r[i].reserve(m[i].size());
        for (const auto& x : m[i])
            r[i].emplace_back(x);
    }
    return r;
}

/* ------------------------------------------------------ p-basis expansions */

using PExp = std::map<Partition, Rational>;

PExp pexp_product(const PExp& a, const PExp& b)
{
    PExp r;
    for (const auto& [pa, ca] : a)
        for (const auto& [pb, cb] : b) {
            auto& slot = r[merge(pa, pb)];
            slot += ca * cb;
        }
    for (auto it = r.begin(); it != r.end();)
        it = (it->second == 0) ? r.erase(it) : std::next(it);
    return r;
}

/* h_n (sign = false) or e_n (sign = true) in the p basis */
PExp single_pexp(int n, bool sign)
{
    PExp r;
    for (const auto& mu : partitions_of(n)) {
        Rational c(1);
        c /= Rational(z_integer(mu));
        if (sign)
            c *= epsilon_sign(mu);
        r.emplace(mu, c);
    }
    return r;
}

PExp product_pexp(const Partition& lambda, bool sign)
{
    PExp r{{Partition(), Rational(1)}};
    for (int part : lambda.parts())
        r = pexp_product(r, single_pexp(part, sign));
    return r;
}

/* number of maps from the parts of mu to rows with row sums lambda */
long distribute_count(const std::vector<int>& mu, std::size_t i, std::vector<int>& room)
{
    if (i == mu.size()) {
        for (int r : room)
            if (r != 0)
                return 0;
        return 1;
    }
    long total = 0;
    for (auto& r : room) {
        if (r >= mu[i]) {
            r -= mu[i];
            total += distribute_count(mu, i + 1, room);
            r += mu[i];
        }
    }
    return total;
}

/* ----------------------------------------------- Murnaghan-Nakayama rule */

long mn_character(const Partition& lambda, const Partition& mu);

long mn_uncached(const Partition& lambda, const Partition& mu)
{
    if (mu.empty())
        return lambda.empty() ? 1 : 0;
    int r = mu.parts().back();
    std::vector<int> rest(mu.parts().begin(), mu.parts().end() - 1);
    Partition mu_rest(rest);
    int L = lambda.length();
    std::vector<int> beta(L);
    for (int i = 0; i < L; ++i)
        beta[i] = lambda[i] + (L - 1 - i);
    long total = 0;
    for (int i = 0; i < L; ++i) {
        int b = beta[i] - r;
        if (b < 0 || std::find(beta.begin(), beta.end(), b) != beta.end())
            continue;
        int between = 0;
        for (int j = 0; j < L; ++j)
            if (beta[j] > b && beta[j] < beta[i])
                ++between;
        std::vector<int> nb = beta;
        nb[i] = b;
        std::sort(nb.begin(), nb.end(), std::greater<int>());
        std::vector<int> parts;
        for (int j = 0; j < L; ++j)
            if (nb[j] - (L - 1 - j) > 0)
                parts.push_back(nb[j] - (L - 1 - j));
        long v = mn_character(Partition(parts), mu_rest);
        total += (between % 2 ? -v : v);
    }
    return total;
}

long mn_character(const Partition& lambda, const Partition& mu)
{
    static std::mutex lock;
    static std::map<std::pair<Partition, Partition>, long> memo;
    auto key = std::make_pair(lambda, mu);
    {
        std::lock_guard<std::mutex> g(lock);
        auto it = memo.find(key);
        if (it != memo.end())
            return it->second;
    }
    long v = mn_uncached(lambda, mu);
    std::lock_guard<std::mutex> g(lock);
    memo.emplace(key, v);
    return v;
}

/* ------------------------------------------------ coset antisymmetrization */

using IPoly = std::vector<long long>; /* integer polynomial in t */

void ipoly_add(IPoly& a, const IPoly& b, long long sign)
{
    if (a.size() < b.size())
        a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] += sign * b[i];
}

UniPoly to_unipoly(const IPoly& a)
{
    std::vector<Rational> c;
    c.reserve(a.size());
    for (long long x : a)
        c.emplace_back(static_cast<long>(x));
    return UniPoly(std::move(c));
}

/*
 * Schur expansion of the coset sum defining P_lambda in n variables.
 * With S the stabilizer of lambda (padded to n), the coset sum equals
 * A(x^{lambda + delta_S} G) / Delta where G is the product of
 * (x_i - t x_j) over i < j in different blocks of lambda, delta_S is the
 * staircase inside each block and A is antisymmetrization over S_n.
 */
std::map<Partition, UniPoly> coset_schur_expansion(const Partition& lambda, int n)
{
    if (lambda.length() > n)
        throw LengthError("partition " + lambda.str() + " is longer than the number of variables");
    std::vector<int> lam(n, 0);
    for (int i = 0; i < lambda.length(); ++i)
        lam[i] = lambda[i];
    std::vector<int> base(n);
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && lam[j] == lam[i])
            ++j;
        for (int k = i; k < j; ++k)
            base[k] = lam[k] + (j - 1 - k);
        i = j;
    }

    std::map<std::vector<int>, IPoly> g;
    g.emplace(std::vector<int>(n, 0), IPoly{1});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (lam[i] == lam[j])
                continue;
            std::map<std::vector<int>, IPoly> ng;
            for (const auto& [e, c] : g) {
                auto ei = e;
                ++ei[i];
                ipoly_add(ng[ei], c, 1);
                auto ej = e;
                ++ej[j];
                IPoly sh(c.size() + 1, 0);
                std::copy(c.begin(), c.end(), sh.begin() + 1);
                ipoly_add(ng[ej], sh, -1);
            }
            g.swap(ng);
        }

    std::map<Partition, IPoly> acc;
    std::vector<int> alpha(n);
    for (const auto& [e, c] : g) {
        for (int i = 0; i < n; ++i)
            alpha[i] = base[i] + e[i];
        int inv = 0;
        bool repeated = false;
        for (int i = 0; i < n && !repeated; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (alpha[i] == alpha[j]) {
                    repeated = true;
                    break;
                }
                if (alpha[i] < alpha[j])
                    ++inv;
            }
        if (repeated)
            continue;
        std::vector<int> beta = alpha;
        std::sort(beta.begin(), beta.end(), std::greater<int>());
        std::vector<int> parts;
        for (int i = 0; i < n; ++i)
            if (beta[i] - (n - 1 - i) > 0)
                parts.push_back(beta[i] - (n - 1 - i));
        ipoly_add(acc[Partition(parts)], c, inv % 2 ? -1 : 1);
    }
    std::map<Partition, UniPoly> out;
    for (const auto& [mu, c] : acc) {
        UniPoly u = to_unipoly(c);
        if (!u.is_zero())
            out.emplace(mu, std::move(u));
    }
    return out;
}

/* -------------------------------------------------- transition matrices */

RMatrix build_to_p_free(Basis b, int d);
RMatrix build_from_p_free(Basis b, int d);

const RMatrix& free_matrix(Basis b, int d, bool to_p)
{
    static std::mutex lock;
    static std::map<std::tuple<int, int, bool>, std::unique_ptr<RMatrix>> cache;
    auto key = std::make_tuple(static_cast<int>(b), d, to_p);
    {
        std::lock_guard<std::mutex> g(lock);
        auto it = cache.find(key);
        if (it != cache.end())
            return *it->second;
    }
    auto m = std::make_unique<RMatrix>(to_p ? build_to_p_free(b, d) : build_from_p_free(b, d));
    std::lock_guard<std::mutex> g(lock);
    auto [it, inserted] = cache.emplace(key, std::move(m));
    return *it->second;
}

RMatrix build_to_p_free(Basis b, int d)
{
    const auto& parts = partitions_of(d);
    std::size_t n = parts.size();
    RMatrix m = zero_matrix<Rational>(n);
    switch (b) {
    case Basis::PowerSum:
        return identity_matrix<Rational>(n);
    case Basis::Schur:
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                long c = mn_character(parts[i], parts[j]);
                if (c != 0)
                    m[i][j] = Rational(c) / Rational(z_integer(parts[j]));
            }
        return m;
    case Basis::Homogeneous:
    case Basis::Elementary:
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& [mu, c] : product_pexp(parts[i], b == Basis::Elementary))
                m[i][partition_index(mu)] = c;
        return m;
    case Basis::Monomial:
        return invert(free_matrix(Basis::Monomial, d, false));
    case Basis::Forgotten: {
        m = free_matrix(Basis::Monomial, d, true);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (epsilon_sign(parts[j]) < 0)
                    m[i][j] = -m[i][j];
        return m;
    }
    default:
        throw std::logic_error("basis depends on t");
    }
}

RMatrix build_from_p_free(Basis b, int d)
{
    const auto& parts = partitions_of(d);
    std::size_t n = parts.size();
    RMatrix m = zero_matrix<Rational>(n);
    switch (b) {
    case Basis::PowerSum:
        return identity_matrix<Rational>(n);
    case Basis::Schur:
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m[i][j] = mn_character(parts[j], parts[i]);
        return m;
    case Basis::Monomial:
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<int> room = parts[j].parts();
                m[i][j] = distribute_count(parts[i].parts(), 0, room);
            }
        return m;
    default:
        return invert(free_matrix(b, d, true));
    }
}

/* matrix M with row lambda = expansion of the t-basis element in Schur functions */
template <class F, class Eval>
Mat<F> t_basis_to_schur(Basis b, int d, Eval ev)
{
    const auto& parts = partitions_of(d);
    std::size_t n = parts.size();
    auto m = zero_matrix<F>(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& la = parts[i];
        if (b == Basis::ModifiedHallLittlewood) {
            for (std::size_t j = 0; j < n; ++j) {
                UniPoly k = kostka_foulkes_tilde(parts[j], la);
                if (!k.is_zero())
                    m[i][j] = ev(k);
            }
            continue;
        }
        UniPoly scale(1);
        if (b == Basis::HallLittlewoodQ)
            scale = b_poly(la);
        else if (b == Basis::HallLittlewoodPNormalized)
            scale = UniPoly::monomial(1, n_stat(la));
        for (const auto& [mu, c] : hall_littlewood_P_schur(la))
            m[i][partition_index(mu)] = ev(c * scale);
    }
    return m;
}

std::string t_key(const std::optional<Rational>& t)
{
    return t ? to_string(*t) : std::string("*");
}

}  // namespace

long character_value(const Partition& lambda, const Partition& mu)
{
    if (lambda.size() != mu.size())
        throw std::invalid_argument("character_value: sizes differ");
    return mn_character(lambda, mu);
}

namespace {

/* every horizontal strip of k cells added to mu inside lambda, with the psi weight of that strip */
void add_horizontal_strips(const std::vector<int>& mu, const Partition& lambda, int k,
                           const std::function<void(const std::vector<int>&, const UniPoly&)>& emit)
{
    int L = lambda.length();
    std::vector<int> rho(L, 0);
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == L) {
            if (left != 0)
                return;
            /* psi_{rho/mu}: product of 1 - t^{m_j(mu)} over columns j without a new
             * cell whose right neighbour column j+1 has one */
            int width = lambda[0] + 1;
            std::vector<char> col(width + 2, 0);
            for (int r = 0; r < L; ++r)
                for (int c = mu[r] + 1; c <= rho[r]; ++c)
                    col[c] = 1;
            UniPoly w(1);
            for (int j = 1; j <= width; ++j)
                if (!col[j] && col[j + 1]) {
                    int mult = 0;
                    for (int r = 0; r < L; ++r)
                        mult += (mu[r] == j);
                    w *= UniPoly::one_minus_power(mult);
                }
            emit(rho, w);
            return;
        }
        int hi = std::min(lambda[i], i == 0 ? lambda[0] : mu[i - 1]);
        for (int v = mu[i]; v <= hi && v - mu[i] <= left; ++v) {
            rho[i] = v;
            self(self, i + 1, left - (v - mu[i]));
        }
    };
    rec(rec, 0, k);
}

/* coefficient of m_nu in P_lambda: sum over tableaux of shape lambda and weight nu of psi_T */
UniPoly hl_P_monomial_coefficient(const Partition& lambda, const Partition& nu)
{
    std::map<std::vector<int>, UniPoly> layer{{std::vector<int>(lambda.length(), 0), UniPoly(1)}};
    for (int k : nu.parts()) {
        std::map<std::vector<int>, UniPoly> next;
        for (const auto& [mu, c] : layer)
            add_horizontal_strips(mu, lambda, k, [&](const std::vector<int>& rho, const UniPoly& w) {
                next[rho] += c * w;
            });
        layer.swap(next);
    }
    auto it = layer.find(lambda.parts());
    return it == layer.end() ? UniPoly() : it->second;
}

/* inverse Kostka matrix: row nu is m_nu in the Schur basis */
const RMatrix& monomial_to_schur(int d)
{
    static std::mutex lock;
    static std::map<int, std::unique_ptr<RMatrix>> cache;
    {
        std::lock_guard<std::mutex> g(lock);
        auto it = cache.find(d);
        if (it != cache.end())
            return *it->second;
    }
    const auto& parts = partitions_of(d);
    RMatrix k = zero_matrix<Rational>(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = 0; j < parts.size(); ++j)
            if (dominates(parts[i], parts[j]))
                k[i][j] = count_ssyt(parts[i], parts[j].parts());
    auto m = std::make_unique<RMatrix>(invert(k));
    std::lock_guard<std::mutex> g(lock);
    auto [it, inserted] = cache.emplace(d, std::move(m));
    return *it->second;
}

std::map<Partition, UniPoly> hl_P_schur_from_tableaux(const Partition& lambda)
{
    int d = lambda.size();
    const auto& parts = partitions_of(d);
    const auto& m_to_s = monomial_to_schur(d);
    std::vector<UniPoly> acc(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (!dominates(lambda, parts[i]))
            continue;
        UniPoly c = hl_P_monomial_coefficient(lambda, parts[i]);
        if (c.is_zero())
            continue;
        const auto& row = m_to_s[i];
        for (std::size_t j = 0; j < parts.size(); ++j)
            if (row[j] != 0)
                acc[j] += c * row[j];
    }
    std::map<Partition, UniPoly> out;
    for (std::size_t j = 0; j < parts.size(); ++j)
        if (!acc[j].is_zero())
            out.emplace(parts[j], std::move(acc[j]));
    return out;
}

}  // namespace

const std::map<Partition, UniPoly>& hall_littlewood_P_schur(const Partition& lambda)
{
    static std::mutex lock;
    static std::map<Partition, std::unique_ptr<std::map<Partition, UniPoly>>> cache;
    {
        std::lock_guard<std::mutex> g(lock);
        auto it = cache.find(lambda);
        if (it != cache.end())
            return *it->second;
    }
    auto v = std::make_unique<std::map<Partition, UniPoly>>(hl_P_schur_from_tableaux(lambda));
    std::lock_guard<std::mutex> g(lock);
    auto [it, inserted] = cache.emplace(lambda, std::move(v));
    return *it->second;
}

std::map<Partition, UniPoly> hall_littlewood_P_schur_coset(const Partition& lambda, int nvars)
{
    return coset_schur_expansion(lambda, nvars < 0 ? lambda.size() : nvars);
}

UniPoly hall_littlewood_P_monomial(const Partition& lambda, const Partition& nu)
{
    if (lambda.size() != nu.size())
        return UniPoly();
    return hl_P_monomial_coefficient(lambda, nu);
}

const RMatrix& transition_to_p(Basis b, int d, const std::optional<Rational>& t)
{
    if (!depends_on_t(b))
        return free_matrix(b, d, true);
    if (!t)
        throw BasisMismatch("basis " + basis_name(b) + " needs a t specialization");
    static std::mutex lock;
    static std::map<std::tuple<int, int, std::string>, std::unique_ptr<RMatrix>> cache;
    auto key = std::make_tuple(static_cast<int>(b), d, t_key(t));
    {
        std::lock_guard<std::mutex> g(lock);
        auto it = cache.find(key);
        if (it != cache.end())
            return *it->second;
    }
    Rational t0 = *t;
    auto ts = t_basis_to_schur<Rational>(b, d, [&](const UniPoly& u) { return u.eval(t0); });
    auto m = std::make_unique<RMatrix>(mat_mul(ts, free_matrix(Basis::Schur, d, true)));
    std::lock_guard<std::mutex> g(lock);
    auto [it, inserted] = cache.emplace(key, std::move(m));
    return *it->second;
}

const RMatrix& transition_from_p(Basis b, int d, const std::optional<Rational>& t)
{
    if (!depends_on_t(b))
        return free_matrix(b, d, false);
    if (!t)
        throw BasisMismatch("basis " + basis_name(b) + " needs a t specialization");
    static std::mutex lock;
    static std::map<std::tuple<int, int, std::string>, std::unique_ptr<RMatrix>> cache;
    auto key = std::make_tuple(static_cast<int>(b), d, t_key(t));
    {
        std::lock_guard<std::mutex> g(lock);
        auto it = cache.find(key);
        if (it != cache.end())
            return *it->second;
    }
    Rational t0 = *t;
    auto ts = t_basis_to_schur<Rational>(b, d, [&](const UniPoly& u) { return u.eval(t0); });
    auto m = std::make_unique<RMatrix>(mat_mul(free_matrix(Basis::Schur, d, false), invert(ts)));
    std::lock_guard<std::mutex> g(lock);
    auto [it, inserted] = cache.emplace(key, std::move(m));
    return *it->second;
}

const FMatrix& transition_to_p_symbolic(Basis b, int d)
{
    static std::mutex lock;
    static std::map<std::pair<int, int>, std::unique_ptr<FMatrix>> cache;
    auto key = std::make_pair(static_cast<int>(b), d);
    {
        std::lock_guard<std::mutex> g(lock);
        auto it = cache.find(key);
        if (it != cache.end())
            return *it->second;
    }
    std::unique_ptr<FMatrix> m;
    if (!depends_on_t(b)) {
        m = std::make_unique<FMatrix>(lift(free_matrix(b, d, true)));
    } else {
        auto ts = t_basis_to_schur<RatFun>(b, d, [](const UniPoly& u) { return RatFun(u); });
        m = std::make_unique<FMatrix>(mat_mul(ts, lift(free_matrix(Basis::Schur, d, true))));
    }
    std::lock_guard<std::mutex> g(lock);
    auto [it, inserted] = cache.emplace(key, std::move(m));
    return *it->second;
}

const FMatrix& transition_from_p_symbolic(Basis b, int d)
{
    static std::mutex lock;
    static std::map<std::pair<int, int>, std::unique_ptr<FMatrix>> cache;
    auto key = std::make_pair(static_cast<int>(b), d);
    {
        std::lock_guard<std::mutex> g(lock);
        auto it = cache.find(key);
        if (it != cache.end())
            return *it->second;
    }
    std::unique_ptr<FMatrix> m;
    if (!depends_on_t(b)) {
        m = std::make_unique<FMatrix>(lift(free_matrix(b, d, false)));
    } else {
        auto ts = t_basis_to_schur<RatFun>(b, d, [](const UniPoly& u) { return RatFun(u); });
        m = std::make_unique<FMatrix>(mat_mul(lift(free_matrix(Basis::Schur, d, false)), invert(ts)));
    }
    std::lock_guard<std::mutex> g(lock);
    auto [it, inserted] = cache.emplace(key, std::move(m));
    return *it->second;
}

/* ------------------------------------------------------------ conversion */

namespace {

inline Rational mulc(const Rational& c, const Rational& m) { return c * m; }
inline Cyclotomic mulc(const Cyclotomic& c, const Rational& m) { return c * m; }
inline RatFun mulc(const RatFun& c, const RatFun& m) { return c * m; }

template <class C>
struct MatrixFor {
    using type = RMatrix;
    static const type& to_p(Basis b, int d, const std::optional<Rational>& t) { return transition_to_p(b, d, t); }
    static const type& from_p(Basis b, int d, const std::optional<Rational>& t)
    {
        return transition_from_p(b, d, t);
    }
};

template <>
struct MatrixFor<RatFun> {
    using type = FMatrix;
    static const type& to_p(Basis b, int d, const std::optional<Rational>&) { return transition_to_p_symbolic(b, d); }
    static const type& from_p(Basis b, int d, const std::optional<Rational>&)
    {
        return transition_from_p_symbolic(b, d);
    }
};

template <class C>
constexpr bool is_symbolic = std::is_same_v<C, RatFun>;

template <class C>
std::map<int, std::vector<C>> to_p_vectors(const SymExpansion<C>& f)
{
    std::map<int, std::vector<C>> out;
    Basis b = f.basis();
    if (!is_symbolic<C> && depends_on_t(b) && !f.t_value())
        throw BasisMismatch("expansion in " + basis_name(b) + " lacks a t specialization");
    for (const auto& [la, c] : f.terms()) {
        int d = la.size();
        auto& v = out[d];
        if (v.empty())
            v.assign(partitions_of(d).size(), C(0));
        if (b == Basis::PowerSum) {
            v[partition_index(la)] += c;
            continue;
        }
        const auto& row = MatrixFor<C>::to_p(b, d, f.t_value())[partition_index(la)];
        for (std::size_t j = 0; j < row.size(); ++j)
            if (!coeff_is_zero(row[j]))
                v[j] += mulc(c, row[j]);
    }
    return out;
}

template <class C>
SymExpansion<C> from_p_vectors(const std::map<int, std::vector<C>>& vecs, Basis target,
                               const std::optional<Rational>& t)
{
    if (!is_symbolic<C> && depends_on_t(target) && !t)
        throw BasisMismatch("conversion to " + basis_name(target) + " needs a t specialization");
    SymExpansion<C> out(target, is_symbolic<C> ? std::nullopt : t);
    for (const auto& [d, v] : vecs) {
        const auto& parts = partitions_of(d);
        if (target == Basis::PowerSum) {
            for (std::size_t j = 0; j < v.size(); ++j)
                out.add(parts[j], v[j]);
            continue;
        }
        const auto& m = MatrixFor<C>::from_p(target, d, t);
        std::vector<C> w(parts.size(), C(0));
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (coeff_is_zero(v[i]))
                continue;
            for (std::size_t j = 0; j < parts.size(); ++j)
                if (!coeff_is_zero(m[i][j]))
                    w[j] += mulc(v[i], m[i][j]);
        }
        for (std::size_t j = 0; j < parts.size(); ++j)
            out.add(parts[j], w[j]);
    }
    return out;
}

}  // namespace

template <class C>
SymExpansion<C> convert(const SymExpansion<C>& f, Basis target, const std::optional<Rational>& t)
{
    std::optional<Rational> tt = t ? t : f.t_value();
    if (f.basis() == target && (!depends_on_t(target) || is_symbolic<C> || tt == f.t_value())) {
        SymExpansion<C> r = f;
        r.set_t_value(is_symbolic<C> ? std::nullopt : tt);
        return r;
    }
    return from_p_vectors(to_p_vectors(f), target, tt);
}

template <class C>
SymExpansion<C> convert(const SymExpansion<C>& f, Basis target)
{
    return convert(f, target, f.t_value());
}

template <class C>
SymExpansion<C> multiply(const SymExpansion<C>& f, const SymExpansion<C>& g, int max_degree)
{
    auto a = convert(f, Basis::PowerSum);
    auto b = convert(g, Basis::PowerSum);
    SymExpansion<C> prod(Basis::PowerSum);
    for (const auto& [pa, ca] : a.terms())
        for (const auto& [pb, cb] : b.terms()) {
            if (max_degree >= 0 && pa.size() + pb.size() > max_degree)
                continue;
            prod.add(merge(pa, pb), ca * cb);
        }
    return convert(prod, f.basis(), f.t_value());
}

template <class C>
SymExpansion<C> plethysm_power(const SymExpansion<C>& f, int k, Basis target, const std::optional<Rational>& t_out)
{
    auto a = convert(f, Basis::PowerSum);
    SymExpansion<C> r(Basis::PowerSum);
    for (const auto& [mu, c] : a.terms())
        r.add(mu.scaled(k), c);
    return convert(r, target, t_out);
}

std::map<Partition, RatFun> hl_structure_constants(const Partition& lambda, const Partition& mu)
{
    auto pl = SymExpansion<RatFun>::unit(Basis::HallLittlewoodP, lambda);
    auto pm = SymExpansion<RatFun>::unit(Basis::HallLittlewoodP, mu);
    return multiply(pl, pm).terms();
}

std::map<Partition, Rational> hl_structure_constants(const Partition& lambda, const Partition& mu, const Rational& t)
{
    auto pl = SymExpansion<Rational>::unit(Basis::HallLittlewoodP, lambda, Rational(1), t);
    auto pm = SymExpansion<Rational>::unit(Basis::HallLittlewoodP, mu, Rational(1), t);
    return multiply(pl, pm).terms();
}

SymExpansion<RatFun> modified_hl_schur(const Partition& lambda)
{
    SymExpansion<RatFun> r(Basis::Schur);
    for (const auto& mu : partitions_of(lambda.size()))
        r.add(mu, RatFun(kostka_foulkes_tilde(mu, lambda)));
    return r;
}

SymExpansion<RatFun> modified_hl_plethysm_oracle(const Partition& lambda, int degree_cap)
{
    if (lambda.size() > degree_cap)
        throw DegreeCapExceeded("plethystic oracle is capped at degree " + std::to_string(degree_cap));
    int d = lambda.size();
    const auto& row = transition_to_p_symbolic(Basis::HallLittlewoodQ, d)[partition_index(lambda)];
    const auto& parts = partitions_of(d);
    RatFun tn = RatFun(UniPoly::monomial(1, n_stat(lambda)));
    SymExpansion<RatFun> p(Basis::PowerSum);
    for (std::size_t j = 0; j < parts.size(); ++j) {
        if (row[j].is_zero())
            continue;
        RatFun c = tn * row[j].inverted_variable();
        for (int r : parts[j].parts()) {
            /* 1 / (1 - t^{-r}) = -t^r / (1 - t^r) */
            c *= RatFun(-UniPoly::monomial(1, r), UniPoly::one_minus_power(r));
        }
        p.add(parts[j], c);
    }
    return convert(p, Basis::Schur);
}

RatFun principal_specialization_P(const Partition& lambda)
{
    return RatFun(UniPoly::monomial(1, n_stat(lambda)), b_poly(lambda));
}

SymExpansion<Rational> plethystic_exp_truncated(int degree)
{
    SymExpansion<Rational> r(Basis::Homogeneous);
    for (int m = 0; m <= degree; ++m)
        r.add(m == 0 ? Partition() : Partition{m}, Rational(1));
    return r;
}

RatFun hall_pairing_t(const SymExpansion<RatFun>& f, const SymExpansion<RatFun>& g)
{
    auto a = convert(f, Basis::PowerSum);
    auto b = convert(g, Basis::PowerSum);
    RatFun total;
    for (const auto& [mu, c] : a.terms()) {
        auto it = b.terms().find(mu);
        if (it == b.terms().end())
            continue;
        UniPoly den(1);
        for (int r : mu.parts())
            den *= UniPoly::one_minus_power(r);
        total += c * it->second * RatFun(UniPoly(Rational(z_integer(mu))), den);
    }
    return total;
}

template <class C>
C hall_pairing(const SymExpansion<C>& f, const SymExpansion<C>& g)
{
    auto a = convert(f, Basis::PowerSum);
    auto b = convert(g, Basis::PowerSum);
    C total(0);
    for (const auto& [mu, c] : a.terms()) {
        auto it = b.terms().find(mu);
        if (it == b.terms().end())
            continue;
        C x = c * it->second;
        x *= C(Rational(z_integer(mu)));
        total += x;
    }
    return total;
}

template <>
SymExpansion<RatFun> to_symbolic(const SymExpansion<Rational>& f)
{
    if (depends_on_t(f.basis()))
        throw BasisMismatch("cannot lift a t-specialized expansion to symbolic t");
    SymExpansion<RatFun> r(f.basis());
    for (const auto& [p, c] : f.terms())
        r.add(p, RatFun(c));
    return r;
}

template <>
SymExpansion<RatFun> to_symbolic(const SymExpansion<RatFun>& f)
{
    return f;
}

/* ----------------------------------------------- finite variable sets */

MultiPoly<Rational> schur_polynomial(const Partition& mu, int nvars)
{
    MultiPoly<Rational> out;
    if (mu.length() > nvars)
        return out;
    /* strip off the cells holding the largest letter, one letter at a time */
    std::vector<int> exps(nvars, 0);
    auto rec = [&](auto&& self, std::vector<int> shape, int letter) -> void {
        if (letter == 0) {
            for (int x : shape)
                if (x != 0)
                    return;
            out[exps] += 1;
            return;
        }
        /* remove a horizontal strip: new row i in [shape[i+1], shape[i]] */
        int L = static_cast<int>(shape.size());
        if (L > letter) {
            for (int i = letter; i < L; ++i)
                if (shape[i] != 0)
                    return;
        }
        std::vector<int> nu(L, 0);
        auto choose = [&](auto&& ch, int i, int removed) -> void {
            if (i == L) {
                exps[letter - 1] = removed;
                self(self, nu, letter - 1);
                return;
            }
            int hi = shape[i];
            int lo = i + 1 < L ? shape[i + 1] : 0;
            for (int v = lo; v <= hi; ++v) {
                nu[i] = v;
                ch(ch, i + 1, removed + hi - v);
            }
        };
        choose(choose, 0, 0);
        exps[letter - 1] = 0;
    };
    rec(rec, mu.parts(), nvars);
    return out;
}

MultiPoly<UniPoly> hl_P_finite(const Partition& lambda, int nvars)
{
    if (nvars < 1 || lambda.length() > nvars)
        throw LengthError("hl_P_finite: l(lambda) exceeds the number of variables");
    MultiPoly<UniPoly> out;
    for (const auto& [mu, c] : coset_schur_expansion(lambda, nvars))
        for (const auto& [e, k] : schur_polynomial(mu, nvars))
            out[e] += c * k;
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

MultiPoly<Rational> hl_P_finite(const Partition& lambda, int nvars, const Rational& t)
{
    MultiPoly<Rational> out;
    for (const auto& [e, c] : hl_P_finite(lambda, nvars)) {
        Rational v = c.eval(t);
        if (v != 0)
            out.emplace(e, v);
    }
    return out;
}

Rational hl_P_coset_value(const Partition& lambda, const std::vector<Rational>& x, const Rational& t)
{
    int n = static_cast<int>(x.size());
    if (lambda.length() > n)
        throw LengthError("hl_P_coset_value: l(lambda) exceeds the number of variables");
    std::vector<int> a(n, 0);
    for (int i = 0; i < lambda.length(); ++i)
        a[i] = lambda[i];
    std::sort(a.begin(), a.end());
    Rational total(0);
    do {
        Rational term(1);
        for (int i = 0; i < n; ++i)
            term *= rational_pow(x[i], a[i]);
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l)
                if (a[k] > a[l]) {
                    Rational den = x[k] - x[l];
                    if (den == 0)
                        throw DivisionByZero("hl_P_coset_value needs distinct coordinates");
                    term *= (x[k] - t * x[l]) / den;
                }
        total += term;
    } while (std::next_permutation(a.begin(), a.end()));
    return total;
}

/* --------------------------------------------------------- trace evaluation */

const Cyclotomic& PowerTraceSeq::at(int k) const
{
    if (k < 1 || k > degree())
        throw std::out_of_range("power trace t_" + std::to_string(k) + " not available (have " +
                                std::to_string(degree()) + ")");
    return traces[k - 1];
}

TraceEvaluator::TraceEvaluator(PowerTraceSeq tr) : tr_(std::move(tr)), h_{Cyclotomic(1)}, e_{Cyclotomic(1)} {}

Cyclotomic TraceEvaluator::p(const Partition& mu) const
{
    Cyclotomic r(1);
    for (int k : mu.parts())
        r *= tr_.at(k);
    return r;
}

const Cyclotomic& TraceEvaluator::h(int k)
{
    if (k < 0)
        throw std::invalid_argument("negative degree");
    while (static_cast<int>(h_.size()) <= k) {
        int m = static_cast<int>(h_.size());
        Cyclotomic s(0);
        for (int i = 1; i <= m; ++i)
            s += tr_.at(i) * h_[m - i];
        s *= Rational(1, m);
        h_.push_back(s);
    }
    return h_[k];
}

const Cyclotomic& TraceEvaluator::e(int k)
{
    if (k < 0)
        throw std::invalid_argument("negative degree");
    while (static_cast<int>(e_.size()) <= k) {
        int m = static_cast<int>(e_.size());
        Cyclotomic s(0);
        for (int i = 1; i <= m; ++i) {
            Cyclotomic term = tr_.at(i) * e_[m - i];
            if (i % 2)
                s += term;
            else
                s -= term;
        }
        s *= Rational(1, m);
        e_.push_back(s);
    }
    return e_[k];
}

Cyclotomic TraceEvaluator::h(const Partition& lambda)
{
    Cyclotomic r(1);
    for (int k : lambda.parts())
        r *= h(k);
    return r;
}

Cyclotomic TraceEvaluator::e(const Partition& lambda)
{
    Cyclotomic r(1);
    for (int k : lambda.parts())
        r *= e(k);
    return r;
}

Cyclotomic TraceEvaluator::s(const Partition& lambda)
{
    auto it = s_memo_.find(lambda);
    if (it != s_memo_.end())
        return it->second;
    /* use whichever of the h or e determinants is smaller */
    Partition conj = lambda.conjugate();
    bool use_e = conj.length() < lambda.length();
    const Partition& shape = use_e ? conj : lambda;
    int L = shape.length();
    std::vector<std::vector<Cyclotomic>> a(L, std::vector<Cyclotomic>(L));
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j) {
            int k = shape[i] - i + j;
            a[i][j] = k < 0 ? Cyclotomic(0) : (use_e ? e(k) : h(k));
        }
    /* expansion along rows, one subset of used columns per state */
    std::vector<Cyclotomic> dp(std::size_t(1) << L, Cyclotomic(0));
    std::vector<bool> live(dp.size(), false);
    dp[0] = Cyclotomic(1);
    live[0] = true;
    for (std::size_t mask = 0; mask < dp.size(); ++mask) {
        if (!live[mask] || dp[mask].is_zero())
            continue;
        int row = __builtin_popcountll(mask);
        if (row == L)
            continue;
        for (int j = 0; j < L; ++j) {
            if (mask & (std::size_t(1) << j) || a[row][j].is_zero())
                continue;
            int above = __builtin_popcountll(mask >> (j + 1));
            Cyclotomic term = dp[mask] * a[row][j];
            std::size_t nm = mask | (std::size_t(1) << j);
            if (above % 2)
                dp[nm] -= term;
            else
                dp[nm] += term;
            live[nm] = true;
        }
    }
    Cyclotomic r = dp.back();
    s_memo_.emplace(lambda, r);
    return r;
}

Cyclotomic TraceEvaluator::m(const Partition& lambda)
{
    const auto& row = transition_to_p(Basis::Monomial, lambda.size())[partition_index(lambda)];
    const auto& parts = partitions_of(lambda.size());
    Cyclotomic r(0);
    for (std::size_t j = 0; j < parts.size(); ++j)
        if (row[j] != 0)
            r += p(parts[j]) * row[j];
    return r;
}

Cyclotomic TraceEvaluator::modified_hl(const Partition& lambda, const Rational& q)
{
    Cyclotomic r(0);
    for (const auto& mu : partitions_of(lambda.size())) {
        Rational k = kostka_foulkes_tilde(mu, lambda).eval(q);
        if (k != 0)
            r += s(mu) * k;
    }
    return r;
}

template <class C>
Cyclotomic eval_at_traces(const SymExpansion<C>& f, const PowerTraceSeq& tr)
{
    if (f.degree() > tr.degree())
        throw std::out_of_range("trace sequence shorter than the expansion degree");
    TraceEvaluator ev(tr);
    Cyclotomic total(0);
    switch (f.basis()) {
    case Basis::PowerSum:
    case Basis::Homogeneous:
    case Basis::Elementary:
    case Basis::Schur:
    case Basis::Monomial:
        for (const auto& [la, c] : f.terms()) {
            Cyclotomic v;
            switch (f.basis()) {
            case Basis::PowerSum: v = ev.p(la); break;
            case Basis::Homogeneous: v = ev.h(la); break;
            case Basis::Elementary: v = ev.e(la); break;
            case Basis::Schur: v = ev.s(la); break;
            default: v = ev.m(la); break;
            }
            total += v * Cyclotomic(c);
        }
        return total;
    case Basis::ModifiedHallLittlewood:
        for (const auto& [la, c] : f.terms())
            total += ev.modified_hl(la, *f.t_value()) * Cyclotomic(c);
        return total;
    default:
        break;
    }
    for (const auto& [la, c] : convert(f, Basis::PowerSum).terms())
        total += ev.p(la) * Cyclotomic(c);
    return total;
}

template SymExpansion<Rational> convert(const SymExpansion<Rational>&, Basis);
template SymExpansion<RatFun> convert(const SymExpansion<RatFun>&, Basis);
template SymExpansion<Cyclotomic> convert(const SymExpansion<Cyclotomic>&, Basis);
template SymExpansion<Rational> convert(const SymExpansion<Rational>&, Basis, const std::optional<Rational>&);
template SymExpansion<RatFun> convert(const SymExpansion<RatFun>&, Basis, const std::optional<Rational>&);
template SymExpansion<Cyclotomic> convert(const SymExpansion<Cyclotomic>&, Basis, const std::optional<Rational>&);
template SymExpansion<Rational> multiply(const SymExpansion<Rational>&, const SymExpansion<Rational>&, int);
template SymExpansion<RatFun> multiply(const SymExpansion<RatFun>&, const SymExpansion<RatFun>&, int);
template SymExpansion<Cyclotomic> multiply(const SymExpansion<Cyclotomic>&, const SymExpansion<Cyclotomic>&, int);
template SymExpansion<Rational> plethysm_power(const SymExpansion<Rational>&, int, Basis,
                                               const std::optional<Rational>&);
template SymExpansion<RatFun> plethysm_power(const SymExpansion<RatFun>&, int, Basis,
                                             const std::optional<Rational>&);
template SymExpansion<Cyclotomic> plethysm_power(const SymExpansion<Cyclotomic>&, int, Basis,
                                                 const std::optional<Rational>&);
template Rational hall_pairing(const SymExpansion<Rational>&, const SymExpansion<Rational>&);
template RatFun hall_pairing(const SymExpansion<RatFun>&, const SymExpansion<RatFun>&);
template Cyclotomic hall_pairing(const SymExpansion<Cyclotomic>&, const SymExpansion<Cyclotomic>&);
template Cyclotomic eval_at_traces(const SymExpansion<Rational>&, const PowerTraceSeq&);
template Cyclotomic eval_at_traces(const SymExpansion<Cyclotomic>&, const PowerTraceSeq&);

}  // namespace artinsym
