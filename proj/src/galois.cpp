#include "artinsym/galois.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace artinsym {

namespace detail {
extern const char* const s3_fixture_json;
}

namespace {

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m)
{
    unsigned __int128 r = 1 % m, x = b % m;
    while (e) {
        if (e & 1)
            r = r * x % m;
        x = x * x % m;
        e >>= 1;
    }
    return static_cast<std::uint64_t>(r);
}

long mod_pos(long a, long m)
{
    long r = a % m;
    return r < 0 ? r + m : r;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::vector<int> sorted_unique(std::vector<int> v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b)
{
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

/* ------------------------------------------------------------ FiniteGroup */

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> mul) : mul_(std::move(mul))
{
    int n = order();
    if (n == 0)
        throw GroupError("empty multiplication table");
    for (const auto& row : mul_) {
        if (static_cast<int>(row.size()) != n)
            throw GroupError("multiplication table is not square");
        std::vector<char> seen(n, 0);
        for (int x : row) {
            if (x < 0 || x >= n || seen[x])
                throw GroupError("multiplication table row is not a permutation");
            seen[x] = 1;
        }
    }
    for (int a = 0; a < n; ++a) {
        if (mul_[0][a] != a || mul_[a][0] != a)
            throw GroupError("element 0 is not the identity");
        std::vector<char> seen(n, 0);
        for (int b = 0; b < n; ++b) {
            int x = mul_[b][a];
            if (seen[x])
                throw GroupError("multiplication table column is not a permutation");
            seen[x] = 1;
        }
    }
    /* associativity: exhaustive for small tables, otherwise on a fixed sample */
    long long budget = 0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (n > 64 && ((a * 7 + b * 13 + c) % 11) != 0)
                    continue;
                if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
                    throw GroupError("multiplication table is not associative");
                if (++budget > 3000000)
                    goto checked;
            }
checked:
    inv_.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (mul_[a][b] == 0)
                inv_[a] = b;
    orders_.assign(n, 1);
    exponent_ = 1;
    for (int a = 0; a < n; ++a) {
        int x = a, k = 1;
        while (x != 0) {
            x = mul_[x][a];
            ++k;
        }
        orders_[a] = (a == 0) ? 1 : k;
        exponent_ = static_cast<int>(lcm_int(exponent_, orders_[a]));
    }
    class_of_.assign(n, -1);
    for (int g = 0; g < n; ++g) {
        if (class_of_[g] >= 0)
            continue;
        std::vector<int> cl;
        for (int x = 0; x < n; ++x)
            cl.push_back(conj(g, x));
        cl = sorted_unique(cl);
        for (int y : cl)
            class_of_[y] = static_cast<int>(classes_.size());
        classes_.push_back(cl);
    }
}

FiniteGroup FiniteGroup::trivial()
{
    return FiniteGroup(std::vector<std::vector<int>>{{0}});
}

FiniteGroup FiniteGroup::cyclic(int n)
{
    if (n < 1)
        throw GroupError("cyclic group of non-positive order");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            t[a][b] = (a + b) % n;
    return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::symmetric3()
{
    const std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            std::array<int, 3> c{perms[a][perms[b][0]], perms[a][perms[b][1]], perms[a][perms[b][2]]};
            t[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
        }
    return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::units_mod(int m, std::vector<int>* residues)
{
    if (m < 1)
        throw GroupError("modulus must be positive");
    std::vector<int> res;
    if (m <= 2) {
        res.push_back(1 % m);
    } else {
        for (int u = 1; u < m; ++u)
            if (std::gcd(u, m) == 1)
                res.push_back(u);
    }
    int n = static_cast<int>(res.size());
    std::vector<int> pos(m, -1);
    for (int i = 0; i < n; ++i)
        pos[res[i]] = i;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            t[a][b] = pos[static_cast<long>(res[a]) * res[b] % m];
    if (residues)
        *residues = res;
    return FiniteGroup(std::move(t));
}

int FiniteGroup::pow(int a, long k) const
{
    long o = orders_[a];
    k %= o;
    if (k < 0)
        k += o;
    int r = 0;
    for (long i = 0; i < k; ++i)
        r = mul_[r][a];
    return r;
}

std::vector<int> FiniteGroup::closure(const std::vector<int>& gens) const
{
    std::vector<char> in(order(), 0);
    std::vector<int> out{0};
    in[0] = 1;
    for (std::size_t i = 0; i < out.size(); ++i)
        for (int g : gens) {
            int y = mul_[out[i]][g];
            if (!in[y]) {
                in[y] = 1;
                out.push_back(y);
            }
        }
    return sorted_unique(out);
}

bool FiniteGroup::is_subgroup(const std::vector<int>& s) const
{
    if (s.empty())
        return false;
    std::vector<char> in(order(), 0);
    for (int x : s) {
        if (x < 0 || x >= order())
            return false;
        in[x] = 1;
    }
    if (!in[0])
        return false;
    for (int a : s)
        for (int b : s)
            if (!in[mul_[a][inv_[b]]])
                return false;
    return true;
}

bool FiniteGroup::normalizes(int g, const std::vector<int>& s) const
{
    return conjugate_set(s, g) == sorted_unique(s);
}

std::vector<int> FiniteGroup::conjugate_set(const std::vector<int>& s, int g) const
{
    std::vector<int> out;
    out.reserve(s.size());
    for (int x : s)
        out.push_back(conj(x, g));
    return sorted_unique(out);
}

Subgroup make_subgroup(const FiniteGroup& G, std::vector<int> elements)
{
    elements = sorted_unique(std::move(elements));
    if (!G.is_subgroup(elements))
        throw GroupError("element list is not a subgroup");
    Subgroup h;
    h.embed = elements;
    h.index.assign(G.order(), -1);
    for (std::size_t i = 0; i < elements.size(); ++i)
        h.index[elements[i]] = static_cast<int>(i);
    std::size_t n = elements.size();
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            t[a][b] = h.index[G.mul(elements[a], elements[b])];
    h.group = std::make_shared<const FiniteGroup>(std::move(t));
    return h;
}

Quotient make_quotient(const FiniteGroup& G, const std::vector<int>& normal)
{
    auto N = sorted_unique(normal);
    if (!G.is_subgroup(N))
        throw GroupError("not a subgroup");
    for (int g = 0; g < G.order(); ++g)
        if (!G.normalizes(g, N))
            throw GroupError("subgroup is not normal");
    Quotient q;
    q.proj.assign(G.order(), -1);
    std::vector<int> reps;
    for (int g = 0; g < G.order(); ++g) {
        if (q.proj[g] >= 0)
            continue;
        for (int n : N)
            q.proj[G.mul(g, n)] = static_cast<int>(reps.size());
        reps.push_back(g);
    }
    std::size_t k = reps.size();
    std::vector<std::vector<int>> t(k, std::vector<int>(k));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            t[a][b] = q.proj[G.mul(reps[a], reps[b])];
    q.group = std::make_shared<const FiniteGroup>(std::move(t));
    return q;
}

/* ------------------------------------------------------------- characters */

int CharacterData::degree() const
{
    Cyclotomic d = dim();
    if (!d.is_rational() || d.rational_value().get_den() != 1 || d.rational_value() < 0)
        throw GroupError("character value at the identity is not a non-negative integer");
    return static_cast<int>(d.rational_value().get_num().get_si());
}

namespace {

CharacterData from_function(const GroupPtr& G, const std::function<Cyclotomic(int)>& f, std::string name)
{
    CharacterData c;
    c.group = G;
    c.name = std::move(name);
    for (const auto& cl : G->classes())
        c.values.push_back(f(cl[0]));
    return c;
}

void require_same_group(const CharacterData& a, const CharacterData& b)
{
    if (!(*a.group == *b.group))
        throw GroupError("characters live on different groups");
}

}  // namespace

CharacterData trivial_character(const GroupPtr& G)
{
    return from_function(G, [](int) { return Cyclotomic(1); }, "trivial");
}

CharacterData regular_character(const GroupPtr& G)
{
    int n = G->order();
    return from_function(G, [n](int g) { return Cyclotomic(g == 0 ? n : 0); }, "regular");
}

CharacterData direct_sum(const CharacterData& a, const CharacterData& b)
{
    require_same_group(a, b);
    CharacterData c = a;
    for (std::size_t i = 0; i < c.values.size(); ++i)
        c.values[i] += b.values[i];
    c.name = a.name + "+" + b.name;
    return c;
}

CharacterData tensor(const CharacterData& a, const CharacterData& b)
{
    require_same_group(a, b);
    CharacterData c = a;
    for (std::size_t i = 0; i < c.values.size(); ++i)
        c.values[i] *= b.values[i];
    c.name = a.name + "*" + b.name;
    return c;
}

CharacterData dual(const CharacterData& a)
{
    CharacterData c = a;
    for (auto& v : c.values)
        v = v.conj();
    c.name = "dual:" + a.name;
    return c;
}

CharacterData multiple(const CharacterData& a, int k)
{
    if (k < 0)
        throw std::invalid_argument("negative multiplicity");
    CharacterData c = a;
    for (auto& v : c.values)
        v *= Rational(k);
    c.name = std::to_string(k) + a.name;
    return c;
}

Cyclotomic inner_product(const CharacterData& a, const CharacterData& b)
{
    require_same_group(a, b);
    Cyclotomic s(0);
    const auto& cls = a.group->classes();
    for (std::size_t i = 0; i < cls.size(); ++i)
        s += a.values[i] * b.values[i].conj() * Rational(static_cast<long>(cls[i].size()));
    return s * Rational(1, a.group->order());
}

CharacterData induce(const CharacterData& chi, const GroupPtr& G, const std::vector<int>& embedding)
{
    const FiniteGroup& H = *chi.group;
    if (static_cast<int>(embedding.size()) != H.order())
        throw GroupError("embedding has the wrong size");
    std::vector<int> back(G->order(), -1);
    for (int h = 0; h < H.order(); ++h) {
        int g = embedding[h];
        if (g < 0 || g >= G->order() || back[g] >= 0)
            throw GroupError("embedding is not injective");
        back[g] = h;
    }
    for (int a = 0; a < H.order(); ++a)
        for (int b = 0; b < H.order(); ++b)
            if (embedding[H.mul(a, b)] != G->mul(embedding[a], embedding[b]))
                throw GroupError("embedding is not a homomorphism");
    return from_function(
        G,
        [&](int g) {
            Cyclotomic s(0);
            for (int x = 0; x < G->order(); ++x) {
                int y = G->conj(g, G->inv(x));
                if (back[y] >= 0)
                    s += chi.at(back[y]);
            }
            return s * Rational(1, H.order());
        },
        "Ind(" + chi.name + ")");
}

CharacterData inflate(const CharacterData& chi, const GroupPtr& G, const std::vector<int>& projection)
{
    const FiniteGroup& Q = *chi.group;
    if (static_cast<int>(projection.size()) != G->order())
        throw GroupError("projection has the wrong size");
    std::vector<char> hit(Q.order(), 0);
    for (int x : projection) {
        if (x < 0 || x >= Q.order())
            throw GroupError("projection leaves the quotient");
        hit[x] = 1;
    }
    if (std::find(hit.begin(), hit.end(), 0) != hit.end())
        throw GroupError("projection is not surjective");
    for (int a = 0; a < G->order(); ++a)
        for (int b = 0; b < G->order(); ++b)
            if (projection[G->mul(a, b)] != Q.mul(projection[a], projection[b]))
                throw GroupError("projection is not a homomorphism");
    return from_function(G, [&](int g) { return chi.at(projection[g]); }, "Inf(" + chi.name + ")");
}

CharacterData restrict_to(const CharacterData& chi, const Subgroup& H)
{
    return from_function(H.group, [&](int h) { return chi.at(H.embed[h]); }, chi.name);
}

std::vector<CharacterData> linear_characters(const GroupPtr& G)
{
    const FiniteGroup& g = *G;
    int n = g.order(), e = g.exponent();
    std::vector<int> gens;
    std::vector<int> span{0};
    for (int x = 1; x < n; ++x)
        if (!std::binary_search(span.begin(), span.end(), x)) {
            gens.push_back(x);
            span = g.closure(gens);
        }
    std::vector<CharacterData> out;
    std::vector<int> assign(gens.size(), 0);
    while (true) {
        std::vector<int> val(n, -1);
        val[0] = 0;
        std::vector<int> queue{0};
        bool ok = true;
        for (std::size_t i = 0; i < queue.size() && ok; ++i)
            for (std::size_t j = 0; j < gens.size(); ++j) {
                int y = g.mul(queue[i], gens[j]);
                int v = (val[queue[i]] + assign[j]) % e;
                if (val[y] < 0) {
                    val[y] = v;
                    queue.push_back(y);
                } else if (val[y] != v) {
                    ok = false;
                    break;
                }
            }
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n; ++b)
                if (val[g.mul(a, b)] != (val[a] + val[b]) % e) {
                    ok = false;
                    break;
                }
        if (ok)
            out.push_back(from_function(
                G, [&](int x) { return Cyclotomic::root_of_unity(e, val[x]); },
                out.empty() ? "trivial" : "lin:" + std::to_string(out.size())));
        std::size_t k = 0;
        while (k < assign.size() && ++assign[k] == e)
            assign[k++] = 0;
        if (k == assign.size())
            break;
    }
    return out;
}

std::vector<CharacterData> irreducible_characters(const GroupPtr& G)
{
    auto lin = linear_characters(G);
    int missing = G->num_classes() - static_cast<int>(lin.size());
    if (missing == 0)
        return lin;
    if (missing != 1)
        throw GroupError("character table needs more than one nonlinear irreducible");
    long rest = G->order() - static_cast<long>(lin.size());
    long d = std::lround(std::sqrt(static_cast<double>(rest)));
    if (d * d != rest)
        throw GroupError("remaining character degree is not an integer");
    CharacterData psi = regular_character(G);
    for (const auto& chi : lin)
        for (std::size_t i = 0; i < psi.values.size(); ++i)
            psi.values[i] -= chi.values[i];
    for (auto& v : psi.values)
        v *= Rational(1, d);
    psi.name = "irr:" + std::to_string(lin.size());
    if (!(inner_product(psi, psi) == Cyclotomic(1)))
        throw GroupError("orthogonality completion did not give an irreducible");
    lin.push_back(psi);
    return lin;
}

Cyclotomic inertia_power_trace(const CharacterData& chi, int sigma, const std::vector<int>& inertia, long k)
{
    const FiniteGroup& g = *chi.group;
    if (!g.normalizes(sigma, inertia))
        throw GroupError("Frobenius does not normalize the inertia group");
    int s = g.pow(sigma, k);
    Cyclotomic total(0);
    for (int h : inertia)
        total += chi.at(g.mul(s, h));
    return total * Rational(1, static_cast<long>(inertia.size()));
}

/* -------------------------------------------------------------- providers */

std::vector<CharacterData> ExtensionProvider::characters() const
{
    return irreducible_characters(group());
}

CharacterData ExtensionProvider::character(const std::string& name) const
{
    auto chars = characters();
    for (const auto& c : chars)
        if (c.name == name)
            return c;
    if (name == "regular")
        return regular_character(group());
    auto colon = name.find(':');
    if (colon != std::string::npos) {
        std::string kind = name.substr(0, colon);
        int k = std::stoi(name.substr(colon + 1));
        if (kind == "lin" || kind == "order") {
            auto lin = linear_characters(group());
            if (kind == "lin" && k >= 0 && k < static_cast<int>(lin.size()))
                return lin[k];
            if (kind == "order")
                for (const auto& c : lin) {
                    int ord = 1;
                    std::vector<Cyclotomic> pw = c.values;
                    auto is_one = [](const std::vector<Cyclotomic>& v) {
                        return std::all_of(v.begin(), v.end(), [](const Cyclotomic& z) { return z == Cyclotomic(1); });
                    };
                    while (!is_one(pw)) {
                        for (std::size_t i = 0; i < pw.size(); ++i)
                            pw[i] *= c.values[i];
                        ++ord;
                    }
                    if (ord == k)
                        return c;
                }
        }
        if (kind == "irr") {
            auto irr = irreducible_characters(group());
            if (k >= 0 && k < static_cast<int>(irr.size()))
                return irr[k];
        }
    }
    std::string avail;
    for (const auto& c : chars)
        avail += (avail.empty() ? "" : ", ") + c.name;
    throw ProviderError("unknown character '" + name + "' for " + this->name() + " (have " + avail +
                        ", regular, lin:k, order:k, irr:k)");
}

RationalProvider::RationalProvider() : g_(std::make_shared<const FiniteGroup>(FiniteGroup::trivial())) {}

SplittingDatum RationalProvider::splitting(std::uint64_t p) const
{
    return SplittingDatum{p, {0}, 0, {1}};
}

QuadraticProvider::QuadraticProvider(long d) : d_(d), g_(std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(2)))
{
    if (d == 0 || d == 1)
        throw ProviderError("quadratic field needs d != 0, 1");
    for (long q = 2; q * q <= std::labs(d); ++q)
        if (d % (q * q) == 0)
            throw ProviderError("quadratic field needs squarefree d");
    disc_ = (mod_pos(d, 4) == 1) ? d : 4 * d;
}

SplittingDatum QuadraticProvider::splitting(std::uint64_t p) const
{
    if (disc_ % static_cast<long>(p) == 0)
        return SplittingDatum{p, {0, 1}, 0, {1}};
    int symbol;
    if (p == 2) {
        long r = mod_pos(disc_, 8);
        symbol = (r == 1) ? 1 : -1;
    } else {
        symbol = powmod(mod_pos(disc_, p), (p - 1) / 2, p) == 1 ? 1 : -1;
    }
    if (symbol == 1)
        return SplittingDatum{p, {0}, 0, {1, 1}};
    return SplittingDatum{p, {0}, 1, {2}};
}

std::vector<CharacterData> QuadraticProvider::characters() const
{
    auto lin = linear_characters(g_);
    lin[1].name = "chi:" + std::to_string(disc_);
    return lin;
}

CyclotomicProvider::CyclotomicProvider(int m) : m_(m)
{
    if (m < 1)
        throw ProviderError("cyclotomic modulus must be positive");
    g_ = std::make_shared<const FiniteGroup>(FiniteGroup::units_mod(m, &residues_));
}

int CyclotomicProvider::element_of(long residue) const
{
    long r = mod_pos(residue, m_);
    auto it = std::lower_bound(residues_.begin(), residues_.end(), r);
    if (it == residues_.end() || *it != r)
        throw ProviderError("residue " + std::to_string(residue) + " is not a unit mod " + std::to_string(m_));
    return static_cast<int>(it - residues_.begin());
}

SplittingDatum CyclotomicProvider::splitting(std::uint64_t p) const
{
    SplittingDatum sd;
    sd.p = p;
    long pp = static_cast<long>(p);
    long mprime = m_, pa = 1;
    while (mprime % pp == 0) {
        mprime /= pp;
        pa *= pp;
    }
    if (pa == 1) {
        sd.inertia = {0};
        sd.frobenius = element_of(pp % m_);
    } else {
        for (std::size_t i = 0; i < residues_.size(); ++i)
            if (residues_[i] % mprime == 1 % mprime)
                sd.inertia.push_back(static_cast<int>(i));
        sd.frobenius = -1;
        for (std::size_t i = 0; i < residues_.size(); ++i)
            if (residues_[i] % mprime == pp % mprime && residues_[i] % pa == 1 % pa) {
                sd.frobenius = static_cast<int>(i);
                break;
            }
        if (sd.frobenius < 0)
            throw ProviderError("no Frobenius lift found");
    }
    auto D = g_->closure([&] {
        auto v = sd.inertia;
        v.push_back(sd.frobenius);
        return v;
    }());
    int f = static_cast<int>(D.size() / sd.inertia.size());
    sd.residue_degrees.assign(g_->order() / D.size(), f);
    return sd;
}

std::vector<CharacterData> CyclotomicProvider::characters() const
{
    auto lin = linear_characters(g_);
    for (std::size_t k = 1; k < lin.size(); ++k) {
        auto& c = lin[k];
        bool real = true;
        for (const auto& v : c.values)
            real = real && v.is_rational();
        if (!real)
            continue;
        /* quadratic character: name it by the discriminant of its field */
        long cond = m_;
        for (long d = 1; d <= m_; ++d) {
            if (m_ % d != 0)
                continue;
            bool trivial_on_kernel = true;
            for (std::size_t i = 0; i < residues_.size() && trivial_on_kernel; ++i)
                if (residues_[i] % d == 1 % d && !(c.values[g_->class_of(static_cast<int>(i))] == Cyclotomic(1)))
                    trivial_on_kernel = false;
            if (trivial_on_kernel) {
                cond = d;
                break;
            }
        }
        bool odd = (c.at(element_of(-1)) == Cyclotomic(-1));
        c.name = "chi:" + std::to_string(odd ? -cond : cond);
    }
    return lin;
}

CubicS3Provider::CubicS3Provider(long a, std::shared_ptr<const TableProvider> ramified)
    : a_(a), g_(std::make_shared<const FiniteGroup>(FiniteGroup::symmetric3())), table_(std::move(ramified))
{
    if (a == 0 || a == 1 || a == -1)
        throw ProviderError("x^3 - a needs a cube-free a other than 0, 1, -1");
    for (long q = 2; q * q * q <= std::labs(a); ++q)
        if (a % (q * q * q) == 0)
            throw ProviderError("x^3 - a needs a cube-free a");
    if (table_ && !(*table_->group() == *g_))
        throw ProviderError("ramification table uses a different labelling of S3");
}

SplittingDatum CubicS3Provider::unramified_splitting(std::uint64_t p) const
{
    long pp = static_cast<long>(p);
    if ((3 * a_) % pp == 0)
        throw ProviderError("prime " + std::to_string(p) + " ramifies in the splitting field of x^3 - " +
                            std::to_string(a_));
    if (p % 3 == 2)
        return SplittingDatum{p, {0}, 1, {2, 2, 2}};
    if (powmod(mod_pos(a_, pp), (p - 1) / 3, p) == 1)
        return SplittingDatum{p, {0}, 0, {1, 1, 1, 1, 1, 1}};
    return SplittingDatum{p, {0}, 4, {3, 3}};
}

SplittingDatum CubicS3Provider::splitting(std::uint64_t p) const
{
    if ((3 * a_) % static_cast<long>(p) != 0)
        return unramified_splitting(p);
    if (table_ && table_->has_entry(p))
        return table_->splitting(p);
    throw ProviderError("ramified prime " + std::to_string(p) + " of x^3 - " + std::to_string(a_) +
                        " has no table entry");
}

std::vector<CharacterData> CubicS3Provider::characters() const
{
    auto irr = irreducible_characters(g_);
    irr[1].name = "sign";
    irr[2].name = "std";
    return irr;
}

int cubic_root_count(long a, std::uint64_t p)
{
    std::uint64_t r = mod_pos(a, static_cast<long>(p));
    int count = 0;
    for (std::uint64_t x = 0; x < p; ++x)
        if (x * x % p * x % p == r)
            ++count;
    return count;
}

namespace {

Cyclotomic parse_cyclotomic_value(const nlohmann::json& v)
{
    if (v.is_number_integer())
        return Cyclotomic(Rational(v.get<long>()));
    if (v.is_string())
        return Cyclotomic(parse_rational(v.get<std::string>()));
    if (v.is_object())
        return Cyclotomic::parse_json(v.dump());
    throw ProviderError("unsupported character value " + v.dump());
}

ProviderPtr make_rule_provider(const std::string& rule)
{
    if (rule.rfind("cubic-s3:", 0) == 0)
        return std::make_shared<CubicS3Provider>(std::stol(rule.substr(9)));
    return make_provider(rule);
}

}  // namespace

std::shared_ptr<TableProvider> TableProvider::from_json(const std::string& text, bool attach_rule)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ProviderError(std::string("splitting table is not valid JSON: ") + e.what());
    }
    auto need = [&](const nlohmann::json& o, const char* key) -> const nlohmann::json& {
        if (!o.contains(key))
            throw ProviderError(std::string("splitting table lacks '") + key + "'");
        return o.at(key);
    };
    std::shared_ptr<TableProvider> t(new TableProvider());
    t->name_ = "table:" + j.value("name", std::string("unnamed"));
    t->rule_ = j.value("unramified_rule", std::string());
    try {
        const auto& grp = need(j, "group");
        auto mul = need(grp, "mul").get<std::vector<std::vector<int>>>();
        if (static_cast<int>(mul.size()) != need(grp, "order").get<int>())
            throw ProviderError("group order does not match the table");
        t->g_ = std::make_shared<const FiniteGroup>(FiniteGroup(std::move(mul)));
        const FiniteGroup& G = *t->g_;

        /* file class order -> computed class index */
        auto classes = need(j, "classes").get<std::vector<std::vector<int>>>();
        if (static_cast<int>(classes.size()) != G.num_classes())
            throw ProviderError("class list does not match the conjugacy classes");
        std::vector<int> remap;
        for (auto cl : classes) {
            cl = sorted_unique(cl);
            if (cl.empty() || cl[0] < 0 || cl.back() >= G.order() || G.classes()[G.class_of(cl[0])] != cl)
                throw ProviderError("class list does not match the conjugacy classes");
            remap.push_back(G.class_of(cl[0]));
        }
        for (const auto& c : need(j, "characters")) {
            CharacterData chi;
            chi.group = t->g_;
            chi.name = need(c, "name").get<std::string>();
            const auto& vals = need(c, "class_values");
            if (vals.size() != classes.size())
                throw ProviderError("character " + chi.name + " has the wrong number of values");
            chi.values.assign(classes.size(), Cyclotomic(0));
            for (std::size_t i = 0; i < vals.size(); ++i)
                chi.values[remap[i]] = parse_cyclotomic_value(vals[i]);
            Cyclotomic norm = inner_product(chi, chi);
            if (!(norm == Cyclotomic(1)))
                throw ProviderError("character " + chi.name + " is not irreducible");
            chi.degree();
            t->chars_.push_back(std::move(chi));
        }
        for (const auto& e : need(j, "primes")) {
            SplittingDatum sd;
            sd.p = need(e, "p").get<std::uint64_t>();
            if (!is_prime(sd.p))
                throw ProviderError("table entry for non-prime " + std::to_string(sd.p));
            if (e.value("norm", sd.p) != sd.p)
                throw ProviderError("table entries describe primes of Q, norm must equal p");
            sd.inertia = sorted_unique(need(e, "inertia").get<std::vector<int>>());
            sd.frobenius = need(e, "frobenius").get<int>();
            sd.residue_degrees = need(e, "residue_degrees").get<std::vector<int>>();
            if (!G.is_subgroup(sd.inertia))
                throw ProviderError("inertia at " + std::to_string(sd.p) + " is not a subgroup");
            if (sd.frobenius < 0 || sd.frobenius >= G.order() || !G.normalizes(sd.frobenius, sd.inertia))
                throw ProviderError("Frobenius at " + std::to_string(sd.p) + " does not normalize inertia");
            auto gens = sd.inertia;
            gens.push_back(sd.frobenius);
            auto D = G.closure(gens);
            int f = static_cast<int>(D.size() / sd.inertia.size());
            int g = static_cast<int>(G.order() / D.size());
            long efg = 0;
            for (int fi : sd.residue_degrees) {
                if (fi != f)
                    throw ProviderError("residue degree at " + std::to_string(sd.p) +
                                        " disagrees with the decomposition group");
                efg += static_cast<long>(fi) * static_cast<long>(sd.inertia.size());
            }
            if (static_cast<int>(sd.residue_degrees.size()) != g || efg != G.order())
                throw ProviderError("sum of e f over primes above " + std::to_string(sd.p) +
                                    " is not the group order");
            t->entries_[sd.p] = sd;
        }
    } catch (const nlohmann::json::exception& e) {
        throw ProviderError(std::string("splitting table schema violation: ") + e.what());
    } catch (const GroupError& e) {
        throw ProviderError(std::string("splitting table group: ") + e.what());
    }
    if (!t->rule_.empty() && attach_rule) {
        t->fallback_ = make_rule_provider(t->rule_);
        if (!(*t->fallback_->group() == *t->g_))
            throw ProviderError("unramified rule uses a different group labelling");
        for (const auto& [p, sd] : t->entries_) {
            if (!sd.unramified())
                continue;
            auto ref = t->fallback_->splitting(p);
            const auto& G = *t->g_;
            if (ref.residue_degrees != sd.residue_degrees || G.class_of(ref.frobenius) != G.class_of(sd.frobenius))
                throw ProviderError("unramified table entry at " + std::to_string(p) +
                                    " disagrees with the rule " + t->rule_);
        }
    }
    return t;
}

std::shared_ptr<TableProvider> TableProvider::from_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ProviderError("cannot open splitting table " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json(ss.str());
}

SplittingDatum TableProvider::splitting(std::uint64_t p) const
{
    auto it = entries_.find(p);
    if (it != entries_.end())
        return it->second;
    if (fallback_)
        return fallback_->splitting(p);
    throw ProviderError("no splitting data for p = " + std::to_string(p) + " in " + name_);
}

std::shared_ptr<const TableProvider> s3_fixture()
{
    static const std::shared_ptr<const TableProvider> fixture = TableProvider::from_json(detail::s3_fixture_json);
    return fixture;
}

FrobeniusOverride::FrobeniusOverride(ProviderPtr base, std::map<std::uint64_t, std::pair<std::vector<int>, int>> choices)
    : base_(std::move(base)), choices_(std::move(choices))
{
}

SplittingDatum FrobeniusOverride::splitting(std::uint64_t p) const
{
    auto sd = base_->splitting(p);
    auto it = choices_.find(p);
    if (it == choices_.end())
        return sd;
    sd.inertia = sorted_unique(it->second.first);
    sd.frobenius = it->second.second;
    const auto& G = *base_->group();
    if (!G.is_subgroup(sd.inertia) || !G.normalizes(sd.frobenius, sd.inertia))
        throw ProviderError("invalid Frobenius override at " + std::to_string(p));
    return sd;
}

QuotientProvider::QuotientProvider(ProviderPtr base, const std::vector<int>& normal)
    : base_(std::move(base)), normal_(sorted_unique(normal)), q_(make_quotient(*base_->group(), normal_))
{
}

std::string QuotientProvider::name() const
{
    std::string s = base_->name() + "/{";
    for (std::size_t i = 0; i < normal_.size(); ++i)
        s += (i ? "," : "") + std::to_string(normal_[i]);
    return s + "}";
}

SplittingDatum QuotientProvider::splitting(std::uint64_t p) const
{
    auto sd = base_->splitting(p);
    SplittingDatum out;
    out.p = p;
    for (int x : sd.inertia)
        out.inertia.push_back(q_.proj[x]);
    out.inertia = sorted_unique(out.inertia);
    out.frobenius = q_.proj[sd.frobenius];
    auto gens = out.inertia;
    gens.push_back(out.frobenius);
    auto D = q_.group->closure(gens);
    out.residue_degrees.assign(q_.group->order() / D.size(), static_cast<int>(D.size() / out.inertia.size()));
    return out;
}

std::vector<std::vector<int>> all_subgroups(const FiniteGroup& G)
{
    /* start from the cyclic subgroups and close under joins */
    std::set<std::vector<int>> found;
    for (int a = 0; a < G.order(); ++a)
        found.insert(G.closure({a}));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> cur(found.begin(), found.end());
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (std::size_t j = i + 1; j < cur.size(); ++j) {
                auto gens = cur[i];
                gens.insert(gens.end(), cur[j].begin(), cur[j].end());
                if (found.insert(G.closure(gens)).second)
                    grew = true;
            }
    }
    std::vector<std::vector<int>> out(found.begin(), found.end());
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return out;
}

bool is_normal(const FiniteGroup& G, const std::vector<int>& s)
{
    if (!G.is_subgroup(s))
        return false;
    for (int g = 0; g < G.order(); ++g)
        if (!G.normalizes(g, s))
            return false;
    return true;
}

ProviderPtr make_provider(const std::string& spec)
{
    auto colon = spec.find(':');
    std::string kind = spec.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    try {
        if (kind == "rational" && arg.empty())
            return std::make_shared<RationalProvider>();
        if (kind == "quadratic")
            return std::make_shared<QuadraticProvider>(std::stol(arg));
        if (kind == "cyclotomic")
            return std::make_shared<CyclotomicProvider>(std::stoi(arg));
        if (kind == "cubic-s3") {
            long a = std::stol(arg);
            return std::make_shared<CubicS3Provider>(a, a == 2 ? s3_fixture() : nullptr);
        }
        if (kind == "table")
            return TableProvider::from_file(arg);
    } catch (const std::logic_error&) {
        throw ProviderError("malformed extension '" + spec + "'");
    }
    throw ProviderError("unknown extension '" + spec +
                        "' (expected rational, quadratic:d, cyclotomic:m, cubic-s3:a or table:path)");
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound)
{
    std::vector<std::uint64_t> out;
    if (bound < 2)
        return out;
    std::vector<char> composite(bound + 1, 0);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i])
            continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i)
            composite[j] = 1;
    }
    return out;
}

std::vector<PrimeKey> provider_rational(std::uint64_t bound)
{
    std::vector<PrimeKey> out;
    for (auto p : primes_up_to(bound))
        out.push_back(PrimeKey::rational_prime(p));
    return out;
}

/* ----------------------------------------------------------- FieldContext */

FieldContext::FieldContext(ProviderPtr provider, std::vector<int> fixing) : provider_(std::move(provider))
{
    const auto& G = *provider_->group();
    if (fixing.empty()) {
        fixing.resize(G.order());
        std::iota(fixing.begin(), fixing.end(), 0);
    }
    fixing_ = sorted_unique(std::move(fixing));
    h_ = make_subgroup(G, fixing_);
    rational_ = static_cast<int>(fixing_.size()) == G.order();
}

std::string FieldContext::name() const
{
    if (rational_)
        return "Q";
    std::string s = provider_->name() + "^{";
    for (std::size_t i = 0; i < fixing_.size(); ++i)
        s += (i ? "," : "") + std::to_string(fixing_[i]);
    return s + "}";
}

const std::vector<LocalPrime>& FieldContext::primes_above(std::uint64_t p) const
{
    {
        std::lock_guard<std::mutex> g(lock_);
        auto it = cache_.find(p);
        if (it != cache_.end())
            return *it->second;
    }
    const auto& G = *provider_->group();
    SplittingDatum sd = provider_->splitting(p);
    auto gens = sd.inertia;
    gens.push_back(sd.frobenius);
    auto D = G.closure(gens);
    int fE = static_cast<int>(D.size() / sd.inertia.size());
    auto out = std::make_unique<std::vector<LocalPrime>>();
    std::vector<char> seen(G.order(), 0);
    for (int g = 0; g < G.order(); ++g) {
        if (seen[g])
            continue;
        LocalPrime lp;
        lp.rep = g;
        for (int h : fixing_)
            for (int d : D)
                lp.coset.push_back(G.mul(G.mul(h, g), d));
        lp.coset = sorted_unique(lp.coset);
        for (int x : lp.coset)
            seen[x] = 1;
        auto Dg = G.conjugate_set(D, g);
        auto Ig = G.conjugate_set(sd.inertia, g);
        int sg = G.conj(sd.frobenius, g);
        lp.decomposition = intersect(fixing_, Dg);
        lp.inertia = intersect(fixing_, Ig);
        int local = static_cast<int>(lp.decomposition.size() / lp.inertia.size());
        lp.residue_degree = fE / local;
        int target = G.pow(sg, lp.residue_degree);
        lp.frobenius = -1;
        for (int h : lp.decomposition)
            if (std::binary_search(Ig.begin(), Ig.end(), G.mul(G.inv(target), h))) {
                lp.frobenius = h;
                break;
            }
        if (lp.frobenius < 0)
            throw ProviderError("could not descend the Frobenius at " + std::to_string(p));
        lp.key.p = p;
        lp.key.rational = rational_;
        lp.key.index = rational_ ? 0 : static_cast<int>(out->size()) + 1;
        lp.key.norm = checked_pow(p, lp.residue_degree, UINT64_MAX);
        out->push_back(std::move(lp));
    }
    std::lock_guard<std::mutex> g(lock_);
    auto [it, inserted] = cache_.emplace(p, std::move(out));
    return *it->second;
}

std::vector<LocalPrime> FieldContext::primes_up_to(std::uint64_t bound) const
{
    std::vector<LocalPrime> out;
    for (auto p : artinsym::primes_up_to(bound))
        for (const auto& lp : primes_above(p))
            if (lp.key.norm <= bound)
                out.push_back(lp);
    std::sort(out.begin(), out.end(), [](const LocalPrime& a, const LocalPrime& b) { return a.key < b.key; });
    return out;
}

const LocalPrime& FieldContext::prime(const PrimeKey& q) const
{
    const auto& v = primes_above(q.p);
    for (const auto& lp : v)
        if (lp.key == q)
            return lp;
    throw ProviderError("unknown prime " + q.label() + " of " + name());
}

const LocalPrime& FieldContext::below(const FieldContext& upper, const PrimeKey& P) const
{
    if (!std::includes(fixing_.begin(), fixing_.end(), upper.fixing_.begin(), upper.fixing_.end()))
        throw ProviderError(upper.name() + " does not contain " + name());
    const LocalPrime& up = upper.prime(P);
    for (const auto& lp : primes_above(P.p))
        if (std::binary_search(lp.coset.begin(), lp.coset.end(), up.rep))
            return lp;
    throw ProviderError("no prime below " + P.label());
}

int FieldContext::relative_degree(const FieldContext& upper, const PrimeKey& P) const
{
    return upper.prime(P).residue_degree / below(upper, P).residue_degree;
}

CharacterData FieldContext::restrict_character(const CharacterData& chi) const
{
    return restrict_to(chi, h_);
}

GaloisDatum galois_datum(const CharacterData& chi, const FieldContext& K, const LocalPrime& q, int degree_bound)
{
    const Subgroup& H = K.galois();
    if (!(*chi.group == *H.group))
        throw GroupError("character is not a character of Gal(E/K) for " + K.name());
    int sigma = H.index[q.frobenius];
    std::vector<int> inertia;
    for (int x : q.inertia)
        inertia.push_back(H.index[x]);
    inertia = sorted_unique(inertia);
    GaloisDatum gd;
    gd.prime = q.key;
    for (int k = 1; k <= degree_bound; ++k)
        gd.power_traces.traces.push_back(inertia_power_trace(chi, sigma, inertia, k));
    gd.invariant_dim = inertia_power_trace(chi, sigma, inertia, H.group->exponent());
    return gd;
}

}  // namespace artinsym
