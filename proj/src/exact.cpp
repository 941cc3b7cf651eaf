#include "artinsym/exact.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace artinsym {

std::string to_string(const Rational& q)
{
    return q.get_str();
}

Rational parse_rational(const std::string& s)
{
    Rational q;
    std::string t;
    for (char ch : s)
        if (ch != ' ')
            t += ch;
    if (t.empty() || q.set_str(t, 10) != 0)
        throw std::invalid_argument("not a rational number: '" + s + "'");
    if (q.get_den() == 0)
        throw DivisionByZero("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

Rational rational_pow(const Rational& q, long e)
{
    if (e < 0) {
        if (q == 0)
            throw DivisionByZero("negative power of zero");
        return rational_pow(Rational(q.get_den(), q.get_num()), -e);
    }
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Integer binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer factorial(long n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

int euler_phi(int n)
{
    int r = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0)
                n /= p;
            r -= r / p;
        }
    }
    if (n > 1)
        r -= r / n;
    return r;
}

long lcm_int(long a, long b)
{
    return a / std::gcd(a, b) * b;
}

/* ---------------------------------------------------------------- UniPoly */

UniPoly::UniPoly(const Rational& c)
{
    if (c != 0)
        c_.push_back(c);
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs))
{
    trim();
}

UniPoly UniPoly::monomial(const Rational& c, int degree)
{
    UniPoly p;
    if (c != 0) {
        p.c_.assign(degree + 1, Rational(0));
        p.c_[degree] = c;
    }
    return p;
}

UniPoly UniPoly::one_minus_power(int k)
{
    return UniPoly(1) - monomial(1, k);
}

void UniPoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Rational UniPoly::coeff(int i) const
{
    if (i < 0 || i >= static_cast<int>(c_.size()))
        return 0;
    return c_[i];
}

const Rational& UniPoly::leading() const
{
    if (c_.empty())
        throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
}

int UniPoly::valuation() const
{
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0)
            return static_cast<int>(i);
    return -1;
}

Rational UniPoly::eval(const Rational& t0) const
{
    Rational r = 0;
    for (size_t i = c_.size(); i-- > 0;)
        r = r * t0 + c_[i];
    return r;
}

UniPoly UniPoly::monic() const
{
    if (c_.empty())
        return *this;
    Rational inv = 1 / c_.back();
    UniPoly r = *this;
    for (auto& x : r.c_)
        x *= inv;
    return r;
}

UniPoly UniPoly::shifted(int k) const
{
    if (c_.empty() || k == 0)
        return *this;
    UniPoly r;
    if (k > 0) {
        r.c_.assign(k, Rational(0));
        r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    } else {
        if (-k > valuation())
            throw std::logic_error("negative shift below valuation");
        r.c_.assign(c_.begin() - k, c_.end());
    }
    return r;
}

UniPoly UniPoly::reversed(int n) const
{
    if (degree() > n)
        throw std::logic_error("reversal length smaller than degree");
    std::vector<Rational> r(n + 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        r[n - i] = c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::truncated(int max_degree) const
{
    if (degree() <= max_degree)
        return *this;
    return UniPoly(std::vector<Rational>(c_.begin(), c_.begin() + max_degree + 1));
}

UniPoly& UniPoly::operator+=(const UniPoly& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b)
{
    if (a.c_.empty() || b.c_.empty())
        return UniPoly();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            r[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(r));
}

UniPoly& UniPoly::operator*=(const UniPoly& o)
{
    *this = *this * o;
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c)
{
    if (c == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_)
        x *= c;
    return *this;
}

UniPoly UniPoly::operator-() const
{
    UniPoly r = *this;
    for (auto& x : r.c_)
        x = -x;
    return r;
}

std::string UniPoly::str(const std::string& var) const
{
    if (c_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        Rational a = abs(c_[i]);
        bool neg = c_[i] < 0;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (i == 0) {
            os << to_string(a);
            continue;
        }
        if (a != 1)
            os << to_string(a) << "*";
        os << var;
        if (i > 1)
            os << "^" << i;
    }
    return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b)
{
    if (b.is_zero())
        throw DivisionByZero("polynomial division by zero");
    std::vector<Rational> r = a.coeffs();
    int db = b.degree();
    if (a.degree() < db)
        return {UniPoly(), a};
    std::vector<Rational> q(a.degree() - db + 1, Rational(0));
    Rational inv = 1 / b.leading();
    for (int i = a.degree(); i >= db; --i) {
        if (r[i] == 0)
            continue;
        Rational f = r[i] * inv;
        q[i - db] = f;
        for (int j = 0; j <= db; ++j)
            r[i - db + j] -= f * b.coeffs()[j];
    }
    r.resize(db);
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly gcd(UniPoly a, UniPoly b)
{
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

UniPoly pow(const UniPoly& a, unsigned e)
{
    UniPoly r(1), base = a;
    while (e) {
        if (e & 1)
            r *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return r;
}

UniPoly cyclotomic_polynomial(int n)
{
    if (n < 1)
        throw std::invalid_argument("cyclotomic polynomial needs n >= 1");
    static std::mutex mu;
    static std::map<int, UniPoly> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end())
            return it->second;
    }
    UniPoly r = UniPoly::monomial(1, n) - UniPoly(1);
    for (int d = 1; d < n; ++d)
        if (n % d == 0)
            r = divmod(r, cyclotomic_polynomial(d)).first;
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(n, r);
    return r;
}

/* ----------------------------------------------------------------- RatFun */

RatFun::RatFun(const UniPoly& num, const UniPoly& den) : num_(num), den_(den)
{
    if (den_.is_zero())
        throw DivisionByZero("rational function with zero denominator");
    normalize();
}

void RatFun::normalize()
{
    if (num_.is_zero()) {
        den_ = UniPoly(1);
        return;
    }
    if (!den_.is_constant()) {
        UniPoly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divmod(num_, g).first;
            den_ = divmod(den_, g).first;
        }
    }
    Rational lc = den_.leading();
    if (lc != 1) {
        Rational inv = 1 / lc;
        num_ *= inv;
        den_ *= inv;
    }
}

Rational RatFun::eval(const Rational& t0) const
{
    Rational d = den_.eval(t0);
    if (d == 0)
        throw PoleError("rational function evaluated at a pole t = " + to_string(t0));
    return num_.eval(t0) / d;
}

RatFun RatFun::inverted_variable() const
{
    if (num_.is_zero())
        return *this;
    int dn = num_.degree(), dd = den_.degree();
    UniPoly n = num_.reversed(dn);
    UniPoly d = den_.reversed(dd);
    if (dd > dn)
        n = n.shifted(dd - dn);
    else
        d = d.shifted(dn - dd);
    return RatFun(n, d);
}

RatFun RatFun::pow(long e) const
{
    if (e < 0) {
        if (is_zero())
            throw DivisionByZero("negative power of zero rational function");
        return RatFun(den_, num_).pow(-e);
    }
    RatFun r;
    r.num_ = artinsym::pow(num_, static_cast<unsigned>(e));
    r.den_ = artinsym::pow(den_, static_cast<unsigned>(e));
    r.normalize();
    return r;
}

RatFun& RatFun::operator+=(const RatFun& o)
{
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

RatFun& RatFun::operator-=(const RatFun& o)
{
    return *this += -o;
}

RatFun& RatFun::operator*=(const RatFun& o)
{
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RatFun& RatFun::operator/=(const RatFun& o)
{
    if (o.is_zero())
        throw DivisionByZero("rational function division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

RatFun RatFun::operator-() const
{
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

std::string RatFun::str() const
{
    if (den_ == UniPoly(1))
        return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

/* ------------------------------------------------------------- Cyclotomic */

namespace {

struct SubfieldSolver {
    int d = 0;
    int phi_d = 0;
    std::vector<int> rows;
    std::vector<std::vector<Rational>> inv;      /* phi_d x phi_d */
    std::vector<const std::vector<long>*> cols;  /* embedding of zeta_d^i */
};

struct CycloField {
    int n = 1;
    int phi = 1;
    std::vector<std::vector<long>> pw; /* x^k mod Phi_n for 0 <= k < n */
    std::vector<SubfieldSolver> subfields;
};

std::vector<std::vector<Rational>> invert_small(std::vector<std::vector<Rational>> a)
{
    size_t n = a.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i)
        inv[i][i] = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && a[piv][c] == 0)
            ++piv;
        if (piv == n)
            throw std::logic_error("singular subfield embedding");
        std::swap(a[piv], a[c]);
        std::swap(inv[piv], inv[c]);
        Rational f = 1 / a[c][c];
        for (size_t j = 0; j < n; ++j) {
            a[c][j] *= f;
            inv[c][j] *= f;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0)
                continue;
            Rational g = a[r][c];
            for (size_t j = 0; j < n; ++j) {
                a[r][j] -= g * a[c][j];
                inv[r][j] -= g * inv[c][j];
            }
        }
    }
    return inv;
}

std::unique_ptr<CycloField> build_field(int n)
{
    auto f = std::make_unique<CycloField>();
    f->n = n;
    f->phi = euler_phi(n);
    UniPoly phi_poly = cyclotomic_polynomial(n);
    std::vector<long> phic(f->phi + 1);
    for (int i = 0; i <= f->phi; ++i)
        phic[i] = phi_poly.coeff(i).get_num().get_si();
    std::vector<long> cur(f->phi, 0);
    cur[0] = 1;
    if (f->phi == 1 && n == 1)
        cur[0] = 1;
    for (int k = 0; k < n; ++k) {
        f->pw.push_back(cur);
        /* multiply by x and reduce */
        long top = cur[f->phi - 1];
        for (int i = f->phi - 1; i > 0; --i)
            cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (int i = 0; i < f->phi; ++i)
                cur[i] -= top * phic[i];
    }
    for (int d = 3; d < n; ++d) {
        if (n % d != 0 || d % 4 == 2)
            continue;
        SubfieldSolver s;
        s.d = d;
        s.phi_d = euler_phi(d);
        for (int i = 0; i < s.phi_d; ++i)
            s.cols.push_back(&f->pw[static_cast<size_t>(i) * (n / d)]);
        /* pick phi_d independent rows greedily */
        std::vector<std::vector<Rational>> basis;
        std::vector<int> pivots;
        for (int r = 0; r < f->phi && static_cast<int>(s.rows.size()) < s.phi_d; ++r) {
            std::vector<Rational> v(s.phi_d);
            for (int i = 0; i < s.phi_d; ++i)
                v[i] = (*s.cols[i])[r];
            std::vector<Rational> w = v;
            for (size_t b = 0; b < basis.size(); ++b)
                if (w[pivots[b]] != 0) {
                    Rational g = w[pivots[b]] / basis[b][pivots[b]];
                    for (int i = 0; i < s.phi_d; ++i)
                        w[i] -= g * basis[b][i];
                }
            int p = -1;
            for (int i = 0; i < s.phi_d; ++i)
                if (w[i] != 0) {
                    p = i;
                    break;
                }
            if (p < 0)
                continue;
            basis.push_back(w);
            pivots.push_back(p);
            s.rows.push_back(r);
        }
        std::vector<std::vector<Rational>> m(s.phi_d, std::vector<Rational>(s.phi_d));
        for (int a = 0; a < s.phi_d; ++a)
            for (int i = 0; i < s.phi_d; ++i)
                m[a][i] = (*s.cols[i])[s.rows[a]];
        s.inv = invert_small(m);
        f->subfields.push_back(std::move(s));
    }
    return f;
}

const CycloField& field(int n)
{
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CycloField>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end())
            return *it->second;
    }
    auto built = build_field(n);
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.emplace(n, std::move(built));
    return *it->second;
}

}  // namespace

Cyclotomic Cyclotomic::root_of_unity(int n, long k)
{
    if (n < 1)
        throw std::invalid_argument("root of unity order must be positive");
    return from_powers(n, {{k, Rational(1)}});
}

Cyclotomic Cyclotomic::from_powers(int n, const std::vector<std::pair<long, Rational>>& terms)
{
    const CycloField& f = field(n);
    std::vector<Rational> c(f.phi, Rational(0));
    for (const auto& [k, q] : terms) {
        long r = ((k % n) + n) % n;
        const auto& row = f.pw[r];
        for (int i = 0; i < f.phi; ++i)
            if (row[i] != 0)
                c[i] += q * row[i];
    }
    Cyclotomic z(n, std::move(c));
    z.minimize();
    return z;
}

Cyclotomic Cyclotomic::from_coeffs(int n, std::vector<Rational> coeffs)
{
    std::vector<std::pair<long, Rational>> terms;
    for (size_t k = 0; k < coeffs.size(); ++k)
        if (coeffs[k] != 0)
            terms.emplace_back(static_cast<long>(k), coeffs[k]);
    return from_powers(n, terms);
}

bool Cyclotomic::is_zero() const
{
    return n_ == 1 && c_[0] == 0;
}

Rational Cyclotomic::rational_value() const
{
    if (n_ != 1)
        throw std::domain_error("cyclotomic number is not rational: " + str());
    return c_[0];
}

void Cyclotomic::minimize()
{
    if (n_ == 1)
        return;
    bool rational = true;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) {
            rational = false;
            break;
        }
    if (rational) {
        Rational q = c_[0];
        n_ = 1;
        c_.assign(1, q);
        return;
    }
    const CycloField& f = field(n_);
    for (const auto& s : f.subfields) {
        std::vector<Rational> y(s.phi_d, Rational(0));
        for (int a = 0; a < s.phi_d; ++a)
            for (int b = 0; b < s.phi_d; ++b)
                if (s.inv[a][b] != 0)
                    y[a] += s.inv[a][b] * c_[s.rows[b]];
        bool ok = true;
        for (int r = 0; r < f.phi && ok; ++r) {
            Rational v = 0;
            for (int i = 0; i < s.phi_d; ++i) {
                long e = (*s.cols[i])[r];
                if (e != 0)
                    v += y[i] * e;
            }
            ok = (v == c_[r]);
        }
        if (ok) {
            n_ = s.d;
            c_ = std::move(y);
            return;
        }
    }
}

Cyclotomic Cyclotomic::lifted(int m) const
{
    if (m == n_)
        return *this;
    const CycloField& f = field(m);
    std::vector<Rational> c(f.phi, Rational(0));
    int step = m / n_;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        const auto& row = f.pw[(i * step) % m];
        for (int j = 0; j < f.phi; ++j)
            if (row[j] != 0)
                c[j] += c_[i] * row[j];
    }
    return Cyclotomic(m, std::move(c));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o)
{
    if (n_ == 1 && o.n_ == 1) {
        c_[0] += o.c_[0];
        return *this;
    }
    int m = static_cast<int>(lcm_int(n_, o.n_));
    Cyclotomic a = lifted(m);
    Cyclotomic b = o.lifted(m);
    for (size_t i = 0; i < a.c_.size(); ++i)
        a.c_[i] += b.c_[i];
    a.minimize();
    *this = std::move(a);
    return *this;
}

Cyclotomic Cyclotomic::operator-() const
{
    Cyclotomic r = *this;
    for (auto& x : r.c_)
        x = -x;
    return r;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o)
{
    return *this += -o;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& q)
{
    if (q == 0) {
        n_ = 1;
        c_.assign(1, Rational(0));
        return *this;
    }
    for (auto& x : c_)
        x *= q;
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o)
{
    if (o.n_ == 1)
        return *this *= o.c_[0];
    if (n_ == 1) {
        Rational q = c_[0];
        *this = o;
        return *this *= q;
    }
    int m = static_cast<int>(lcm_int(n_, o.n_));
    Cyclotomic a = lifted(m);
    Cyclotomic b = o.lifted(m);
    const CycloField& f = field(m);
    std::vector<Rational> prod(2 * f.phi - 1, Rational(0));
    for (int i = 0; i < f.phi; ++i) {
        if (a.c_[i] == 0)
            continue;
        for (int j = 0; j < f.phi; ++j)
            if (b.c_[j] != 0)
                prod[i + j] += a.c_[i] * b.c_[j];
    }
    std::vector<Rational> c(f.phi, Rational(0));
    for (size_t k = 0; k < prod.size(); ++k) {
        if (prod[k] == 0)
            continue;
        const auto& row = f.pw[k % m];
        for (int j = 0; j < f.phi; ++j)
            if (row[j] != 0)
                c[j] += prod[k] * row[j];
    }
    *this = Cyclotomic(m, std::move(c));
    minimize();
    return *this;
}

Cyclotomic Cyclotomic::pow(long e) const
{
    if (e < 0)
        return inverse().pow(-e);
    Cyclotomic r(1), base = *this;
    while (e) {
        if (e & 1)
            r *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return r;
}

Cyclotomic Cyclotomic::galois(long a) const
{
    if (n_ == 1)
        return *this;
    long r = ((a % n_) + n_) % n_;
    if (std::gcd(r, static_cast<long>(n_)) != 1)
        throw std::invalid_argument("Galois exponent not coprime to conductor");
    const CycloField& f = field(n_);
    std::vector<Rational> c(f.phi, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        const auto& row = f.pw[(r * static_cast<long>(i)) % n_];
        for (int j = 0; j < f.phi; ++j)
            if (row[j] != 0)
                c[j] += c_[i] * row[j];
    }
    return Cyclotomic(n_, std::move(c));
}

Rational Cyclotomic::norm() const
{
    Cyclotomic r(1);
    for (long a = 1; a < n_ || (n_ == 1 && a == 1); ++a)
        if (std::gcd(a, static_cast<long>(n_)) == 1)
            r *= galois(a);
    return r.rational_value();
}

Cyclotomic Cyclotomic::inverse() const
{
    if (is_zero())
        throw DivisionByZero("inverse of zero cyclotomic number");
    if (n_ == 1)
        return Cyclotomic(1 / c_[0]);
    Cyclotomic r(1);
    for (long a = 2; a < n_; ++a)
        if (std::gcd(a, static_cast<long>(n_)) == 1)
            r *= galois(a);
    Rational nm = (r * *this).rational_value();
    return r * (1 / nm);
}

std::complex<double> Cyclotomic::to_complex() const
{
    std::complex<double> z = 0;
    const double two_pi = 2.0 * std::acos(-1.0);
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0)
            z += c_[i].get_d() * std::polar(1.0, two_pi * static_cast<double>(i) / n_);
    return z;
}

std::string Cyclotomic::json() const
{
    std::string s = "{\"conductor\":" + std::to_string(n_) + ",\"coeffs\":[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i)
            s += ",";
        s += "\"" + to_string(c_[i]) + "\"";
    }
    return s + "]}";
}

Cyclotomic Cyclotomic::parse_json(const std::string& s)
{
    auto j = nlohmann::json::parse(s);
    int n = j.at("conductor").get<int>();
    std::vector<Rational> c;
    for (const auto& x : j.at("coeffs"))
        c.push_back(x.is_string() ? parse_rational(x.get<std::string>()) : Rational(x.get<long>()));
    if (n < 1 || static_cast<int>(c.size()) != euler_phi(n))
        throw std::invalid_argument("malformed cyclotomic number: " + s);
    return from_coeffs(n, std::move(c));
}

std::string Cyclotomic::str() const
{
    if (n_ == 1)
        return to_string(c_[0]);
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        Rational a = abs(c_[i]);
        bool neg = c_[i] < 0;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (i == 0) {
            os << to_string(a);
            continue;
        }
        if (a != 1)
            os << to_string(a) << "*";
        os << "z" << n_;
        if (i > 1)
            os << "^" << i;
    }
    return os.str();
}

}  // namespace artinsym
