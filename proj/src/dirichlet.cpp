#include "artinsym/dirichlet.hpp"

#include "artinsym/parallel.hpp"

#include <cmath>
#include <numeric>

namespace artinsym {

namespace {

Rational rpow(const Rational& x, long e)
{
    Rational r(1);
    for (long i = 0; i < e; ++i)
        r *= x;
    return r;
}

/* pairwise summation keeps the rounding independent of the worker count */
std::complex<double> pairwise_sum(const std::vector<std::complex<double>>& v, std::size_t lo, std::size_t hi)
{
    if (hi - lo <= 8) {
        std::complex<double> s = 0;
        for (std::size_t i = lo; i < hi; ++i)
            s += v[i];
        return s;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

std::vector<std::pair<std::uint64_t, int>> factor(std::uint64_t N)
{
    std::vector<std::pair<std::uint64_t, int>> f;
    for (std::uint64_t p = 2; p * p <= N; ++p)
        if (N % p == 0) {
            int a = 0;
            while (N % p == 0) {
                N /= p;
                ++a;
            }
            f.emplace_back(p, a);
        }
    if (N > 1)
        f.emplace_back(N, 1);
    return f;
}

/* local weight of a single-prime multipartition, memoized by a caller-owned map */
template <class F>
Rational local_weight(std::map<std::pair<PrimeKey, Partition>, Rational>& memo, const PrimeKey& q,
                      const Partition& part, F&& compute)
{
    auto key = std::make_pair(q, part);
    auto it = memo.find(key);
    if (it != memo.end())
        return it->second;
    Rational v = compute(MultiPartition({{q, part}}));
    memo.emplace(key, v);
    return v;
}

DirichletSeriesExact weighted_sum(const ArithSeries& series, int max_length,
                                  const std::function<Rational(const MultiPartition&)>& weight)
{
    auto out = DirichletSeriesExact::unit(series.bound);
    out.coeffs[0] = Cyclotomic(0);
    std::map<std::pair<PrimeKey, Partition>, Rational> memo;
    for (const auto& [lam, c] : series.expand(max_length)) {
        if (c.is_zero())
            continue;
        Rational w(1);
        for (const auto& [q, part] : lam.entries())
            w *= local_weight(memo, q, part, weight);
        out.coeffs[lam.norm() - 1] += c * w;
    }
    return out;
}

}  // namespace

DirichletSeriesExact DirichletSeriesExact::unit(std::uint64_t bound)
{
    DirichletSeriesExact d;
    d.bound = bound;
    d.coeffs.assign(bound, Cyclotomic(0));
    if (bound >= 1)
        d.coeffs[0] = Cyclotomic(1);
    return d;
}

bool DirichletSeriesExact::is_multiplicative() const
{
    for (std::uint64_t m = 2; m * m <= bound; ++m)
        for (std::uint64_t n = m + 1; m * n <= bound; ++n)
            if (std::gcd(m, n) == 1 && !(at(m * n) == at(m) * at(n)))
                return false;
    return true;
}

DirichletSeriesExact dirichlet_multiply(const DirichletSeriesExact& a, const DirichletSeriesExact& b)
{
    auto out = DirichletSeriesExact::unit(std::min(a.bound, b.bound));
    out.coeffs[0] = Cyclotomic(0);
    for (std::uint64_t m = 1; m <= out.bound; ++m) {
        if (a.at(m).is_zero())
            continue;
        for (std::uint64_t n = 1; m * n <= out.bound; ++n)
            if (!b.at(n).is_zero())
                out.coeffs[m * n - 1] += a.at(m) * b.at(n);
    }
    return out;
}

DirichletSeriesExact mellin_truncated(const CharacterData& chi, const FieldContext& K, int n, std::uint64_t bound)
{
    auto series = artin_series(chi, K, bound, Basis::HallLittlewoodPNormalized);
    return weighted_sum(series, n, [n](const MultiPartition& lam) { return kappa(lam, n); });
}

DirichletSeriesExact euler_truncated(const CharacterData& chi, const FieldContext& K, int n, std::uint64_t bound)
{
    auto primes = K.primes_up_to(bound);
    std::vector<std::vector<Cyclotomic>> local(primes.size());
    parallel_for(primes.size(), [&](std::size_t i) {
        const auto& q = primes[i];
        int d = max_local_degree(q.key.norm, bound);
        auto tr = galois_datum(chi, K, q, d).power_traces;
        /* union of N^i A for i < n: p_k scales by sum_i N^{ik} */
        Rational N(q.key.norm);
        for (int k = 1; k <= d; ++k) {
            Rational scale(0);
            for (int j = 0; j < n; ++j)
                scale += rpow(rpow(N, k), j);
            tr.traces[k - 1] *= scale;
        }
        /* 1 / prod (1 - a x) from the characteristic polynomial coefficients e_k */
        TraceEvaluator ev(tr);
        std::vector<Cyclotomic> h(d + 1, Cyclotomic(0));
        h[0] = Cyclotomic(1);
        for (int k = 1; k <= d; ++k)
            for (int j = 1; j <= k; ++j) {
                Cyclotomic term = ev.e(j) * h[k - j];
                if (j % 2 == 1)
                    h[k] += term;
                else
                    h[k] -= term;
            }
        local[i] = std::move(h);
    });
    auto out = DirichletSeriesExact::unit(bound);
    for (std::size_t i = 0; i < primes.size(); ++i) {
        std::uint64_t N = primes[i].key.norm;
        auto next = out;
        for (std::uint64_t m = 1; m <= bound; ++m) {
            if (out.at(m).is_zero())
                continue;
            std::uint64_t mk = m;
            for (std::size_t k = 1; k < local[i].size(); ++k) {
                if (mk > bound / N)
                    break;
                mk *= N;
                if (!local[i][k].is_zero())
                    next.coeffs[mk - 1] += out.at(m) * local[i][k];
            }
        }
        out = std::move(next);
    }
    return out;
}

DirichletSeriesExact stable_coefficients(const CharacterData& chi, const FieldContext& K, std::uint64_t bound)
{
    auto series = artin_series(chi, K, bound, Basis::HallLittlewoodPNormalized);
    return weighted_sum(series, -1, [](const MultiPartition& lam) { return gamma(lam); });
}

/* ------------------------------------------------------- theta and modules */

Rational theta(std::uint64_t N)
{
    if (N == 0)
        throw std::invalid_argument("theta needs N >= 1");
    Rational v(1);
    for (const auto& [p, a] : factor(N)) {
        Rational t = Rational(1) / Rational(p), tj(1);
        for (int j = 1; j <= a; ++j) {
            tj *= t;
            v /= (Rational(1) - tj);
        }
    }
    return v;
}

CheckReport theta_recursion_check(std::uint64_t bound)
{
    CheckReport r;
    std::vector<Rational> th(bound + 1), rhs(bound + 1, Rational(0));
    for (std::uint64_t n = 1; n <= bound; ++n)
        th[n] = theta(n);
    for (std::uint64_t d = 1; d <= bound; ++d) {
        Rational term = th[d] / Rational(d);
        for (std::uint64_t n = d; n <= bound; n += d)
            rhs[n] += term;
    }
    for (std::uint64_t n = 1; n <= bound; ++n) {
        ++r.checked;
        if (th[n] != rhs[n]) {
            r.pass = false;
            r.detail = "n=" + std::to_string(n) + ": " + to_string(th[n]) + " vs " + to_string(rhs[n]);
            return r;
        }
    }
    return r;
}

std::uint64_t module_count(std::uint64_t N)
{
    std::uint64_t c = 1;
    for (const auto& [p, a] : factor(N))
        c *= static_cast<std::uint64_t>(partition_count(a));
    return c;
}

std::vector<std::uint64_t> module_count_table(std::uint64_t bound)
{
    std::vector<std::uint32_t> spf(bound + 1, 0);
    for (std::uint64_t i = 2; i <= bound; ++i)
        if (spf[i] == 0)
            for (std::uint64_t j = i; j <= bound; j += i)
                if (spf[j] == 0)
                    spf[j] = static_cast<std::uint32_t>(i);
    std::vector<std::uint64_t> out(bound + 1, 1);
    if (bound >= 1)
        out[0] = 0;
    for (std::uint64_t n = 2; n <= bound; ++n) {
        std::uint64_t m = n, c = 1;
        while (m > 1) {
            std::uint64_t p = spf[m];
            int a = 0;
            while (m % p == 0) {
                m /= p;
                ++a;
            }
            c *= static_cast<std::uint64_t>(partition_count(a));
        }
        out[n] = c;
    }
    return out;
}

/* ----------------------------------------------------------------- numeric */

namespace {

constexpr double kTermCutoff = 1e-20;

/* log of the local factors at s, s+1, ..., s+shifts for every prime of norm <= prime_bound */
std::vector<std::vector<std::complex<double>>> local_logs(const CharacterData& chi, const FieldContext& K,
                                                          std::complex<double> s, std::uint64_t prime_bound,
                                                          int shifts)
{
    if (s.real() <= 1.0)
        throw DomainError("Euler products are evaluated only for Re s > 1");
    auto primes = K.primes_up_to(prime_bound);
    double dim = std::max(1.0, static_cast<double>(chi.degree()));
    std::vector<std::vector<std::complex<double>>> out(primes.size());
    parallel_for(primes.size(), [&](std::size_t i) {
        const auto& q = primes[i];
        double logN = std::log(static_cast<double>(q.key.norm));
        double mag = std::exp(-s.real() * logN);
        int kmax = 1;
        while (kmax < 400 && dim * std::pow(mag, kmax + 1) / (kmax + 1) > kTermCutoff)
            ++kmax;
        auto tr = galois_datum(chi, K, q, kmax).power_traces;
        std::vector<std::complex<double>> t(kmax);
        for (int k = 0; k < kmax; ++k)
            t[k] = tr.traces[k].to_complex();
        std::vector<std::complex<double>> row(shifts + 1);
        for (int j = 0; j <= shifts; ++j) {
            std::complex<double> x = std::exp(-(s + static_cast<double>(j)) * logN), xk = 1, acc = 0;
            for (int k = 1; k <= kmax; ++k) {
                xk *= x;
                if (std::abs(xk) * dim < kTermCutoff)
                    break;
                acc += t[k - 1] * xk / static_cast<double>(k);
            }
            row[j] = acc;
        }
        out[i] = std::move(row);
    });
    return out;
}

/* |log| contribution of integers above P for exponent sigma, dimension dim */
double prime_tail(double dim, double sigma, std::uint64_t P)
{
    return dim * std::pow(static_cast<double>(P), 1.0 - sigma) / (sigma - 1.0);
}

}  // namespace

NumericValue numeric_L(const CharacterData& chi, const FieldContext& K, std::complex<double> s,
                       std::uint64_t prime_bound)
{
    auto logs = local_logs(chi, K, s, prime_bound, 0);
    std::vector<std::complex<double>> v;
    for (const auto& row : logs)
        v.push_back(row[0]);
    NumericValue r;
    r.value = std::exp(pairwise_sum(v, 0, v.size()));
    double tail = prime_tail(chi.degree(), s.real(), prime_bound);
    r.error_bound = std::abs(r.value) * std::expm1(tail);
    return r;
}

NumericValue numeric_L_tilde(const CharacterData& chi, const FieldContext& K, std::complex<double> s,
                             std::uint64_t prime_bound, int shifts)
{
    if (shifts < 0)
        throw std::invalid_argument("negative shift count");
    auto logs = local_logs(chi, K, s, prime_bound, shifts);
    std::vector<std::complex<double>> v;
    for (const auto& row : logs) {
        std::complex<double> acc = 0;
        for (const auto& x : row)
            acc += x;
        v.push_back(acc);
    }
    NumericValue r;
    r.value = std::exp(pairwise_sum(v, 0, v.size()));
    double dim = chi.degree(), sigma = s.real(), tail = 0;
    for (int j = 0; j <= shifts; ++j)
        tail += prime_tail(dim, sigma + j, prime_bound);
    /* omitted shifts j > J: sum_{n >= 2} n^{-x} <= 2^{-x} (1 + 2/(x - 1)) */
    double x = sigma + shifts + 1;
    tail += 2.0 * dim * std::pow(2.0, -x) * (1.0 + 2.0 / (x - 1.0));
    r.error_bound = std::abs(r.value) * std::expm1(tail);
    return r;
}

double functional_equation_gap(const CharacterData& chi, const FieldContext& K, std::complex<double> s,
                               std::uint64_t prime_bound, int shifts)
{
    if (shifts < 1)
        throw std::invalid_argument("matched truncation needs at least one shift");
    auto L = numeric_L(chi, K, s, prime_bound).value;
    auto Lt1 = numeric_L_tilde(chi, K, s + 1.0, prime_bound, shifts - 1).value;
    auto Lt = numeric_L_tilde(chi, K, s, prime_bound, shifts).value;
    return std::abs(L * Lt1 - Lt);
}

namespace {

/* sum_{n < M} n^{-s} from the small end upward is fine here: terms decrease */
double power_sum_desc(double s, long M)
{
    double acc = 0;
    for (long n = M - 1; n >= 1; --n)
        acc += std::pow(static_cast<double>(n), -s);
    return acc;
}

/* Euler-Maclaurin remainder of zeta(s) - sum_{n<M} n^{-s} without the M^{1-s}/(s-1) term */
double em_correction(double s, double M)
{
    double c = std::pow(M, -s) / 2.0;
    c += s * std::pow(M, -s - 1) / 12.0;
    c -= s * (s + 1) * (s + 2) * std::pow(M, -s - 3) / 720.0;
    c += s * (s + 1) * (s + 2) * (s + 3) * (s + 4) * std::pow(M, -s - 5) / 30240.0;
    return c;
}

constexpr long kEulerMaclaurinM = 1000;
constexpr long kPlainM = 100000;

}  // namespace

NumericValue zeta_real(double j)
{
    if (j <= 1.0)
        throw DomainError("zeta_real needs j > 1");
    NumericValue r;
    if (j <= 3.5) {
        double M = kEulerMaclaurinM;
        r.value = power_sum_desc(j, kEulerMaclaurinM) + std::pow(M, 1 - j) / (j - 1) + em_correction(j, M);
        r.error_bound = j * (j + 1) * (j + 2) * (j + 3) * (j + 4) * (j + 5) * (j + 6) * std::pow(M, -j - 7) / 1209600.0 +
                        1e-15;
    } else {
        r.value = power_sum_desc(j, kPlainM + 1);
        r.error_bound = std::pow(static_cast<double>(kPlainM), 1 - j) / (j - 1) + 1e-15;
    }
    return r;
}

NumericValue residue_dtilde(int J)
{
    if (J < 2)
        throw std::invalid_argument("residue_dtilde needs J >= 2");
    double prod = 1, rel_err = 0;
    for (int j = 2; j <= J; ++j) {
        auto z = zeta_real(j);
        prod *= z.value.real();
        rel_err += z.error_bound / z.value.real();
    }
    /* zeta(j) - 1 < 2^{1-j}, so the omitted product is below exp(2^{1-J}) */
    double tail = std::expm1(std::pow(2.0, 1 - J));
    NumericValue r;
    r.value = prod;
    r.error_bound = prod * (rel_err + tail);
    return r;
}

NumericValue residue_extrapolated(int kmax)
{
    auto f = [](double h) {
        double s = 1 + h, M = kEulerMaclaurinM;
        /* (s-1) zeta(s) with the pole term M^{1-s}/(s-1) multiplied through */
        double v = h * (power_sum_desc(s, kEulerMaclaurinM) + em_correction(s, M)) + std::pow(M, -h);
        for (int j = 1; j <= 60; ++j)
            v *= zeta_real(s + j).value.real();
        return v;
    };
    std::vector<std::vector<double>> T(kmax + 1);
    for (int k = 1; k <= kmax; ++k) {
        T[k].push_back(f(std::ldexp(1.0, -k)));
        for (int m = 1; m < k; ++m) {
            double p = std::ldexp(1.0, m);
            T[k].push_back((p * T[k][m - 1] - T[k - 1][m - 1]) / (p - 1));
        }
    }
    NumericValue r;
    r.value = T[kmax].back();
    r.error_bound = kmax >= 2 ? std::abs(T[kmax].back() - T[kmax - 1].back()) : 1.0;
    return r;
}

ConvergenceReport convergence_partial_sums(const FieldContext& K, const Rational& eps, std::uint64_t bound)
{
    if (eps <= 0)
        throw std::invalid_argument("convergence check needs eps > 0");
    ConvergenceReport r;
    double e = eps.get_d();
    std::vector<PrimeKey> keys;
    for (const auto& lp : K.primes_up_to(bound))
        keys.push_back(lp.key);
    std::map<std::pair<PrimeKey, Partition>, Rational> memo;
    double sum = 0, last = 0;
    for (const auto& lam : enumerate_multipartitions(keys, bound)) {
        Rational g(1);
        for (const auto& [q, part] : lam.entries())
            g *= local_weight(memo, q, part, [](const MultiPartition& m) { return gamma(m); });
        sum += g.get_d() / std::pow(static_cast<double>(lam.norm()), 1 + e);
        if (sum < last)
            r.increasing = false;
        last = sum;
    }
    double majorant = 1;
    for (const auto& q : keys) {
        majorant /= (1 - 2 * std::pow(static_cast<double>(q.norm), -1 - e));
        int d = max_local_degree(q.norm, bound);
        Rational t = Rational(1) / Rational(q.norm), expected(1), tj(1);
        for (int a = 1; a <= d; ++a) {
            tj *= t;
            expected /= (Rational(1) - tj);
            Rational total(0);
            for (const auto& part : partitions_of(a))
                total += local_weight(memo, q, part, [](const MultiPartition& m) { return gamma(m); });
            if (total != expected)
                r.local_identity = false;
        }
    }
    r.partial_sum = sum;
    r.majorant = majorant;
    r.bounded = sum <= majorant;
    return r;
}

}  // namespace artinsym
