#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace artinsym {

using Integer = mpz_class;
using Rational = mpq_class;

struct DivisionByZero : std::domain_error {
    using std::domain_error::domain_error;
};

struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);
Rational rational_pow(const Rational& q, long e);
Integer binomial(long n, long k);
Integer factorial(long n);

/* Dense univariate polynomial over Q in the formal variable t. */
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(const Rational& c);
    UniPoly(long c) : UniPoly(Rational(c)) {}
    UniPoly(int c) : UniPoly(Rational(c)) {}
    explicit UniPoly(std::vector<Rational> coeffs);

    static UniPoly monomial(const Rational& c, int degree);
    static UniPoly variable() { return monomial(1, 1); }
    /* 1 - t^k */
    static UniPoly one_minus_power(int k);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    Rational coeff(int i) const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return c_; }
    int valuation() const;

    Rational eval(const Rational& t0) const;
    UniPoly monic() const;
    UniPoly shifted(int k) const;
    /* t^n f(1/t), requires n >= degree */
    UniPoly reversed(int n) const;
    UniPoly truncated(int max_degree) const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& operator*=(const Rational& c);
    UniPoly operator-() const;

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rational> c_;
};

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly gcd(UniPoly a, UniPoly b);
UniPoly pow(const UniPoly& a, unsigned e);
UniPoly cyclotomic_polynomial(int n);

/* Quotient of polynomials in t, normalized to gcd 1 and a monic denominator. */
class RatFun {
public:
    RatFun() : num_(), den_(1) {}
    RatFun(long c) : num_(c), den_(1) {}
    RatFun(int c) : num_(c), den_(1) {}
    RatFun(const Rational& c) : num_(c), den_(1) {}
    RatFun(const UniPoly& p) : num_(p), den_(1) {}
    RatFun(const UniPoly& num, const UniPoly& den);

    static RatFun variable() { return RatFun(UniPoly::variable()); }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    Rational eval(const Rational& t0) const;
    /* f(1/t) */
    RatFun inverted_variable() const;
    RatFun pow(long e) const;

    RatFun& operator+=(const RatFun& o);
    RatFun& operator-=(const RatFun& o);
    RatFun& operator*=(const RatFun& o);
    RatFun& operator/=(const RatFun& o);
    RatFun operator-() const;

    friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
    friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
    friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
    friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
    friend bool operator==(const RatFun& a, const RatFun& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str() const;

private:
    void normalize();
    UniPoly num_;
    UniPoly den_;
};

/*
 * Element of Q(zeta_N) in the power basis 1, z, ..., z^(phi(N)-1) modulo
 * Phi_N.  The conductor is always the smallest N' | N whose field holds the
 * value, so equal numbers have identical representations.
 */
class Cyclotomic {
public:
    Cyclotomic() : n_(1), c_(1) {}
    Cyclotomic(const Rational& q) : n_(1), c_{q} {}
    Cyclotomic(long q) : Cyclotomic(Rational(q)) {}
    Cyclotomic(int q) : Cyclotomic(Rational(q)) {}

    static Cyclotomic root_of_unity(int n, long k);
    /* sum of c * zeta_n^k over the given (k, c) pairs, any integer k */
    static Cyclotomic from_powers(int n, const std::vector<std::pair<long, Rational>>& terms);
    /* coordinates at conductor n; accepts any length, reduced mod Phi_n */
    static Cyclotomic from_coeffs(int n, std::vector<Rational> coeffs);

    int conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_rational() const { return n_ == 1; }
    Rational rational_value() const;

    Cyclotomic galois(long a) const;
    Cyclotomic conj() const { return galois(-1); }
    Rational norm() const;
    Cyclotomic inverse() const;
    std::complex<double> to_complex() const;

    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Rational& q);
    Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }
    Cyclotomic operator-() const;
    Cyclotomic pow(long e) const;

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Rational& q) { return a *= q; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b)
    {
        return a.n_ == b.n_ && a.c_ == b.c_;
    }

    /* compact JSON {"conductor":N,"coeffs":["p/q",...]} */
    std::string json() const;
    static Cyclotomic parse_json(const std::string& s);
    /* human readable, e.g. "1/2 - z12^3" */
    std::string str() const;

private:
    Cyclotomic(int n, std::vector<Rational> c) : n_(n), c_(std::move(c)) {}
    void minimize();
    Cyclotomic lifted(int m) const;

    int n_;
    std::vector<Rational> c_;
};

int euler_phi(int n);
long lcm_int(long a, long b);

}  // namespace artinsym
