#pragma once

// Sparse exact multivariate polynomials over the rationals: Laurent in u,
// ordinary in z and x_1, x_2, ...  This is the coefficient ring of the
// algebra (u only) and the value ring of the Markov trace (u, z, x_k).
//
// Canonical form: term map keyed by monomials, no zero coefficients stored,
// monomials ordered by (u_exp, z_exp, x-exponents lexicographically).

#include <complex>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ydn/rational.hpp"

namespace ydn {

using ComplexVal = std::complex<double>;

struct Monomial {
    int u_exp = 0;                // may be negative (Laurent)
    int z_exp = 0;                // >= 0
    std::map<int, int> x_exps;    // index k >= 1 -> exponent > 0

    friend bool operator==(const Monomial& a, const Monomial& b) = default;

    friend bool operator<(const Monomial& a, const Monomial& b) {
        if (a.u_exp != b.u_exp) return a.u_exp < b.u_exp;
        if (a.z_exp != b.z_exp) return a.z_exp < b.z_exp;
        return a.x_exps < b.x_exps;
    }

    Monomial merged(const Monomial& other) const;
};

class Poly {
public:
    Poly() = default;
    explicit Poly(const Rational& c);
    explicit Poly(long long c) : Poly(Rational(c)) {}

    // Variable constructors.
    static Poly u_power(int e);
    static Poly z_var();
    static Poly x_var(int k, int e = 1);
    static Poly term(const Monomial& m, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    friend bool operator==(const Poly& a, const Poly& b) = default;

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& rhs) { return *this = *this * rhs; }

    Poly& scale(const Rational& c);
    Poly pow(unsigned e) const;

    // Remaps every x_k to x_{f(k)}; f(k) == 0 means substituting x_0 = 1.
    Poly remap_x(const std::function<int(int)>& f) const;

    // Numeric evaluation; x[k] supplies the value of x_k (x[0] is ignored,
    // x_0 being the constant 1).  Throws DivisionByZero when u == 0 meets a
    // negative u-power and IndexError when an x-index is out of range.
    ComplexVal eval(ComplexVal u, ComplexVal z,
                    const std::vector<ComplexVal>& x) const;

    // Largest x-index mentioned (0 when none).
    int max_x_index() const;

    std::string to_string() const;

private:
    void add_term(const Monomial& m, const Rational& c);

    std::map<Monomial, Rational> terms_;
};

} // namespace ydn
