#pragma once

#include "tle/rational.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace tle {

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs, std::string var = "x");
    Polynomial(const Rational& c) : Polynomial(std::vector<Rational>{c}) {}
    Polynomial(int c) : Polynomial(Rational(c)) {}

    // Coefficients in ascending degree order.
    static Polynomial from_ints(std::initializer_list<long long> ascending, std::string var = "x");
    // Coefficients in descending degree order, the way they are usually printed.
    static Polynomial from_ints_desc(std::initializer_list<long long> descending, std::string var = "x");
    static Polynomial identity(std::string var = "x");
    static Polynomial monomial(const Rational& c, int degree, std::string var = "x");

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const;
    Rational lead() const;
    const std::string& var() const { return var_; }
    Polynomial with_var(std::string var) const;

    Rational operator()(const Rational& x) const;

    Polynomial derivative() const;
    Polynomial compose(const Polynomial& inner) const;
    Polynomial monic() const;
    Polynomial squarefree_part() const;
    Polynomial scaled_argument(const Rational& s) const;  // p(s x)

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator+(Polynomial a, const Rational& b) { return a += Polynomial(b); }
    friend Polynomial operator+(const Rational& a, Polynomial b) { return b += Polynomial(a); }
    friend Polynomial operator-(Polynomial a, const Rational& b) { return a -= Polynomial(b); }
    friend Polynomial operator-(const Rational& a, const Polynomial& b) { return Polynomial(a) -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& b);
    friend Polynomial operator*(const Rational& a, Polynomial b) { return std::move(b) * a; }
    friend Polynomial operator/(Polynomial a, const Rational& b) { return std::move(a) * (Rational(1) / b); }
    friend Polynomial operator+(Polynomial a, long b) { return std::move(a) + Rational(b); }
    friend Polynomial operator+(long a, Polynomial b) { return std::move(b) + Rational(a); }
    friend Polynomial operator-(Polynomial a, long b) { return std::move(a) - Rational(b); }
    friend Polynomial operator-(long a, const Polynomial& b) { return Rational(a) - b; }
    friend Polynomial operator*(Polynomial a, long b) { return std::move(a) * Rational(b); }
    friend Polynomial operator*(long a, Polynomial b) { return std::move(b) * Rational(a); }
    Polynomial operator-() const;
    Polynomial pow(int e) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    std::string str() const;

private:
    void trim();

    std::vector<Rational> c_;
    std::string var_ = "x";
};

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial gcd(Polynomial a, Polynomial b);

}  // namespace tle
