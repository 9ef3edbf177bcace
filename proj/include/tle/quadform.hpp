#pragma once

#include "tle/rational.hpp"

#include <json.hpp>

#include <map>
#include <utility>
#include <vector>

namespace tle {

// Forms in the scaled derivatives g_j = lambda^j f^(j)(lambda) of a function f of lambda.
// D = lambda d/dlambda acts by D g_j = j g_j + g_{j+1}.

class LinearForm {
public:
    LinearForm() = default;
    static LinearForm g(std::size_t j);

    const std::vector<Rational>& coeffs() const { return a_; }
    Rational coeff(std::size_t j) const { return j < a_.size() ? a_[j] : Rational(0); }

    LinearForm D() const;
    // (D - c) applied to this form
    LinearForm shifted_D(const Rational& c) const;

    LinearForm& operator+=(const LinearForm& o);
    LinearForm operator+(const LinearForm& o) const;
    LinearForm operator-(const LinearForm& o) const;
    LinearForm operator*(const Rational& c) const;

    long double eval(const std::vector<long double>& g) const;

private:
    void trim();
    std::vector<Rational> a_;
};

// Sum of c_ij g_i g_j over i <= j. A "flux" form carries an implicit factor 1/lambda, so that
// c g_i g_j stands for c lambda^{i+j-1} f^(i) f^(j); a "boundary" form carries none.
class QuadForm {
public:
    using Key = std::pair<std::size_t, std::size_t>;

    static QuadForm product(const LinearForm& a, const LinearForm& b);
    static QuadForm square(std::size_t j, const Rational& c);

    void add(std::size_t i, std::size_t j, const Rational& c);
    Rational coeff(std::size_t i, std::size_t j) const;
    const std::map<Key, Rational>& terms() const { return t_; }
    bool diagonal() const;

    QuadForm& operator+=(const QuadForm& o);
    QuadForm operator+(const QuadForm& o) const;
    QuadForm operator-(const QuadForm& o) const;
    QuadForm operator*(const Rational& c) const;
    bool operator==(const QuadForm& o) const;

    long double eval(const std::vector<long double>& g) const;
    // d/dlambda of a boundary form, given g_0..g_{m+1}
    long double eval_derivative(const std::vector<long double>& g, long double lambda) const;
    std::size_t max_index() const;

    nlohmann::ordered_json to_json() const;

private:
    std::map<Key, Rational> t_;
};

// Flux form Q = canonical + d/dlambda(boundary), with canonical diagonal.
struct Reduction {
    QuadForm canonical;
    QuadForm boundary;
};

Reduction reduce(const QuadForm& flux);

}  // namespace tle
