#pragma once

#include "tle/interval.hpp"
#include "tle/rational.hpp"

#include <memory>
#include <string>

namespace tle {

class RadicalExpr {
public:
    enum class Op { leaf, add, sub, mul, div, neg, sqrt, cbrt, pow };

    RadicalExpr(const Rational& x);
    RadicalExpr(int x) : RadicalExpr(Rational(x)) {}

    static RadicalExpr sqrt(const RadicalExpr& e);
    static RadicalExpr cbrt(const RadicalExpr& e);  // real branch, any sign
    static RadicalExpr pow(const RadicalExpr& e, int exponent);

    friend RadicalExpr operator+(const RadicalExpr& a, const RadicalExpr& b);
    friend RadicalExpr operator-(const RadicalExpr& a, const RadicalExpr& b);
    friend RadicalExpr operator*(const RadicalExpr& a, const RadicalExpr& b);
    friend RadicalExpr operator/(const RadicalExpr& a, const RadicalExpr& b);
    RadicalExpr operator-() const;

    Op op() const;
    std::string str() const;

    // One evaluation with every operation rounded outward to the grid 2^-bits.
    // Throws Error(domain) on a certified domain violation and NeedsPrecision when a sign is unresolved.
    Interval eval(unsigned bits) const;

    struct Node;

private:
    explicit RadicalExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

struct NeedsPrecision {};

unsigned default_precision_cap();

struct Enclosure {
    Interval value;
    unsigned bits = 0;
};

// Doubles the working precision from 64 bits until the width target is met; past the cap it
// throws Error(inconclusive).
Enclosure enclose_bits(const RadicalExpr& e, const Rational& width, unsigned cap_bits = default_precision_cap());
Interval enclose(const RadicalExpr& e, const Rational& width, unsigned cap_bits = default_precision_cap());

}  // namespace tle
