#include "tle/radical.hpp"

#include "tle/error.hpp"

#include <cstdlib>
#include <string>

namespace tle {

struct RadicalExpr::Node {
    Op op;
    Rational value;
    int exponent = 0;
    std::shared_ptr<const Node> a, b;
};

namespace {

using NodePtr = std::shared_ptr<const RadicalExpr::Node>;

Interval eval_node(const RadicalExpr::Node& n, unsigned bits)
{
    using Op = RadicalExpr::Op;
    switch (n.op) {
    case Op::leaf:
        return Interval(n.value);
    case Op::add:
        return (eval_node(*n.a, bits) + eval_node(*n.b, bits)).round_out(bits);
    case Op::sub:
        return (eval_node(*n.a, bits) - eval_node(*n.b, bits)).round_out(bits);
    case Op::mul:
        return (eval_node(*n.a, bits) * eval_node(*n.b, bits)).round_out(bits);
    case Op::neg:
        return -eval_node(*n.a, bits);
    case Op::div: {
        Interval den = eval_node(*n.b, bits);
        if (den.lo().is_zero() && den.hi().is_zero())
            throw Error(ErrorKind::domain, "domain violation: division by zero");
        if (den.straddles_zero())
            throw NeedsPrecision{};
        return (eval_node(*n.a, bits) / den).round_out(bits);
    }
    case Op::sqrt: {
        Interval x = eval_node(*n.a, bits);
        if (x.negative())
            throw Error(ErrorKind::domain, "domain violation: square root of a negative value");
        if (x.lo().sign() < 0)
            throw NeedsPrecision{};
        return sqrt_out(x, bits);
    }
    case Op::cbrt:
        return cbrt_out(eval_node(*n.a, bits), bits);
    case Op::pow: {
        Interval x = eval_node(*n.a, bits);
        if (n.exponent < 0 && x.straddles_zero()) {
            if (x.is_point())
                throw Error(ErrorKind::domain, "domain violation: zero to a negative power");
            throw NeedsPrecision{};
        }
        return x.pow(n.exponent).round_out(bits);
    }
    }
    throw Error(ErrorKind::domain, "bad expression node");
}

std::string str_node(const RadicalExpr::Node& n)
{
    using Op = RadicalExpr::Op;
    switch (n.op) {
    case Op::leaf:
        return n.value.is_integer() ? n.value.num().get_str() : "(" + n.value.str() + ")";
    case Op::add:
        return "(" + str_node(*n.a) + " + " + str_node(*n.b) + ")";
    case Op::sub:
        return "(" + str_node(*n.a) + " - " + str_node(*n.b) + ")";
    case Op::mul:
        return str_node(*n.a) + "*" + str_node(*n.b);
    case Op::div:
        return str_node(*n.a) + "/" + str_node(*n.b);
    case Op::neg:
        return "-" + str_node(*n.a);
    case Op::sqrt:
        return "sqrt(" + str_node(*n.a) + ")";
    case Op::cbrt:
        return "cbrt(" + str_node(*n.a) + ")";
    case Op::pow:
        return str_node(*n.a) + "^" + std::to_string(n.exponent);
    }
    return "?";
}

NodePtr make(RadicalExpr::Op op, NodePtr a = nullptr, NodePtr b = nullptr, int e = 0)
{
    auto n = std::make_shared<RadicalExpr::Node>();
    n->op = op;
    n->a = std::move(a);
    n->b = std::move(b);
    n->exponent = e;
    return n;
}

}  // namespace

RadicalExpr::RadicalExpr(const Rational& x)
{
    auto n = std::make_shared<Node>();
    n->op = Op::leaf;
    n->value = x;
    node_ = n;
}

RadicalExpr RadicalExpr::sqrt(const RadicalExpr& e) { return RadicalExpr(make(Op::sqrt, e.node_)); }
RadicalExpr RadicalExpr::cbrt(const RadicalExpr& e) { return RadicalExpr(make(Op::cbrt, e.node_)); }
RadicalExpr RadicalExpr::pow(const RadicalExpr& e, int exponent)
{
    return RadicalExpr(make(Op::pow, e.node_, nullptr, exponent));
}

RadicalExpr operator+(const RadicalExpr& a, const RadicalExpr& b)
{
    return RadicalExpr(make(RadicalExpr::Op::add, a.node_, b.node_));
}
RadicalExpr operator-(const RadicalExpr& a, const RadicalExpr& b)
{
    return RadicalExpr(make(RadicalExpr::Op::sub, a.node_, b.node_));
}
RadicalExpr operator*(const RadicalExpr& a, const RadicalExpr& b)
{
    return RadicalExpr(make(RadicalExpr::Op::mul, a.node_, b.node_));
}
RadicalExpr operator/(const RadicalExpr& a, const RadicalExpr& b)
{
    return RadicalExpr(make(RadicalExpr::Op::div, a.node_, b.node_));
}
RadicalExpr RadicalExpr::operator-() const { return RadicalExpr(make(Op::neg, node_)); }

RadicalExpr::Op RadicalExpr::op() const { return node_->op; }
std::string RadicalExpr::str() const { return str_node(*node_); }
Interval RadicalExpr::eval(unsigned bits) const { return eval_node(*node_, bits); }

unsigned default_precision_cap()
{
    if (const char* env = std::getenv("TLE_PRECISION_CAP_BITS")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v >= 64)
            return static_cast<unsigned>(v);
    }
    return 4096;
}

Enclosure enclose_bits(const RadicalExpr& e, const Rational& width, unsigned cap_bits)
{
    if (width.sign() < 0)
        throw Error(ErrorKind::domain, "negative enclosure width");
    for (unsigned bits = 64; bits <= cap_bits; bits *= 2) {
        try {
            Interval v = e.eval(bits);
            if (!(width < v.width()))
                return {v, bits};
        } catch (const NeedsPrecision&) {
        }
    }
    throw Error(ErrorKind::inconclusive, "inconclusive precision: " + e.str() + " at cap " + std::to_string(cap_bits) +
                                             " bits");
}

Interval enclose(const RadicalExpr& e, const Rational& width, unsigned cap_bits)
{
    return enclose_bits(e, width, cap_bits).value;
}

}  // namespace tle
