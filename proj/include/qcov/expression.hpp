#pragma once

#include "qcov/braid.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcov {

/// Syntax or index error at a character offset of the input.
class ParseError : public std::invalid_argument {
public:
    ParseError(std::size_t pos, const std::string& what)
        : std::invalid_argument("at " + std::to_string(pos + 1) + ": " + what), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

/// The expression evaluates to something outside the requested domain.
class EvalError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Expr {
    enum class Kind { Integer, Q, Pi, Gen, Call, Sum, Product, Neg, Power, Braid, Form };
    Kind kind = Kind::Integer;
    std::size_t pos = 0;
    /// Integer: the digits. Gen: E, F, K, J, Kt, Jt or th. Call: qint, qfact or qbinom.
    std::string name;
    /// Gen E_i/F_i/Kt_i/Jt_i/th_i and Braid: the index, 0-based.
    int index = 0;
    /// Gen: divided power (0 when absent). Power: exponent. Braid: +1 or -1.
    long value = 0;
    /// Gen K{..}/J{..}: coroot coordinates. Call: the integer arguments.
    std::vector<long> ints;
    std::vector<Expr> kids;
    /// Sum: '+' or '-' before each kid (the first is '+' unless the text began with a sign).
    /// Product: '*' or '/' before each kid after the first.
    std::vector<char> ops;
};

Expr parse_expression(const std::string& text);
/// Canonical text: single spaces around binary + and -, none elsewhere, 1-based indices.
std::string print_expression(const Expr& e);
/// Throws ParseError at the first generator or braid index >= rank.
void check_indices(const Expr& e, int rank);

/// The value of an expression: a scalar or an element of U.
struct Value {
    bool scalar = true;
    Scalar c;
    CoverElement x;
};

class Evaluator {
public:
    explicit Evaluator(const CoverAlgebra& u) : u_(u), t_(u) {}
    /// Throws ParseError for out-of-range indices and EvalError for undefined operations.
    Value evaluate(const Expr& e) const;
    Value evaluate(const std::string& text) const { return evaluate(parse_expression(text)); }
    CoverElement element(const Value& v) const;
    std::string to_string(const Value& v) const;

private:
    Value add(const Value& a, const Value& b, int sign) const;
    Value multiply(const Value& a, const Value& b) const;
    Value divide(const Value& a, const Value& b) const;
    Value power(const Value& a, long n) const;
    Value generator(const Expr& e) const;
    HalfElement positive_part(const Value& v) const;

    const CoverAlgebra& u_;
    BraidGroupAction t_;
};

}  // namespace qcov
