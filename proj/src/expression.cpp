#include "qcov/expression.hpp"

#include <cctype>

namespace qcov {

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    Expr parse() {
        Expr e = expr();
        skip();
        if (p_ != s_.size()) fail("unexpected '" + std::string(1, s_[p_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(p_, what); }

    void skip() {
        while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
    }

    bool peek(char c) {
        skip();
        return p_ < s_.size() && s_[p_] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++p_;
        return true;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    bool digit_next() {
        skip();
        return p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]));
    }

    std::string digits() {
        if (!digit_next()) fail("expected a number");
        std::size_t start = p_;
        while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
        return s_.substr(start, p_ - start);
    }

    long small(const std::string& d) {
        if (d.size() > 9) fail("number too large");
        return std::stol(d);
    }

    long signed_int() {
        bool neg = accept('-');
        long v = small(digits());
        return neg ? -v : v;
    }

    int index() {
        std::size_t at = (skip(), p_);
        long v = small(digits());
        if (v < 1) throw ParseError(at, "indices start at 1");
        return static_cast<int>(v - 1);
    }

    Expr expr() {
        Expr first = term();
        if (!peek('+') && !peek('-')) return first;
        Expr sum;
        sum.kind = Expr::Kind::Sum;
        sum.pos = first.pos;
        sum.ops.push_back('+');
        sum.kids.push_back(std::move(first));
        while (peek('+') || peek('-')) {
            sum.ops.push_back(s_[p_++]);
            sum.kids.push_back(term());
        }
        return sum;
    }

    Expr term() {
        Expr first = unary();
        if (!peek('*') && !peek('/')) return first;
        Expr prod;
        prod.kind = Expr::Kind::Product;
        prod.pos = first.pos;
        prod.kids.push_back(std::move(first));
        while (peek('*') || peek('/')) {
            prod.ops.push_back(s_[p_++]);
            prod.kids.push_back(unary());
        }
        return prod;
    }

    Expr unary() {
        skip();
        std::size_t at = p_;
        if (accept('-')) {
            Expr n;
            n.kind = Expr::Kind::Neg;
            n.pos = at;
            n.kids.push_back(unary());
            return n;
        }
        Expr base = primary();
        if (!accept('^')) return base;
        Expr pw;
        pw.kind = Expr::Kind::Power;
        pw.pos = base.pos;
        pw.value = signed_int();
        pw.kids.push_back(std::move(base));
        return pw;
    }

    std::string identifier() {
        std::size_t start = p_;
        while (p_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[p_]))) ++p_;
        return s_.substr(start, p_ - start);
    }

    std::vector<long> int_list(char close) {
        std::vector<long> v;
        if (accept(close)) return v;
        do {
            v.push_back(signed_int());
        } while (accept(','));
        expect(close);
        return v;
    }

    Expr primary() {
        skip();
        Expr e;
        e.pos = p_;
        if (p_ >= s_.size()) fail("unexpected end of input");
        if (accept('(')) {
            Expr inner = expr();
            expect(')');
            return inner;
        }
        if (digit_next()) {
            e.kind = Expr::Kind::Integer;
            e.name = digits();
            return e;
        }
        std::string id = identifier();
        if (id.empty()) fail("unexpected '" + std::string(1, s_[p_]) + "'");
        if (id == "q") {
            e.kind = Expr::Kind::Q;
        } else if (id == "pi") {
            e.kind = Expr::Kind::Pi;
        } else if (id == "E" || id == "F" || id == "th" || id == "Kt" || id == "Jt") {
            e.kind = Expr::Kind::Gen;
            e.name = id;
            if (p_ >= s_.size() || s_[p_] != '_') fail("expected '_' after " + id);
            ++p_;
            e.index = index();
            bool divisible = id == "E" || id == "F" || id == "th";
            if (divisible && p_ + 1 < s_.size() && s_[p_] == '^' && s_[p_ + 1] == '(') {
                p_ += 2;
                e.value = small(digits());
                expect(')');
            }
        } else if (id == "K" || id == "J") {
            e.kind = Expr::Kind::Gen;
            e.name = id;
            if (p_ >= s_.size() || s_[p_] != '{') fail("expected '{' after " + id);
            ++p_;
            e.ints = int_list('}');
        } else if (id == "T") {
            e.kind = Expr::Kind::Braid;
            e.index = index();
            e.value = 1;
            if (p_ + 2 < s_.size() && s_.compare(p_, 3, "^-1") == 0) {
                p_ += 3;
                e.value = -1;
            }
            expect('(');
            e.kids.push_back(expr());
            expect(')');
        } else if (id == "qint" || id == "qfact" || id == "qbinom") {
            e.kind = Expr::Kind::Call;
            e.name = id;
            expect('(');
            e.ints = int_list(')');
            std::size_t want = id == "qbinom" ? 2 : 1;
            if (e.ints.size() != want) throw ParseError(e.pos, id + " takes " + std::to_string(want) + " argument(s)");
            if (id == "qfact" && e.ints[0] < 0) throw ParseError(e.pos, "qfact of a negative integer");
            if (id == "qbinom" && e.ints[1] < 0) throw ParseError(e.pos, "qbinom with negative lower index");
        } else if (id == "form") {
            e.kind = Expr::Kind::Form;
            expect('(');
            e.kids.push_back(expr());
            expect(',');
            e.kids.push_back(expr());
            expect(')');
        } else {
            throw ParseError(e.pos, "unknown symbol '" + id + "'");
        }
        return e;
    }

    const std::string& s_;
    std::size_t p_ = 0;
};

std::string join(const std::vector<long>& v) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(v[k]);
    }
    return out;
}

bool compound(const Expr& e) {
    using K = Expr::Kind;
    return e.kind == K::Sum || e.kind == K::Product || e.kind == K::Neg || e.kind == K::Power;
}

std::string wrap(const Expr& e, bool paren) {
    std::string s = print_expression(e);
    return paren ? "(" + s + ")" : s;
}

}  // namespace

Expr parse_expression(const std::string& text) { return Parser(text).parse(); }

std::string print_expression(const Expr& e) {
    using K = Expr::Kind;
    switch (e.kind) {
        case K::Integer:
            return e.name;
        case K::Q:
            return "q";
        case K::Pi:
            return "pi";
        case K::Gen:
            if (e.name == "K" || e.name == "J") return e.name + "{" + join(e.ints) + "}";
            return e.name + "_" + std::to_string(e.index + 1) +
                   (e.value ? "^(" + std::to_string(e.value) + ")" : "");
        case K::Call:
            return e.name + "(" + join(e.ints) + ")";
        case K::Sum: {
            std::string out;
            for (std::size_t k = 0; k < e.kids.size(); ++k) {
                if (k) out += e.ops[k] == '-' ? " - " : " + ";
                out += wrap(e.kids[k], e.kids[k].kind == K::Sum);
            }
            return out;
        }
        case K::Product: {
            std::string out;
            for (std::size_t k = 0; k < e.kids.size(); ++k) {
                if (k) out += e.ops[k - 1];
                out += wrap(e.kids[k], e.kids[k].kind == K::Sum || e.kids[k].kind == K::Product);
            }
            return out;
        }
        case K::Neg:
            return "-" + wrap(e.kids[0], e.kids[0].kind == K::Sum || e.kids[0].kind == K::Product);
        case K::Power:
            return wrap(e.kids[0], compound(e.kids[0])) + "^" + std::to_string(e.value);
        case K::Braid:
            return "T" + std::to_string(e.index + 1) + (e.value < 0 ? "^-1" : "") + "(" +
                   print_expression(e.kids[0]) + ")";
        case K::Form:
            return "form(" + print_expression(e.kids[0]) + "," + print_expression(e.kids[1]) + ")";
    }
    return "";
}

void check_indices(const Expr& e, int rank) {
    using K = Expr::Kind;
    if (e.kind == K::Gen && (e.name == "K" || e.name == "J")) {
        if (static_cast<int>(e.ints.size()) != rank)
            throw ParseError(e.pos, "coweight has " + std::to_string(e.ints.size()) + " entries, rank is " +
                                        std::to_string(rank));
    } else if ((e.kind == K::Gen || e.kind == K::Braid) && e.index >= rank) {
        throw ParseError(e.pos, "unknown index " + std::to_string(e.index + 1) + " (rank " + std::to_string(rank) + ")");
    }
    for (const Expr& k : e.kids) check_indices(k, rank);
}

CoverElement Evaluator::element(const Value& v) const { return v.scalar ? u_.scalar(v.c) : v.x; }

std::string Evaluator::to_string(const Value& v) const {
    if (v.scalar) return v.c.to_string();
    if (v.x.empty()) return "0";
    if (v.x.size() == 1) {
        const auto& [m, c] = *v.x.begin();
        if (m.f.empty() && m.e.empty() && m.t.is_identity()) return c.to_string();
    }
    return u_.to_string(v.x);
}

Value Evaluator::add(const Value& a, const Value& b, int sign) const {
    if (a.scalar && b.scalar) return {true, sign > 0 ? a.c + b.c : a.c - b.c, {}};
    CoverElement y = element(b);
    return {false, {}, sign > 0 ? element(a) + y : element(a) - y};
}

Value Evaluator::multiply(const Value& a, const Value& b) const {
    if (a.scalar && b.scalar) return {true, a.c * b.c, {}};
    if (a.scalar) return {false, {}, b.x * a.c};
    if (b.scalar) return {false, {}, a.x * b.c};
    return {false, {}, u_.multiply(a.x, b.x)};
}

Value Evaluator::divide(const Value& a, const Value& b) const {
    if (!b.scalar) throw EvalError("division by an algebra element");
    try {
        return multiply(a, {true, b.c.inverse(), {}});
    } catch (const ScalarError&) {
        throw EvalError("division by " + b.c.to_string() + ", which is not a unit");
    }
}

Value Evaluator::power(const Value& a, long n) const {
    if (a.scalar) {
        if (n >= 0) return {true, a.c.pow(n), {}};
        try {
            return {true, a.c.inverse().pow(-n), {}};
        } catch (const ScalarError&) {
            throw EvalError("negative power of " + a.c.to_string() + ", which is not a unit");
        }
    }
    if (n >= 0) return {false, {}, u_.power(a.x, n)};
    if (a.x.size() == 1) {
        const auto& [m, c] = *a.x.begin();
        if (m.f.empty() && m.e.empty() && c.is_unit()) {
            CoverElement inv = u_.torus(m.t.inverse()) * c.inverse();
            return {false, {}, u_.power(inv, -n)};
        }
    }
    throw EvalError("negative powers are defined only for scalars and torus monomials");
}

Value Evaluator::generator(const Expr& e) const {
    long n = e.value ? e.value : 1;
    if (e.name == "E" || e.name == "th") return {false, {}, u_.E(e.index, n)};
    if (e.name == "F") return {false, {}, u_.F(e.index, n)};
    if (e.name == "K") return {false, {}, u_.K(e.ints)};
    if (e.name == "J") return {false, {}, u_.J(e.ints)};
    if (e.name == "Kt") return {false, {}, u_.Ktilde(e.index)};
    return {false, {}, u_.Jtilde(e.index)};
}

HalfElement Evaluator::positive_part(const Value& v) const {
    HalfElement h;
    for (const auto& [m, c] : element(v)) {
        if (!m.f.empty() || !m.t.is_identity())
            throw EvalError("form needs arguments in the span of the E-words");
        h += HalfElement(m.e) * c;
    }
    return h;
}

Value Evaluator::evaluate(const Expr& e) const {
    using K = Expr::Kind;
    switch (e.kind) {
        case K::Integer:
            return {true, Scalar(Integer(e.name)), {}};
        case K::Q:
            return {true, Scalar::q_power(1), {}};
        case K::Pi:
            return {true, Scalar::pi(), {}};
        case K::Gen:
            check_indices(e, u_.rank());
            return generator(e);
        case K::Call:
            if (e.name == "qint") return {true, qint(e.ints[0]), {}};
            if (e.name == "qfact") return {true, qfact(e.ints[0]), {}};
            return {true, qbinom(e.ints[0], e.ints[1]), {}};
        case K::Sum: {
            Value v = evaluate(e.kids[0]);
            for (std::size_t k = 1; k < e.kids.size(); ++k) v = add(v, evaluate(e.kids[k]), e.ops[k] == '-' ? -1 : 1);
            return v;
        }
        case K::Product: {
            Value v = evaluate(e.kids[0]);
            for (std::size_t k = 1; k < e.kids.size(); ++k) {
                Value w = evaluate(e.kids[k]);
                v = e.ops[k - 1] == '/' ? divide(v, w) : multiply(v, w);
            }
            return v;
        }
        case K::Neg: {
            Value v = evaluate(e.kids[0]);
            return v.scalar ? Value{true, -v.c, {}} : Value{false, {}, v.x * Scalar(-1)};
        }
        case K::Power:
            return power(evaluate(e.kids[0]), e.value);
        case K::Braid: {
            check_indices(e, u_.rank());
            Value v = evaluate(e.kids[0]);
            if (v.scalar) return v;
            return {false, {}, t_.apply(e.index, static_cast<int>(e.value), v.x)};
        }
        case K::Form:
            return {true, u_.half().form(positive_part(evaluate(e.kids[0])), positive_part(evaluate(e.kids[1]))), {}};
    }
    return {};
}

}  // namespace qcov
