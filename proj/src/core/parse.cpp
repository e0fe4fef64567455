#include "invo/parse.hpp"

#include <cctype>

namespace invo {

namespace {

class Parser {
public:
    Parser(const std::string& s, const std::vector<std::string>& vars, const OrderPtr& order, int line, int col0)
        : s_(s), vars_(vars), order_(order), line_(line), col0_(col0)
    {
    }

    ModuleElement parseTop(int rank)
    {
        skip();
        if (rank <= 1) {
            Poly p = expr();
            expectEnd();
            return p;
        }
        expect('(');
        std::vector<Entry> entries;
        for (int c = 0; c < rank; ++c) {
            if (c > 0) expect(',');
            Poly p = expr();
            for (const auto& e : p.terms()) entries.push_back({Term{e.term.exp, c}, e.coef});
        }
        expect(')');
        expectEnd();
        return ModuleElement::fromEntries(order_, rank, std::move(entries));
    }

private:
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw ParseError(msg, line_, col0_ + static_cast<int>(pos_) + 1);
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c)
    {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    void expect(char c)
    {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    void expectEnd()
    {
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    }

    Poly constant(const Rational& c) const { return Poly::constant(order_, c); }

    Poly expr()
    {
        Poly r(order_, 1);
        bool first = true;
        for (;;) {
            int sign = 1;
            if (peek('+') || peek('-')) {
                sign = s_[pos_] == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                break;
            }
            Poly t = term();
            if (sign < 0) r -= t;
            else r += t;
            first = false;
        }
        return r;
    }

    bool startsFactor()
    {
        skip();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
               c == '(';
    }

    Poly term()
    {
        Poly r = power();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                r = multiply(r, power());
            } else if (startsFactor()) {
                r = multiply(r, power());
            } else {
                break;
            }
        }
        return r;
    }

    Poly power()
    {
        Poly base = atom();
        if (!peek('^')) return base;
        ++pos_;
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected exponent");
        int e = std::stoi(s_.substr(start, pos_ - start));
        Poly r = constant(1);
        for (int i = 0; i < e; ++i) r = multiply(r, base);
        return r;
    }

    Rational integer()
    {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return Rational(s_.substr(start, pos_ - start));
    }

    Poly atom()
    {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Poly r = expr();
            expect(')');
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rational v = integer();
            if (peek('/')) {
                ++pos_;
                skip();
                if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected denominator");
                Rational d = integer();
                if (d == 0) fail("division by zero");
                v /= d;
            }
            return constant(v);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                if (vars_[i] == name) {
                    int n = order_->nvars();
                    return Poly::term(order_, 1, Term{ExponentVector::unit(n, static_cast<int>(i)), 0});
                }
            }
            pos_ = start;
            fail("unknown variable '" + name + "'");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    const std::vector<std::string>& vars_;
    const OrderPtr& order_;
    int line_;
    int col0_;
    std::size_t pos_ = 0;
};

} // namespace

ModuleElement parseElement(const std::string& text, const std::vector<std::string>& vars, const OrderPtr& order,
                           int rank, int line, int columnOffset)
{
    Parser p(text, vars, order, line, columnOffset);
    return p.parseTop(rank);
}

Poly parsePoly(const std::string& text, const std::vector<std::string>& vars, const OrderPtr& order)
{
    return parseElement(text, vars, order);
}

std::vector<Poly> parsePolys(const std::vector<std::string>& texts, const std::vector<std::string>& vars,
                             const OrderPtr& order)
{
    std::vector<Poly> out;
    for (const auto& t : texts) out.push_back(parsePoly(t, vars, order));
    return out;
}

} // namespace invo
