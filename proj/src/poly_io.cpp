#include "ulrich/poly_io.hpp"

#include <cctype>

namespace ulrich {

namespace {

struct Parser {
    const AmbientRing& R;
    const std::string& s;
    size_t pos = 0;

    void skip_ws()
    {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    bool peek(char c)
    {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    bool eat(char c)
    {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

    int64_t integer()
    {
        skip_ws();
        size_t start = pos;
        int64_t v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > (1LL << 60))
                fail("integer literal too large");
            ++pos;
        }
        if (pos == start)
            fail("expected an integer");
        return v;
    }

    Poly atom()
    {
        skip_ws();
        if (pos >= s.size())
            fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Poly p = expr();
            if (!eat(')'))
                fail("expected ')'");
            return p;
        }
        if (c == '-') {
            ++pos;
            return poly_neg(R.field(), factor());
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return poly_const(R.field(), integer(), R.nvars());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            int idx = R.var_index(name);
            if (idx < 0) {
                pos = start;
                fail("undeclared variable '" + name + "'");
            }
            return poly_term(monomial_var(R.nvars(), static_cast<size_t>(idx), 1, R.weights()), 1);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    Poly factor()
    {
        Poly base = atom();
        if (eat('^')) {
            int64_t e = integer();
            if (e < 0)
                fail("negative exponent");
            if (e > 60000)
                fail("exponent too large");
            Poly out = poly_const(R.field(), 1, R.nvars());
            for (int64_t i = 0; i < e; ++i)
                out = poly_mul(R.field(), out, base);
            return out;
        }
        return base;
    }

    Poly term()
    {
        Poly out = factor();
        while (eat('*'))
            out = poly_mul(R.field(), out, factor());
        return out;
    }

    Poly expr()
    {
        skip_ws();
        Poly out;
        bool neg = false;
        if (eat('-'))
            neg = true;
        out = term();
        if (neg)
            out = poly_neg(R.field(), out);
        while (true) {
            skip_ws();
            if (eat('+'))
                out = poly_add(R.field(), out, term());
            else if (eat('-'))
                out = poly_sub(R.field(), out, term());
            else
                break;
        }
        return out;
    }
};

}  // namespace

Poly parse_poly(const AmbientRing& R, const std::string& text)
{
    Parser p{R, text};
    Poly out = p.expr();
    p.skip_ws();
    if (p.pos != text.size())
        throw ParseError("trailing input", p.pos);
    return out;
}

std::string poly_to_string(const AmbientRing& R, const Poly& p)
{
    if (p.is_zero())
        return "0";
    uint32_t prime = R.prime();
    std::string out;
    for (size_t i = 0; i < p.t.size(); ++i) {
        const Term& tm = p.t[i];
        // balanced representative for readability
        bool neg = tm.c > prime / 2;
        uint64_t mag = neg ? prime - tm.c : tm.c;
        if (i == 0)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string mono;
        for (size_t v = 0; v < R.nvars(); ++v) {
            if (tm.m.e[v] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += R.vars()[v];
            if (tm.m.e[v] > 1)
                mono += "^" + std::to_string(tm.m.e[v]);
        }
        if (mono.empty())
            out += std::to_string(mag);
        else if (mag == 1)
            out += mono;
        else
            out += std::to_string(mag) + "*" + mono;
    }
    return out;
}

std::string vec_to_string(const AmbientRing& R, const Vec& v)
{
    std::string out = "(";
    for (size_t i = 0; i < v.c.size(); ++i) {
        if (i)
            out += ", ";
        out += poly_to_string(R, v.c[i]);
    }
    return out + ")";
}

}  // namespace ulrich
