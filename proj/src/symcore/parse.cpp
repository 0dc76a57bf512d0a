#include "eulerdisc/errors.hpp"
#include "eulerdisc/symcore.hpp"

#include <cctype>
#include <limits>

namespace eulerdisc::symcore {

namespace {

class Parser {
public:
    Parser(std::string_view text, const VarTablePtr& vars) : text_(text), vars_(vars) {}

    MultiPoly run()
    {
        MultiPoly p = expr();
        skip_ws();
        if (pos_ != text_.size())
            fail(std::string("unexpected '") + text_[pos_] + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw ParseError("syntax error at position " + std::to_string(pos_) + ": " + msg, pos_);
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek()
    {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    MultiPoly expr()
    {
        MultiPoly acc = term();
        for (;;) {
            const char c = peek();
            if (c == '+') {
                ++pos_;
                acc += term();
            } else if (c == '-') {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    MultiPoly term()
    {
        MultiPoly acc = unary();
        while (peek() == '*') {
            ++pos_;
            acc *= unary();
        }
        return acc;
    }

    MultiPoly unary()
    {
        const char c = peek();
        if (c == '-') {
            ++pos_;
            return -unary();
        }
        if (c == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    MultiPoly power()
    {
        MultiPoly base = atom();
        if (peek() != '^')
            return base;
        ++pos_;
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_) {
            pos_ = start;
            fail("exponent must be a non-negative integer literal");
        }
        const std::string digits(text_.substr(start, pos_ - start));
        mpz_class e(digits);
        if (e > std::numeric_limits<std::uint32_t>::max()) {
            pos_ = start;
            fail("exponent too large");
        }
        return base.pow(static_cast<unsigned>(e.get_ui()));
    }

    MultiPoly atom()
    {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            MultiPoly inner = expr();
            if (peek() != ')')
                fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            return MultiPoly::constant(vars_, mpz_class(std::string(text_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            const std::string_view name = text_.substr(start, pos_ - start);
            auto idx = vars_->find(name);
            if (!idx)
                throw ParseError("unknown variable '" + std::string(name) + "' at position " + std::to_string(start),
                                 start);
            return MultiPoly::variable(vars_, *idx);
        }
        if (c == '\0')
            fail("unexpected end of input");
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view text_;
    const VarTablePtr& vars_;
    std::size_t pos_ = 0;
};

} // namespace

MultiPoly parse(std::string_view text, const VarTablePtr& vars)
{
    if (!vars)
        throw ParseError("parse: no variable table");
    return Parser(text, vars).run();
}

} // namespace eulerdisc::symcore
