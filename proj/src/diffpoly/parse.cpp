#include "todakdv/diffpoly/eps_series.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace todakdv::diffpoly {

namespace {

class Lexer {
public:
    explicit Lexer(std::string_view s) : s_(s) {}

    void skip() { while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_; }
    bool done() { skip(); return i_ >= s_.size(); }
    char peek() { skip(); return i_ < s_.size() ? s_[i_] : '\0'; }
    bool accept(char c)
    {
        if (peek() != c)
            return false;
        ++i_;
        return true;
    }
    void expect(char c)
    {
        if (!accept(c))
            fail(std::string("expected '") + c + "'");
    }
    long integer()
    {
        skip();
        std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
            ++i_;
        if (start == i_)
            fail("expected integer");
        return std::stol(std::string(s_.substr(start, i_ - start)));
    }
    // [-]digits[/digits], no interior whitespace
    Rational rational()
    {
        skip();
        std::size_t start = i_;
        if (i_ < s_.size() && s_[i_] == '-')
            ++i_;
        while (i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '/'))
            ++i_;
        return Rational::parse(s_.substr(start, i_ - start));
    }
    // Directly after 'f': primes, or (k).
    int order_suffix()
    {
        int order = 0;
        while (i_ < s_.size() && s_[i_] == '\'') {
            ++order;
            ++i_;
        }
        if (order == 0 && i_ < s_.size() && s_[i_] == '(') {
            ++i_;
            order = static_cast<int>(integer());
            expect(')');
        }
        return order;
    }
    [[noreturn]] void fail(const std::string& what) const
    {
        std::ostringstream os;
        os << "parse_diffpoly: " << what << " at offset " << i_ << " in '" << s_ << "'";
        throw std::invalid_argument(os.str());
    }

private:
    std::string_view s_;
    std::size_t i_ = 0;
};

// factor := coeff | f-atom ['^' int]
void parse_factor(Lexer& lx, Rational& c, Monomial& m)
{
    char ch = lx.peek();
    if (ch == '(') {
        lx.expect('(');
        c *= lx.rational();
        lx.expect(')');
    } else if (ch == 'f') {
        lx.expect('f');
        int order = lx.order_suffix();
        int exp = 1;
        if (lx.accept('^'))
            exp = static_cast<int>(lx.integer());
        m = m * Monomial::var(order, exp);
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        c *= lx.rational();
    } else {
        lx.fail("unexpected character");
    }
}

}  // namespace

DiffPoly parse_diffpoly(std::string_view text)
{
    Lexer lx(text);
    DiffPoly p;
    if (lx.done())
        lx.fail("empty input");
    bool first = true;
    while (!lx.done()) {
        Rational sign(1);
        if (!first) {
            if (lx.accept('-'))
                sign = Rational(-1);
            else
                lx.expect('+');
        } else if (lx.accept('-')) {
            sign = Rational(-1);
        }
        first = false;
        Rational c(1);
        Monomial m;
        parse_factor(lx, c, m);
        while (lx.accept('*'))
            parse_factor(lx, c, m);
        p.add_term(m, sign * c);
    }
    return p;
}

EpsSeries parse_series(std::string_view text, int cap)
{
    EpsSeries s(cap);
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        auto colon = line.find(':');
        auto head = line.substr(0, colon);
        auto caret = head.find('^');
        if (colon == std::string::npos || caret == std::string::npos || head.find("eps") == std::string::npos)
            throw std::invalid_argument("parse_series: bad line '" + line + "'");
        int k = std::stoi(head.substr(caret + 1));
        if (k > cap)
            continue;
        if (k < 0)
            throw std::invalid_argument("parse_series: negative power in '" + line + "'");
        s.set_coeff(k, s.coeff(k) + parse_diffpoly(line.substr(colon + 1)));
    }
    return s;
}

}  // namespace todakdv::diffpoly
