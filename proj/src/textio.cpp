#include "twistconj/textio.hpp"

#include <cctype>
#include <sstream>

#include "twistconj/errors.hpp"

namespace twistconj {

namespace {

class Cursor
{
public:
    explicit Cursor(std::string_view s) : s_(s) {}

    std::size_t pos() const { return pos_; }

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool peek_is(char c)
    {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    void expect(char c)
    {
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != c)
            throw ParseError(pos_, std::string("expected '") + c + "'");
        ++pos_;
    }

    bool try_consume(char c)
    {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Int integer()
    {
        skip_ws();
        const std::size_t start = pos_;
        std::string digits;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            if (s_[pos_] == '-')
                digits += '-';
            ++pos_;
        }
        std::size_t ndigits = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            digits += s_[pos_++];
            ++ndigits;
        }
        if (ndigits == 0)
            throw ParseError(start, "expected an integer");
        return Int(digits);
    }

    void expect_end()
    {
        skip_ws();
        if (pos_ != s_.size())
            throw ParseError(pos_, "unexpected trailing input");
    }

    bool try_keyword(std::string_view kw)
    {
        skip_ws();
        if (s_.substr(pos_, kw.size()) == kw) {
            pos_ += kw.size();
            return true;
        }
        return false;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

IntMat parse_bracket_matrix(Cursor& c)
{
    c.expect('[');
    std::vector<std::vector<Int>> rows;
    for (;;) {
        c.expect('[');
        std::vector<Int> row;
        row.push_back(c.integer());
        while (c.try_consume(','))
            row.push_back(c.integer());
        c.expect(']');
        if (!rows.empty() && rows[0].size() != row.size())
            throw ParseError(c.pos(), "ragged matrix rows");
        rows.push_back(std::move(row));
        if (!c.try_consume(','))
            break;
    }
    c.expect(']');
    IntMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    return m;
}

} // namespace

Elem parse_elem(std::string_view text)
{
    Cursor c(text);
    c.expect('(');
    c.expect('(');
    Int m = c.integer();
    c.expect(',');
    Int k = c.integer();
    c.expect(')');
    c.expect(',');
    Int n = c.integer();
    c.expect(')');
    c.expect_end();
    return make_elem(std::move(m), std::move(k), std::move(n));
}

std::string format_elem(const Elem& e)
{
    std::ostringstream os;
    os << e;
    return os.str();
}

Twist parse_twist(const Group& g, std::string_view text)
{
    Cursor c(text);
    if (c.try_keyword("phi")) {
        long k = 1;
        if (c.try_consume('^')) {
            const Int e = c.integer();
            if (e < 0)
                throw ParseError(c.pos(), "phi^k requires k >= 0");
            if (!fits_long(e))
                throw ParseError(c.pos(), "exponent too large");
            k = e.get_si();
        }
        c.expect_end();
        // phi has order 4, so reduce before composing.
        return g.twist_pow(g.phi(), k % 4);
    }
    if (c.try_keyword("M=")) {
        IntMat m = parse_bracket_matrix(c);
        c.expect(';');
        if (!c.try_keyword("eps="))
            throw ParseError(c.pos(), "expected 'eps='");
        const Int eps = c.integer();
        c.expect_end();
        if (eps != 1 && eps != -1)
            throw ParseError(c.pos(), "eps must be +1 or -1");
        return g.twist(std::move(m), static_cast<int>(eps.get_si()));
    }
    throw ParseError(c.pos(), "expected 'phi', 'phi^k', or 'M=[[a,b],[c,d]];eps=+-1'");
}

std::string format_twist(const Group& g, const Twist& t)
{
    if (t == g.phi())
        return "phi";
    std::ostringstream os;
    os << "M=" << t.m.str() << ";eps=" << (t.eps == 1 ? "+1" : "-1");
    return os.str();
}

IntMat parse_matrix(const Group& g, std::string_view text)
{
    Cursor c(text);
    const bool negate = c.try_consume('-');
    IntMat m;
    if (c.try_keyword("A")) {
        Int e(1);
        if (c.try_consume('^'))
            e = c.integer();
        m = mat_pow(g.alpha(), e);
    } else if (c.peek_is('[')) {
        m = parse_bracket_matrix(c);
        if (!m.is_square())
            throw ParseError(c.pos(), "matrix must be square");
    } else {
        throw ParseError(c.pos(), "expected 'A', 'A^k', or a bracket matrix literal");
    }
    c.expect_end();
    return negate ? -m : m;
}

} // namespace twistconj
