#include <algorithm>
#include <cctype>
#include <map>

#include "cmtheta/errors.hpp"
#include "cmtheta/hermitian.hpp"

namespace cmtheta {

namespace {

using Pairs = std::vector<std::pair<long, long>>;

// conj(tau) = 1 - tau, so c(a, b) = a + b conj(tau) = (a + b) - b tau
constexpr std::pair<long, long> c(long a, long b) { return {a + b, -b}; }
constexpr std::pair<long, long> r(long a) { return {a, 0}; }
constexpr std::pair<long, long> t(long a, long b) { return {a, b}; }

struct Row
{
    long d;
    int index;
    std::optional<int> partner; // second index of a paired row
    std::size_t aut;
    Pairs entries;
    char const * chi;
    char const * correction = "";
};

// Reference catalog: Hermitian forms on E(d)^3 with their chi_18 values.
// Printed entries that needed repair are listed in the README under
// "Catalog corrections"; value repairs also carry a note below.
std::vector<Row> const & table_rows()
{
    static std::vector<Row> const rows = {
        {7, 1, {}, 336,
         {r(2), r(1), r(1), r(1), r(2), c(0, 1), r(1), t(0, 1), r(2)},
         "(7^7)^2"},
        {19, 1, {}, 12,
         {r(2), r(1), r(-1), r(1), r(3), t(-2, 1), r(-1), c(-2, 1), r(3)},
         "(2^5*19^7)^2*(-2)"},
        {43, 1, {}, 2,
         {r(3), r(1), c(1, -1), r(1), r(4), r(2), t(1, -1), r(2), r(5)},
         "(2^6*43^7)^2*(-47*79*107*173)"},
        {43, 2, {}, 12,
         {r(3), c(1, 1), c(2, -1), t(1, 1), r(5), c(-2, -1), t(2, -1), t(-2, -1), r(5)},
         "(2^5*3^4*43^7)^2*(-2*3*7)"},
        {43, 3, {}, 4,
         {r(2), r(-1), r(1), r(-1), r(4), c(1, -1), r(1), t(1, -1), r(4)},
         "(2^6*5^3*43^7)^2*(-487)"},
        {43, 4, 5, 4,
         {r(3), r(1), c(-1, -1), r(1), r(3), r(-1), t(-1, -1), r(-1), r(5)},
         "-2^11*3^9*[1,-2]^27*[5,-2]*[7,-2]*[17,-4]",
         "printed factor [1,2] (norm 47) read as [1,-2] (norm 43)"},
        {67, 1, 2, 2,
         {r(5), c(-1, -1), c(0, -1), t(-1, -1), r(5), r(2), t(0, -1), r(2), r(6)},
         "-2^11*[-1,2]^28*[1,2]*[-11,2]*[-15,2]*[3,4]*[1,6]*[23,2]*[21,4]*[-49,2]*"
         "[43,6]*[55,6]*[53,16]",
         "overall sign opposite to the printed value"},
        {67, 3, {}, 2,
         {r(5), c(-2, 1), c(-1, -1), t(-2, 1), r(6), r(-2), t(-1, -1), r(-2), r(7)},
         "(2^6*3^6*67^7)^2*(-13*53*71*131*3319)"},
        {67, 4, 5, 2,
         {r(3), r(-1), r(1), r(-1), r(4), c(0, -1), r(1), t(0, -1), r(5)},
         "2^12*3^9*[-1,2]^27*[-5,2]*[-7,2]*[-3,4]*[1,4]*[-13,4]*[-15,8]*[-33,8]*[23,10]"},
        {67, 6, {}, 2,
         {r(5), c(-1, 1), c(0, 1), t(-1, 1), r(5), r(2), t(0, 1), r(2), r(5)},
         "(2^6*5^3*67^7)^2*83*211*1637*2441"},
        {67, 7, {}, 12,
         {r(2), r(0), r(-1), r(0), r(3), c(-2, 1), r(-1), t(-2, 1), r(7)},
         "(2^5*7^4*67^7)^2*(-2*7*31)"},
        {67, 8, 9, 4,
         {r(3), r(-1), c(-2, 1), r(-1), r(4), r(0), t(-2, 1), r(0), r(7)},
         "2^11*7^6*[-1,2]^27*[1,2]^2*[-37,6]*[-71,12]*[-71,30]"},
        {67, 10, 12, 4,
         {r(2), r(-1), r(0), r(-1), r(4), c(-1, 1), r(0), t(-1, 1), r(5)},
         "2^11*3^9*5^6*[-1,2]^27*[-3,2]*[3,2]*[-21,2]*[-31,2]",
         "overall sign opposite to the printed value"},
        {67, 11, {}, 4,
         {r(5), c(0, 1), r(-2), t(0, 1), r(6), c(2, 1), r(-2), t(2, 1), r(6)},
         "(2^6*3^4*5^3*67^7)^2*(-3*7*8731)"},
        {67, 13, {}, 4,
         {r(3), r(1), r(-1), r(1), r(5), c(-3, 1), r(-1), t(-3, 1), r(5)},
         "(2^8*5^4*67^7)^2*(-2*5*9769)"},
        {163, 3, 4, 2,
         {r(7), c(3, -1), c(2, 1), t(3, -1), r(8), c(-3, 1), t(2, 1), t(-3, 1), r(14)},
         "-2^12*[-1,2]^27*[-5,2]*[15,4]*[31,2]*[67,8]*[-137,8]*[-39,28]*[-49,44]*"
         "[-743,94]*[-169,164]*[-907,158]*[445,406]*[-2507,342]*[-3029,244]*"
         "[-2777,388]*[4043,74]"},
        {163, 85, {}, 12,
         {r(2), r(1), c(0, -1), r(1), r(2), c(1, -1), t(0, -1), t(1, -1), r(28)},
         "(2^5*7^4*11^4*163^7)^2*(-2*7*11*19*127)"},
    };
    return rows;
}

std::vector<CatalogEntry> build_catalog()
{
    std::vector<CatalogEntry> out;
    for (Row const & row : table_rows()) {
        Discriminant d(row.d);
        std::string label = std::to_string(row.d) + "#" + std::to_string(row.index);
        HermitianForm form = HermitianForm::from_pairs(d, 3, row.entries, label);
        out.push_back({row.d, row.index, form, row.aut, {}, true, row.chi, row.correction});
        if (row.partner) {
            std::string plabel = std::to_string(row.d) + "#" + std::to_string(*row.partner);
            HermitianForm partner(d, form.conj().entries(), plabel);
            out.push_back({row.d, *row.partner, partner, row.aut, row.index, true,
                           std::string("conj(") + row.chi + ")", row.correction});
        }
    }
    return out;
}

// Recursive-descent evaluator:
//   expr   := ['-'] power ('*' ['-'] power)*
//   power  := atom ('^' integer)?
//   atom   := integer | '[' int ',' int ']' | '(' expr ')' | 'conj' '(' expr ')'
class ExpressionParser
{
    std::string const & text_;
    std::size_t pos_ = 0;
    Discriminant d_;

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char ch)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char ch)
    {
        if (!accept(ch))
            fail(std::string("expected '") + ch + "'");
    }

    [[noreturn]] void fail(std::string const & what) const
    {
        throw domain_error("bad expression '" + text_ + "' at " + std::to_string(pos_) +
                           ": " + what);
    }

    Int integer()
    {
        skip_space();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+'))
            ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        std::string digits = text_.substr(start, pos_ - start);
        if (digits.empty() || digits == "-" || digits == "+")
            fail("expected an integer");
        if (digits[0] == '+')
            digits.erase(0, 1);
        return parse_int(digits);
    }

    QuadInt atom()
    {
        skip_space();
        if (accept('(')) {
            QuadInt v = expr();
            expect(')');
            return v;
        }
        if (accept('[')) {
            Int a = integer();
            expect(',');
            Int b = integer();
            expect(']');
            return {a, b, d_};
        }
        if (text_.compare(pos_, 4, "conj") == 0) {
            pos_ += 4;
            expect('(');
            QuadInt v = expr();
            expect(')');
            return v.conj();
        }
        return {integer(), d_};
    }

    QuadInt power()
    {
        QuadInt base = atom();
        if (accept('^')) {
            Int e = integer();
            if (e < 0)
                fail("negative exponent");
            return pow(base, e.get_ui());
        }
        return base;
    }

    QuadInt expr()
    {
        bool negate = accept('-');
        QuadInt v = power();
        if (negate)
            v = -v;
        while (accept('*')) {
            bool neg = accept('-');
            QuadInt f = power();
            v *= neg ? -f : f;
        }
        return v;
    }

  public:
    ExpressionParser(std::string const & text, Discriminant d) : text_(text), d_(d) {}

    QuadInt parse()
    {
        QuadInt v = expr();
        skip_space();
        if (pos_ != text_.size())
            fail("trailing input");
        return v;
    }
};

} // namespace

std::vector<CatalogEntry> const & form_catalog()
{
    static std::vector<CatalogEntry> const catalog = build_catalog();
    return catalog;
}

CatalogEntry const & catalog_lookup(long d, int index)
{
    for (CatalogEntry const & e : form_catalog())
        if (e.d == d && e.index == index)
            return e;
    throw unsupported_error("no catalog form for d = " + std::to_string(d) +
                            ", index " + std::to_string(index));
}

std::vector<int> catalog_indices(long d)
{
    std::vector<int> out;
    for (CatalogEntry const & e : form_catalog())
        if (e.d == d)
            out.push_back(e.index);
    std::sort(out.begin(), out.end());
    return out;
}

bool catalog_is_complete(long d)
{
    return d == 7 || d == 19 || d == 43 || d == 67;
}

QuadInt parse_quad_expression(std::string const & text, Discriminant d)
{
    return ExpressionParser(text, d).parse();
}

} // namespace cmtheta
