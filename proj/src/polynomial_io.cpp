#include "seshadri/polynomial_io.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace seshadri {

namespace {

constexpr long kMaxExponent = 100000;

class Parser
{
public:
    explicit Parser(std::string_view text) : text_(text) {}

    BiSeries parse()
    {
        BiSeries out = poly();
        skip_space();
        if (pos_ != text_.size()) {
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return out;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    char peek()
    {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    static bool starts_factor(char c)
    {
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'y' || c == '(';
    }

    BiSeries poly()
    {
        BiSeries acc;
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = text_[pos_] == '-';
            ++pos_;
        }
        acc = negate ? -term() : term();
        while (peek() == '+' || peek() == '-') {
            const bool minus = text_[pos_] == '-';
            ++pos_;
            const BiSeries t = term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    BiSeries term()
    {
        BiSeries acc = factor();
        while (true) {
            const char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * factor();
            } else if (starts_factor(c)) {
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    BigInt digits()
    {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected a number");
        }
        return BigInt(std::string(text_.substr(start, pos_ - start)), 10);
    }

    int exponent()
    {
        if (peek() != '^') {
            return 1;
        }
        ++pos_;
        const BigInt e = digits();
        if (e > kMaxExponent) {
            fail("exponent too large");
        }
        return static_cast<int>(e.get_si());
    }

    static BiSeries power(const BiSeries& base, int e)
    {
        BiSeries out = BiSeries::constant(1);
        for (int i = 0; i < e; ++i) {
            out = out * base;
        }
        return out;
    }

    BiSeries factor()
    {
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const BigInt num = digits();
            if (peek() == '/') {
                ++pos_;
                const BigInt den = digits();
                if (den == 0) {
                    fail("zero denominator");
                }
                return BiSeries::constant(make_rat(num, den));
            }
            return BiSeries::constant(Rat(num));
        }
        if (c == 'x' || c == 'y') {
            ++pos_;
            const int e = exponent();
            return c == 'x' ? BiSeries::monomial(1, e, 0) : BiSeries::monomial(1, 0, e);
        }
        if (c == '(') {
            ++pos_;
            const BiSeries inner = poly();
            if (peek() != ')') {
                fail("expected ')'");
            }
            ++pos_;
            return power(inner, exponent());
        }
        if (c == '\0') {
            fail("unexpected end of input");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }
};

std::vector<std::string> data_lines(std::string_view text)
{
    std::vector<std::string> out;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        if (line.find_first_not_of(" \t\r") != std::string::npos) {
            out.push_back(line);
        }
    }
    return out;
}

bool is_monomial_line(const std::string& line)
{
    std::istringstream in(line);
    std::string p, q, c, extra;
    if (!(in >> p >> q >> c) || (in >> extra)) {
        return false;
    }
    auto all_digits = [](const std::string& s) {
        return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
    };
    return all_digits(p) && all_digits(q);
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

} // namespace

BiSeries parse_polynomial(std::string_view text)
{
    return Parser(text).parse();
}

BiSeries parse_monomial_list(std::string_view text)
{
    BiSeries::Terms terms;
    std::size_t line_no = 0;
    for (const std::string& line : data_lines(text)) {
        ++line_no;
        if (!is_monomial_line(line)) {
            throw ParseError("malformed monomial line '" + line + "'", line_no);
        }
        std::istringstream in(line);
        int p = 0;
        int q = 0;
        std::string c;
        in >> p >> q >> c;
        try {
            terms[Monomial{p, q}] += parse_rat(c);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), line_no);
        }
    }
    return BiSeries(std::move(terms));
}

BiSeries parse_curve_text(std::string_view text)
{
    const auto lines = data_lines(text);
    if (lines.empty()) {
        throw ParseError("empty curve input", 0);
    }
    bool all_monomial = true;
    for (const auto& l : lines) {
        all_monomial = all_monomial && is_monomial_line(l);
    }
    if (all_monomial) {
        return parse_monomial_list(text);
    }
    std::string joined;
    for (const auto& l : lines) {
        joined += l;
        joined += ' ';
    }
    return parse_polynomial(joined);
}

BranchJet parse_branch(std::string_view text, Precision precision)
{
    text = trim(text);
    const auto eq = text.find('=');
    BiSeries implicit;
    if (eq != std::string_view::npos) {
        const std::string_view lhs = trim(text.substr(0, eq));
        const std::string_view rhs = trim(text.substr(eq + 1));
        if (rhs.find('=') != std::string_view::npos) {
            throw ParseError("more than one '=' in branch", eq);
        }
        const BiSeries right = parse_polynomial(rhs);
        if (lhs == "y" && right.y_degree() <= 0) {
            UniSeries::Terms g;
            for (const auto& [m, c] : right.terms()) {
                g.emplace(m.x, c);
            }
            return BranchJet(UniSeries(std::move(g)));
        }
        implicit = parse_polynomial(lhs) - right;
    } else {
        implicit = parse_polynomial(text);
    }
    return BranchJet::from_implicit(implicit, precision);
}

} // namespace seshadri
