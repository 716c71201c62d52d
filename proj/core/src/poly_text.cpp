#include "prime_scope/exact/poly_text.hpp"

#include <cctype>

#include "prime_scope/errors.hpp"

namespace prime_scope {

namespace {

class TermLexer {
public:
    explicit TermLexer(std::string_view text) : text_(text) {}

    std::vector<PolyTerm> run()
    {
        std::vector<PolyTerm> terms;
        skip_ws();
        if (at_end())
            fail("empty polynomial");
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = peek() == '-';
            ++pos_;
        }
        terms.push_back(term(negative));
        for (;;) {
            skip_ws();
            if (at_end())
                break;
            char c = peek();
            if (c != '+' && c != '-')
                fail("expected '+' or '-'");
            ++pos_;
            terms.push_back(term(c == '-'));
        }
        return terms;
    }

private:
    PolyTerm term(bool negative)
    {
        PolyTerm t;
        t.negative = negative;
        skip_ws();
        if (at_end())
            fail("missing term");
        if (peek() == '[') {
            auto close = text_.find(']', pos_);
            if (close == std::string_view::npos)
                fail("unterminated '['");
            t.coefficient = std::string(text_.substr(pos_, close - pos_ + 1));
            pos_ = close + 1;
        } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::size_t start = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
                ++pos_;
            skip_ws();
            if (!at_end() && peek() == '/') {
                ++pos_;
                skip_ws();
                if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
                    fail("malformed fraction");
                while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
                    ++pos_;
            }
            t.coefficient = std::string(text_.substr(start, pos_ - start));
        }
        skip_ws();
        bool has_coefficient = !t.coefficient.empty();
        if (!at_end() && peek() == '*') {
            if (!has_coefficient)
                fail("'*' without coefficient");
            ++pos_;
            skip_ws();
            if (at_end() || (peek() != 'X' && peek() != 'x'))
                fail("expected X after '*'");
        }
        if (!at_end() && (peek() == 'X' || peek() == 'x')) {
            ++pos_;
            t.exponent = 1;
            skip_ws();
            if (!at_end() && peek() == '^') {
                ++pos_;
                skip_ws();
                std::size_t start = pos_;
                while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
                    ++pos_;
                if (start == pos_)
                    fail("missing exponent");
                t.exponent = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
            }
        } else if (!has_coefficient) {
            fail("expected coefficient or X");
        }
        return t;
    }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    [[noreturn]] void fail(const std::string& what) const
    {
        raise(ErrorCode::SyntaxError,
              what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

std::vector<PolyTerm> parse_poly_terms(std::string_view text)
{
    return TermLexer(text).run();
}

std::string render_poly(std::size_t length,
                        const std::function<RenderedCoefficient(std::size_t)>& render)
{
    std::string out;
    for (std::size_t i = 0; i < length; ++i) {
        RenderedCoefficient c = render(i);
        if (c.zero)
            continue;
        if (out.empty()) {
            if (c.negative)
                out += "-";
        } else {
            out += c.negative ? " - " : " + ";
        }
        if (i == 0) {
            out += c.magnitude;
            continue;
        }
        if (!c.is_one)
            out += c.magnitude + "*";
        out += "X";
        if (i > 1)
            out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

} // namespace prime_scope
