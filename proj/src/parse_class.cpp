#include <cctype>
#include <stdexcept>

#include "pencils/flag_chern.hpp"

namespace pencils {

namespace {

/// Recursive-descent parser for class expressions.
class Parser {
public:
    Parser(std::string_view text, int n) : text_(text), n_(n) {}

    FlagElement parse_expression() {
        skip_space();
        bool negate = false;
        if (peek() == '-') {
            negate = true;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        FlagElement acc = parse_term();
        if (negate) acc = -acc;
        while (true) {
            skip_space();
            const char c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                const FlagElement term = parse_term();
                acc = c == '+' ? acc + term : acc - term;
            } else {
                return acc;
            }
        }
    }

    void expect_end() {
        skip_space();
        if (pos_ != text_.size())
            throw std::invalid_argument("class expression: trailing input at \"" +
                                        std::string(text_.substr(pos_)) + "\"");
    }

private:
    FlagElement parse_term() {
        FlagElement acc = parse_factor();
        while (true) {
            skip_space();
            if (peek() == '*') {
                ++pos_;
                acc = flag_multiply(acc, parse_factor());
            } else {
                return acc;
            }
        }
    }

    FlagElement parse_factor() {
        skip_space();
        const char c = peek();
        if (c == '(') {
            ++pos_;
            FlagElement inner = parse_expression();
            skip_space();
            if (peek() != ')') throw std::invalid_argument("class expression: missing ')'");
            ++pos_;
            return inner;
        }
        if (c == 'z') {
            ++pos_;
            return FlagElement::zeta(n_);
        }
        if (c == 's') {
            ++pos_;
            skip_space();
            if (peek() != '[') throw std::invalid_argument("class expression: expected '['");
            ++pos_;
            const int a = parse_int();
            int b = 0;
            skip_space();
            if (peek() == ',') {
                ++pos_;
                b = parse_int();
            }
            skip_space();
            if (peek() != ']') throw std::invalid_argument("class expression: expected ']'");
            ++pos_;
            if (!Partition2{a, b}.fits_box(n_))
                throw std::invalid_argument("class expression: s[" + std::to_string(a) + "," +
                                            std::to_string(b) + "] outside the box for N=" +
                                            std::to_string(n_));
            return FlagElement::from_chow(ChowElement::basis({a, b}, n_));
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return static_cast<long long>(parse_int()) *
                   FlagElement::from_chow(ChowElement::one(n_));
        throw std::invalid_argument(std::string("class expression: unexpected character '") + c +
                                    "'");
    }

    int parse_int() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start) throw std::invalid_argument("class expression: expected an integer");
        return std::stoi(std::string(text_.substr(start, pos_ - start)));
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    [[nodiscard]] char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    std::string_view text_;
    std::size_t pos_ = 0;
    int n_;
};

}  // namespace

ParsedClass parse_class(const std::string& text, int default_n) {
    std::string body = text;
    std::optional<int> declared_n;
    if (const auto at = text.find('@'); at != std::string::npos) {
        body = text.substr(0, at);
        std::string suffix = text.substr(at + 1);
        std::size_t i = 0;
        while (i < suffix.size() && std::isspace(static_cast<unsigned char>(suffix[i]))) ++i;
        if (i >= suffix.size() || suffix[i] != 'N')
            throw std::invalid_argument("class expression: expected \"N=<int>\" after '@'");
        ++i;
        while (i < suffix.size() && std::isspace(static_cast<unsigned char>(suffix[i]))) ++i;
        if (i >= suffix.size() || suffix[i] != '=')
            throw std::invalid_argument("class expression: expected \"N=<int>\" after '@'");
        ++i;
        std::size_t used = 0;
        const int n = std::stoi(suffix.substr(i), &used);
        for (std::size_t k = i + used; k < suffix.size(); ++k)
            if (!std::isspace(static_cast<unsigned char>(suffix[k])))
                throw std::invalid_argument("class expression: trailing input after N");
        declared_n = n;
    }
    const int n = declared_n.value_or(default_n);
    if (n < 2) throw std::invalid_argument("class expression: need N >= 2");
    Parser p(body, n);
    FlagElement value = p.parse_expression();
    p.expect_end();
    return ParsedClass{std::move(value), declared_n};
}

}  // namespace pencils
