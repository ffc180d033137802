#include "qweyl/coeff/parse.hpp"

#include <cctype>
#include <string>

#include "qweyl/error.hpp"

namespace qweyl::coeff {

namespace {

class ScalarParser {
public:
    explicit ScalarParser(std::string_view text) : text_(text) {}

    Scalar parse() {
        Scalar out = expr();
        skip_space();
        if (pos_ != text_.size()) fail("'+', '-', factor or end of input");
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& expected) const {
        throw SyntaxError("offset " + std::to_string(pos_) + ": expected " + expected);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("'") + c + "'");
    }

    bool at_factor_start() {
        skip_space();
        if (pos_ >= text_.size()) return false;
        char c = text_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'i' || c == 'q' || c == '(';
    }

    Scalar expr() {
        Scalar acc;
        bool negate = false;
        if (accept('-')) negate = true;
        else accept('+');
        Scalar t = term();
        acc = negate ? -t : t;
        while (true) {
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else break;
        }
        return acc;
    }

    Scalar term() {
        if (!at_factor_start()) fail("number, 'i', 'q' or '('");
        Scalar acc = factor();
        while (true) {
            if (accept('*')) {
                acc = acc * factor();
            } else if (at_factor_start()) {
                acc = acc * factor();
            } else {
                break;
            }
        }
        return acc;
    }

    long integer() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("integer");
        return std::stol(std::string(text_.substr(start, pos_ - start)));
    }

    long signed_integer() {
        bool neg = accept('-');
        long v = integer();
        return neg ? -v : v;
    }

    // Exponent in units of s = q^(1/2) when `half_ok`, else an integer power.
    int exponent(bool half_ok) {
        if (accept('(')) {
            long num = signed_integer();
            long den = 1;
            if (accept('/')) den = integer();
            expect(')');
            if (den == 1) return static_cast<int>(half_ok ? 2 * num : num);
            if (den != 2 || !half_ok) fail("integer exponent");
            return static_cast<int>(num);
        }
        long v = signed_integer();
        return static_cast<int>(half_ok ? 2 * v : v);
    }

    Scalar factor() {
        skip_space();
        char c = text_[pos_];
        if (c == 'q') {
            ++pos_;
            if (accept('^')) return Scalar::s_pow(exponent(true));
            return Scalar::q();
        }
        if (c == 'i') {
            ++pos_;
            return Scalar::i();
        }
        if (c == '(') {
            ++pos_;
            Scalar inner = expr();
            expect(')');
            if (accept('^')) return inner.pow(exponent(false));
            return inner;
        }
        long num = integer();
        long den = 1;
        if (accept('/')) den = integer();
        if (den == 0) fail("nonzero denominator");
        return Scalar(GaussianRational::fraction(num, den));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

}  // namespace qweyl::coeff
