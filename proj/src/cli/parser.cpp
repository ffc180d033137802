#include "qweyl/cli/parser.hpp"

#include <cctype>
#include <gmpxx.h>

#include "qweyl/error.hpp"
#include "qweyl/freealg/syntax.hpp"

namespace qweyl::cli {

using coeff::GaussianRational;
using coeff::Scalar;
using freealg::Word;

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

class ExprParser {
public:
    ExprParser(std::string_view text, const Presentation& pres) : text_(text), pres_(pres) {}

    Element parse_all() {
        Element e = expr();
        skip_space();
        if (pos_ != text_.size()) fail("'+', '-', factor or end of input");
        return e;
    }

    std::pair<Element, Element> parse_relation() {
        Element lhs = expr();
        Element rhs;
        bool has_rhs = accept('=');
        if (has_rhs) rhs = expr();
        skip_space();
        if (pos_ != text_.size())
            fail(has_rhs ? "'+', '-', factor or end of input" : "'=', '+', '-', factor or end of input");
        return {lhs, rhs};
    }

private:
    [[noreturn]] void fail(const std::string& expected) const { fail_at(pos_, expected); }
    [[noreturn]] void fail_at(std::size_t pos, const std::string& expected) const {
        throw SyntaxError("offset " + std::to_string(pos) + ": expected " + expected);
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
        return is_ident_start(c) || std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == '[';
    }

    Element expr() {
        bool negate = false;
        if (accept('-')) negate = true;
        else accept('+');
        Element acc = term();
        if (negate) acc = -acc;
        while (true) {
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else break;
        }
        return acc;
    }

    Element term() {
        if (!at_factor_start()) fail("identifier, number, '(' or '['");
        Element acc = factor();
        while (true) {
            if (accept('*')) {
                if (!at_factor_start()) fail("identifier, number, '(' or '['");
                acc = acc * factor();
            } else if (at_factor_start()) {
                acc = acc * factor();
            } else {
                break;
            }
        }
        return acc;
    }

    mpz_class digits() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("integer");
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    int small_int() {
        std::size_t at = pos_;
        mpz_class v = digits();
        if (!v.fits_sint_p()) fail_at(at, "exponent in int range");
        return static_cast<int>(v.get_si());
    }

    int signed_int() {
        bool neg = accept('-');
        int v = small_int();
        return neg ? -v : v;
    }

    void postfix_stars(Element& e) {
        while (accept('~')) e = star(e);
    }

    Element factor() {
        skip_space();
        std::size_t start = pos_;
        bool is_q = false;
        Element base = atom(is_q);
        postfix_stars(base);
        if (accept('^')) {
            if (is_q) {
                // q^n or q^(k/2), in units of s = q^(1/2).
                int s_exp;
                if (accept('(')) {
                    int num = signed_int();
                    int den = 1;
                    if (accept('/')) den = small_int();
                    expect(')');
                    if (den == 1) s_exp = 2 * num;
                    else if (den == 2) s_exp = num;
                    else fail("denominator 1 or 2");
                } else {
                    s_exp = 2 * signed_int();
                }
                base = Element(Scalar::s_pow(s_exp));
            } else {
                base = power(base, signed_int(), start);
            }
            postfix_stars(base);
        }
        return base;
    }

    Element atom(bool& is_q) {
        skip_space();
        if (pos_ >= text_.size()) fail("identifier, number, '(' or '['");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Element inner = expr();
            expect(')');
            return inner;
        }
        if (c == '[') {
            ++pos_;
            Element a = expr();
            expect(',');
            Element b = expr();
            expect(']');
            return a * b - b * a;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num = digits();
            mpz_class den = 1;
            if (accept('/')) {
                std::size_t at = pos_;
                den = digits();
                if (den == 0) fail_at(at, "nonzero denominator");
            }
            mpq_class r(num, den);
            r.canonicalize();
            return Element(Scalar(GaussianRational(r)));
        }
        if (!is_ident_start(c)) fail("identifier, number, '(' or '['");
        std::size_t start = pos_;
        while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        if (auto g = pres_.find_generator(name)) return Element::generator(*g);
        if (name == "i") return Element(Scalar::i());
        if (name == "q") {
            is_q = true;
            return Element(Scalar::q());
        }
        if (name == "h") fail_at(start, "exact coefficient ('h' has no exact value here; write powers of q)");
        fail_at(start, "generator of " + pres_.name() + ", 'i' or 'q' (got '" + name + "')");
    }

    Element power(const Element& base, int n, std::size_t at) {
        if (n >= 0) {
            Element out(1);
            for (int k = 0; k < n; ++k) out = out * base;
            return out;
        }
        return power(inverse(base, at), -n, at);
    }

    // Monomial scalar times a word of invertible generators.
    Element inverse(const Element& e, std::size_t at) {
        if (e.size() != 1) fail_at(at, "invertible factor before negative exponent");
        const auto& [w, c] = *e.terms().begin();
        if (!c.is_unit()) fail_at(at, "invertible factor before negative exponent");
        std::u16string letters;
        for (std::size_t k = w.size(); k-- > 0;) {
            auto inv = pres_.inverse_of(w[k]);
            if (!inv) fail_at(at, "invertible factor before negative exponent");
            letters.push_back(static_cast<char16_t>(*inv));
        }
        return Element::word(Word(letters), c.inverse());
    }

    Element star(const Element& e) {
        if (!pres_.has_star()) fail("no '~' (" + pres_.name() + " has no star)");
        const auto& images = pres_.star_images();
        Element out;
        for (const auto& [w, c] : e.terms()) {
            Element t(c.conj());
            for (std::size_t k = w.size(); k-- > 0;) t = t * images[w[k]];
            out += t;
        }
        return out;
    }

    std::string_view text_;
    const Presentation& pres_;
    std::size_t pos_ = 0;
};

}  // namespace

Element parse_expression(std::string_view text, const Presentation& pres) {
    return ExprParser(text, pres).parse_all();
}

std::pair<Element, Element> parse_relation(std::string_view text, const Presentation& pres) {
    return ExprParser(text, pres).parse_relation();
}

std::string print_expression(const Element& e, const Presentation& pres) { return freealg::to_text(e, pres); }

}  // namespace qweyl::cli
