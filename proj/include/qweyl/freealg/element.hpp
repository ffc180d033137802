#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "qweyl/coeff/scalar.hpp"

namespace qweyl::freealg {

using coeff::Scalar;
using GenId = std::uint16_t;

// A word of the free monoid on generator ids. The empty word is the unit.
class Word {
public:
    Word() = default;
    explicit Word(std::u16string letters) : letters_(std::move(letters)) {}
    static Word single(GenId g) { return Word(std::u16string(1, static_cast<char16_t>(g))); }

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    GenId operator[](std::size_t k) const { return static_cast<GenId>(letters_[k]); }
    const std::u16string& letters() const { return letters_; }

    Word substr(std::size_t pos, std::size_t n = std::u16string::npos) const {
        return Word(letters_.substr(pos, n));
    }
    Word reversed() const { return Word(std::u16string(letters_.rbegin(), letters_.rend())); }
    bool matches_at(std::size_t pos, const Word& pattern) const {
        return letters_.compare(pos, pattern.size(), pattern.letters_) == 0;
    }

    friend Word operator+(const Word& a, const Word& b) { return Word(a.letters_ + b.letters_); }
    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word& a, const Word& b) { return a.letters_ <=> b.letters_; }

private:
    std::u16string letters_;
};

// Finite formal sum of words with Scalar coefficients. No reduction is
// applied here; see normal_form.
class Element {
public:
    using TermMap = std::map<Word, Scalar>;

    Element() = default;
    Element(const Scalar& c);  // NOLINT: scalars embed as multiples of the unit word
    Element(long c) : Element(Scalar(c)) {}  // NOLINT
    static Element word(const Word& w, const Scalar& c = 1);
    static Element generator(GenId g) { return word(Word::single(g)); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Scalar coefficient(const Word& w) const;
    // Constant (unit-word) coefficient.
    Scalar constant() const { return coefficient(Word()); }

    void add_term(const Word& w, const Scalar& c);

    Element operator-() const;
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    // Free concatenation product.
    friend Element operator*(const Element& a, const Element& b);
    friend Element operator*(const Scalar& c, const Element& e) { return e.scaled(c); }
    friend bool operator==(const Element&, const Element&) = default;

    Element scaled(const Scalar& c) const;
    Element conj_coefficients() const;

private:
    TermMap terms_;
};

Element commutator(const Element& a, const Element& b);

}  // namespace qweyl::freealg
