#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qweyl/coeff/ratfunc.hpp"
#include "qweyl/freealg/presentation.hpp"

namespace qweyl::qdiff {

using coeff::Scalar;
using freealg::Element;

// Exponent vector, one entry per index of the calculus (in sorted order).
using Exponents = std::vector<int>;

// Finite sum of Laurent monomials in commuting coordinates x^a.
class LaurentFunction {
public:
    LaurentFunction() = default;
    static LaurentFunction monomial(const Exponents& m, const Scalar& c = 1);

    const std::map<Exponents, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Exponents& m, const Scalar& c);

    LaurentFunction& operator+=(const LaurentFunction& o);
    LaurentFunction& operator-=(const LaurentFunction& o);
    friend LaurentFunction operator+(LaurentFunction a, const LaurentFunction& b) { return a += b; }
    friend LaurentFunction operator-(LaurentFunction a, const LaurentFunction& b) { return a -= b; }
    LaurentFunction scaled(const Scalar& c) const;
    friend bool operator==(const LaurentFunction&, const LaurentFunction&) = default;

    std::string to_string(const std::vector<int>& indices) const;

private:
    std::map<Exponents, Scalar> terms_;
};

enum class LetterKind { X, XInv, U, UInv, D, Del, Lam, LamInv, Q };

// Q(a, t, e, d) is the operator (1 - q^e u_a^t) / (1 - q^d).
struct Letter {
    LetterKind kind;
    int alpha = 0;
    int t = 0, e = 0, d = 0;
};

// Operator alphabet of the q-difference calculus on the index set I with
// exponents k: multiplication by x_a and its inverse (x_a, xinv_a), the
// q-shifts u_a, uinv_a, D_a, the classical del_a, Lam = prod u_a^2, Laminv,
// and the registered Q letters. Words act right to left.
class Calculus {
public:
    Calculus(std::vector<int> indices, std::map<int, int> k,
             std::vector<Letter> q_letters = {});

    const std::vector<int>& indices() const { return indices_; }
    int k(int alpha) const { return k_.at(alpha); }
    const freealg::Presentation& alphabet() const { return *alphabet_; }
    freealg::PresentationPtr alphabet_ptr() const { return alphabet_; }
    std::size_t position(int alpha) const;

    Element x(int a) const;
    Element xinv(int a) const;
    Element u(int a) const;
    Element uinv(int a) const;
    Element D(int a) const;
    Element del(int a) const;
    Element lam() const;
    Element laminv() const;
    Element q_op(int a, int t, int e, int d) const;  // must be registered
    static std::string q_name(int a, int t, int e, int d);

    LaurentFunction act(const Element& op, const LaurentFunction& f) const;

    // Antilinear, antimultiplicative: x_a -> x_-a, D_a -> -D_-a, u_a -> q^-1 uinv_-a,
    // del_a -> -del_-a, Lam -> q^(-2|I|) Laminv, Q(a,t,e,d) -> Q(-a,-t,e-t,d).
    Element involute(const Element& op) const;

    // Re-expresses an element of another presentation through generator names.
    Element import(const Element& e, const freealg::Presentation& from) const;

private:
    LaurentFunction act_letter(const Letter& l, const LaurentFunction& f) const;

    std::vector<int> indices_;
    std::map<int, int> k_;
    std::vector<Letter> letters_;
    freealg::PresentationPtr alphabet_;
};

// Every exponent vector with entries in [lo, hi] for the given positions,
// and `fill` elsewhere.
std::vector<Exponents> monomial_grid(std::size_t arity, int lo, int hi);

struct ActionCheck {
    std::string relation;
    bool pass = true;
    std::size_t monomials = 0;
    std::string first_failure;  // "x^m: lhs - rhs = ..."
};

// lhs and rhs compared by action on every monomial.
ActionCheck check_by_action(const Calculus& c, const std::string& label, const Element& lhs,
                            const Element& rhs, const std::vector<Exponents>& monomials);

struct DiffdefReport {
    std::vector<ActionCheck> items;
    bool all_pass() const;
};

// The displayed relations of the catalog presentation (diagonal and
// off-diagonal) checked as operator identities: single-variable sweeps with
// |m| <= diagonal_bound and full grids with |m| <= sweep_bound.
DiffdefReport verify_diffdef(const std::vector<int>& indices, const std::map<int, int>& k,
                             int diagonal_bound = 20, int sweep_bound = 6);

// bar(bar(letter)) acts like the letter, for every letter of the alphabet.
DiffdefReport verify_involution(const Calculus& c, int sweep_bound);

}  // namespace qweyl::qdiff
