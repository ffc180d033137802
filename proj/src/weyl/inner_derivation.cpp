#include "qweyl/weyl/inner_derivation.hpp"

#include <map>
#include <optional>
#include <vector>

#include "qweyl/catalog/catalog.hpp"
#include "qweyl/error.hpp"
#include "qweyl/freealg/rewriting.hpp"

namespace qweyl::weyl {

using coeff::GaussianRational;
using coeff::Scalar;
using freealg::Element;
using freealg::Word;

namespace {

void require_constant_coefficients(const Element& e, const char* what) {
    for (const auto& [w, c] : e.terms())
        if (!c.is_constant()) throw BadParams(std::string(what) + " has a q-dependent coefficient");
}

// Reduced row echelon solve of A c = b. Returns the solution with free
// variables set to zero, or nothing when inconsistent.
std::optional<std::vector<GaussianRational>> solve(std::vector<std::vector<GaussianRational>> a,
                                                   std::vector<GaussianRational> b) {
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        std::swap(b[piv], b[r]);
        GaussianRational inv = a[r][c].inverse();
        for (auto& v : a[r]) v *= inv;
        b[r] *= inv;
        for (std::size_t k = 0; k < rows; ++k) {
            if (k == r || a[k][c].is_zero()) continue;
            GaussianRational f = a[k][c];
            for (std::size_t j = 0; j < cols; ++j) a[k][j] -= f * a[r][j];
            b[k] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t k = r; k < rows; ++k)
        if (!b[k].is_zero()) return std::nullopt;
    std::vector<GaussianRational> x(cols);
    for (std::size_t k = 0; k < r; ++k) x[pivot_col[k]] = b[k];
    return x;
}

}  // namespace

Element inner_derivation_solve(const DerivationSpec& d) {
    auto pres = catalog::heisenberg(1);
    Element x = pres->gen("x"), p = pres->gen("p");
    require_constant_coefficients(d.image_x, "image of x");
    require_constant_coefficients(d.image_p, "image of p");
    if (d.degree_bound < 0) throw BadParams("degree bound must be nonnegative");

    Element dx = freealg::normal_form(d.image_x, *pres);
    Element dp = freealg::normal_form(d.image_p, *pres);
    Element consistency = freealg::normal_form(dp * x + p * dx - dx * p - x * dp, *pres);
    if (!consistency.is_zero()) throw BadParams("images do not define a derivation");

    // Unknowns: x^i p^j with 1 <= i + j <= bound + 1.
    std::vector<Element> basis;
    int top = d.degree_bound + 1;
    for (int deg = 1; deg <= top; ++deg) {
        for (int i = deg; i >= 0; --i) {
            Element m(1);
            for (int k = 0; k < i; ++k) m = m * x;
            for (int k = 0; k < deg - i; ++k) m = m * p;
            basis.push_back(m);
        }
    }

    // Equations: coefficient of each word in [a, x] - dx and [a, p] - dp.
    std::map<std::pair<int, Word>, std::size_t> row_of;
    auto row = [&](int g, const Word& w) {
        auto [it, inserted] = row_of.try_emplace({g, w}, row_of.size());
        return it->second;
    };
    std::vector<std::vector<std::pair<std::size_t, GaussianRational>>> columns;
    for (const auto& m : basis) {
        std::vector<std::pair<std::size_t, GaussianRational>> col;
        int g = 0;
        for (const Element& gen : {x, p}) {
            Element br = freealg::normal_form(commutator(m, gen), *pres);
            for (const auto& [w, c] : br.terms()) col.push_back({row(g, w), c.constant_term()});
            ++g;
        }
        columns.push_back(std::move(col));
    }
    std::vector<std::pair<std::size_t, GaussianRational>> rhs;
    for (const auto& [w, c] : dx.terms()) rhs.push_back({row(0, w), c.constant_term()});
    for (const auto& [w, c] : dp.terms()) rhs.push_back({row(1, w), c.constant_term()});

    std::vector<std::vector<GaussianRational>> a(row_of.size(),
                                                 std::vector<GaussianRational>(basis.size()));
    std::vector<GaussianRational> b(row_of.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (const auto& [r, c] : columns[j]) a[r][j] += c;
    for (const auto& [r, c] : rhs) b[r] += c;

    auto sol = solve(std::move(a), std::move(b));
    if (!sol) throw NoSolution("no inner derivation of degree <= " + std::to_string(top));
    Element out;
    for (std::size_t j = 0; j < basis.size(); ++j)
        if (!(*sol)[j].is_zero()) out += basis[j].scaled(Scalar((*sol)[j]));
    return freealg::normal_form(out, *pres);
}

}  // namespace qweyl::weyl
