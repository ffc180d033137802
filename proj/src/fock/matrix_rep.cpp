#include "qweyl/fock/matrix_rep.hpp"

#include <cmath>
#include <sstream>

#include "qweyl/error.hpp"

namespace qweyl::fock {

using coeff::RatFunc;

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = RatFunc(1);
    return m;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
    if (o.n_ != n_) throw BadParams("matrix size mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (!o.data_[k].is_zero()) data_[k] += o.data_[k];
    return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
    if (o.n_ != n_) throw BadParams("matrix size mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (!o.data_[k].is_zero()) data_[k] -= o.data_[k];
    return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.n_ != b.n_) throw BadParams("matrix size mismatch");
    ExactMatrix out(a.n_);
    for (std::size_t r = 0; r < a.n_; ++r)
        for (std::size_t k = 0; k < a.n_; ++k) {
            const RatFunc& x = a(r, k);
            if (x.is_zero()) continue;
            for (std::size_t c = 0; c < a.n_; ++c)
                if (!b(k, c).is_zero()) out(r, c) += x * b(k, c);
        }
    return out;
}

ExactMatrix ExactMatrix::scaled(const RatFunc& c) const {
    ExactMatrix out(n_);
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (!data_[k].is_zero()) out.data_[k] = data_[k] * c;
    return out;
}

bool ExactMatrix::columns_zero(const std::vector<std::size_t>& cols) const {
    for (std::size_t c : cols)
        for (std::size_t r = 0; r < n_; ++r)
            if (!(*this)(r, c).is_zero()) return false;
    return true;
}

ExactMatrix evaluate(const freealg::Element& e, const freealg::Presentation& pres, const ExactRep& rep) {
    ExactMatrix out(rep.dim);
    for (const auto& [w, c] : e.terms()) {
        ExactMatrix term = ExactMatrix::identity(rep.dim).scaled(RatFunc(c));
        for (std::size_t k = 0; k < w.size(); ++k) {
            const auto& name = pres.generator_name(w[k]);
            auto it = rep.matrices.find(name);
            if (it == rep.matrices.end()) throw BadParams("representation has no matrix for " + name);
            term = term * it->second;
        }
        out += term;
    }
    return out;
}

FloatMatrix evaluate(const freealg::Element& e, const freealg::Presentation& pres, const FloatRep& rep,
                     long double q) {
    auto n = static_cast<Eigen::Index>(rep.dim);
    FloatMatrix out = FloatMatrix::Zero(n, n);
    long double s = std::sqrt(q);
    for (const auto& [w, c] : e.terms()) {
        FloatMatrix term = FloatMatrix::Identity(n, n) * c.evaluate(s);
        for (std::size_t k = 0; k < w.size(); ++k) {
            const auto& name = pres.generator_name(w[k]);
            auto it = rep.matrices.find(name);
            if (it == rep.matrices.end()) throw BadParams("representation has no matrix for " + name);
            term = term * it->second;
        }
        out += term;
    }
    return out;
}

long double interior_residual(const FloatMatrix& m, const std::vector<std::size_t>& interior) {
    long double worst = 0;
    for (std::size_t c : interior)
        for (Eigen::Index r = 0; r < m.rows(); ++r)
            worst = std::max(worst, std::abs(m(r, static_cast<Eigen::Index>(c))));
    return worst;
}

std::vector<RepCheckItem> check_relations(const freealg::Presentation& pres, const ExactRep& rep) {
    std::vector<RepCheckItem> out;
    for (const auto& rel : pres.relations()) {
        ExactMatrix res = evaluate(rel.lhs, pres, rep) - evaluate(rel.rhs, pres, rep);
        RepCheckItem item{rel.label, res.columns_zero(rep.interior_mask), 0, {}};
        if (!item.pass) {
            for (std::size_t c : rep.interior_mask) {
                for (std::size_t r = 0; r < rep.dim && item.residual.empty(); ++r) {
                    if (res(r, c).is_zero()) continue;
                    std::ostringstream os;
                    os << "<" << rep.labels[r] << "|res|" << rep.labels[c] << "> = " << res(r, c).to_string();
                    item.residual = os.str();
                }
                if (!item.residual.empty()) break;
            }
        }
        out.push_back(std::move(item));
    }
    return out;
}

std::vector<RepCheckItem> check_relations(const freealg::Presentation& pres, const FloatRep& rep,
                                          long double q, long double tol) {
    std::vector<RepCheckItem> out;
    for (const auto& rel : pres.relations()) {
        FloatMatrix res = evaluate(rel.lhs, pres, rep, q) - evaluate(rel.rhs, pres, rep, q);
        long double r = interior_residual(res, rep.interior_mask);
        std::ostringstream os;
        os << static_cast<double>(r);
        out.push_back({rel.label, r < tol, r, os.str()});
    }
    return out;
}

namespace {

template <class Rep>
nlohmann::json header(const Rep& rep) {
    nlohmann::json j;
    j["dim"] = rep.dim;
    j["field"] = rep.field;
    j["interior_mask"] = rep.interior_mask;
    j["labels"] = rep.labels;
    return j;
}

}  // namespace

nlohmann::json to_json(const ExactRep& rep) {
    auto j = header(rep);
    for (const auto& [name, m] : rep.matrices) {
        auto rows = nlohmann::json::array();
        for (std::size_t r = 0; r < m.size(); ++r) {
            auto row = nlohmann::json::array();
            for (std::size_t c = 0; c < m.size(); ++c) row.push_back(m(r, c).to_string());
            rows.push_back(row);
        }
        j["matrices"][name] = rows;
    }
    return j;
}

nlohmann::json to_json(const FloatRep& rep) {
    auto j = header(rep);
    for (const auto& [name, m] : rep.matrices) {
        auto rows = nlohmann::json::array();
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            auto row = nlohmann::json::array();
            for (Eigen::Index c = 0; c < m.cols(); ++c) {
                const Complex& z = m(r, c);
                if (z.imag() == 0)
                    row.push_back(static_cast<double>(z.real()));
                else
                    row.push_back({static_cast<double>(z.real()), static_cast<double>(z.imag())});
            }
            rows.push_back(row);
        }
        j["matrices"][name] = rows;
    }
    return j;
}

}  // namespace qweyl::fock
