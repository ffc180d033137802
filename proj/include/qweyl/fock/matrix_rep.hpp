#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "qweyl/coeff/ratfunc.hpp"
#include "qweyl/freealg/presentation.hpp"

namespace qweyl::fock {

using Complex = std::complex<long double>;
using FloatMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

// Dense square matrix over Q(i)(q^(1/2)).
class ExactMatrix {
public:
    explicit ExactMatrix(std::size_t n = 0) : n_(n), data_(n * n) {}
    static ExactMatrix identity(std::size_t n);

    std::size_t size() const { return n_; }
    coeff::RatFunc& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
    const coeff::RatFunc& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

    ExactMatrix& operator+=(const ExactMatrix& o);
    ExactMatrix& operator-=(const ExactMatrix& o);
    friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
    friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    ExactMatrix scaled(const coeff::RatFunc& c) const;
    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

    // True when every entry of every listed column vanishes.
    bool columns_zero(const std::vector<std::size_t>& cols) const;

private:
    std::size_t n_;
    std::vector<coeff::RatFunc> data_;
};

// A finite matrix assignment to the generators of a presentation. Relations
// are only claimed on the basis vectors in interior_mask; truncation edges
// are excluded.
template <class Matrix>
struct MatrixRep {
    std::size_t dim = 0;
    std::string field;  // "exact" or "float"
    std::map<std::string, Matrix> matrices;
    std::vector<std::size_t> interior_mask;
    std::vector<int> labels;  // basis labels (Fock level or momentum index)
};

using ExactRep = MatrixRep<ExactMatrix>;
using FloatRep = MatrixRep<FloatMatrix>;

// Substitutes matrices for generators; scalars become constant multiples
// of the identity (float reps evaluate at q = s^2).
ExactMatrix evaluate(const freealg::Element& e, const freealg::Presentation& pres, const ExactRep& rep);
FloatMatrix evaluate(const freealg::Element& e, const freealg::Presentation& pres, const FloatRep& rep,
                     long double q);

// Largest |entry| in the interior columns of m.
long double interior_residual(const FloatMatrix& m, const std::vector<std::size_t>& interior);

struct RepCheckItem {
    std::string relation;
    bool pass = false;
    long double max_residual = 0;  // float mode
    std::string residual;          // exact mode: first nonzero interior entry, if any
};

// Every displayed relation of pres evaluated on the representation.
std::vector<RepCheckItem> check_relations(const freealg::Presentation& pres, const ExactRep& rep);
std::vector<RepCheckItem> check_relations(const freealg::Presentation& pres, const FloatRep& rep,
                                          long double q, long double tol);

nlohmann::json to_json(const ExactRep& rep);
nlohmann::json to_json(const FloatRep& rep);

}  // namespace qweyl::fock
