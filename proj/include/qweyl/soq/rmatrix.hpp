#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qweyl/coeff/ratfunc.hpp"
#include "qweyl/coeff/scalar.hpp"

namespace qweyl::soq {

using coeff::RatFunc;
using coeff::Scalar;

// Dense square matrix over a coefficient ring (Scalar or RatFunc).
template <class T>
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t n) : n_(n), data_(n * n, T(0)) {}
    static Matrix identity(std::size_t n) {
        Matrix m(n);
        for (std::size_t k = 0; k < n; ++k) m(k, k) = T(1);
        return m;
    }

    std::size_t size() const { return n_; }
    T& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        Matrix out = a;
        for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
        return out;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        Matrix out = a;
        for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
        return out;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        Matrix out(a.n_);
        for (std::size_t r = 0; r < a.n_; ++r)
            for (std::size_t k = 0; k < a.n_; ++k) {
                const T& x = a(r, k);
                if (x.is_zero()) continue;
                for (std::size_t c = 0; c < a.n_; ++c) {
                    const T& y = b(k, c);
                    if (!y.is_zero()) out(r, c) += x * y;
                }
            }
        return out;
    }
    Matrix scaled(const T& c) const {
        Matrix out = *this;
        for (auto& v : out.data_) v = v * c;
        return out;
    }
    // A ⊗ 1_m and 1_m ⊗ A.
    Matrix kron_identity_right(std::size_t m) const {
        Matrix out(n_ * m);
        for (std::size_t r = 0; r < n_; ++r)
            for (std::size_t c = 0; c < n_; ++c)
                for (std::size_t k = 0; k < m; ++k) out(r * m + k, c * m + k) = (*this)(r, c);
        return out;
    }
    Matrix kron_identity_left(std::size_t m) const {
        Matrix out(n_ * m);
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t r = 0; r < n_; ++r)
                for (std::size_t c = 0; c < n_; ++c) out(k * n_ + r, k * n_ + c) = (*this)(r, c);
        return out;
    }
    bool is_zero() const {
        for (const auto& v : data_)
            if (!v.is_zero()) return false;
        return true;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) { return a.n_ == b.n_ && a.data_ == b.data_; }

private:
    std::size_t n_ = 0;
    std::vector<T> data_;
};

using ScalarMatrix = Matrix<Scalar>;
using RatMatrix = Matrix<RatFunc>;

RatMatrix to_rat(const ScalarMatrix& m);

// R̂^{ij}_{kl} stored as an N²×N² matrix, row (i,j) = i*N + j and column
// (k,l), where i.. are positions 0..N-1 in the lightcone label list.
struct RMatrix {
    int N = 0;
    std::vector<int> labels;
    ScalarMatrix R;
    ScalarMatrix R_inv;  // filled by validation

    std::size_t position(int label) const;
    std::size_t pair(std::size_t a, std::size_t b) const { return a * static_cast<std::size_t>(N) + b; }
    const Scalar& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
        return R(pair(i, j), pair(k, l));
    }
    const Scalar& inv_at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
        return R_inv(pair(i, j), pair(k, l));
    }
};

// The three eigenvalues q, -q^-1, q^(1-N).
std::vector<Scalar> rmatrix_eigenvalues(int N);

// Parses the line format: header `N=<n> basis=<l1,l2,...>`, then
// `i j k l <scalar>` per nonzero entry (labels, not positions). `#` starts
// a comment. Throws SyntaxError / ValidationFailed on malformed input.
RMatrix parse_rmatrix(std::string_view text);
RMatrix read_rmatrix_file(const std::filesystem::path& file);

struct RMatrixValidation {
    bool braid = false;
    bool cubic = false;
    bool invertible = false;
};

// Checks braid, cubic characteristic identity and invertibility exactly and
// fills R_inv. Throws ValidationFailed naming the first failing cell, or
// DegenerateEigenvalues for q-independent data (eigenvalues collide at q=1).
RMatrixValidation validate_rmatrix(RMatrix& r);
RMatrix load_and_validate_rmatrix(const std::filesystem::path& file);

struct ProjectorSet {
    RatMatrix P_plus;
    RatMatrix P_minus;
    RatMatrix P_zero;
    std::vector<Scalar> eigenvalues;  // q, -q^-1, q^(1-N)
};

// Lagrange projectors onto the three eigenspaces. Throws DegenerateEigenvalues.
ProjectorSet spectral_projectors(const RMatrix& r);

struct ProjectorChecks {
    bool idempotent = false;
    bool orthogonal = false;
    bool complete = false;
    bool reconstructs = false;
};
ProjectorChecks check_projectors(const RMatrix& r, const ProjectorSet& p);

// g_upper(i,j) = g^{ij}, g_lower(i,j) = g_{ij} over label positions.
struct Metric {
    int N = 0;
    ScalarMatrix g_upper;
    ScalarMatrix g_lower;
    RatFunc c;
};

std::size_t exact_rank(const RatMatrix& m);

// Factors P0 = c g^{ij} g_{kl}. Normalization: g_lower is scaled so that it
// squares to the identity (g_00 = 1 when N is odd), which makes
// x^i -> sum_j g_{ji} x^j an involution; g_upper is the inverse of g_lower.
// Throws NotRankOne, or BadParams if the normalization is not reachable
// inside Laurent polynomials.
Metric extract_metric(const RatMatrix& P0, int N);

// max |P0 - c g^{ij} g_{kl}| == 0 entrywise.
bool metric_reconstructs(const RatMatrix& P0, const Metric& g);

}  // namespace qweyl::soq
