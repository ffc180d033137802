#pragma once

#include "qweyl/coeff/scalar.hpp"
#include "qweyl/fock/matrix_rep.hpp"

namespace qweyl::fock {

// A|n> = sqrt(n)|n-1>, Ad = A^T, N = diag(n) on levels 0..D-1.
FloatRep classical_osc_rep(int dim);

// 1 + q + ... + q^(n-1): the a^dagger a eigenvalue on |n>.
coeff::Scalar q_osc_eigenvalue(int n);

// a|n> = sqrt(lambda_n)|n-1>, ad = a^T.
FloatRep q_osc_rep(int dim, long double q);

// [n]/n as a float, with its limit ln q/(q^(1/2) - q^(-1/2)) at n = 0.
long double qint_ratio(int n, long double q);

// a = c q^(N/4) A sqrt([N]/N), ad = c q^(N/4) sqrt([N]/N) Ad with c = q^(-1/8)
// when rescaled, c = 1 as displayed.
FloatRep deformed_osc_rep(int dim, long double q, bool rescale);

struct DeformingMapReport {
    int dim = 0;
    long double q = 0;
    long double residual_rescaled = 0;    // max interior |a ad - q ad a - 1|
    long double residual_unscaled = 0;    // same, without the q^(-1/8)
    long double predicted_unscaled = 0;   // |q^(1/4) - 1|
    long double classical_limit_error = 0;  // |a - A| at q = 1
};

DeformingMapReport deforming_map_check(int dim, long double q);

}  // namespace qweyl::fock
