#pragma once

#include <vector>

#include "qweyl/fock/matrix_rep.hpp"

namespace qweyl::fock {

// Basis |n>, n = -M..M, of the final q-Heisenberg algebra: p|n> = pi0 q^n |n>,
// xi as displayed, u|n> = q^(-1/2)|n-1>, u^-1|n> = q^(1/2)|n+1>. Generator
// names follow the catalog (p, u, xi, uinv). Exact mode requires pi0 = 1.
ExactRep momentum_rep_exact(int levels);
FloatRep momentum_rep_float(int levels, long double q, long double pi0);

// -i(xi p - q^-1 p xi), the operator u is solved from, computed from the
// p and xi matrices alone.
ExactMatrix derived_u(const ExactRep& rep);

// exp(i q^n pi0 x) sampled on the grid.
std::vector<Complex> eigenfunction_eval(int n, long double pi0, long double q,
                                        const std::vector<long double>& grid);

}  // namespace qweyl::fock
