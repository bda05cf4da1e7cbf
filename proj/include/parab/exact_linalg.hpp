#pragma once

#include <vector>

#include "parab/rational.hpp"

namespace parab {

using RatMat = std::vector<std::vector<Rat>>;

// Kernel basis of M (rows x cols) by rational RREF. Basis vectors are indexed
// by free columns in ascending order; pivot entries are back-filled, free
// entry set to 1. Deterministic.
std::vector<std::vector<Rat>> nullspace(RatMat M, int cols);

// B = L D L^T with L unit lower triangular; throws std::domain_error unless B
// is symmetric positive definite.
void ldlt(const RatMat& B, RatMat& L, std::vector<Rat>& D);

// Exact congruence reduction of the pencil (A, B): with B = L D L^T, computes
// M = L^{-1} A L^{-T}. Eigenvalues of (A, B) equal those of D^{-1/2} M D^{-1/2}.
void reduce_pair(const RatMat& A, const RatMat& B, RatMat& M, std::vector<Rat>& D, RatMat& L);

}  // namespace parab
