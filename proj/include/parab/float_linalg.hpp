#pragma once

#include <vector>

namespace parab {

// Eigenvalues (ascending) and orthonormal eigenvectors of a dense symmetric
// matrix, by cyclic Jacobi rotations.  vecs[k] is the eigenvector for vals[k].
void sym_eigen(std::vector<std::vector<double>> a, std::vector<double>& vals,
               std::vector<std::vector<double>>& vecs);

// Same for a symmetric tridiagonal matrix with diagonal diag and subdiagonal
// sub (sub.size() == diag.size() - 1), by the implicit-shift QL algorithm.
void tridiag_eigen(std::vector<double> diag, std::vector<double> sub, std::vector<double>& vals,
                   std::vector<std::vector<double>>& vecs);

}  // namespace parab
