#pragma once

#include <vector>

namespace patmat {

// Dense symmetric eigendecomposition, eigenvalues ascending. Column j of
// vectors (entries vectors[i*n + j]) is the unit eigenvector for values[j].
struct EigenDecomposition {
    std::vector<double> values;
    std::vector<double> vectors;
};

// a is the row-major n*n matrix, consumed by the solver
EigenDecomposition symmetric_eigen(std::vector<double> a, int n);

// eigenvalues only, ascending
std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n);

}  // namespace patmat
