#include "patmat/eigensolve.hpp"

#include <lapacke.h>

#include <string>

#include "patmat/errors.hpp"

namespace patmat {

namespace {

void check_shape(const std::vector<double>& a, int n) {
    if (n < 1) {
        throw config_error("eigensolve requires a positive dimension");
    }
    if (a.size() != static_cast<std::size_t>(n) * n) {
        throw config_error("eigensolve input is not an n*n matrix");
    }
}

}  // namespace

EigenDecomposition symmetric_eigen(std::vector<double> a, int n) {
    check_shape(a, n);
    EigenDecomposition out;
    out.values.assign(n, 0.0);
    lapack_int info = LAPACKE_dsyevd(LAPACK_ROW_MAJOR, 'V', 'U', n, a.data(), n,
                                     out.values.data());
    if (info != 0) {
        throw numeric_error("symmetric eigensolver failed, info=" +
                            std::to_string(info));
    }
    out.vectors = std::move(a);
    return out;
}

std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n) {
    check_shape(a, n);
    std::vector<double> values(n, 0.0);
    lapack_int info =
        LAPACKE_dsyevd(LAPACK_ROW_MAJOR, 'N', 'U', n, a.data(), n, values.data());
    if (info != 0) {
        throw numeric_error("symmetric eigensolver failed, info=" +
                            std::to_string(info));
    }
    return values;
}

}  // namespace patmat
