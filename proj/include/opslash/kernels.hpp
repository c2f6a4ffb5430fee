#pragma once

#include <cstddef>

// Dense double-precision kernels backing Matrix arithmetic.
// Every kernel comes in two flavours: a serial reference (*_serial) and an
// OpenMP version (*_omp) parallelized over independent output elements, so
// the two produce bit-identical results. The unsuffixed entry points
// dispatch on problem size. All layouts are column-major.

namespace opslash::kernels {

// C(m x n) = A(m x k) * B(k x n)
void matmul_serial(const double* a, const double* b, double* c, int m, int k, int n);
void matmul_omp(const double* a, const double* b, double* c, int m, int k, int n);
void matmul(const double* a, const double* b, double* c, int m, int k, int n);

// C = A .* B, elementwise over len entries
void hadamard_serial(const double* a, const double* b, double* c, std::size_t len);
void hadamard_omp(const double* a, const double* b, double* c, std::size_t len);
void hadamard(const double* a, const double* b, double* c, std::size_t len);

// K((ra*rb) x (ca*cb)) = A(ra x ca) (x) B(rb x cb), K[(i-1)p+k,(j-1)q+l] = a_ij b_kl
void kron_serial(const double* a, int ra, int ca, const double* b, int rb, int cb, double* k);
void kron_omp(const double* a, int ra, int ca, const double* b, int rb, int cb, double* k);
void kron(const double* a, int ra, int ca, const double* b, int rb, int cb, double* k);

}  // namespace opslash::kernels
