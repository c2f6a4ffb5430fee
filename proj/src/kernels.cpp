#include "opslash/kernels.hpp"

namespace opslash::kernels {

namespace {
// Below these sizes the fork/join overhead dominates on small matrices;
// the serial path is used instead. Dispatch never changes results because
// each output element is computed with the same summation order.
constexpr long kMatmulFlopCutoff = 1L << 15;
constexpr std::size_t kElemwiseCutoff = 1u << 16;
}  // namespace

void matmul_serial(const double* a, const double* b, double* c, int m, int k, int n) {
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < m; ++i) {
      double acc = 0.0;
      for (int l = 0; l < k; ++l) acc += a[i + static_cast<std::size_t>(l) * m] * b[l + static_cast<std::size_t>(j) * k];
      c[i + static_cast<std::size_t>(j) * m] = acc;
    }
  }
}

void matmul_omp(const double* a, const double* b, double* c, int m, int k, int n) {
#pragma omp parallel for collapse(2) schedule(static)
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < m; ++i) {
      double acc = 0.0;
      for (int l = 0; l < k; ++l) acc += a[i + static_cast<std::size_t>(l) * m] * b[l + static_cast<std::size_t>(j) * k];
      c[i + static_cast<std::size_t>(j) * m] = acc;
    }
  }
}

void matmul(const double* a, const double* b, double* c, int m, int k, int n) {
  const long flops = static_cast<long>(m) * k * n;
  if (flops >= kMatmulFlopCutoff) {
    matmul_omp(a, b, c, m, k, n);
  } else {
    matmul_serial(a, b, c, m, k, n);
  }
}

void hadamard_serial(const double* a, const double* b, double* c, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) c[i] = a[i] * b[i];
}

void hadamard_omp(const double* a, const double* b, double* c, std::size_t len) {
#pragma omp parallel for schedule(static)
  for (long i = 0; i < static_cast<long>(len); ++i) c[i] = a[i] * b[i];
}

void hadamard(const double* a, const double* b, double* c, std::size_t len) {
  if (len >= kElemwiseCutoff) {
    hadamard_omp(a, b, c, len);
  } else {
    hadamard_serial(a, b, c, len);
  }
}

void kron_serial(const double* a, int ra, int ca, const double* b, int rb, int cb, double* k) {
  const int rows = ra * rb;
  for (int ja = 0; ja < ca; ++ja)
    for (int jb = 0; jb < cb; ++jb)
      for (int ia = 0; ia < ra; ++ia)
        for (int ib = 0; ib < rb; ++ib)
          k[(ia * rb + ib) + static_cast<std::size_t>(ja * cb + jb) * rows] =
              a[ia + static_cast<std::size_t>(ja) * ra] * b[ib + static_cast<std::size_t>(jb) * rb];
}

void kron_omp(const double* a, int ra, int ca, const double* b, int rb, int cb, double* k) {
  const int rows = ra * rb;
#pragma omp parallel for collapse(2) schedule(static)
  for (int ja = 0; ja < ca; ++ja)
    for (int jb = 0; jb < cb; ++jb)
      for (int ia = 0; ia < ra; ++ia)
        for (int ib = 0; ib < rb; ++ib)
          k[(ia * rb + ib) + static_cast<std::size_t>(ja * cb + jb) * rows] =
              a[ia + static_cast<std::size_t>(ja) * ra] * b[ib + static_cast<std::size_t>(jb) * rb];
}

void kron(const double* a, int ra, int ca, const double* b, int rb, int cb, double* k) {
  const long out = static_cast<long>(ra) * rb * ca * cb;
  if (out >= static_cast<long>(kElemwiseCutoff)) {
    kron_omp(a, ra, ca, b, rb, cb, k);
  } else {
    kron_serial(a, ra, ca, b, rb, cb, k);
  }
}

}  // namespace opslash::kernels
