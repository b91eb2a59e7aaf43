#pragma once

// Row evaluation of a univariate polynomial at many abscissae:
//   out[k] = (((c[d] x_k + c[d-1]) x_k + ...) x_k + c[0]).
// Both paths perform the same IEEE operations in the same order (multiply,
// then add, no fused multiply-add), so their results are bit-identical.

#include <cstddef>

namespace bif::kernels {

void horner_scalar(const double* c, int deg, const double* x, double* out, std::size_t n);
void horner_avx2(const double* c, int deg, const double* x, double* out, std::size_t n);

bool avx2_available();
// Picks the AVX2 path when the CPU supports it.
void horner(const double* c, int deg, const double* x, double* out, std::size_t n);

}  // namespace bif::kernels
