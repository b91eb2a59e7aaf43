#include "bif/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

namespace bif::kernels {

__attribute__((target("avx2"))) void horner_avx2(const double* c, int deg, const double* x, double* out, std::size_t n) {
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256d xv = _mm256_loadu_pd(x + k);
        __m256d acc = _mm256_set1_pd(c[deg]);
        for (int i = deg - 1; i >= 0; --i) acc = _mm256_add_pd(_mm256_mul_pd(acc, xv), _mm256_set1_pd(c[i]));
        _mm256_storeu_pd(out + k, acc);
    }
    if (k < n) horner_scalar(c, deg, x + k, out + k, n - k);
}

}  // namespace bif::kernels

#else

namespace bif::kernels {
void horner_avx2(const double* c, int deg, const double* x, double* out, std::size_t n) { horner_scalar(c, deg, x, out, n); }
}  // namespace bif::kernels

#endif
