#include "bif/kernels.hpp"

namespace bif::kernels {

void horner_scalar(const double* c, int deg, const double* x, double* out, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
        double acc = c[deg];
        for (int i = deg - 1; i >= 0; --i) {
            double m = acc * x[k];
            acc = m + c[i];
        }
        out[k] = acc;
    }
}

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

void horner(const double* c, int deg, const double* x, double* out, std::size_t n) {
    static const bool simd = avx2_available();
    if (simd) horner_avx2(c, deg, x, out, n);
    else horner_scalar(c, deg, x, out, n);
}

}  // namespace bif::kernels
